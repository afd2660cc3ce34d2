#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const fs::path dir = fs::temp_directory_path() / "maxgraph_cli_test";

int run(const std::string& args) {
    const std::string cmd = std::string(MAXGRAPH_CLI) + " " + args + " >" + (dir / "stdout.txt").string() + " 2>" +
                            (dir / "stderr.txt").string();
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream is(p);
    return std::string(std::istreambuf_iterator<char>(is), {});
}

fs::path write_config(const std::string& name, const json& j) {
    fs::create_directories(dir);
    const fs::path p = dir / name;
    std::ofstream(p) << j.dump();
    return p;
}

}  // namespace

TEST_CASE("verify: (1,0) passes with the residue period") {
    const auto cfg = write_config("one.json", {{"m", 1}, {"n", 0}, {"a", {1, 2}}, {"alpha", {1}}});
    const fs::path out = dir / "one-report.json";
    REQUIRE(run("verify --config " + cfg.string() + " --out " + out.string()) == 0);
    const json r = json::parse(slurp(out));
    CHECK(r["pass"] == true);
    const auto& v = r["checks"]["periods"]["zero"]["period"];
    CHECK(std::abs(v[0].get<double>()) <= 1e-8);
    CHECK(std::abs(v[1].get<double>() + 2.0 * 3.14159265358979323846) <= 1e-8);
    CHECK(std::abs(v[2].get<double>()) <= 1e-8);
    for (const char* key : {"conformality", "branch_coherence", "gauss_modulus", "singular_set", "apex_coincidence",
                            "cone_directions", "nondegeneracy", "periods", "graph", "f2_identity", "symmetry"})
        CHECK(r["checks"].contains(key));
}

TEST_CASE("verify: ordering violation is a config error") {
    const auto cfg = write_config("bad.json", {{"m", 1}, {"n", 0}, {"a", {2, 1}}, {"alpha", {1}}});
    CHECK(run("verify --config " + cfg.string() + " --out " + (dir / "bad-report.json").string()) == 2);
    CHECK(slurp(dir / "stderr.txt").find("OrderingViolation") != std::string::npos);
    CHECK(run("verify --config " + (dir / "nope.json").string()) == 2);
    CHECK(run("verify --config " + cfg.string() + " --grid 10y3") == 2);
    CHECK(run("frobnicate") == 2);
}

TEST_CASE("verify: all cones up cannot have a horizontal end") {
    const auto cfg = write_config("up.json", {{"m", 1},
                                              {"n", 1},
                                              {"a", {1, 2}},
                                              {"b", {-1, -2}},
                                              {"alpha", {-1}},
                                              {"beta", {1}},
                                              {"grid", {{"radial", 60}, {"angular", 24}}}});
    CHECK(run("verify --require-horizontal-ends --config " + cfg.string() + " --out " + (dir / "up.json.out").string()) ==
          1);
}

TEST_CASE("mesh: cone tags and translates") {
    const auto cfg = write_config("mesh.json", {{"m", 1}, {"n", 0}, {"a", {1, 2}}, {"alpha", {1}}});
    const fs::path obj0 = dir / "m0.obj", obj2 = dir / "m2.obj";
    REQUIRE(run("mesh --config " + cfg.string() + " --grid 40x16 --copies 0 --out " + obj0.string()) == 0);
    REQUIRE(run("mesh --config " + cfg.string() + " --grid 40x16 --copies 2 --out " + obj2.string()) == 0);
    auto scan = [](const fs::path& p, double& lo, double& hi) {
        std::ifstream is(p);
        std::string line;
        int cones = 0;
        lo = 1e300;
        hi = -1e300;
        while (std::getline(is, line)) {
            if (line.rfind("# cone ", 0) == 0)
                ++cones;
            if (line.rfind("v ", 0) == 0) {
                double x, y, z;
                std::sscanf(line.c_str(), "v %lf %lf %lf", &x, &y, &z);
                lo = std::min(lo, y);
                hi = std::max(hi, y);
            }
        }
        return cones;
    };
    double lo0, hi0, lo2, hi2;
    CHECK(scan(obj0, lo0, hi0) == 1);
    CHECK(scan(obj2, lo2, hi2) == 3);
    CHECK((hi2 - lo2) - (hi0 - lo0) == doctest::Approx(4.0 * 3.14159265358979323846).epsilon(1e-8));
    CHECK(fs::exists(dir / "m0.obj.report.json"));

    const fs::path obj22 = dir / "t22.obj";
    REQUIRE(run("mesh --type 2,2 --class 1 --grid 40x16 --out " + obj22.string()) == 0);
    double a, b;
    CHECK(scan(obj22, a, b) == 4);
}

TEST_CASE("catalog listings") {
    REQUIRE(run("catalog --cones 4") == 0);
    const json four = json::parse(slurp(dir / "stdout.txt"));
    CHECK(four["total"] == 17);
    std::vector<int> counts;
    for (const auto& t : four["types"])
        counts.push_back(t["count"]);
    CHECK(counts == std::vector<int>{6, 6, 5});
    REQUIRE(run("catalog --cones 9") == 0);
    CHECK(json::parse(slurp(dir / "stdout.txt"))["types"].size() == 5);
    REQUIRE(run("catalog --cones 1") == 0);
    const json one = json::parse(slurp(dir / "stdout.txt"));
    CHECK(one["types"].size() == 1);
    CHECK(one["total"] == 1);
    CHECK(run("catalog --cones 0") == 2);
}

TEST_CASE("minimal-measure") {
    const auto cfg = write_config("min.json", {{"m", 1}, {"n", 1}, {"a", {1, 2}}, {"b", {-1, -5}}, {"alpha", {1}}, {"beta", {1}}});
    REQUIRE(run("minimal-measure --config " + cfg.string() + " --out " + (dir / "min-out.json").string()) == 0);
    const json r = json::parse(slurp(dir / "min-out.json"));
    CHECK(r["b2n_normalization"]["applied"] == true);
    CHECK(r["params"]["b"][1].get<double>() == doctest::Approx(-2.0));
    CHECK(r["w0"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r["minimal_counterpart"]["genus"] == 1);
    fs::remove_all(dir);
}
