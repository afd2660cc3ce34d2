#include "doctest.h"
#include "fixtures.hpp"
#include "maxgraph/params.hpp"

using namespace maxgraph;

namespace {

ErrorKind kind_of(const RawParams& raw) {
    try {
        SurfaceParams::validate(raw);
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected a validation error");
    return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("minimal admissible instance validates") {
    const SurfaceParams p = SurfaceParams::validate({1, 0, {1, 2}, {}, {1}, {}});
    CHECK(p.m() == 1);
    CHECK(p.n() == 0);
    CHECK(p.a(1) == 1.0);
    CHECK(p.a(2) == 2.0);
    CHECK(p.alpha(1) == 1);
}

TEST_CASE("ordering violations") {
    CHECK(kind_of({1, 0, {2, 1}, {}, {1}, {}}) == ErrorKind::OrderingViolation);
    // b listed as [b_1, b_2] = [-2, -1] breaks b_2 < b_1.
    CHECK(kind_of({2, 1, {1, 2, 3, 4}, {-2, -1}, {1, -1}, {1}}) == ErrorKind::OrderingViolation);
    CHECK(kind_of({1, 0, {-1, 2}, {}, {1}, {}}) == ErrorKind::OrderingViolation);
    CHECK(kind_of({1, 1, {1, 2}, {1, -2}, {1}, {1}}) == ErrorKind::OrderingViolation);
    CHECK(kind_of({1, 0, {1, 1}, {}, {1}, {}}) == ErrorKind::OrderingViolation);
}

TEST_CASE("length and sign errors") {
    CHECK(kind_of({1, 0, {1, 2, 3}, {}, {1}, {}}) == ErrorKind::LengthMismatch);
    CHECK(kind_of({1, 1, {1, 2}, {-1}, {1}, {1}}) == ErrorKind::LengthMismatch);
    CHECK(kind_of({1, 0, {1, 2}, {}, {1, 1}, {}}) == ErrorKind::LengthMismatch);
    CHECK(kind_of({0, 0, {}, {}, {}, {}}) == ErrorKind::LengthMismatch);
    CHECK(kind_of({1, 0, {1, 2}, {}, {0}, {}}) == ErrorKind::SignDomain);
    CHECK(kind_of({1, 1, {1, 2}, {-1, -2}, {1}, {2}}) == ErrorKind::SignDomain);
}

TEST_CASE("branch points, poles and gaps") {
    const SurfaceParams p = fixtures::one_one(1, -1);
    CHECK(p.branch_points() == std::vector<double>{-2.5, -1, 1, 2});
    // alpha = +1: (z - a_2)/(z - a_1) has its pole at a_1; beta = -1 flips the b factor.
    auto poles = p.poles();
    std::sort(poles.begin(), poles.end());
    CHECK(poles == std::vector<double>{-1, 1});
    CHECK(p.min_gap() == doctest::Approx(1.0));
    CHECK(p.local_gap(2.0) == doctest::Approx(1.0));
    CHECK(p.local_gap(-2.5) == doctest::Approx(1.5));
}

TEST_CASE("moduli dimension after fixing a_1 = 1") {
    CHECK(moduli_dimension(1, 0) == 1);
    CHECK(moduli_dimension(2, 2) == 7);
    CHECK(moduli_dimension(8, 1) == 17);
}

TEST_CASE("json round trip") {
    const SurfaceParams p = fixtures::two_one();
    const RawParams back = raw_params_from_json(to_json(p));
    const RawParams orig = p.raw();
    CHECK(back.m == orig.m);
    CHECK(back.n == orig.n);
    CHECK(back.a == orig.a);
    CHECK(back.b == orig.b);
    CHECK(back.alpha == orig.alpha);
    CHECK(back.beta == orig.beta);
}

TEST_CASE("json without b and beta means n = 0") {
    const RawParams r = raw_params_from_json(nlohmann::json::parse(R"({"m":1,"a":[1,2],"alpha":[-1]})"));
    CHECK(r.n == 0);
    CHECK(r.b.empty());
    CHECK_NOTHROW(SurfaceParams::validate(r));
}

TEST_CASE("malformed json is rejected") {
    CHECK_THROWS_AS(raw_params_from_json(nlohmann::json::parse(R"({"m":1})")), Error);
    CHECK_THROWS_AS(raw_params_from_json(nlohmann::json::parse(R"([1,2])")), Error);
    CHECK_THROWS_AS(raw_params_from_json(nlohmann::json::parse(R"({"m":"one","a":[1,2],"alpha":[1]})")), Error);
}
