#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "maxgraph/integrator.hpp"

using namespace maxgraph;

namespace {

double dist(const Vec3& a, const oracle::R3& b) {
    return std::max({std::abs(a[0] - b[0]), std::abs(a[1] - b[1]), std::abs(a[2] - b[2])});
}

cplx random_upper(std::mt19937_64& rng, const SurfaceParams& p) {
    std::uniform_real_distribution<double> u(-5.0, 5.0), v(0.05, 4.0);
    (void)p;
    return {u(rng), v(rng)};
}

}  // namespace

TEST_CASE("real-axis displacement from 3 to 4 matches the fixed-order oracle") {
    const SurfaceParams p = fixtures::one_zero();
    const Displacement d = integrate_path(PathSpec{{{3.0, 0.0}, {4.0, 0.0}}}, p);
    const oracle::R3 ref = oracle::segment({3.0, 0.0}, {4.0, 0.0}, fixtures::to_oracle(p), 2000);
    CHECK(dist(d.value, ref) <= 1e-9);
    CHECK(d.value[1] == doctest::Approx(0.0));
}

TEST_CASE("immersion at the basepoint is the origin") {
    const SurfaceParams p = fixtures::two_one();
    const ImmersionSample s = immersion({default_basepoint(p), 0.0}, p);
    CHECK(max_abs(s.f) == 0.0);
    CHECK(default_basepoint(p) == doctest::Approx(5.5));
    CHECK_THROWS_AS(check_basepoint(1.5, fixtures::one_zero()), Error);
    CHECK_THROWS_AS(check_basepoint(-3.0, fixtures::one_zero()), Error);
}

TEST_CASE("immersion agrees with an independently routed oracle") {
    std::mt19937_64 rng(21);
    for (const SurfaceParams& p : {fixtures::one_zero(), fixtures::one_one(), fixtures::two_one()}) {
        const double x0 = default_basepoint(p);
        for (int i = 0; i < 10; ++i) {
            cplx z = random_upper(rng, p);
            if (i % 2)
                z = std::conj(z);
            const Vec3 f = immersion(z, p).f;
            const oracle::R3 ref = oracle::immersion(z, fixtures::to_oracle(p), x0, 400);
            CHECK(dist(f, ref) <= 1e-8);
        }
    }
}

TEST_CASE("path independence for homotopic polylines") {
    std::mt19937_64 rng(5);
    const SurfaceParams p = fixtures::two_one();
    for (int i = 0; i < 20; ++i) {
        const cplx from = random_upper(rng, p), to = random_upper(rng, p);
        const cplx via1{from.real(), 6.0}, via2{to.real(), 6.0};
        const Displacement direct = integrate_path(PathSpec{{from, to}}, p);
        const Displacement around = integrate_path(PathSpec{{from, via1, via2, to}}, p);
        CHECK(max_abs(direct.value - around.value) <= 1e-8);
    }
}

TEST_CASE("second component is -Arg(z) along the route") {
    std::mt19937_64 rng(8);
    for (const SurfaceParams& p : fixtures::spread()) {
        for (int i = 0; i < 5; ++i) {
            cplx z = random_upper(rng, p);
            if (i % 2)
                z = std::conj(z);
            CHECK(immersion(z, p).f[1] == doctest::Approx(-std::arg(z)).epsilon(1e-10).scale(1.0));
        }
    }
}

TEST_CASE("winding k times around 0 shifts f2 by -2 pi k") {
    const SurfaceParams p = fixtures::one_one();
    const double s = 0.4;
    for (int k = 1; k <= 3; ++k) {
        std::vector<cplx> wp{{s, 0.1}};
        for (int t = 0; t < k; ++t)
            for (cplx c : {cplx{-s, s}, cplx{-s, -s}, cplx{s, -s}, cplx{s, 0.1}})
                wp.push_back(c);
        const Displacement d = integrate_path(PathSpec{wp}, p);
        CHECK(std::abs(d.value[1] + 2.0 * kPi * k) <= 1e-8);
        CHECK(std::abs(d.value[0]) <= 1e-8);
        CHECK(std::abs(d.value[2]) <= 1e-8);
    }
}

TEST_CASE("paths through singular points or across cuts are refused") {
    const SurfaceParams p = fixtures::one_zero();
    CHECK_THROWS_AS(integrate_path(PathSpec{{{1.5, -1.0}, {1.5, 1.0}}}, p), Error);
    CHECK_THROWS_AS(integrate_path(PathSpec{{{-1.0, 0.0}, {1.0, 0.0}}}, p), Error);
    CHECK_THROWS_AS(integrate_path(PathSpec{{{0.5, 1.0}, {1.0, 0.0}, {3.0, 1.0}}}, p), Error);
    // The same endpoints through a permitted crossing of the real axis.
    CHECK_NOTHROW(integrate_path(PathSpec{{{0.5, -1.0}, {0.5, 1.0}}}, p));
}

TEST_CASE("loop periods at the ends are the residues") {
    for (const SurfaceParams& p : fixtures::spread()) {
        const PeriodVector zero = loop_period(LoopCenter::Zero, p);
        const PeriodVector inf = loop_period(LoopCenter::Infinity, p);
        CHECK(max_abs(zero.v - Vec3{0.0, -2.0 * kPi, 0.0}) <= 1e-8);
        CHECK(max_abs(inf.v - Vec3{0.0, 2.0 * kPi, 0.0}) <= 1e-8);
        CHECK(max_abs(zero.v + inf.v) <= 1e-8);
        CHECK(zero.radius < p.a(1));
    }
}

TEST_CASE("error estimates bound the error against the oracle on random segments") {
    std::mt19937_64 rng(17);
    const auto configs = fixtures::spread();
    int checked = 0;
    for (int i = 0; i < 50; ++i) {
        const SurfaceParams& p = configs[i % 10];
        const cplx from = random_upper(rng, p), to = random_upper(rng, p);
        const Displacement d = integrate_path(PathSpec{{from, to}}, p);
        const oracle::R3 ref = oracle::segment(from, to, fixtures::to_oracle(p), 2000);
        CHECK(dist(d.value, ref) <= d.error + 1e-12);
        ++checked;
    }
    CHECK(checked == 50);
}

TEST_CASE("conjugation symmetry of the immersion") {
    std::mt19937_64 rng(2);
    const SurfaceParams p = fixtures::two_one();
    for (int i = 0; i < 20; ++i) {
        const cplx z = random_upper(rng, p);
        const Vec3 up = immersion(z, p).f, down = immersion(std::conj(z), p).f;
        CHECK(std::abs(up[0] - down[0]) <= 1e-8);
        CHECK(std::abs(up[1] + down[1]) <= 1e-8);
        CHECK(std::abs(up[2] - down[2]) <= 1e-8);
    }
}

TEST_CASE("images of the two half-axes are pi apart in x2") {
    const SurfaceParams p = fixtures::one_one();
    CHECK(immersion({-0.5, 0.0}, p).f[1] == doctest::Approx(-kPi).epsilon(1e-12));
    CHECK(immersion({-4.0, 0.0}, p).f[1] == doctest::Approx(-kPi).epsilon(1e-12));
    CHECK(std::abs(immersion({0.5, 0.0}, p).f[1]) <= 1e-12);
}

TEST_CASE("apex limits from all sides and along the interval") {
    for (const SurfaceParams& p : {fixtures::one_zero(), fixtures::one_one(), fixtures::two_one()}) {
        const double x0 = default_basepoint(p);
        for (const SingularComponent& c : singular_components(p)) {
            const Vec3 mid = apex_direct(c, p, x0).f;
            for (ApproachSide side : {ApproachSide::Above, ApproachSide::Left, ApproachSide::Right}) {
                const ApexEstimate e = apex(c, side, p, x0);
                CHECK(max_abs(e.value - mid) <= 1e-6);
            }
            Vec3 below = apex(c, ApproachSide::Below, p, x0).value;
            if (c.axis == Axis::Negative)
                below[1] -= 2.0 * kPi;  // the lower half-plane reaches the axis at Arg = -pi
            CHECK(max_abs(below - mid) <= 1e-6);

            ApexOptions quarter;
            quarter.interior_fraction = 0.25;
            CHECK(max_abs(apex(c, ApproachSide::Above, p, x0, quarter).value - mid) <= 1e-6);
            if (c.axis == Axis::Positive)
                CHECK(std::abs(mid[1]) <= 1e-10);
            else
                CHECK(std::abs(mid[1] + kPi) <= 1e-10);
        }
    }
}
