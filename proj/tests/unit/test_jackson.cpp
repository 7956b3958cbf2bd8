#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "orlapprox/errors.hpp"
#include "orlapprox/jackson.hpp"

using namespace orlapprox;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("I functional") {
    const auto phi = Multiplier::classical(1.0);
    const auto dirac = i_functional(phi, 2.0, 1, DiscreteMeasure::dirac(pi, pi));
    CHECK(dirac.value == doctest::Approx(0.0));
    CHECK(dirac.argmin == 2);
    const auto uniform = i_functional(phi, 2.0, 1, DiscreteMeasure::uniform(pi, 64));
    CHECK(uniform.value == doctest::Approx(2.0).epsilon(1e-2));
    const DiscreteMeasure two(pi, {pi / 2, pi}, {0.5, 0.5});
    const auto t = i_functional(phi, 2.0, 1, two, 4);
    CHECK(t.value == doctest::Approx(0.0));
    CHECK(t.argmin == 4);
}

TEST_CASE("ratio upper bound") {
    const auto phi = Multiplier::classical(1.0);
    CHECK(ratio_upper_bound(phi, 2.0, 1, DiscreteMeasure::uniform(pi, 64)) ==
          doctest::Approx(std::sqrt(0.5)).epsilon(1e-2));
    CHECK_THROWS_AS(ratio_upper_bound(phi, 2.0, 1, DiscreteMeasure::dirac(pi, pi)), DegenerateMeasureError);
}

TEST_CASE("sharp constant for p = 2") {
    SharpConstantOptions o;
    o.j_max = 64;
    o.sensitivity = false;
    const auto r = sharp_constant_lp(Multiplier::classical(1.0), 2.0, 2, pi, o);
    CHECK(r.C == doctest::Approx(std::sqrt(0.5)).epsilon(1e-2));
    CHECK(r.diagnostics.duality_gap < 1e-9);
    double mass = 0.0;
    for (double x : r.rho) mass += x;
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(r.measure.total() == doctest::Approx(1.0).epsilon(1e-9));
    // Weak duality and complementary slackness at v*.
    CHECK(ratio_upper_bound(Multiplier::classical(1.0), 2.0, 2, r.measure, 64) ==
          doctest::Approx(r.C).epsilon(1e-6));
}

TEST_CASE("complementary slackness for p = 1, alpha = 2") {
    SharpConstantOptions o;
    o.sensitivity = false;
    const auto phi = Multiplier::classical(2.0);
    const auto r = sharp_constant_lp(phi, 1.0, 1, pi, o);
    CHECK(ratio_upper_bound(phi, 1.0, 1, r.measure) == doctest::Approx(r.C).epsilon(1e-6));
}

TEST_CASE("J responds monotonically to j_max and grid") {
    const auto phi = Multiplier::classical(1.0);
    auto J = [&](int grid, int j_max) {
        SharpConstantOptions o;
        o.grid = grid;
        o.j_max = j_max;
        o.sensitivity = false;
        return sharp_constant_lp(phi, 2.0, 1, pi, o).J;
    };
    CHECK(J(128, 32) <= J(128, 16) * (1 + 1e-9));
    CHECK(J(256, 16) >= J(128, 16) * (1 - 1e-9));
}

TEST_CASE("direct inequality on closed forms") {
    const auto phi = Multiplier::classical(1.0);
    const auto s2 = OrliczFamily::power(8, 2.0);
    Spectrum d(8);
    d.set(2, 1.0);
    const auto rep = verify_direct(s2, d, 2, phi, pi, SpExponent{2.0}, NormKind::luxemburg, FixedConstant{std::sqrt(0.5)});
    CHECK(rep.lhs == doctest::Approx(1.0));
    CHECK(rep.omega == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(rep.rhs == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
    CHECK(rep.pass);
    Spectrum poly(8);
    poly.set(1, 1.0);
    const auto zero = verify_direct(s2, poly, 2, phi, pi, GeneralOrlicz{}, NormKind::orlicz, FixedConstant{0.8});
    CHECK(zero.lhs == 0.0);
    CHECK(zero.pass);
    const auto bad = verify_direct(s2, d, 2, phi, pi, SpExponent{2.0}, NormKind::luxemburg, FixedConstant{0.25});
    CHECK_FALSE(bad.pass);
}

TEST_CASE("sweep agrees with single checks") {
    const auto phi = Multiplier::classical(1.0);
    const auto fam = OrliczFamily::power(16, 1.5);
    const auto spec = spectrum_from_rule(GeometricRule{0.8}, 16);
    const std::vector<double> c{0.8, 0.8, 0.8, 0.8};
    const auto sweep = verify_direct_sweep(fam, spec, 1, 4, phi, pi, GeneralOrlicz{}, NormKind::luxemburg, c, 512);
    REQUIRE(sweep.size() == 4);
    for (const auto& r : sweep) {
        const auto one = verify_direct(fam, spec, r.n, phi, pi, GeneralOrlicz{}, NormKind::luxemburg,
                                       FixedConstant{0.8}, 512);
        CHECK(r.lhs == doctest::Approx(one.lhs));
        CHECK(r.factor == 2.0);
        CHECK(r.rhs == doctest::Approx(one.rhs).epsilon(1e-6));
    }
}

TEST_CASE("sharpness search") {
    const auto phi = Multiplier::classical(1.0);
    SharpnessOptions so;
    so.h_grid = 512;
    const auto s = sharpness_search(phi, 2.0, 1, pi, so);
    CHECK(s.best_ratio >= 0.5);  // a single frequency already gives 1/2
    CHECK(s.best_ratio <= 0.71);
    CHECK(s.k1 >= 1);
    CHECK(s.k2 > s.k1);
}
