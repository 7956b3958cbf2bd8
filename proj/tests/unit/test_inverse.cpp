#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "orlapprox/errors.hpp"
#include "orlapprox/inverse.hpp"

using namespace orlapprox;

namespace {
constexpr double pi = std::numbers::pi;

Spectrum delta_at(int k, int radius) {
    Spectrum s(radius);
    s.set(k, 1.0);
    return s;
}
}  // namespace

TEST_CASE("general bound: constant and single frequency") {
    const auto s2 = OrliczFamily::power(8, 2.0);
    const auto phi = Multiplier::classical(1.0);
    Spectrum c(8);
    c.set(0, 2.0);
    const auto zero = inverse_bound_general(s2, c, phi, pi, 3, NormKind::luxemburg, 256);
    CHECK(zero.lhs == 0.0);
    CHECK(zero.rhs == 0.0);
    CHECK(zero.pass);
    for (int n = 1; n <= 5; ++n) {
        const auto r = inverse_bound_general(s2, delta_at(n, 8), phi, pi, n, NormKind::luxemburg);
        CHECK(r.lhs == doctest::Approx(2.0).epsilon(1e-9));
        CHECK(r.rhs == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(r.pass);
    }
}

TEST_CASE("alpha bound: single frequency") {
    const auto s2 = OrliczFamily::power(8, 2.0);
    for (int n = 1; n <= 4; ++n) {
        const auto r = inverse_bound_alpha(s2, delta_at(n, 8), 1.0, n, NormKind::luxemburg);
        CHECK(r.lhs == doctest::Approx(2.0).epsilon(1e-9));
        CHECK(r.rhs == doctest::Approx(2 * pi).epsilon(1e-12));
        CHECK(r.pass);
    }
}

TEST_CASE("sweeps on a geometric spectrum") {
    const auto fam = OrliczFamily::power(32, 1.5);
    const auto spec = spectrum_from_rule(GeometricRule{0.7}, 32);
    const auto g = inverse_general_sweep(fam, spec, Multiplier::classical(1.0), pi, 16, NormKind::orlicz, 512);
    const auto a = inverse_alpha_sweep(fam, spec, 1.0, 16, NormKind::orlicz, 512);
    REQUIRE(g.size() == 16);
    REQUIRE(a.size() == 16);
    for (std::size_t i = 0; i < g.size(); ++i) {
        CHECK(g[i].pass);
        CHECK(a[i].pass);
        CHECK(a[i].rhs >= g[i].rhs);
        CHECK(g[i].lhs == doctest::Approx(a[i].lhs));
    }
    CHECK(g[7].slack > 0.0);
}

TEST_CASE("multiplier must be monotone on [0, tau]") {
    CHECK_NOTHROW(check_monotone_multiplier(Multiplier::classical(1.0), pi));
    CHECK_THROWS_AS(check_monotone_multiplier(Multiplier::classical(1.0), 2 * pi), PreconditionError);
}

TEST_CASE("majorant validation") {
    CHECK(validate_majorant(Majorant::power(0.5)).valid);
    CHECK(validate_majorant(Majorant::power_log(1.0)).valid);
    CHECK_FALSE(validate_majorant(Majorant::custom([](double) { return 1.0; })).valid);
    CHECK_FALSE(validate_majorant(Majorant::custom([](double t) { return 1.0 - t; })).valid);
}

TEST_CASE("condition B") {
    const double alpha = 1.0;
    const auto half = check_condition_B(Majorant::power(alpha / 2), alpha);
    CHECK(half.verdict == GrowthVerdict::bounded);
    CHECK(half.ratio.back() == doctest::Approx(2.0 / alpha).epsilon(0.02));
    CHECK(check_condition_B(Majorant::power(alpha), alpha).verdict == GrowthVerdict::growing);
    const auto bumped = Majorant::custom([=](double t) { return std::pow(t, alpha) * (1 + t); });
    CHECK(check_condition_B(bumped, alpha).verdict == GrowthVerdict::growing);
}

TEST_CASE("rate classification") {
    constexpr int K = 2048;
    const auto fam = OrliczFamily::power(K, 2.0);
    std::vector<int> ns;
    for (int i = 0; i <= 12; ++i) ns.push_back(static_cast<int>(std::lround(8 * std::pow(2.0, i / 3.0))));
    const auto below = classify_rates(fam, spectrum_from_rule(PowerRule{1.0}, K), 1.0, NormKind::luxemburg, ns, 512);
    CHECK(below.category == RateCategory::beta_below_alpha);
    CHECK(below.beta == doctest::Approx(0.5).epsilon(0.3));
    CHECK(std::abs(below.omega_slope - 0.5) < 0.15);
    CHECK_FALSE(below.log_flag);
    const auto at = classify_rates(fam, spectrum_from_rule(PowerRule{1.5}, K), 1.0, NormKind::luxemburg, ns, 512);
    CHECK(at.log_flag);
    const auto above = classify_rates(fam, spectrum_from_rule(PowerRule{2.5}, K), 1.0, NormKind::luxemburg, ns, 512);
    CHECK(above.category == RateCategory::beta_above_alpha);
    CHECK(std::abs(above.omega_slope - 1.0) < 0.15);
    CHECK_THROWS_AS(classify_rates(fam, delta_at(3, K), 1.0, NormKind::luxemburg, ns, 512), DomainError);
}

TEST_CASE("class membership") {
    constexpr int K = 2048;
    const auto fam = OrliczFamily::power(K, 2.0);
    std::vector<int> ns;
    for (int n = 8; n <= 96; n += 4) ns.push_back(n);
    const auto omega = Majorant::power(0.5);
    const auto ok = class_membership(fam, spectrum_from_rule(PowerRule{1.0}, K), 1.0, omega, NormKind::luxemburg, ns,
                                     512);
    CHECK(ok.verdict == MembershipVerdict::both_bounded);
    const auto geo = class_membership(fam, spectrum_from_rule(GeometricRule{0.5}, K), 1.0, omega,
                                      NormKind::luxemburg, ns, 512);
    CHECK(geo.verdict == MembershipVerdict::both_bounded);
    const auto slow = class_membership(fam, spectrum_from_rule(PowerRule{0.6}, K), 1.0, omega, NormKind::luxemburg,
                                       ns, 512);
    CHECK(slow.verdict == MembershipVerdict::both_growing);
    CHECK_THROWS_AS(class_membership(fam, spectrum_from_rule(PowerRule{1.5}, K), 1.0, Majorant::power(1.0),
                                     NormKind::luxemburg, ns, 512),
                    PreconditionError);
}
