#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "orlapprox/errors.hpp"
#include "orlapprox/oracles.hpp"
#include "orlapprox/orlicz.hpp"

using namespace orlapprox;

namespace {

Spectrum pair(double a, double b) {
    Spectrum s(2);
    s.set(1, a);
    s.set(2, b);
    return s;
}

OrliczFamily golden_family() {
    std::vector<double> e{2.0, 1.0, 2.0}, w(3, 1.0);
    return OrliczFamily::power(1, e, w);
}

}  // namespace

TEST_CASE("modular by hand") {
    CHECK(modular(OrliczFamily::power(2, 2.0), pair(3, 4), 5.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(modular(OrliczFamily::power(2, 2.0), Spectrum(2), 1.0) == 0.0);
    Spectrum s(1);
    s.set(0, 1.0);
    s.set(1, 1.0);
    CHECK(modular(golden_family(), s, 2.0) == doctest::Approx(0.75).epsilon(1e-15));
}

TEST_CASE("luxemburg norm") {
    CHECK(luxemburg_norm(OrliczFamily::power(2, 2.0), pair(3, 4)) == doctest::Approx(5.0).epsilon(1e-9));
    CHECK(luxemburg_norm(OrliczFamily::power(2, 1.0), pair(1, 2)) == doctest::Approx(3.0).epsilon(1e-9));
    Spectrum s(1);
    s.set(0, 1.0);
    s.set(1, 1.0);
    CHECK(luxemburg_norm(golden_family(), s) == doctest::Approx((1.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-9));
    CHECK(luxemburg_norm(golden_family(), Spectrum(1)) == 0.0);
}

TEST_CASE("luxemburg norm is homogeneous and the modular is consistent") {
    const auto fam = OrliczFamily::power(3, std::vector<double>{1.5, 2, 3, 1, 2.5, 4, 2},
                                         std::vector<double>{1, 0.5, 2, 1, 1, 0.7, 1.3});
    Spectrum s(3);
    for (int k = -3; k <= 3; ++k) s.set(k, Complex(0.3 * k, 1.0 / (2 + k * k)));
    const double a = luxemburg_norm(fam, s);
    CHECK(luxemburg_norm(fam, s.scaled(-2.5)) == doctest::Approx(2.5 * a).epsilon(1e-9));
    CHECK(modular(fam, s, a) <= 1.0 + 1e-8);
}

TEST_CASE("norms are monotone in each magnitude") {
    const auto fam = OrliczFamily::scaled_power(2, 3.0);
    Spectrum s(2);
    s.set(-1, 0.4);
    s.set(2, Complex(0.1, 0.2));
    Spectrum bigger = s;
    bigger.set(-1, 0.5);
    CHECK(luxemburg_norm(fam, bigger) >= luxemburg_norm(fam, s));
    CHECK(orlicz_norm(fam, bigger) >= orlicz_norm(fam, s));
}

TEST_CASE("conjugates") {
    const auto quarter = OrliczFamily::power(0, 2.0, 0.25);
    CHECK(conjugate(quarter, 0, 3.0).value == doctest::Approx(9.0));
    const auto linear = OrliczFamily::power(0, 1.0);
    CHECK(conjugate(linear, 0, 0.5).value == 0.0);
    CHECK(conjugate(linear, 0, 1.0).value == 0.0);
    CHECK(conjugate(linear, 0, 1.5).infinite);
    const auto cubic = OrliczFamily::power(0, 3.0, 1.0 / 3.0);
    CHECK(conjugate(cubic, 0, 1.0).value == doctest::Approx(2.0 / 3.0));
    // Numeric sup agrees with the closed form.
    const auto custom = OrliczFamily::custom(0, OrliczFunction::custom([](double u) { return u * u * u / 3.0; }));
    CHECK(conjugate(custom, 0, 1.0).value == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
    CHECK(conjugate(custom, 0, 4.0).value == doctest::Approx(std::pow(4.0, 1.5) / 1.5).epsilon(1e-9));
}

TEST_CASE("orlicz norm") {
    CHECK(orlicz_norm(OrliczFamily::power(2, 1.0), pair(1, 2)) == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(orlicz_norm(OrliczFamily::power(2, 2.0, 0.25), pair(3, 4)) == doctest::Approx(5.0).epsilon(1e-9));
    CHECK(orlicz_norm(OrliczFamily::scaled_power(2, 2.0), pair(3, 4)) == doctest::Approx(5.0).epsilon(1e-9));
    CHECK(orlicz_norm(OrliczFamily::power(2, 1.0), Spectrum(2)) == 0.0);
}

TEST_CASE("sandwich on a mixed five-term family") {
    std::vector<double> e(5, 2.0), w(5, 1.0);
    e[2] = 1.0;
    const auto fam = OrliczFamily::power(2, e, w);
    const double c[] = {0.7, -1.3, 0.2, 2.1, -0.4};
    Spectrum s(2);
    for (int k = -2; k <= 2; ++k) s.set(k, c[k + 2]);
    const double lux = luxemburg_norm(fam, s), orl = orlicz_norm(fam, s);
    CHECK(lux <= orl * (1 + 1e-9));
    CHECK(orl <= 2 * lux * (1 + 1e-9));
    CHECK(orlicz_norm_dual_ascent(fam, s).value == doctest::Approx(orl).epsilon(1e-4));
}

TEST_CASE("dual feasible value") {
    const auto linear = OrliczFamily::power(2, 1.0);
    std::vector<double> ones(5, 1.0), zeros(5, 0.0);
    const auto a = dual_feasible_value(linear, pair(1, 2), ones);
    CHECK(a.feasible);
    CHECK(a.value == doctest::Approx(3.0));
    const auto b = dual_feasible_value(linear, pair(1, 2), zeros);
    CHECK(b.feasible);
    CHECK(b.value == 0.0);
    std::vector<double> big(5, 1.5);
    CHECK_FALSE(dual_feasible_value(linear, pair(1, 2), big).feasible);
    const auto quarter = OrliczFamily::power(2, 2.0, 0.25);
    CHECK(orlicz_norm_dual_ascent(quarter, pair(3, 4)).value == doctest::Approx(5.0).epsilon(1e-6));
}

TEST_CASE("tabulated functions") {
    const auto m = OrliczFunction::tabulated({{0, 0}, {1, 1}, {2, 4}});
    CHECK(m(0.5) == doctest::Approx(0.5));
    CHECK(m(3.0) == doctest::Approx(7.0));
    const auto fam = OrliczFamily::custom(1, m);
    CHECK(fam.check_invariants().empty());
}

TEST_CASE("invalid families are refused") {
    CHECK_THROWS_AS(OrliczFamily::power(1, 0.5), DomainError);
    CHECK_THROWS_AS(parse_norm_kind("sup"), ConfigError);
}
