#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "orlapprox/smoothness.hpp"

using namespace orlapprox;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("multiplier validation") {
    const auto c1 = validate_multiplier(Multiplier::classical(1.0));
    CHECK(c1.valid);
    CHECK(c1.zero_fraction < 0.01);
    CHECK(validate_multiplier(Multiplier::custom([](double t) { return std::abs(std::sin(t)); })).valid);
    const auto one = validate_multiplier(Multiplier::custom([](double) { return 1.0; }, "one"));
    CHECK_FALSE(one.valid);
    CHECK_FALSE(one.issues.empty());
}

TEST_CASE("classical multiplier values") {
    const auto phi = Multiplier::classical(2.0);
    CHECK(phi(pi) == doctest::Approx(4.0));
    CHECK(phi(-pi / 2) == doctest::Approx(2.0));
    CHECK(phi.bound() == doctest::Approx(4.0));
}

TEST_CASE("generalized difference") {
    Spectrum d1(3);
    d1.set(1, 1.0);
    CHECK(generalized_difference(d1, Multiplier::classical(1.0), 0.0).is_zero());
    CHECK(std::abs(generalized_difference(d1, Multiplier::classical(1.0), pi).at(1) - 2.0) < 1e-12);
    Spectrum d2(3);
    d2.set(2, 1.0);
    CHECK(std::abs(generalized_difference(d2, Multiplier::classical(2.0), pi / 2).at(2) - 4.0) < 1e-12);
}

TEST_CASE("modulus closed forms") {
    const auto s2 = OrliczFamily::power(4, 2.0);
    const auto phi = Multiplier::classical(1.0);
    Spectrum constant(4);
    constant.set(0, 3.0);
    CHECK(modulus(constant, phi, 1.0, s2, NormKind::luxemburg).value == 0.0);
    Spectrum d1(4);
    d1.set(1, 1.0);
    CHECK(modulus(d1, phi, pi / 2, s2, NormKind::luxemburg).value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
    const auto full = modulus(d1, phi, pi, s2, NormKind::luxemburg);
    CHECK(full.value == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(full.h_argmax == doctest::Approx(pi).epsilon(1e-3));
    CHECK(full.refinement_gap >= 0.0);
}

TEST_CASE("profile matches separate calls") {
    const auto fam = OrliczFamily::power(32, 1.5);
    const auto spec = spectrum_from_rule(PowerRule{1.2}, 32);
    const auto phi = Multiplier::classical(1.0);
    std::vector<double> deltas{pi, pi / 7, pi / 3, pi / 16};
    const auto prof = modulus_profile(spec, phi, deltas, fam, NormKind::orlicz, 256);
    REQUIRE(prof.size() == deltas.size());
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        const auto one = modulus(spec, phi, deltas[i], fam, NormKind::orlicz, 256);
        CHECK(prof[i].value >= one.value * (1 - 1e-9));
        CHECK(prof[i].value == doctest::Approx(one.value).epsilon(1e-6));
    }
    // Monotone in delta.
    CHECK(prof[3].value <= prof[1].value);
    CHECK(prof[1].value <= prof[2].value);
    CHECK(prof[2].value <= prof[0].value);
}
