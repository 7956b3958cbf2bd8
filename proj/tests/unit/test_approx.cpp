#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "orlapprox/approx.hpp"
#include "orlapprox/errors.hpp"
#include "orlapprox/oracles.hpp"

using namespace orlapprox;

TEST_CASE("polynomials are their own best approximation") {
    Spectrum p(6);
    for (int k = -3; k <= 3; ++k) p.set(k, Complex(k, 1.0));
    const auto fam = OrliczFamily::power(6, 2.0);
    for (int n = 4; n <= 7; ++n) CHECK(best_approx(fam, p, n, NormKind::luxemburg) == 0.0);
    CHECK(best_approx(fam, p, 3, NormKind::luxemburg) > 0.0);
}

TEST_CASE("geometric tails") {
    const auto g = spectrum_from_rule(GeometricRule{0.5}, 60);
    CHECK(best_approx(OrliczFamily::power(60, 1.0), g, 2, NormKind::luxemburg) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(best_approx(OrliczFamily::power(60, 2.0), g, 1, NormKind::luxemburg) ==
          doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-9));
}

TEST_CASE("sequence is nonincreasing and matches single calls") {
    const auto fam = OrliczFamily::scaled_power(40, 1.5);
    const auto spec = spectrum_from_rule(PowerRule{1.0}, 40);
    const auto seq = best_approx_sequence(fam, spec, 1, 41, NormKind::orlicz);
    REQUIRE(seq.size() == 41);
    for (std::size_t i = 1; i < seq.size(); ++i) CHECK(seq[i].second <= seq[i - 1].second * (1 + 1e-12));
    CHECK(seq[9].second == doctest::Approx(best_approx(fam, spec, 10, NormKind::orlicz)).epsilon(1e-12));
    CHECK(seq.back().second == 0.0);
    CHECK_THROWS_AS(best_approx(fam, spec, 42, NormKind::orlicz), WindowError);
}

TEST_CASE("direct minimization agrees with the tail") {
    std::vector<double> e{2.0, 1.0, 2.0, 3.0, 1.5}, w{1.0, 1.0, 0.5, 2.0, 1.0};
    const auto fam = OrliczFamily::power(2, e, w);
    Spectrum s(2);
    s.set(-2, Complex(0.3, -0.2));
    s.set(-1, 0.9);
    s.set(0, Complex(-0.4, 0.5));
    s.set(1, 0.1);
    s.set(2, Complex(0.7, 0.7));
    for (auto kind : {NormKind::luxemburg, NormKind::orlicz}) {
        for (int n = 1; n <= 2; ++n) {
            const double tail_value = best_approx(fam, s, n, kind);
            CHECK(best_approx_direct(fam, s, n, kind).value == doctest::Approx(tail_value).epsilon(1e-4));
        }
    }
}
