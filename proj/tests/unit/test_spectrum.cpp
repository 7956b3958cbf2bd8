#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <fstream>
#include <numbers>
#include <vector>

#include "orlapprox/errors.hpp"
#include "orlapprox/spectrum.hpp"

using namespace orlapprox;

namespace {

void check_real(const Spectrum& s, std::vector<double> expected) {
    REQUIRE(s.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(s.values()[i].real() == doctest::Approx(expected[i]));
        CHECK(s.values()[i].imag() == doctest::Approx(0.0));
    }
}

}  // namespace

TEST_CASE("rules") {
    check_real(spectrum_from_rule(DeltaRule{1, 1.0}, 3), {0, 0, 0, 0, 1, 0, 0});
    check_real(spectrum_from_rule(GeometricRule{0.5}, 2), {0.25, 0.5, 1, 0.5, 0.25});
    check_real(spectrum_from_rule(PowerRule{2.0}, 2), {0.25, 1, 0, 1, 0.25});
    const auto lac = spectrum_from_rule(LacunaryRule{{}, 0.5}, 4);
    CHECK(lac.at(1).real() == doctest::Approx(1.0));
    CHECK(lac.at(-2).real() == doctest::Approx(0.5));
    CHECK(lac.at(4).real() == doctest::Approx(0.25));
    CHECK(lac.at(3) == Complex(0.0));
}

TEST_CASE("rules from tags") {
    const auto r = make_rule("geometric", {{"ratio", {0.5}}});
    check_real(spectrum_from_rule(r, 1), {0.5, 1, 0.5});
    CHECK_THROWS_AS(make_rule("gaussian", {}), ConfigError);
}

TEST_CASE("samples") {
    constexpr double pi = std::numbers::pi;
    std::vector<Complex> cosine(16), one(8, 1.0), saw(4096);
    for (int j = 0; j < 16; ++j) cosine[j] = std::cos(2 * pi * j / 16);
    const auto c = spectrum_from_samples(cosine, 2);
    CHECK(std::abs(c.at(1) - 0.5) < 1e-12);
    CHECK(std::abs(c.at(-1) - 0.5) < 1e-12);
    CHECK(std::abs(c.at(0)) < 1e-12);
    CHECK(std::abs(c.at(2)) < 1e-12);
    const auto u = spectrum_from_samples(one, 1);
    CHECK(std::abs(u.at(0) - 1.0) < 1e-12);
    CHECK(std::abs(u.at(1)) < 1e-12);
    for (int j = 1; j < 4096; ++j) saw[j] = (pi - 2 * pi * j / 4096) / 2;
    const auto s = spectrum_from_samples(saw, 8);
    for (int k = 1; k <= 8; ++k) CHECK(std::abs(std::abs(s.at(k)) - 0.5 / k) < 1e-3);
    CHECK_THROWS_AS(spectrum_from_samples(one, 4), DomainError);
}

TEST_CASE("sample files") {
    const auto path = std::filesystem::temp_directory_path() / "orlapprox_samples_test.txt";
    {
        std::ofstream f(path);
        f.precision(17);
        f << "# x real imag\n";
        for (int j = 0; j < 8; ++j) f << 2 * std::numbers::pi * j / 8 << " 2 0\n";
    }
    const auto xs = read_samples(path);
    REQUIRE(xs.size() == 8);
    CHECK(spectrum_from_samples(xs, 2).at(0) == Complex(2.0));
    std::filesystem::remove(path);
    CHECK_THROWS_AS(read_samples(path), ConfigError);
}

TEST_CASE("partial sums and tails") {
    const auto g = spectrum_from_rule(GeometricRule{0.5}, 2);
    check_real(partial_sum(g, 2), {0, 0.5, 1, 0.5, 0});
    check_real(partial_sum(g, 3), {0.25, 0.5, 1, 0.5, 0.25});
    check_real(tail(g, 2), {0.25, 0, 0, 0, 0.25});
    check_real(tail(g, 1), {0.25, 0.5, 0, 0.5, 0.25});
    CHECK(partial_sum(spectrum_from_rule(DeltaRule{2, 1.0}, 3), 2).is_zero());
    CHECK(tail(partial_sum(g, 2), 2).is_zero());
    CHECK_THROWS_AS(partial_sum(g, 4), WindowError);
    CHECK_THROWS_AS(g.at(3), WindowError);
}
