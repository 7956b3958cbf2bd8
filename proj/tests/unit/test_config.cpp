#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "orlapprox/config.hpp"
#include "orlapprox/csv.hpp"
#include "orlapprox/errors.hpp"

using namespace orlapprox;

TEST_CASE("pi tokens") {
    constexpr double pi = std::numbers::pi;
    CHECK(parse_real("pi") == pi);
    CHECK(parse_real("-pi") == -pi);
    CHECK(parse_real("2pi") == doctest::Approx(2 * pi));
    CHECK(parse_real("2*pi") == doctest::Approx(2 * pi));
    CHECK(parse_real("pi/2") == doctest::Approx(pi / 2));
    CHECK(parse_real("0.25") == 0.25);
    CHECK_THROWS_AS(parse_real("tau"), ConfigError);
    CHECK_THROWS_AS(parse_int("3.5"), ConfigError);
}

TEST_CASE("lists, ranges and points") {
    CHECK(parse_list("1, 2 3") == std::vector<double>{1, 2, 3});
    CHECK(parse_range("4..9") == std::pair{4, 9});
    CHECK(parse_range("7") == std::pair{7, 7});
    CHECK_THROWS_AS(parse_range("9..4"), ConfigError);
    const auto pts = parse_points("0:0, 1:2.5");
    REQUIRE(pts.size() == 2);
    CHECK(pts[1] == std::pair{1.0, 2.5});
}

TEST_CASE("ini documents") {
    const auto doc = IniDocument::parse("top = 1\n[Run]\n  N = 3 ; comment\n# note\n[family]\nkind=power\n");
    CHECK(doc.get("", "top") == "1");
    CHECK(doc.get("run", "n") == "3");
    CHECK(doc.get("family", "kind") == "power");
    CHECK_FALSE(doc.get("family", "p").has_value());
    CHECK_THROWS_AS(IniDocument::parse("[run]\nn = 1\nn = 2\n"), ConfigError);
    CHECK_THROWS_AS(IniDocument::parse("[run\n"), ConfigError);
    CHECK_THROWS_AS(IniDocument::parse("just text\n"), ConfigError);
}

TEST_CASE("run config") {
    const auto doc = IniDocument::parse(R"(
[function]
rule = explicit
radius = 1
c[0] = 1
c[1] = 1
[family]
p = 2
p[0] = 1
[run]
norm = luxemburg
n = 1..4
tau = pi
)");
    const auto cfg = parse_config(doc);
    CHECK(cfg.norm == NormKind::luxemburg);
    CHECK(cfg.n_first == 1);
    CHECK(cfg.n_last == 4);
    CHECK(cfg.tau == std::numbers::pi);
    const auto spec = build_spectrum(cfg.function);
    const auto fam = build_family(cfg.family, spec.radius());
    CHECK(luxemburg_norm(fam, spec) == doctest::Approx((1 + std::sqrt(5.0)) / 2).epsilon(1e-9));
    // Defaults of every knob appear in the description.
    const auto lines = describe(cfg);
    auto has = [&](const std::string& prefix) {
        for (const auto& l : lines)
            if (l.rfind(prefix, 0) == 0) return true;
        return false;
    };
    CHECK(has("run.grid = 512"));
    CHECK(has("run.h_grid = 2048"));
    CHECK(has("run.j_max = 64n"));
    CHECK(has("run.seed = "));
}

TEST_CASE("config errors") {
    CHECK_THROWS_AS(parse_config(IniDocument::parse("[run]\nspeed = 3\n")), ConfigError);
    CHECK_THROWS_AS(parse_config(IniDocument::parse("[extra]\nx = 1\n")), ConfigError);
    CHECK_THROWS_AS(parse_config(IniDocument::parse("[run]\nnorm = sup\n")), ConfigError);
    CHECK_THROWS_AS(load_config("/nonexistent/file.cfg"), ConfigError);
    const auto bogus = parse_config(IniDocument::parse("[function]\nrule = power\ns = 1.5\nbogus = 3\n"));
    CHECK_THROWS_AS(build_spectrum(bogus.function), ConfigError);
}

TEST_CASE("csv") {
    CsvWriter csv({"n", "value", "note"});
    csv.add_row({7LL, 0.1, std::string("a,b")});
    csv.add_row({8LL, 1.0 / 3.0, std::string("say \"hi\"")});
    CHECK(csv.str() ==
          "n,value,note\n"
          "7,0.10000000000000001,\"a,b\"\n"
          "8,0.33333333333333331,\"say \"\"hi\"\"\"\n");
    CHECK(format_real(2.0) == "2");
    CHECK_THROWS_AS(csv.add_row({1LL}), ConfigError);
}
