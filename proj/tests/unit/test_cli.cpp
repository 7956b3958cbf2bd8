#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Run {
    int code = -1;
    std::string out;
    std::string err;
};

Run invoke(std::initializer_list<std::string> args) {
    std::vector<std::string> owned{"orlapprox"};
    owned.insert(owned.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : owned) argv.push_back(a.c_str());
    std::ostringstream out, err;
    Run r;
    r.code = orlapprox::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

const std::string golden = std::string(ORLAPPROX_SOURCE_DIR) + "/configs/golden.cfg";

std::string write_temp(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << text;
    return path.string();
}

}  // namespace

TEST_CASE("norm on the golden-ratio config") {
    const auto r = invoke({"norm", "--config", golden});
    CHECK(r.code == 0);
    CHECK(r.out.find("luxemburg,1.6180339887") != std::string::npos);
    CHECK(r.out.find("# run.h_grid = 2048") != std::string::npos);
}

TEST_CASE("jackson with pi token") {
    const auto r = invoke({"jackson", "--p", "2", "--alpha", "1", "--tau", "pi", "--n", "2", "--no-sensitivity"});
    CHECK(r.code == 0);
    CHECK(r.out.find("C = 0.70") != std::string::npos);
    CHECK(r.out.find("n,p,J,C,") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    const auto unknown = invoke({"frobnicate"});
    CHECK(unknown.code == 2);
    CHECK(unknown.err.find("Usage") != std::string::npos);
    const auto flag = invoke({"norm", "--bogus", "1"});
    CHECK(flag.code == 2);
    CHECK(flag.err.find("Usage") != std::string::npos);
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"norm", "--config", "/no/such/file.cfg"}).code == 2);
    CHECK(invoke({"jackson", "--tau", "tau"}).code == 2);
    const auto bad_key = write_temp("orlapprox_bad.cfg", "[run]\nwhatever = 1\n");
    CHECK(invoke({"norm", "--config", bad_key}).code == 2);
}

TEST_CASE("bestapprox and modulus emit csv") {
    const auto cfg = write_temp("orlapprox_geo.cfg",
                                "[function]\nrule = geometric\nratio = 0.5\nradius = 40\n[family]\np = 2\n"
                                "[run]\nnorm = luxemburg\nn = 1..3\n");
    const auto e = invoke({"bestapprox", "--config", cfg});
    CHECK(e.code == 0);
    CHECK(e.out.find("n,E_n\n1,0.816496580") != std::string::npos);
    const auto w = invoke({"modulus", "--config", cfg, "--h-grid", "256"});
    CHECK(w.code == 0);
    CHECK(w.out.find("n,delta,omega,h_argmax,grid_value,refinement_gap") != std::string::npos);
}

TEST_CASE("csv output is deterministic") {
    const auto a = std::filesystem::temp_directory_path() / "orlapprox_a.csv";
    const auto b = std::filesystem::temp_directory_path() / "orlapprox_b.csv";
    for (const auto& path : {a, b}) {
        CHECK(invoke({"jackson", "--p", "1", "--n", "1..2", "--grid", "128", "--no-sensitivity", "-o", path.string()})
                  .code == 0);
    }
    auto slurp = [](const std::filesystem::path& p) {
        std::ifstream f(p);
        return std::string(std::istreambuf_iterator<char>(f), {});
    };
    CHECK(slurp(a) == slurp(b));
    CHECK_FALSE(slurp(a).empty());
}

TEST_CASE("verify-direct passes and a halved constant fails") {
    const auto cfg = write_temp("orlapprox_direct.cfg",
                                "[function]\nrule = power\ns = 1.5\nradius = 32\n[family]\np = 1.5\n"
                                "[run]\nn = 1..4\ngrid = 128\nsensitivity = false\nh_grid = 512\n");
    CHECK(invoke({"verify-direct", "--config", cfg}).code == 0);
    CHECK(invoke({"verify-direct", "--config", cfg, "--norm", "luxemburg"}).code == 0);
    CHECK(invoke({"verify-direct", "--config", cfg, "--mode", "sp", "--p", "2"}).code == 0);
    const auto bad = invoke({"verify-direct", "--config", cfg, "--corrupt-constant"});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("FAIL") != std::string::npos);
}

TEST_CASE("verify-inverse and classify") {
    const auto cfg = write_temp("orlapprox_inv.cfg",
                                "[function]\nrule = geometric\nratio = 0.8\nradius = 64\n[family]\np = 2\n"
                                "[run]\nn = 1..16\nh_grid = 512\n");
    CHECK(invoke({"verify-inverse", "--config", cfg}).code == 0);
    CHECK(invoke({"verify-inverse", "--config", cfg, "--form", "alpha", "--alpha", "2"}).code == 0);
    CHECK(invoke({"verify-inverse", "--config", cfg, "--tau", "2pi"}).code == 2);
    const auto rates = write_temp("orlapprox_rates.cfg",
                                  "[function]\nrule = power\ns = 1.0\nradius = 1024\n[family]\np = 2\n"
                                  "[run]\nn = 8..64\nh_grid = 256\nnorm = luxemburg\n");
    const auto c = invoke({"classify", "--config", rates});
    CHECK(c.code == 0);
    CHECK(c.out.find("O(t^beta)") != std::string::npos);
    CHECK(invoke({"classify", "--config", rates, "--majorant", "power:0.5"}).code == 0);
    CHECK(invoke({"classify", "--config", rates, "--majorant", "power:1"}).code == 1);
}

TEST_CASE("suite subset") {
    const auto r = invoke({"suite", "--only", "1,2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS 1 ") != std::string::npos);
    CHECK(r.out.find("PASS 2 ") != std::string::npos);
    CHECK(invoke({"suite", "--only", "12"}).code == 2);
}
