// Runs acceptance criteria 1-11 and prints one PASS/FAIL line per criterion.
//
//   acceptance [--seed N] [--only 1,2,3] [--expect-fail 7,8]
//
// Exit status is 0 when every criterion passes. With --expect-fail the listed
// criteria must FAIL (their outcome is known and recorded) and all others
// must PASS.

#include <iostream>
#include <set>

#include <CLI11.hpp>

#include "orlapprox/config.hpp"
#include "orlapprox/errors.hpp"
#include "orlapprox/suite.hpp"

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    orlapprox::SuiteOptions opt;
    std::string only, expect;
    app.add_option("--seed", opt.seed);
    app.add_option("--only", only);
    app.add_option("--expect-fail", expect);
    CLI11_PARSE(app, argc, argv);
    std::set<int> expected;
    try {
        for (double id : orlapprox::parse_list(only)) opt.only.push_back(static_cast<int>(id));
        for (double id : orlapprox::parse_list(expect)) expected.insert(static_cast<int>(id));
        const auto report = orlapprox::run_suite(opt, [](const orlapprox::CriterionResult& r) {
            std::cout << orlapprox::format_line(r) << std::endl;
        });
        int unexpected = 0;
        for (const auto& r : report.results) {
            const bool want_fail = expected.count(r.id) > 0;
            if (r.solver_failure || r.pass == want_fail) {
                ++unexpected;
                std::cout << "unexpected outcome for criterion " << r.id << '\n';
            }
        }
        if (report.solver_failure()) return 3;
        if (expected.empty()) return report.all_pass() ? 0 : 1;
        return unexpected == 0 ? 0 : 1;
    } catch (const orlapprox::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
