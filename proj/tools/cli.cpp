#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "orlapprox/approx.hpp"
#include "orlapprox/config.hpp"
#include "orlapprox/csv.hpp"
#include "orlapprox/errors.hpp"
#include "orlapprox/inverse.hpp"
#include "orlapprox/jackson.hpp"
#include "orlapprox/smoothness.hpp"
#include "orlapprox/suite.hpp"

namespace orlapprox::cli {

namespace {

struct Flags {
    std::string config;
    std::string p, alpha, tau, n, norm, mode, delta, grid, j_max, h_grid, seed, output;
    bool no_sensitivity = false;
    // Subcommand specific.
    bool suite = false;
    bool corrupt = false;
    std::string form = "general";
    std::string majorant;
    std::string only;
};

void add_common(CLI::App* app, Flags& f) {
    app->add_option("--config,-c", f.config, "INI config file")->check(CLI::ExistingFile);
    app->add_option("--p", f.p, "exponent p");
    app->add_option("--alpha", f.alpha, "order of the classical multiplier");
    app->add_option("--tau", f.tau, "tau (accepts pi, 2pi, pi/2)");
    app->add_option("--n", f.n, "degree or range a..b");
    app->add_option("--norm", f.norm, "luxemburg or orlicz");
    app->add_option("--mode", f.mode, "general or sp");
    app->add_option("--delta", f.delta, "modulus step bound (default tau/n)");
    app->add_option("--grid", f.grid, "LP node grid");
    app->add_option("--j-max,--j_max", f.j_max, "largest LP frequency (default 64n)");
    app->add_option("--h-grid,--h_grid", f.h_grid, "modulus scan points");
    app->add_option("--seed", f.seed, "random seed");
    app->add_option("--output,-o", f.output, "CSV output path (default stdout)");
    app->add_flag("--no-sensitivity", f.no_sensitivity, "skip the doubled grid/j_max re-solve");
}

RunConfig make_config(const Flags& f) {
    RunConfig cfg = f.config.empty() ? RunConfig{} : load_config(f.config);
    if (!f.p.empty()) cfg.p = parse_real(f.p);
    if (!f.alpha.empty()) {
        cfg.multiplier.kind = "classical";
        cfg.multiplier.alpha = parse_real(f.alpha);
    }
    if (!f.tau.empty()) cfg.tau = parse_real(f.tau);
    if (!f.n.empty()) std::tie(cfg.n_first, cfg.n_last) = parse_range(f.n);
    if (!f.norm.empty()) cfg.norm = parse_norm_kind(f.norm);
    if (!f.mode.empty()) {
        if (f.mode != "general" && f.mode != "sp") throw ConfigError("mode must be general or sp");
        cfg.mode = f.mode;
    }
    if (!f.delta.empty()) cfg.delta = parse_real(f.delta);
    if (!f.grid.empty()) cfg.grid = parse_int(f.grid);
    if (!f.j_max.empty()) cfg.j_max = parse_int(f.j_max);
    if (!f.h_grid.empty()) cfg.h_grid = parse_int(f.h_grid);
    if (!f.seed.empty()) cfg.seed = static_cast<std::uint64_t>(std::stoull(f.seed));
    if (!f.output.empty()) cfg.output = f.output;
    if (f.no_sensitivity) cfg.sensitivity = false;
    if (cfg.n_first < 1) throw ConfigError("n must be >= 1");
    if (cfg.tau <= 0.0) throw ConfigError("tau must be positive");
    return cfg;
}

void header(std::ostream& out, std::string_view command, const RunConfig& cfg) {
    out << "# orlapprox " << command << '\n';
    for (const auto& line : describe(cfg)) out << "# " << line << '\n';
}

void emit(const CsvWriter& csv, const RunConfig& cfg, std::ostream& out) {
    if (cfg.output.empty()) {
        csv.write(out);
        return;
    }
    std::ofstream file(cfg.output);
    if (!file) throw ConfigError("cannot write " + cfg.output.string());
    csv.write(file);
    out << "# csv written to " << cfg.output.string() << '\n';
}

SharpConstantOptions lp_options(const RunConfig& cfg) {
    SharpConstantOptions o;
    o.grid = cfg.grid;
    o.j_max = cfg.j_max;
    o.sensitivity = cfg.sensitivity;
    return o;
}

double delta_for(const RunConfig& cfg, int n) { return cfg.delta > 0.0 ? cfg.delta : cfg.tau / n; }

// Subcommands ---------------------------------------------------------------

int cmd_norm(const RunConfig& cfg, std::ostream& out) {
    header(out, "norm", cfg);
    const auto spec = build_spectrum(cfg.function);
    const auto fam = build_family(cfg.family, spec.radius());
    const double lux = luxemburg_norm(fam, spec);
    const double orl = orlicz_norm(fam, spec);
    out << "# luxemburg = " << format_real(lux) << "\n# orlicz = " << format_real(orl) << '\n';
    CsvWriter csv({"norm", "value"});
    csv.add_row({std::string(to_string(cfg.norm)), cfg.norm == NormKind::luxemburg ? lux : orl});
    emit(csv, cfg, out);
    return kPass;
}

int cmd_bestapprox(const RunConfig& cfg, std::ostream& out) {
    header(out, "bestapprox", cfg);
    const auto spec = build_spectrum(cfg.function);
    const auto fam = build_family(cfg.family, spec.radius());
    CsvWriter csv({"n", "E_n"});
    for (const auto& [n, e] : best_approx_sequence(fam, spec, cfg.n_first, cfg.n_last, cfg.norm))
        csv.add_row({static_cast<long long>(n), e});
    emit(csv, cfg, out);
    return kPass;
}

int cmd_modulus(const RunConfig& cfg, std::ostream& out) {
    header(out, "modulus", cfg);
    const auto spec = build_spectrum(cfg.function);
    const auto fam = build_family(cfg.family, spec.radius());
    const auto phi = build_multiplier(cfg.multiplier);
    std::vector<double> deltas;
    for (int n = cfg.n_first; n <= cfg.n_last; ++n) deltas.push_back(delta_for(cfg, n));
    const auto w = modulus_profile(spec, phi, deltas, fam, cfg.norm, cfg.h_grid);
    CsvWriter csv({"n", "delta", "omega", "h_argmax", "grid_value", "refinement_gap"});
    for (std::size_t i = 0; i < w.size(); ++i) {
        csv.add_row({static_cast<long long>(cfg.n_first + static_cast<int>(i)), deltas[i], w[i].value, w[i].h_argmax,
                     w[i].grid_value, w[i].refinement_gap});
    }
    emit(csv, cfg, out);
    return kPass;
}

int cmd_jackson(const RunConfig& cfg, std::ostream& out) {
    header(out, "jackson", cfg);
    const auto phi = build_multiplier(cfg.multiplier);
    const auto sweep = sharp_constant_sweep(phi, cfg.p, cfg.n_first, cfg.n_last, cfg.tau, lp_options(cfg));
    CsvWriter csv({"n", "p", "J", "C", "primal", "dual", "duality_gap", "grid", "j_max", "pivots", "rounds",
                   "sensitivity_C"});
    for (const auto& s : sweep) {
        const auto& d = s.diagnostics;
        out << "# n = " << s.n << ": C = " << format_real(s.C) << ", J = " << format_real(s.J) << '\n';
        out << "#   rho support:";
        for (std::size_t j = 0; j < s.rho.size(); ++j) {
            if (s.rho[j] > 0.0) out << ' ' << s.first_frequency + static_cast<int>(j) << ':' << s.rho[j];
        }
        out << "\n#   v* nodes:weights:";
        for (std::size_t i = 0; i < s.measure.nodes().size(); ++i)
            out << ' ' << s.measure.nodes()[i] << ':' << s.measure.weights()[i];
        out << "\n#   I attained at k =";
        for (int k : d.argmin_frequencies) out << ' ' << k;
        out << '\n';
        csv.add_row({static_cast<long long>(s.n), s.p, s.J, s.C, d.primal, d.dual, d.duality_gap,
                     static_cast<long long>(d.grid), static_cast<long long>(d.j_max), static_cast<long long>(d.pivots),
                     static_cast<long long>(d.rounds), d.sensitivity_run ? CsvField{d.sensitivity_constant}
                                                                           : CsvField{std::string()}});
    }
    emit(csv, cfg, out);
    return kPass;
}

int cmd_verify_direct(const RunConfig& cfg, const Flags& f, std::ostream& out) {
    header(out, "verify-direct", cfg);
    const auto phi = build_multiplier(cfg.multiplier);
    std::vector<SuiteFunction> functions;
    if (f.suite) {
        functions = suite_functions(cfg.seed);
    } else {
        auto spec = build_spectrum(cfg.function);
        auto fam = build_family(cfg.family, spec.radius());
        functions.push_back({"config", std::move(spec), std::move(fam)});
    }
    const bool sp = cfg.mode == "sp";
    const double p_const = sp ? cfg.p : 1.0;
    const DirectMode mode = sp ? DirectMode{SpExponent{cfg.p}} : DirectMode{GeneralOrlicz{}};
    std::vector<double> constants;
    for (const auto& s : sharp_constant_sweep(phi, p_const, 1, cfg.n_last, cfg.tau, lp_options(cfg)))
        constants.push_back(f.corrupt ? 0.5 * s.C : s.C);
    out << "# constants: p = " << format_real(p_const) << (f.corrupt ? ", halved" : "") << '\n';

    CsvWriter csv({"function", "n", "E_n", "omega", "constant", "factor", "rhs", "slack", "pass"});
    long failures = 0, checks = 0;
    double worst = std::numeric_limits<double>::infinity();
    for (const auto& fn : functions) {
        const int n_last = std::min(cfg.n_last, fn.spec.radius() + 1);
        if (n_last < cfg.n_first) continue;
        const std::vector<double> c(constants.begin() + (cfg.n_first - 1), constants.begin() + n_last);
        for (const auto& r : verify_direct_sweep(fn.family, fn.spec, cfg.n_first, n_last, phi, cfg.tau, mode,
                                                 cfg.norm, c, cfg.h_grid)) {
            ++checks;
            failures += !r.pass;
            if (r.rhs > 0.0) worst = std::min(worst, r.slack / r.rhs);
            csv.add_row({fn.name, static_cast<long long>(r.n), r.lhs, r.omega, r.constant, r.factor, r.rhs, r.slack,
                         std::string(r.pass ? "PASS" : "FAIL")});
        }
    }
    out << "# " << checks << " checks, " << failures << " failures, least relative slack " << format_real(worst)
        << '\n';
    emit(csv, cfg, out);
    return failures == 0 ? kPass : kCheckFailed;
}

int cmd_verify_inverse(const RunConfig& cfg, const Flags& f, std::ostream& out) {
    header(out, "verify-inverse", cfg);
    const auto spec = build_spectrum(cfg.function);
    const auto fam = build_family(cfg.family, spec.radius());
    std::vector<InverseReport> reps;
    if (f.form == "general") {
        const auto phi = build_multiplier(cfg.multiplier);
        check_monotone_multiplier(phi, cfg.tau);
        reps = inverse_general_sweep(fam, spec, phi, cfg.tau, cfg.n_last, cfg.norm, cfg.h_grid);
    } else if (f.form == "alpha") {
        if (cfg.multiplier.kind != "classical") throw ConfigError("form alpha needs the classical multiplier");
        reps = inverse_alpha_sweep(fam, spec, cfg.multiplier.alpha, cfg.n_last, cfg.norm, cfg.h_grid);
    } else {
        throw ConfigError("form must be general or alpha");
    }
    out << "# form = " << f.form << '\n';
    CsvWriter csv({"n", "lhs", "rhs", "slack", "pass"});
    int failures = 0;
    for (const auto& r : reps) {
        if (r.n < cfg.n_first) continue;
        failures += !r.pass;
        csv.add_row({static_cast<long long>(r.n), r.lhs, r.rhs, r.slack, std::string(r.pass ? "PASS" : "FAIL")});
    }
    out << "# " << failures << " failures\n";
    emit(csv, cfg, out);
    return failures == 0 ? kPass : kCheckFailed;
}

Majorant parse_majorant(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw ConfigError("majorant must be power:r or power_log:r");
    const auto kind = text.substr(0, colon);
    const double r = parse_real(text.substr(colon + 1));
    if (kind == "power") return Majorant::power(r);
    if (kind == "power_log") return Majorant::power_log(r);
    throw ConfigError("unknown majorant kind '" + kind + "'");
}

int cmd_classify(const RunConfig& cfg, const Flags& f, std::ostream& out) {
    header(out, "classify", cfg);
    if (cfg.multiplier.kind != "classical") throw ConfigError("classify needs the classical multiplier");
    const double alpha = cfg.multiplier.alpha;
    const auto spec = build_spectrum(cfg.function);
    const auto fam = build_family(cfg.family, spec.radius());
    std::vector<int> ns;
    for (int n = cfg.n_first; n <= cfg.n_last; ++n) ns.push_back(n);

    if (f.majorant.empty()) {
        const auto r = classify_rates(fam, spec, alpha, cfg.norm, ns, cfg.h_grid);
        out << "# " << to_string(r.category) << (r.log_flag ? ", logarithmic factor expected" : "") << '\n';
        CsvWriter csv({"beta", "omega_slope", "predicted_omega_slope", "log_flag", "category", "points"});
        csv.add_row({r.beta, r.omega_slope, r.predicted_omega_slope, static_cast<long long>(r.log_flag),
                     std::string(to_string(r.category)), static_cast<long long>(r.n_used.size())});
        emit(csv, cfg, out);
        return kPass;
    }

    const auto omega = parse_majorant(f.majorant);
    const auto b = check_condition_B(omega, alpha);
    out << "# condition B: " << to_string(b.verdict) << ", growth " << format_real(b.growth) << '\n';
    CsvWriter csv({"majorant", "condition_b", "b_growth", "e_ratio_sup", "omega_ratio_sup", "e_growth",
                   "omega_growth", "verdict"});
    if (b.verdict != GrowthVerdict::bounded) {
        out << "# membership not tested: the majorant fails condition B\n";
        csv.add_row({f.majorant, std::string(to_string(b.verdict)), b.growth, std::string(), std::string(),
                     std::string(), std::string(), std::string()});
        emit(csv, cfg, out);
        return kCheckFailed;
    }
    const auto m = class_membership(fam, spec, alpha, omega, cfg.norm, ns, cfg.h_grid);
    out << "# " << to_string(m.verdict) << '\n';
    csv.add_row({f.majorant, std::string(to_string(b.verdict)), b.growth, m.e_ratio_sup, m.omega_ratio_sup,
                 m.e_growth, m.omega_growth, std::string(to_string(m.verdict))});
    emit(csv, cfg, out);
    return m.verdict == MembershipVerdict::inconsistent ? kCheckFailed : kPass;
}

int cmd_suite(const RunConfig& cfg, const Flags& f, std::ostream& out) {
    SuiteOptions opt;
    opt.seed = cfg.seed;
    opt.corrupt_constant = f.corrupt;
    opt.h_grid = cfg.h_grid;
    for (double id : parse_list(f.only)) opt.only.push_back(static_cast<int>(id));
    out << "# orlapprox suite\n# run.seed = " << opt.seed << "\n# run.h_grid = " << opt.h_grid
        << "\n# corrupt_constant = " << (opt.corrupt_constant ? "true" : "false") << '\n';
    const auto report = run_suite(opt, [&](const CriterionResult& r) { out << format_line(r) << std::endl; });
    const auto passed = std::count_if(report.results.begin(), report.results.end(), [](auto& r) { return r.pass; });
    std::ostringstream secs;
    secs.setf(std::ios::fixed);
    secs.precision(1);
    secs << report.seconds;
    out << "# " << passed << " of " << report.results.size() << " criteria pass in " << secs.str() << " s\n";
    if (!cfg.output.empty()) {
        CsvWriter csv({"id", "title", "pass", "solver_failure", "seconds", "detail"});
        for (const auto& r : report.results) {
            csv.add_row({static_cast<long long>(r.id), r.title, std::string(r.pass ? "PASS" : "FAIL"),
                         static_cast<long long>(r.solver_failure), r.seconds, r.detail});
        }
        emit(csv, cfg, out);
    }
    if (report.solver_failure()) return kSolverFailure;
    return report.all_pass() ? kPass : kCheckFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Norms, best approximations, moduli and sharp Jackson constants in Musielak-Orlicz spaces"};
    app.name("orlapprox");
    app.require_subcommand(1);
    Flags f;
    const std::vector<std::pair<const char*, const char*>> names{
        {"norm", "Luxemburg and Orlicz norms of the configured spectrum"},
        {"bestapprox", "E_n over the n range"},
        {"modulus", "generalized modulus at tau/n (or --delta)"},
        {"jackson", "sharp constant C via the packing LP"},
        {"verify-direct", "check E_n <= C omega(tau/n)"},
        {"verify-inverse", "check the inverse bound"},
        {"classify", "rate regression or class membership"},
        {"suite", "acceptance criteria 1-11"},
    };
    std::map<std::string, CLI::App*> subs;
    for (const auto& [name, help] : names) {
        auto* sub = app.add_subcommand(name, help);
        add_common(sub, f);
        subs[name] = sub;
    }
    subs["verify-direct"]->add_flag("--suite", f.suite, "run over the 20 built-in test functions");
    subs["verify-direct"]->add_flag("--corrupt-constant", f.corrupt, "halve every constant");
    subs["verify-inverse"]->add_option("--form", f.form, "general or alpha");
    subs["classify"]->add_option("--majorant", f.majorant, "power:r or power_log:r");
    subs["suite"]->add_option("--only", f.only, "comma-separated criterion ids");
    subs["suite"]->add_flag("--corrupt-constant", f.corrupt, "halve the direct-theorem constants");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kConfigError;
    }

    try {
        const auto* sub = app.get_subcommands().front();
        const std::string name = sub->get_name();
        const RunConfig cfg = make_config(f);
        if (name == "norm") return cmd_norm(cfg, out);
        if (name == "bestapprox") return cmd_bestapprox(cfg, out);
        if (name == "modulus") return cmd_modulus(cfg, out);
        if (name == "jackson") return cmd_jackson(cfg, out);
        if (name == "verify-direct") return cmd_verify_direct(cfg, f, out);
        if (name == "verify-inverse") return cmd_verify_inverse(cfg, f, out);
        if (name == "classify") return cmd_classify(cfg, f, out);
        return cmd_suite(cfg, f, out);
    } catch (const NonConvergenceError& e) {
        err << "solver failure: " << e.what() << '\n';
        return kSolverFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kConfigError;
    }
}

}  // namespace orlapprox::cli
