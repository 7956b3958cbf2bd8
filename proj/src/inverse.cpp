#include "orlapprox/inverse.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "orlapprox/approx.hpp"
#include "orlapprox/errors.hpp"

namespace orlapprox {

Majorant Majorant::power(double r) {
    if (!(r > 0.0)) throw DomainError("majorant: exponent must be positive");
    Majorant m;
    m.kind_ = Kind::power;
    m.r_ = r;
    m.label_ = "t^" + std::to_string(r);
    return m;
}

Majorant Majorant::power_log(double r) {
    if (!(r > 0.0)) throw DomainError("majorant: exponent must be positive");
    Majorant m;
    m.kind_ = Kind::power_log;
    m.r_ = r;
    m.label_ = "t^" + std::to_string(r) + " log";
    return m;
}

Majorant Majorant::custom(std::function<double(double)> fn, std::string label) {
    if (!fn) throw ConfigError("majorant: empty callable");
    Majorant m;
    m.kind_ = Kind::custom;
    m.fn_ = std::move(fn);
    m.label_ = std::move(label);
    return m;
}

double Majorant::operator()(double t) const {
    switch (kind_) {
        case Kind::power:
            return std::pow(t, r_);
        case Kind::power_log:
            return t <= 0.0 ? 0.0 : std::pow(t, r_) * (1.0 / r_ - std::log(t));
        case Kind::custom:
            return fn_(t);
    }
    return 0.0;
}

MajorantReport validate_majorant(const Majorant& omega, int grid, double limit_tol) {
    if (grid < 64) throw DomainError("validate_majorant: grid must be at least 64");
    MajorantReport rep;
    auto issue = [&](const std::string& s) {
        rep.valid = false;
        rep.issues.push_back(s);
    };
    const double lo = std::log(1e-6);
    double prev = 0.0;
    for (int i = 0; i < grid; ++i) {
        const double t = std::exp(lo * (1.0 - static_cast<double>(i) / (grid - 1)));
        const double w = omega(t);
        if (!std::isfinite(w) || !(w > 0.0)) {
            issue("not positive at t=" + std::to_string(t));
            return rep;
        }
        if (i > 0) {
            if (w < prev * (1.0 - 1e-12)) {
                issue("decreases at t=" + std::to_string(t));
                return rep;
            }
            if (w - prev > 0.05 * w) {
                issue("jumps at t=" + std::to_string(t));
                return rep;
            }
        }
        prev = w;
    }
    if (!(omega(1e-6) < limit_tol * omega(1.0))) issue("does not vanish at 0");
    return rep;
}

void check_monotone_multiplier(const Multiplier& phi, double tau, int grid) {
    if (!(tau > 0.0)) throw DomainError("tau must be positive");
    const double top = phi.bound();
    const double tol = 1e-12 * std::max(1.0, top);
    double prev = phi(0.0);
    for (int i = 1; i <= grid; ++i) {
        const double t = tau * i / grid;
        const double v = phi(t);
        if (v < prev - tol) {
            std::ostringstream os;
            os << "phi decreases on [0, tau] at t=" << t;
            throw PreconditionError(os.str());
        }
        prev = v;
    }
    if (phi(tau) < top - tol) {
        std::ostringstream os;
        os << "phi(tau)=" << phi(tau) << " is below max phi=" << top;
        throw PreconditionError(os.str());
    }
}

namespace {

InverseReport finish(int n, double lhs, double rhs) {
    InverseReport r;
    r.n = n;
    r.lhs = lhs;
    r.rhs = rhs;
    r.slack = rhs - lhs;
    r.pass = lhs <= rhs * (1.0 + 1e-9);
    return r;
}

void check_degree(const Spectrum& spec, int n) {
    if (n < 1) throw DomainError("degree n must be at least 1");
    if (n > spec.radius() + 1) throw WindowError("degree n exceeds window radius + 1");
}

std::vector<double> e_values(const OrliczFamily& family, const Spectrum& spec, int n_max, NormKind kind) {
    std::vector<double> e;
    for (const auto& [n, v] : best_approx_sequence(family, spec, 1, n_max, kind)) e.push_back(v);
    return e;
}

}  // namespace

double inverse_rhs_general(const Multiplier& phi, double tau, int n, std::span<const double> e) {
    if (e.size() < static_cast<std::size_t>(n)) throw DomainError("inverse bound: need E_v for v = 1..n");
    double s = 0.0;
    for (int v = 1; v <= n; ++v) {
        s += (phi(tau * v / n) - phi(tau * (v - 1) / n)) * e[static_cast<std::size_t>(v - 1)];
    }
    return s;
}

double inverse_rhs_alpha(double alpha, int n, std::span<const double> e) {
    if (e.size() < static_cast<std::size_t>(n)) throw DomainError("inverse bound: need E_v for v = 1..n");
    double s = 0.0;
    for (int v = 1; v <= n; ++v) s += std::pow(static_cast<double>(v), alpha - 1.0) * e[static_cast<std::size_t>(v - 1)];
    return alpha * std::pow(2.0 * std::numbers::pi / n, alpha) * s;
}

InverseReport inverse_bound_general(const OrliczFamily& family, const Spectrum& spec, const Multiplier& phi,
                                    double tau, int n, NormKind kind, int h_grid) {
    check_monotone_multiplier(phi, tau);
    check_degree(spec, n);
    const auto e = e_values(family, spec, n, kind);
    const double lhs = modulus(spec, phi, tau / n, family, kind, h_grid).value;
    return finish(n, lhs, inverse_rhs_general(phi, tau, n, e));
}

InverseReport inverse_bound_alpha(const OrliczFamily& family, const Spectrum& spec, double alpha, int n,
                                  NormKind kind, int h_grid) {
    if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
    check_degree(spec, n);
    const auto e = e_values(family, spec, n, kind);
    const double lhs = modulus(spec, Multiplier::classical(alpha), std::numbers::pi / n, family, kind, h_grid).value;
    return finish(n, lhs, inverse_rhs_alpha(alpha, n, e));
}

std::vector<InverseReport> inverse_general_sweep(const OrliczFamily& family, const Spectrum& spec,
                                                 const Multiplier& phi, double tau, int n_max, NormKind kind,
                                                 int h_grid) {
    check_monotone_multiplier(phi, tau);
    check_degree(spec, n_max);
    const auto e = e_values(family, spec, n_max, kind);
    std::vector<double> deltas;
    for (int n = 1; n <= n_max; ++n) deltas.push_back(tau / n);
    const auto w = modulus_profile(spec, phi, deltas, family, kind, h_grid);
    std::vector<InverseReport> out;
    for (int n = 1; n <= n_max; ++n) {
        out.push_back(finish(n, w[static_cast<std::size_t>(n - 1)].value, inverse_rhs_general(phi, tau, n, e)));
    }
    return out;
}

std::vector<InverseReport> inverse_alpha_sweep(const OrliczFamily& family, const Spectrum& spec, double alpha,
                                               int n_max, NormKind kind, int h_grid) {
    if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
    check_degree(spec, n_max);
    const auto e = e_values(family, spec, n_max, kind);
    const auto phi = Multiplier::classical(alpha);
    std::vector<double> deltas;
    for (int n = 1; n <= n_max; ++n) deltas.push_back(std::numbers::pi / n);
    const auto w = modulus_profile(spec, phi, deltas, family, kind, h_grid);
    std::vector<InverseReport> out;
    for (int n = 1; n <= n_max; ++n) {
        out.push_back(finish(n, w[static_cast<std::size_t>(n - 1)].value, inverse_rhs_alpha(alpha, n, e)));
    }
    return out;
}

std::string_view to_string(GrowthVerdict v) { return v == GrowthVerdict::bounded ? "BOUNDED" : "GROWING"; }

ConditionBReport check_condition_B(const Majorant& omega, double alpha, int n_max) {
    if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
    if (n_max < 64) throw DomainError("check_condition_B: n_max must be at least 64");
    const auto val = validate_majorant(omega);
    if (!val.valid) throw PreconditionError("majorant rejected: " + val.issues.front());
    ConditionBReport rep;
    rep.ratio.reserve(static_cast<std::size_t>(n_max));
    double sum = 0.0;
    for (int n = 1; n <= n_max; ++n) {
        const double v = n;
        sum += std::pow(v, alpha - 1.0) * omega(1.0 / v);
        rep.ratio.push_back(sum / (std::pow(v, alpha) * omega(1.0 / v)));
    }
    rep.growth = rep.ratio.back() / rep.ratio[static_cast<std::size_t>(n_max / 4 - 1)];
    rep.verdict = rep.growth < 1.05 ? GrowthVerdict::bounded : GrowthVerdict::growing;
    return rep;
}

std::string_view to_string(RateCategory c) {
    switch (c) {
        case RateCategory::beta_below_alpha:
            return "O(t^beta)";
        case RateCategory::beta_equals_alpha:
            return "O(t^alpha |ln t|)";
        case RateCategory::beta_above_alpha:
            return "O(t^alpha)";
    }
    return "?";
}

namespace {

double ls_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const double m = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

RateReport classify_rates(const OrliczFamily& family, const Spectrum& spec, double alpha, NormKind kind,
                          std::vector<int> n_range, int h_grid) {
    if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
    auto ns = sorted_unique(std::move(n_range));
    if (ns.size() < 8) throw DomainError("classify_rates: need at least 6 points after dropping the two smallest n");
    ns.erase(ns.begin(), ns.begin() + 2);
    const auto phi = Multiplier::classical(alpha);
    std::vector<double> deltas;
    for (int n : ns) deltas.push_back(1.0 / n);
    for (int n : ns) check_degree(spec, n);
    const auto prof = modulus_profile(spec, phi, deltas, family, kind, h_grid);
    std::vector<double> x, ye, yw;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        const int n = ns[i];
        const double e = best_approx(family, spec, n, kind);
        if (!(e > 0.0)) throw DomainError("classify_rates: E_n vanishes at n=" + std::to_string(n));
        const double w = prof[i].value;
        if (!(w > 0.0)) throw DomainError("classify_rates: modulus vanishes at n=" + std::to_string(n));
        x.push_back(-std::log(static_cast<double>(n)));
        ye.push_back(std::log(e));
        yw.push_back(std::log(w));
    }
    RateReport rep;
    rep.n_used = ns;
    rep.beta = ls_slope(x, ye);
    rep.omega_slope = ls_slope(x, yw);
    rep.predicted_omega_slope = std::min(rep.beta, alpha);
    rep.log_flag = std::abs(rep.beta - alpha) < 0.05;
    rep.category = rep.log_flag           ? RateCategory::beta_equals_alpha
                   : rep.beta < alpha ? RateCategory::beta_below_alpha
                                      : RateCategory::beta_above_alpha;
    return rep;
}

std::string_view to_string(MembershipVerdict v) {
    switch (v) {
        case MembershipVerdict::both_bounded:
            return "BOTH-BOUNDED";
        case MembershipVerdict::both_growing:
            return "BOTH-GROWING";
        case MembershipVerdict::inconsistent:
            return "INCONSISTENT";
    }
    return "?";
}

namespace {

// sup over the last quarter of the sequence against sup over the first.
double quarter_growth(const std::vector<double>& r) {
    const std::size_t q = std::max<std::size_t>(1, (r.size() + 3) / 4);
    const double first = *std::max_element(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(q));
    const double last = *std::max_element(r.end() - static_cast<std::ptrdiff_t>(q), r.end());
    return last / first;
}

}  // namespace

MembershipReport class_membership(const OrliczFamily& family, const Spectrum& spec, double alpha,
                                  const Majorant& omega, NormKind kind, std::vector<int> n_range, int h_grid,
                                  int b_n_max) {
    const auto b = check_condition_B(omega, alpha, b_n_max);
    if (b.verdict != GrowthVerdict::bounded) {
        throw PreconditionError("class_membership: majorant " + omega.label() +
                                " does not satisfy condition (B_alpha)");
    }
    const auto ns = sorted_unique(std::move(n_range));
    if (ns.size() < 4) throw DomainError("class_membership: need at least 4 values of n");
    const auto phi = Multiplier::classical(alpha);
    std::vector<double> deltas;
    for (int n : ns) {
        check_degree(spec, n);
        deltas.push_back(1.0 / n);
    }
    const auto prof = modulus_profile(spec, phi, deltas, family, kind, h_grid);
    std::vector<double> re, rw;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        const double h = omega(1.0 / ns[i]);
        re.push_back(best_approx(family, spec, ns[i], kind) / h);
        rw.push_back(prof[i].value / h);
    }
    MembershipReport rep;
    rep.e_ratio_sup = *std::max_element(re.begin(), re.end());
    rep.omega_ratio_sup = *std::max_element(rw.begin(), rw.end());
    rep.e_growth = quarter_growth(re);
    rep.omega_growth = quarter_growth(rw);
    const bool e_grows = rep.e_growth >= 1.2;
    const bool w_grows = rep.omega_growth >= 1.2;
    rep.verdict = e_grows == w_grows
                      ? (e_grows ? MembershipVerdict::both_growing : MembershipVerdict::both_bounded)
                      : MembershipVerdict::inconsistent;
    return rep;
}

}  // namespace orlapprox
