#include "orlapprox/orlicz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "orlapprox/errors.hpp"
#include "orlapprox/numeric.hpp"

namespace orlapprox {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double fast_pow(double x, double p) {
    if (p == 1.0) return x;
    if (p == 2.0) return x * x;
    return std::pow(x, p);
}

void check_window(const OrliczFamily& family, int spectrum_radius) {
    if (spectrum_radius > family.radius()) {
        throw ConfigError("spectrum window K=" + std::to_string(spectrum_radius) +
                          " exceeds family window K=" + std::to_string(family.radius()));
    }
}

// Modular-type sums over a fixed magnitude sequence. Power entries are
// collapsed to one (exponent, sum weight*x^p) pair per exponent so repeated
// evaluation at different scales costs O(#exponents), not O(K).
class ModularSum {
public:
    ModularSum(const OrliczFamily& family, std::span<const double> mags) {
        const int radius = static_cast<int>(mags.size() - 1) / 2;
        check_window(family, radius);
        group_sums_.assign(family.group_exponents().size(), 0.0);
        group_index_.assign(group_sums_.size(), 0);
        std::vector<bool> seen(group_sums_.size(), false);
        for (int k = -radius; k <= radius; ++k) {
            const double x = mags[static_cast<std::size_t>(k + radius)];
            if (x == 0.0) continue;
            nonzero_ = true;
            max_mag_ = std::max(max_mag_, x);
            const int g = family.power_group(k);
            if (g >= 0) {
                const auto& f = family.at(k);
                group_sums_[static_cast<std::size_t>(g)] += f.weight() * fast_pow(x, f.exponent());
                if (!seen[static_cast<std::size_t>(g)]) {
                    seen[static_cast<std::size_t>(g)] = true;
                    group_index_[static_cast<std::size_t>(g)] = k;
                }
            } else {
                others_.push_back({&family.at(k), x, k});
            }
        }
        exponents_.assign(family.group_exponents().begin(), family.group_exponents().end());
    }

    bool nonzero() const { return nonzero_; }
    double max_magnitude() const { return max_mag_; }

    /// Sum_k M_k(x_k * scale).
    double at(double scale) const {
        double total = 0.0;
        for (std::size_t g = 0; g < group_sums_.size(); ++g) {
            if (group_sums_[g] != 0.0) total += group_sums_[g] * fast_pow(scale, exponents_[g]);
        }
        for (const auto& t : others_) total += (*t.fn)(t.x * scale);
        return total;
    }

    /// Index with the largest contribution at `scale`, for diagnostics.
    int dominant_index(double scale) const {
        int best = 0;
        double best_value = -1.0;
        for (std::size_t g = 0; g < group_sums_.size(); ++g) {
            const double v = group_sums_[g] * fast_pow(scale, exponents_[g]);
            if (group_sums_[g] != 0.0 && v > best_value) {
                best_value = v;
                best = group_index_[g];
            }
        }
        for (const auto& t : others_) {
            const double v = (*t.fn)(t.x * scale);
            if (v > best_value) {
                best_value = v;
                best = t.k;
            }
        }
        return best;
    }

private:
    struct Term {
        const OrliczFunction* fn;
        double x;
        int k;
    };
    std::vector<double> group_sums_;
    std::vector<double> exponents_;
    std::vector<int> group_index_;
    std::vector<Term> others_;
    bool nonzero_ = false;
    double max_mag_ = 0.0;
};

double luxemburg_of(const ModularSum& sum) {
    if (!sum.nonzero()) return 0.0;
    auto rho = [&](double a) { return sum.at(1.0 / a); };
    constexpr int kBracketCap = 2100;
    double lo, hi;
    const double a0 = sum.max_magnitude();
    if (rho(a0) > 1.0) {
        hi = a0;
        int steps = 0;
        while (!(rho(hi) <= 1.0)) {
            hi *= 2.0;
            if (++steps > kBracketCap || !std::isfinite(hi)) {
                throw NonConvergenceError("luxemburg_norm: modular stays above 1 for every scale; index " +
                                          std::to_string(sum.dominant_index(1.0 / a0)) +
                                          " does not vanish at 0+");
            }
        }
        lo = hi / 2.0;
    } else {
        lo = a0;
        int steps = 0;
        while (rho(lo) <= 1.0) {
            lo /= 2.0;
            if (++steps > kBracketCap || lo == 0.0) {
                throw NonConvergenceError("luxemburg_norm: modular never exceeds 1; index " +
                                          std::to_string(sum.dominant_index(1.0 / a0)) +
                                          " is bounded above");
            }
        }
        hi = lo * 2.0;
    }
    for (int it = 0; it < numeric::kMaxIter && hi - lo > numeric::kRelTol * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (rho(mid) <= 1.0) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

double amemiya_of(const ModularSum& sum) {
    if (!sum.nonzero()) return 0.0;
    // F(t) = e^{-t} (1 + sum_k M_k(e^t x_k)) is quasiconvex in t.
    auto f = [&](double t) {
        const double kappa = std::exp(t);
        const double v = (1.0 + sum.at(kappa)) / kappa;
        return std::isnan(v) ? kInf : v;
    };
    constexpr double kReach = 100.0;
    const double t0 = -std::log(sum.max_magnitude());
    const double f0 = f(t0);
    double lo = t0 - 1.0, hi = t0 + 1.0;
    if (f(t0 + 1.0) < f0) {
        // Walk right with doubling steps until F turns up.
        double prev = t0, cur = t0 + 1.0, fcur = f(cur), step = 1.0;
        while (true) {
            if (cur - t0 > kReach) return fcur;  // infimum approached only as kappa -> infinity
            step *= 2.0;
            const double next = std::min(cur + step, t0 + kReach + 1.0);
            const double fnext = f(next);
            if (fnext >= fcur) {
                lo = prev;
                hi = next;
                break;
            }
            prev = cur;
            cur = next;
            fcur = fnext;
        }
    } else if (f(t0 - 1.0) < f0) {
        double prev = t0, cur = t0 - 1.0, fcur = f(cur), step = 1.0;
        while (true) {
            if (t0 - cur > kReach) {
                throw NonConvergenceError("orlicz_norm: Amemiya functional decreases without bound toward kappa -> 0");
            }
            step *= 2.0;
            const double next = cur - step;
            const double fnext = f(next);
            if (fnext >= fcur) {
                lo = next;
                hi = prev;
                break;
            }
            prev = cur;
            cur = next;
            fcur = fnext;
        }
    }
    if (!std::isfinite(f0) && !std::isfinite(f(lo)) && !std::isfinite(f(hi))) {
        throw NonConvergenceError("orlicz_norm: modular diverges for every kappa near index " +
                                  std::to_string(sum.dominant_index(std::exp(t0))));
    }
    const auto best = numeric::golden_minimize(f, lo, hi, 1e-7);
    if (!std::isfinite(best.value)) {
        throw NonConvergenceError("orlicz_norm: no finite value of the Amemiya functional found");
    }
    return std::min({best.value, f0});
}

ExtendedReal numeric_conjugate(const OrliczFunction& m, double v) {
    // g(u) = u v - M(u) is concave; expand until it stops increasing.
    auto g = [&](double u) { return u * v - m(u); };
    constexpr double kCap = 1e15;
    double hi = 1.0;
    while (g(2.0 * hi) > g(hi)) {
        hi *= 2.0;
        if (hi > kCap) return ExtendedReal::infinity();
    }
    const auto best = numeric::golden_maximize(g, 0.0, 2.0 * hi, 1e-12 * hi);
    return ExtendedReal::finite(std::max({best.value, g(0.0), g(hi), 0.0}));
}

}  // namespace

std::string_view to_string(NormKind kind) { return kind == NormKind::luxemburg ? "luxemburg" : "orlicz"; }

NormKind parse_norm_kind(std::string_view text) {
    if (text == "luxemburg" || text == "lux") return NormKind::luxemburg;
    if (text == "orlicz" || text == "amemiya") return NormKind::orlicz;
    throw ConfigError("unknown norm kind '" + std::string(text) + "' (expected luxemburg|orlicz)");
}

std::string_view to_string(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::power: return "power";
        case FamilyKind::scaled_power: return "scaled_power";
        case FamilyKind::custom: return "custom";
    }
    return "?";
}

ExtendedReal operator+(ExtendedReal a, ExtendedReal b) {
    if (a.infinite || b.infinite) return ExtendedReal::infinity();
    return ExtendedReal::finite(a.value + b.value);
}

// OrliczFunction --------------------------------------------------------------

OrliczFunction OrliczFunction::power(double exponent, double weight) {
    if (!(exponent >= 1.0) || !std::isfinite(exponent)) throw DomainError("power Orlicz exponent must be >= 1");
    if (!(weight >= 0.0) || !std::isfinite(weight)) throw DomainError("power Orlicz weight must be >= 0");
    OrliczFunction f;
    f.kind_ = Kind::power;
    f.exponent_ = exponent;
    f.weight_ = weight;
    f.label_ = "power";
    return f;
}

OrliczFunction OrliczFunction::scaled_power(double exponent) {
    if (!(exponent >= 1.0)) throw DomainError("scaled power exponent must be >= 1");
    double factor = 1.0;
    if (exponent > 1.0) {
        const double q = exponent / (exponent - 1.0);
        factor = std::pow(std::pow(exponent, -1.0 / exponent) * std::pow(q, -1.0 / q), exponent);
    }
    auto f = power(exponent, factor);
    f.label_ = "scaled_power";
    return f;
}

OrliczFunction OrliczFunction::custom(std::function<double(double)> fn, std::string label) {
    if (!fn) throw ConfigError("custom Orlicz function is empty");
    OrliczFunction f;
    f.kind_ = Kind::custom;
    f.fn_ = std::move(fn);
    f.label_ = std::move(label);
    return f;
}

OrliczFunction OrliczFunction::tabulated(std::vector<std::pair<double, double>> points) {
    if (points.size() < 2) throw ConfigError("tabulated Orlicz function needs at least two points");
    std::sort(points.begin(), points.end());
    if (points.front().first != 0.0 || points.front().second != 0.0) {
        throw DomainError("tabulated Orlicz function must start at (0, 0)");
    }
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (!(points[i].first > points[i - 1].first)) throw ConfigError("tabulated abscissae must be distinct");
    }
    auto fn = [pts = std::move(points)](double u) {
        if (u <= 0.0) return 0.0;
        auto it = std::upper_bound(pts.begin(), pts.end(), u,
                                   [](double x, const auto& p) { return x < p.first; });
        const auto hi = (it == pts.end()) ? pts.end() - 1 : it;
        const auto lo = hi - 1;
        const double slope = (hi->second - lo->second) / (hi->first - lo->first);
        return lo->second + slope * (u - lo->first);
    };
    return custom(std::move(fn), "tabulated");
}

double OrliczFunction::operator()(double u) const {
    if (kind_ == Kind::power) return weight_ * fast_pow(u, exponent_);
    return fn_(u);
}

ExtendedReal OrliczFunction::conjugate(double v) const {
    if (!(v >= 0.0)) throw DomainError("conjugate argument must be >= 0");
    if (kind_ == Kind::custom) return numeric_conjugate(*this, v);
    if (v == 0.0) return ExtendedReal::finite(0.0);
    if (exponent_ == 1.0 || weight_ == 0.0) {
        return v <= weight_ ? ExtendedReal::finite(0.0) : ExtendedReal::infinity();
    }
    // Stationary point u* = (v / (w p))^{1/(p-1)}; value v u* (1 - 1/p).
    const double u_star = std::pow(v / (weight_ * exponent_), 1.0 / (exponent_ - 1.0));
    return ExtendedReal::finite(v * u_star * (1.0 - 1.0 / exponent_));
}

// OrliczFamily ----------------------------------------------------------------

OrliczFamily::OrliczFamily(int radius, FamilyKind kind, std::vector<OrliczFunction> functions)
    : radius_(radius), kind_(kind), functions_(std::move(functions)) {
    if (radius < 0) throw DomainError("family radius must be >= 0");
    if (functions_.size() != static_cast<std::size_t>(2 * radius + 1)) {
        throw ConfigError("family of radius " + std::to_string(radius) + " needs " +
                          std::to_string(2 * radius + 1) + " functions, got " +
                          std::to_string(functions_.size()));
    }
    groups_.assign(functions_.size(), -1);
    for (std::size_t i = 0; i < functions_.size(); ++i) {
        const auto& f = functions_[i];
        if (f.kind() != OrliczFunction::Kind::power) continue;
        auto it = std::find(group_exponents_.begin(), group_exponents_.end(), f.exponent());
        if (it == group_exponents_.end()) {
            group_exponents_.push_back(f.exponent());
            it = group_exponents_.end() - 1;
        }
        groups_[i] = static_cast<int>(it - group_exponents_.begin());
    }
    if (kind_ == FamilyKind::custom) {
        const auto issues = check_invariants();
        if (!issues.empty()) throw DomainError("custom Orlicz family rejected: " + issues.front());
    }
}

OrliczFamily OrliczFamily::power(int radius, double exponent, double weight) {
    return OrliczFamily(radius, FamilyKind::power,
                        std::vector<OrliczFunction>(static_cast<std::size_t>(2 * radius + 1),
                                                    OrliczFunction::power(exponent, weight)));
}

OrliczFamily OrliczFamily::power(int radius, std::vector<double> exponents, std::vector<double> weights) {
    const auto n = static_cast<std::size_t>(2 * radius + 1);
    if (exponents.size() != n || weights.size() != n) {
        throw ConfigError("power family needs " + std::to_string(n) + " exponents and weights");
    }
    std::vector<OrliczFunction> fns;
    fns.reserve(n);
    for (std::size_t i = 0; i < n; ++i) fns.push_back(OrliczFunction::power(exponents[i], weights[i]));
    return OrliczFamily(radius, FamilyKind::power, std::move(fns));
}

OrliczFamily OrliczFamily::scaled_power(int radius, double exponent) {
    return OrliczFamily(radius, FamilyKind::scaled_power,
                        std::vector<OrliczFunction>(static_cast<std::size_t>(2 * radius + 1),
                                                    OrliczFunction::scaled_power(exponent)));
}

OrliczFamily OrliczFamily::custom(int radius, const OrliczFunction& fn) {
    return OrliczFamily(radius, FamilyKind::custom,
                        std::vector<OrliczFunction>(static_cast<std::size_t>(2 * radius + 1), fn));
}

OrliczFamily OrliczFamily::custom(int radius, std::vector<OrliczFunction> functions) {
    return OrliczFamily(radius, FamilyKind::custom, std::move(functions));
}

const OrliczFunction& OrliczFamily::at(int k) const {
    if (k < -radius_ || k > radius_) {
        throw WindowError("index " + std::to_string(k) + " outside family window K=" + std::to_string(radius_));
    }
    return functions_[static_cast<std::size_t>(k + radius_)];
}

std::vector<std::string> OrliczFamily::check_invariants(int grid) const {
    std::vector<std::string> issues;
    std::vector<double> us;
    us.push_back(0.0);
    for (int i = 0; i < grid; ++i) us.push_back(std::pow(10.0, -4.0 + 8.0 * i / (grid - 1)));
    for (int k = -radius_; k <= radius_; ++k) {
        const auto& m = at(k);
        if (m.kind() == OrliczFunction::Kind::power) continue;  // holds by construction
        const auto where = " (index " + std::to_string(k) + ")";
        if (m(0.0) != 0.0) issues.push_back("M(0) != 0" + where);
        double prev = 0.0;
        for (std::size_t i = 0; i < us.size(); ++i) {
            const double v = m(us[i]);
            if (!(v >= 0.0)) {
                issues.push_back("negative value at u=" + std::to_string(us[i]) + where);
                break;
            }
            if (v < prev * (1.0 - 1e-12)) {
                issues.push_back("decreasing at u=" + std::to_string(us[i]) + where);
                break;
            }
            prev = v;
            if (i > 0) {
                const double a = us[i - 1], b = us[i];
                const double mid = m(0.5 * (a + b));
                const double chord = 0.5 * (m(a) + v);
                if (mid > chord + 1e-12 * (1.0 + std::abs(chord))) {
                    issues.push_back("not convex near u=" + std::to_string(b) + where);
                    break;
                }
            }
        }
    }
    return issues;
}

// Norms -----------------------------------------------------------------------

double modular(const OrliczFamily& family, const Spectrum& coeffs, double a) {
    if (!(a > 0.0)) throw DomainError("modular scale a must be > 0");
    check_window(family, coeffs.radius());
    const auto mags = coeffs.magnitudes();
    double total = 0.0;
    for (int k = -coeffs.radius(); k <= coeffs.radius(); ++k) {
        total += family.at(k)(mags[static_cast<std::size_t>(k + coeffs.radius())] / a);
    }
    return total;
}

double norm_of_magnitudes(const OrliczFamily& family, std::span<const double> mags, NormKind kind) {
    if (mags.size() % 2 == 0) throw ConfigError("magnitude sequence must have odd length 2K+1");
    const ModularSum sum(family, mags);
    return kind == NormKind::luxemburg ? luxemburg_of(sum) : amemiya_of(sum);
}

double luxemburg_norm(const OrliczFamily& family, const Spectrum& coeffs) {
    check_window(family, coeffs.radius());
    const auto mags = coeffs.magnitudes();
    return norm_of_magnitudes(family, mags, NormKind::luxemburg);
}

double orlicz_norm(const OrliczFamily& family, const Spectrum& coeffs) {
    check_window(family, coeffs.radius());
    const auto mags = coeffs.magnitudes();
    return norm_of_magnitudes(family, mags, NormKind::orlicz);
}

double norm(const OrliczFamily& family, const Spectrum& coeffs, NormKind kind) {
    return kind == NormKind::luxemburg ? luxemburg_norm(family, coeffs) : orlicz_norm(family, coeffs);
}

ExtendedReal conjugate(const OrliczFamily& family, int k, double v) { return family.at(k).conjugate(v); }

DualEvaluation dual_feasible_value(const OrliczFamily& family, const Spectrum& coeffs,
                                   std::span<const double> lambda) {
    check_window(family, coeffs.radius());
    if (lambda.size() != coeffs.size()) {
        throw ConfigError("lambda has " + std::to_string(lambda.size()) + " entries, window needs " +
                          std::to_string(coeffs.size()));
    }
    DualEvaluation out;
    out.conjugate_sum = ExtendedReal::finite(0.0);
    const int radius = coeffs.radius();
    for (int k = -radius; k <= radius; ++k) {
        const double l = lambda[static_cast<std::size_t>(k + radius)];
        if (!(l >= 0.0)) throw DomainError("lambda entries must be >= 0");
        out.value += l * std::abs(coeffs.at(k));
        out.conjugate_sum = out.conjugate_sum + family.at(k).conjugate(l);
    }
    out.feasible = out.conjugate_sum.is_finite() && out.conjugate_sum.value <= 1.0 + 1e-9;
    return out;
}

}  // namespace orlapprox
