#include "orlapprox/smoothness.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "orlapprox/errors.hpp"
#include "orlapprox/numeric.hpp"

namespace orlapprox {

namespace {

constexpr double kPi = std::numbers::pi;

double estimate_bound(const std::function<double(double)>& fn) {
    constexpr int n = 20001;
    double best = 0.0;
    for (int i = 0; i < n; ++i) {
        const double t = -4.0 * kPi + 8.0 * kPi * i / (n - 1);
        best = std::max(best, fn(t));
    }
    return best;
}

// phi(k h) |c_k| over the nonzero coefficients of a fixed spectrum.
class DifferenceMagnitudes {
public:
    DifferenceMagnitudes(const Spectrum& spec, const Multiplier& phi) : phi_(phi), mags_(spec.size(), 0.0) {
        const int radius = spec.radius();
        for (int k = -radius; k <= radius; ++k) {
            const double m = std::abs(spec.at(k));
            if (m != 0.0 && k != 0) {
                positions_.push_back(static_cast<std::size_t>(k + radius));
                freqs_.push_back(static_cast<double>(k));
                base_.push_back(m);
            }
        }
        if (auto a = phi.alpha()) alpha_ = *a;
    }

    std::span<const double> at(double h) {
        for (std::size_t i = 0; i < positions_.size(); ++i) mags_[positions_[i]] = base_[i] * phi_at(freqs_[i] * h);
        return mags_;
    }

private:
    double phi_at(double t) const {
        if (alpha_ == 1.0) return 2.0 * std::abs(std::sin(0.5 * t));
        if (alpha_ == 2.0) {
            const double s = std::sin(0.5 * t);
            return 4.0 * s * s;
        }
        if (alpha_ > 0.0) return std::pow(2.0 * std::abs(std::sin(0.5 * t)), alpha_);
        return phi_(t);
    }

    const Multiplier& phi_;
    std::vector<double> mags_;
    std::vector<std::size_t> positions_;
    std::vector<double> freqs_;
    std::vector<double> base_;
    double alpha_ = -1.0;  // classical exponent, or -1 for custom
};

}  // namespace

Multiplier Multiplier::classical(double alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("classical multiplier needs alpha > 0");
    Multiplier m;
    m.kind_ = Kind::classical;
    m.alpha_ = alpha;
    m.bound_ = std::pow(2.0, alpha);
    m.label_ = "classical_alpha(" + std::to_string(alpha) + ")";
    return m;
}

Multiplier Multiplier::custom(std::function<double(double)> fn, std::string label, std::optional<double> bound) {
    if (!fn) throw ConfigError("custom multiplier is empty");
    Multiplier m;
    m.kind_ = Kind::custom;
    m.alpha_ = -1.0;
    m.fn_ = std::move(fn);
    m.label_ = std::move(label);
    m.bound_ = bound ? *bound : estimate_bound(m.fn_);
    return m;
}

Multiplier Multiplier::tabulated(std::vector<std::pair<double, double>> points, bool periodic) {
    if (points.size() < 2) throw ConfigError("tabulated multiplier needs at least two points");
    std::sort(points.begin(), points.end());
    if (points.front().first != 0.0) throw ConfigError("tabulated multiplier must start at t = 0");
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (!(points[i].first > points[i - 1].first)) throw ConfigError("tabulated abscissae must be distinct");
    }
    double bound = 0.0;
    for (const auto& p : points) bound = std::max(bound, p.second);
    const double span = points.back().first;
    auto fn = [pts = std::move(points), periodic, span](double t) {
        double x = std::abs(t);
        if (x > span) x = periodic ? std::fmod(x, span) : span;
        auto it = std::upper_bound(pts.begin(), pts.end(), x, [](double v, const auto& p) { return v < p.first; });
        if (it == pts.end()) return pts.back().second;
        const auto lo = it - 1;
        const double w = (x - lo->first) / (it->first - lo->first);
        return lo->second + w * (it->second - lo->second);
    };
    return custom(std::move(fn), "tabulated", bound);
}

std::optional<double> Multiplier::alpha() const {
    if (kind_ == Kind::classical) return alpha_;
    return std::nullopt;
}

double Multiplier::operator()(double t) const {
    if (kind_ == Kind::classical) return std::pow(2.0 * std::abs(std::sin(0.5 * t)), alpha_);
    return fn_(t);
}

MultiplierReport validate_multiplier(const Multiplier& phi, int grid_size) {
    if (grid_size < 64) throw DomainError("validate_multiplier needs grid_size >= 64");
    MultiplierReport report;
    report.bound_estimate = phi.bound();
    auto fail = [&](std::string msg) {
        report.valid = false;
        report.issues.push_back(std::move(msg));
    };
    if (phi(0.0) != 0.0) fail("phi(0) = " + std::to_string(phi(0.0)) + ", expected 0");
    const double cap = phi.bound() * (1.0 + 1e-12);
    int zeros = 0;
    bool even_ok = true, nonneg_ok = true, bound_ok = true;
    for (int i = 0; i < grid_size; ++i) {
        const double t = 4.0 * kPi * static_cast<double>(i) / (grid_size - 1);
        const double a = phi(t), b = phi(-t);
        if (!std::isfinite(a) || !std::isfinite(b)) {
            fail("phi not finite at t=" + std::to_string(t));
            break;
        }
        if (even_ok && std::abs(a - b) > 1e-12 * (1.0 + std::abs(a))) {
            fail("phi not even at t=" + std::to_string(t));
            even_ok = false;
        }
        if (nonneg_ok && (a < 0.0 || b < 0.0)) {
            fail("phi negative at t=" + std::to_string(t));
            nonneg_ok = false;
        }
        if (bound_ok && std::max(a, b) > cap) {
            fail("phi exceeds C(phi)=" + std::to_string(phi.bound()) + " at t=" + std::to_string(t));
            bound_ok = false;
        }
        const double zero_tol = 1e-14 * phi.bound();
        zeros += (std::abs(a) <= zero_tol) + (i > 0 && std::abs(b) <= zero_tol);
    }
    report.zero_fraction = static_cast<double>(zeros) / static_cast<double>(2 * grid_size - 1);
    return report;
}

Spectrum generalized_difference(const Spectrum& spec, const Multiplier& phi, double h) {
    Spectrum out(spec.radius());
    for (int k = -spec.radius(); k <= spec.radius(); ++k) {
        if (k == 0) continue;  // phi(0) = 0
        out.set(k, phi(static_cast<double>(k) * h) * spec.at(k));
    }
    return out;
}

double difference_norm(const Spectrum& spec, const Multiplier& phi, double h, const OrliczFamily& family,
                       NormKind kind) {
    DifferenceMagnitudes diff(spec, phi);
    return norm_of_magnitudes(family, diff.at(h), kind);
}

ModulusResult modulus(const Spectrum& spec, const Multiplier& phi, double delta, const OrliczFamily& family,
                      NormKind kind, int h_grid) {
    if (!(delta > 0.0)) throw DomainError("modulus: delta must be > 0");
    if (h_grid < 128) throw DomainError("modulus: h_grid must be >= 128");
    if (spec.radius() > family.radius()) {
        throw ConfigError("spectrum window exceeds family window");
    }
    if (phi.kind() == Multiplier::Kind::custom) {
        const auto report = validate_multiplier(phi, 256);
        if (!report.valid) throw PreconditionError("invalid multiplier: " + report.issues.front());
    }
    ModulusResult out;
    out.h_grid = h_grid;
    DifferenceMagnitudes diff(spec, phi);
    auto value_at = [&](double h) { return norm_of_magnitudes(family, diff.at(h), kind); };

    int best = 0;
    double best_value = -1.0;
    const double step = delta / (h_grid - 1);
    for (int i = 0; i < h_grid; ++i) {
        const double h = (i == h_grid - 1) ? delta : step * i;
        const double v = value_at(h);
        if (v > best_value) {  // first maximum wins; keeps the reduction order fixed
            best_value = v;
            best = i;
        }
    }
    out.grid_value = best_value;
    out.value = best_value;
    out.h_argmax = (best == h_grid - 1) ? delta : step * best;
    if (best_value > 0.0) {
        const double lo = step * std::max(best - 1, 0);
        const double hi = std::min(step * (best + 1), delta);
        const auto refined = numeric::golden_maximize(value_at, lo, hi, 1e-9 * step, 60);
        if (refined.value > out.value) {
            out.value = refined.value;
            out.h_argmax = refined.x;
        }
    }
    out.refinement_gap = out.value - out.grid_value;
    return out;
}

std::vector<ModulusResult> modulus_profile(const Spectrum& spec, const Multiplier& phi, std::span<const double> deltas,
                                           const OrliczFamily& family, NormKind kind, int h_grid) {
    if (h_grid < 128) throw DomainError("modulus: h_grid must be >= 128");
    if (spec.radius() > family.radius()) throw ConfigError("spectrum window exceeds family window");
    for (double d : deltas) {
        if (!(d > 0.0)) throw DomainError("modulus: delta must be > 0");
    }
    if (phi.kind() == Multiplier::Kind::custom) {
        const auto report = validate_multiplier(phi, 256);
        if (!report.valid) throw PreconditionError("invalid multiplier: " + report.issues.front());
    }
    std::vector<std::size_t> order(deltas.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return deltas[a] < deltas[b]; });

    DifferenceMagnitudes diff(spec, phi);
    auto value_at = [&](double h) { return norm_of_magnitudes(family, diff.at(h), kind); };

    std::vector<ModulusResult> out(deltas.size());
    double grid_best = -1.0, grid_h = 0.0, grid_step = 0.0;
    double best = -1.0, best_h = 0.0;
    double covered = -1.0;  // largest h scanned so far
    double refined_lo = -1.0, refined_hi = -1.0;
    for (std::size_t idx : order) {
        const double delta = deltas[idx];
        const double step = delta / (h_grid - 1);
        if (delta > covered) {
            const int first = covered < 0.0 ? 0 : static_cast<int>(std::floor(covered / step)) + 1;
            for (int i = first; i < h_grid; ++i) {
                const double h = (i == h_grid - 1) ? delta : step * i;
                const double v = value_at(h);
                if (v > grid_best) {
                    grid_best = v;
                    grid_h = h;
                    grid_step = step;
                }
            }
            covered = delta;
            if (grid_best > best) {
                best = grid_best;
                best_h = grid_h;
            }
            const double lo = std::max(grid_h - grid_step, 0.0);
            const double hi = std::min(grid_h + grid_step, delta);
            if (grid_best > 0.0 && (lo != refined_lo || hi != refined_hi)) {
                refined_lo = lo;
                refined_hi = hi;
                const auto refined = numeric::golden_maximize(value_at, lo, hi, 1e-9 * grid_step, 60);
                if (refined.value > best) {
                    best = refined.value;
                    best_h = refined.x;
                }
            }
        }
        auto& r = out[idx];
        r.h_grid = h_grid;
        r.grid_value = grid_best;
        r.value = best;
        r.h_argmax = best_h;
        r.refinement_gap = best - grid_best;
    }
    return out;
}

}  // namespace orlapprox
