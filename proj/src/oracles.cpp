#include "orlapprox/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "orlapprox/errors.hpp"
#include "orlapprox/numeric.hpp"

namespace orlapprox {

namespace {

// sup { v >= 0 : conj(M)(v) <= budget }.
double conjugate_inverse(const OrliczFamily& family, int k, double budget) {
    auto fits = [&](double v) {
        const auto c = conjugate(family, k, v);
        return c.is_finite() && c.value <= budget;
    };
    if (budget < 0.0 || !fits(0.0)) return 0.0;
    double lo = 0.0, hi = 1.0;
    while (fits(hi)) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e300) throw NonConvergenceError("dual ascent: conjugate does not grow");
    }
    for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (fits(mid) ? lo : hi) = mid;
    }
    return lo;
}

double conj_value(const OrliczFamily& family, int k, double v) {
    const auto c = conjugate(family, k, v);
    return c.is_finite() ? c.value : std::numeric_limits<double>::infinity();
}

}  // namespace

DualAscentResult orlicz_norm_dual_ascent(const OrliczFamily& family, const Spectrum& coeffs, int sweeps) {
    if (family.radius() < coeffs.radius()) throw WindowError("dual ascent: family window too small");
    const int K = coeffs.radius();
    std::vector<int> ks;
    std::vector<double> mag;
    for (int k = -K; k <= K; ++k) {
        const double a = std::abs(coeffs.at(k));
        if (a > 0.0) {
            ks.push_back(k);
            mag.push_back(a);
        }
    }
    DualAscentResult res;
    res.lambda.assign(coeffs.size(), 0.0);
    if (ks.empty()) return res;

    const std::size_t m = ks.size();
    std::vector<double> lam(m, 0.0), used(m, 0.0);
    auto objective = [&] {
        double s = 0.0;
        for (std::size_t i = 0; i < m; ++i) s += lam[i] * mag[i];
        return s;
    };

    if (m == 1) {
        lam[0] = conjugate_inverse(family, ks[0], 1.0);
    } else {
        for (int sweep = 0; sweep < sweeps; ++sweep) {
            const double before = objective();
            for (std::size_t i = 0; i < m; ++i) {
                for (std::size_t j = i + 1; j < m; ++j) {
                    double others = 0.0;
                    for (std::size_t l = 0; l < m; ++l) {
                        if (l != i && l != j) others += used[l];
                    }
                    const double budget = std::max(0.0, 1.0 - others);
                    const double top = conjugate_inverse(family, ks[i], budget);
                    auto lam_j = [&](double li) {
                        return conjugate_inverse(family, ks[j], budget - conj_value(family, ks[i], li));
                    };
                    auto best = numeric::golden_maximize(
                        [&](double li) { return li * mag[i] + lam_j(li) * mag[j]; }, 0.0, top, 1e-13 * std::max(top, 1e-300));
                    // Endpoints are candidates too.
                    double li = best.x, val = best.value;
                    for (double cand : {0.0, top}) {
                        const double v = cand * mag[i] + lam_j(cand) * mag[j];
                        if (v > val) {
                            val = v;
                            li = cand;
                        }
                    }
                    lam[i] = li;
                    lam[j] = lam_j(li);
                    used[i] = conj_value(family, ks[i], lam[i]);
                    used[j] = conj_value(family, ks[j], lam[j]);
                }
            }
            res.sweeps = sweep + 1;
            if (objective() - before <= 1e-14 * objective()) break;
        }
    }
    res.value = objective();
    for (std::size_t i = 0; i < m; ++i) res.lambda[static_cast<std::size_t>(ks[i] + K)] = lam[i];
    return res;
}

DirectApproxResult best_approx_direct(const OrliczFamily& family, const Spectrum& spec, int n, NormKind kind,
                                      int sweeps) {
    const int K = spec.radius();
    if (n < 1) throw DomainError("degree n must be at least 1");
    if (n > K + 1) throw WindowError("degree n exceeds window radius + 1");
    Spectrum poly(K);
    auto objective = [&](const Spectrum& p) { return norm(family, spec - p, kind); };
    double best = objective(poly);
    double step = 0.0;
    for (int k = -K; k <= K; ++k) step = std::max(step, std::abs(spec.at(k)));
    if (step == 0.0) return {0.0, poly, 0};

    const double min_step = 1e-13 * step;
    DirectApproxResult res;
    for (int sweep = 0; sweep < sweeps && step >= min_step; ++sweep) {
        bool improved = false;
        for (int k = -(n - 1); k <= n - 1; ++k) {
            for (int part = 0; part < 2; ++part) {
                const Complex dir = part == 0 ? Complex(1.0, 0.0) : Complex(0.0, 1.0);
                for (double sign : {1.0, -1.0}) {
                    while (true) {
                        Spectrum trial = poly;
                        trial.set(k, poly.at(k) + sign * step * dir);
                        const double v = objective(trial);
                        if (!(v < best)) break;
                        best = v;
                        poly = std::move(trial);
                        improved = true;
                    }
                }
            }
        }
        res.sweeps = sweep + 1;
        if (!improved) step *= 0.5;
    }
    res.value = best;
    res.polynomial = std::move(poly);
    return res;
}

}  // namespace orlapprox
