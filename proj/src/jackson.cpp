#include "orlapprox/jackson.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include "orlapprox/approx.hpp"
#include "orlapprox/errors.hpp"
#include "orlapprox/numeric.hpp"
#include "orlapprox/simplex.hpp"

namespace orlapprox {

DiscreteMeasure::DiscreteMeasure(double tau, std::vector<double> nodes, std::vector<double> weights)
    : tau_(tau), nodes_(std::move(nodes)), weights_(std::move(weights)) {
    if (!(tau_ > 0.0) || !std::isfinite(tau_)) throw DomainError("measure: tau must be > 0");
    if (nodes_.size() != weights_.size() || nodes_.empty()) {
        throw ConfigError("measure: need matching, nonempty node and weight arrays");
    }
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (!(nodes_[i] >= 0.0 && nodes_[i] <= tau_)) throw DomainError("measure: node outside [0, tau]");
        if (i > 0 && !(nodes_[i] > nodes_[i - 1])) throw DomainError("measure: nodes must be strictly ascending");
        if (!(weights_[i] >= 0.0) || !std::isfinite(weights_[i])) throw DomainError("measure: weights must be >= 0");
        total_ += weights_[i];
    }
    if (!(total_ > 0.0)) throw DomainError("measure: total mass must be > 0");
}

DiscreteMeasure DiscreteMeasure::uniform(double tau, int count) {
    if (count < 1) throw DomainError("uniform measure needs count >= 1");
    std::vector<double> nodes(static_cast<std::size_t>(count));
    std::vector<double> weights(static_cast<std::size_t>(count), 1.0 / count);
    for (int i = 0; i < count; ++i) nodes[static_cast<std::size_t>(i)] = tau * (i + 0.5) / count;
    return {tau, std::move(nodes), std::move(weights)};
}

DiscreteMeasure DiscreteMeasure::dirac(double tau, double node, double weight) {
    return {tau, {node}, {weight}};
}

double phi_power(const Multiplier& phi, double p, double t) {
    if (auto alpha = phi.alpha()) {
        const double s = 2.0 * std::abs(std::sin(0.5 * t));
        const double e = *alpha * p;
        if (e == 1.0) return s;
        if (e == 2.0) return s * s;
        return std::pow(s, e);
    }
    const double v = phi(t);
    return p == 1.0 ? v : std::pow(v, p);
}

IFunctionalResult i_functional(const Multiplier& phi, double p, int n, const DiscreteMeasure& measure, int k_max) {
    if (n < 1) throw DomainError("i_functional: n must be >= 1");
    if (!(p >= 1.0)) throw DomainError("i_functional: p must be >= 1");
    if (k_max == 0) k_max = 64 * n;
    if (k_max < n) throw DomainError("i_functional: k_max must be >= n");
    const auto& nodes = measure.nodes();
    const auto& weights = measure.weights();
    std::vector<double> sums;
    sums.reserve(static_cast<std::size_t>(2 * k_max - n + 1));
    for (int k = n; k <= 2 * k_max; ++k) {
        const double scale = static_cast<double>(k) / n;
        double sum = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * phi_power(phi, p, scale * nodes[i]);
        sums.push_back(sum);
    }
    // Ties within roundoff go to the smallest k.
    const double tie = 1e-13 * measure.total() * std::pow(phi.bound(), p);
    auto pick = [&](int last, double& value, int& argmin) {
        const auto first = sums.begin();
        value = *std::min_element(first, first + (last - n + 1));
        for (int k = n; k <= last; ++k) {
            if (sums[static_cast<std::size_t>(k - n)] <= value + tie) {
                argmin = k;
                return;
            }
        }
    };
    IFunctionalResult out;
    pick(k_max, out.value, out.argmin);
    pick(2 * k_max, out.doubled_value, out.doubled_argmin);
    return out;
}

double ratio_upper_bound(const Multiplier& phi, double p, int n, const DiscreteMeasure& measure, int k_max) {
    const auto ifun = i_functional(phi, p, n, measure, k_max);
    const double floor = 1e-12 * measure.total() * std::pow(phi.bound(), p);
    if (!(ifun.value > floor)) {
        throw DegenerateMeasureError("I-functional vanishes at k = " + std::to_string(ifun.argmin) +
                                     "; this measure certifies no constant");
    }
    return std::pow(measure.total() / ifun.value, 1.0 / p);
}

namespace {

std::vector<double> seed_ratios_of(const SharpConstantResult& r) {
    std::vector<double> out;
    for (int j : r.diagnostics.support_frequencies) out.push_back(static_cast<double>(j) / r.n);
    return out;
}

std::vector<double> seed_nodes_of(const SharpConstantResult& r) {
    std::vector<double> out;
    for (double u : r.measure.nodes()) out.push_back(u / r.tau);
    return out;
}

}  // namespace

SharpConstantResult sharp_constant_lp(const Multiplier& phi, double p, int n, double tau,
                                      const SharpConstantOptions& options) {
    const int grid = options.grid;
    const int j_max = options.j_max == 0 ? 64 * n : options.j_max;
    if (n < 1) throw DomainError("sharp_constant_lp: n must be >= 1");
    if (!(p >= 1.0)) throw DomainError("sharp_constant_lp: p must be >= 1");
    if (!(tau > 0.0)) throw DomainError("sharp_constant_lp: tau must be > 0");
    if (grid < 128) throw DomainError("sharp_constant_lp: grid must be >= 128");
    if (j_max < 4 * n) throw DomainError("sharp_constant_lp: j_max must be >= 4n");

    const int cols = j_max - n + 1;
    const auto g = static_cast<std::size_t>(grid);
    const auto nc = static_cast<std::size_t>(cols);
    std::vector<double> nodes(g);
    for (int i = 0; i < grid; ++i) nodes[static_cast<std::size_t>(i)] = tau * (i + 1) / grid;
    // Row-major: entry (i, j) at i * cols + (j - n).
    std::vector<double> table(g * nc);
    for (std::size_t i = 0; i < g; ++i) {
        for (std::size_t c = 0; c < nc; ++c) {
            table[i * nc + c] = phi_power(phi, p, static_cast<double>(n + static_cast<int>(c)) / n * nodes[i]);
        }
    }

    SharpConstantResult out;
    out.p = p;
    out.n = n;
    out.tau = tau;
    out.first_frequency = n;
    out.diagnostics.grid = grid;
    out.diagnostics.j_max = j_max;

    // The optimum touches few grid nodes and few frequencies, so both enter
    // on demand: rows the current point violates, columns the current duals
    // price below 1. Optimality of the restricted program with no violated
    // row and no attractive column is optimality of the full program.
    DenseSimplex lp(std::span<const double>{});
    std::vector<std::size_t> rows_in, cols_in;
    std::vector<char> row_on(g, 0), col_on(nc, 0);
    std::vector<double> buffer;
    auto add_row = [&](std::size_t i) {
        if (row_on[i]) return;
        buffer.resize(cols_in.size());
        for (std::size_t k = 0; k < cols_in.size(); ++k) buffer[k] = table[i * nc + cols_in[k]];
        lp.add_row(buffer, 1.0);
        rows_in.push_back(i);
        row_on[i] = 1;
    };
    auto add_col = [&](std::size_t c) {
        if (col_on[c]) return;
        double seen = 0.0, best = -1.0;
        std::size_t arg = 0;
        for (std::size_t i = 0; i < g; ++i) {
            const double v = table[i * nc + c];
            if (row_on[i]) seen = std::max(seen, v);
            if (v > best) {
                best = v;
                arg = i;
            }
        }
        // A column with no support on the current rows would be unbounded.
        if (seen < 1e-3 * best) add_row(arg);
        buffer.resize(rows_in.size());
        for (std::size_t k = 0; k < rows_in.size(); ++k) buffer[k] = table[rows_in[k] * nc + c];
        lp.add_column(buffer, 1.0);
        cols_in.push_back(c);
        col_on[c] = 1;
    };
    const std::size_t stride = 4;
    for (std::size_t i = stride - 1; i < g; i += stride) add_row(i);
    add_row(g - 1);
    for (double s : options.seed_nodes) {
        const auto i = static_cast<long>(std::lround(s * grid)) - 1;
        if (i >= 0 && i < grid) add_row(static_cast<std::size_t>(i));
    }
    if (options.seed_ratios.empty()) {
        for (std::size_t c = 0; c < nc; ++c) add_col(c);
    } else {
        for (double r : options.seed_ratios) {
            const auto c = static_cast<long>(std::lround(r * n)) - n;
            if (c >= 0 && c < cols) add_col(static_cast<std::size_t>(c));
        }
    }

    constexpr int kMaxRounds = 2000;
    std::vector<double> load(g), price(nc);
    std::vector<double> x(nc), y(g);
    int round = 0;
    while (true) {
        lp.solve();
        ++round;
        const auto xs = lp.primal();
        const auto ys = lp.duals();
        std::fill(x.begin(), x.end(), 0.0);
        std::fill(y.begin(), y.end(), 0.0);
        for (std::size_t k = 0; k < cols_in.size(); ++k) x[cols_in[k]] = xs[k];
        for (std::size_t k = 0; k < rows_in.size(); ++k) y[rows_in[k]] = ys[k];

        std::fill(load.begin(), load.end(), 0.0);
        for (std::size_t c : cols_in) {
            if (x[c] == 0.0) continue;
            for (std::size_t i = 0; i < g; ++i) load[i] += table[i * nc + c] * x[c];
        }
        std::vector<std::size_t> rows_out;
        for (std::size_t i = 0; i < g; ++i) {
            if (!row_on[i] && load[i] > 1.0 + 1e-11) rows_out.push_back(i);
        }
        std::fill(price.begin(), price.end(), 0.0);
        for (std::size_t i : rows_in) {
            if (y[i] == 0.0) continue;
            const double* row = table.data() + i * nc;
            for (std::size_t c = 0; c < nc; ++c) price[c] += y[i] * row[c];
        }
        std::vector<std::size_t> cols_out;
        for (std::size_t c = 0; c < nc; ++c) {
            if (!col_on[c] && price[c] < 1.0 - 1e-10) cols_out.push_back(c);
        }
        if (rows_out.empty() && cols_out.empty()) break;
        if (round >= kMaxRounds) {
            throw SolverError("sharp_constant_lp: row/column generation did not settle after " +
                              std::to_string(kMaxRounds) + " rounds");
        }
        // One kind per round keeps either primal or dual feasibility intact.
        if (!rows_out.empty()) {
            for (std::size_t i : rows_out) add_row(i);
        } else {
            for (std::size_t c : cols_out) add_col(c);
        }
    }
    out.diagnostics.pivots = lp.pivots();
    out.diagnostics.rounds = round;
    const double primal = std::accumulate(x.begin(), x.end(), 0.0);
    const double dual = std::accumulate(y.begin(), y.end(), 0.0);
    if (!(primal > 0.0)) throw SolverError("sharp_constant_lp: nonpositive optimum");
    out.J = 1.0 / primal;
    out.C = std::pow(out.J, -1.0 / p);
    out.rho.assign(static_cast<std::size_t>(cols), 0.0);
    for (std::size_t c = 0; c < nc; ++c) out.rho[c] = x[c] / primal;
    out.diagnostics.primal = primal;
    out.diagnostics.dual = dual;
    out.diagnostics.duality_gap = std::abs(primal - dual);

    std::vector<double> mnodes, mweights;
    for (std::size_t i = 0; i < g; ++i) {
        if (y[i] > 0.0) {
            mnodes.push_back(nodes[i]);
            mweights.push_back(y[i] / dual);
        }
    }
    out.measure = DiscreteMeasure(tau, std::move(mnodes), std::move(mweights));

    for (std::size_t c = 0; c < nc; ++c) {
        if (x[c] > 0.0) out.diagnostics.support_frequencies.push_back(n + static_cast<int>(c));
    }
    const double least = *std::min_element(price.begin(), price.end());
    for (int c = 0; c < cols; ++c) {
        if (price[static_cast<std::size_t>(c)] <= least * (1.0 + 1e-9)) out.diagnostics.argmin_frequencies.push_back(n + c);
    }

    if (options.sensitivity) {
        SharpConstantOptions doubled;
        doubled.grid = 2 * grid;
        doubled.j_max = 2 * j_max;
        doubled.sensitivity = false;
        doubled.seed_ratios = seed_ratios_of(out);
        doubled.seed_nodes = seed_nodes_of(out);
        out.diagnostics.sensitivity_run = true;
        out.diagnostics.sensitivity_constant = sharp_constant_lp(phi, p, n, tau, doubled).C;
    }
    return out;
}

std::vector<SharpConstantResult> sharp_constant_sweep(const Multiplier& phi, double p, int n_first, int n_last,
                                                      double tau, const SharpConstantOptions& options) {
    if (n_first < 1 || n_last < n_first) throw DomainError("sharp_constant_sweep: need 1 <= n_first <= n_last");
    std::vector<SharpConstantResult> out;
    SharpConstantOptions opts = options;
    for (int n = n_first; n <= n_last; ++n) {
        if (!out.empty()) {
            opts.seed_ratios = seed_ratios_of(out.back());
            opts.seed_nodes = seed_nodes_of(out.back());
        }
        out.push_back(sharp_constant_lp(phi, p, n, tau, opts));
    }
    return out;
}

DirectReport verify_direct(const OrliczFamily& family, const Spectrum& spec, int n, const Multiplier& phi, double tau,
                           const DirectMode& mode, NormKind kind, const ConstantSource& source, int h_grid) {
    const bool sp = std::holds_alternative<SpExponent>(mode);
    const double p = sp ? std::get<SpExponent>(mode).p : 1.0;

    DirectReport rep;
    rep.n = n;
    rep.constant = std::visit(
        [&](const auto& src) -> double {
            using T = std::decay_t<decltype(src)>;
            if constexpr (std::is_same_v<T, LpConstant>) {
                SharpConstantOptions opts;
                opts.grid = src.grid;
                opts.j_max = src.j_max;
                opts.sensitivity = false;
                return sharp_constant_lp(phi, p, n, tau, opts).C;
            } else if constexpr (std::is_same_v<T, MeasureConstant>) {
                return ratio_upper_bound(phi, p, n, src.measure, src.k_max);
            } else {
                return src.value;
            }
        },
        source);

    auto run = [&](const OrliczFamily& fam, NormKind k) {
        rep.lhs = best_approx(fam, spec, n, k);
        const auto w = modulus(spec, phi, tau / n, fam, k, h_grid);
        rep.omega = w.value;
        rep.h_argmax = w.h_argmax;
        rep.refinement_gap = w.refinement_gap;
    };
    if (sp) {
        rep.factor = 1.0;
        run(OrliczFamily::power(spec.radius(), p), NormKind::luxemburg);
    } else {
        rep.factor = kind == NormKind::luxemburg ? 2.0 : 1.0;
        run(family, kind);
    }
    rep.rhs = rep.constant * rep.factor * rep.omega;
    rep.slack = rep.rhs - rep.lhs;
    rep.pass = rep.slack >= -1e-4 * rep.rhs;
    return rep;
}

std::vector<DirectReport> verify_direct_sweep(const OrliczFamily& family, const Spectrum& spec, int n_first, int n_last,
                                              const Multiplier& phi, double tau, const DirectMode& mode, NormKind kind,
                                              const std::vector<double>& constants, int h_grid) {
    if (n_first < 1 || n_last < n_first) throw DomainError("verify_direct_sweep: bad n range");
    if (constants.size() != static_cast<std::size_t>(n_last - n_first + 1)) {
        throw ConfigError("verify_direct_sweep: one constant per n is required");
    }
    const bool sp = std::holds_alternative<SpExponent>(mode);
    const double p = sp ? std::get<SpExponent>(mode).p : 1.0;
    const OrliczFamily fam = sp ? OrliczFamily::power(spec.radius(), p) : family;
    const NormKind k = sp ? NormKind::luxemburg : kind;
    const double factor = (!sp && kind == NormKind::luxemburg) ? 2.0 : 1.0;

    std::vector<double> deltas;
    for (int n = n_first; n <= n_last; ++n) deltas.push_back(tau / n);
    const auto w = modulus_profile(spec, phi, deltas, fam, k, h_grid);
    const auto e = best_approx_sequence(fam, spec, n_first, n_last, k);

    std::vector<DirectReport> out;
    for (int n = n_first; n <= n_last; ++n) {
        const auto i = static_cast<std::size_t>(n - n_first);
        DirectReport rep;
        rep.n = n;
        rep.lhs = e[i].second;
        rep.omega = w[i].value;
        rep.h_argmax = w[i].h_argmax;
        rep.refinement_gap = w[i].refinement_gap;
        rep.constant = constants[i];
        rep.factor = factor;
        rep.rhs = rep.constant * rep.factor * rep.omega;
        rep.slack = rep.rhs - rep.lhs;
        rep.pass = rep.slack >= -1e-4 * rep.rhs;
        out.push_back(rep);
    }
    return out;
}

namespace {

Spectrum two_frequency(int radius, double p, int k1, int k2, double theta) {
    Spectrum s(radius);
    s.set(k1, std::pow(theta, 1.0 / p));
    if (k2 != k1) s.set(k2, std::pow(1.0 - theta, 1.0 / p));
    return s;
}

}  // namespace

SharpnessResult sharpness_search(const Multiplier& phi, double p, int n, double tau, const SharpnessOptions& options) {
    if (!(p >= 1.0)) throw DomainError("sharpness_search: p must be >= 1");
    if (n < 1) throw DomainError("sharpness_search: n must be >= 1");
    const int j_max = options.j_max == 0 ? 16 * n : options.j_max;
    if (j_max <= n) throw DomainError("sharpness_search: j_max must exceed n");
    const int hg = options.h_grid;
    const double delta = tau / n;
    const int freqs = j_max - n + 1;
    const auto hgs = static_cast<std::size_t>(hg);

    std::vector<double> table(static_cast<std::size_t>(freqs) * hgs);
    for (int f = 0; f < freqs; ++f) {
        for (int m = 0; m < hg; ++m) {
            const double h = (m == hg - 1) ? delta : delta * m / (hg - 1);
            table[static_cast<std::size_t>(f) * hgs + static_cast<std::size_t>(m)] = phi_power(phi, p, (n + f) * h);
        }
    }
    auto row = [&](int f) { return table.data() + static_cast<std::size_t>(f) * hgs; };

    struct Candidate {
        double score;  // sup_h of the mixed profile; smaller is better
        int k1, k2;
        double theta;
    };
    std::vector<Candidate> cands;
    for (int f = 0; f < freqs; ++f) {
        const double* a = row(f);
        cands.push_back({*std::max_element(a, a + hg), n + f, n + f, 1.0});
    }
    long pairs = 0;
    for (int f1 = 0; f1 < freqs; ++f1) {
        for (int f2 = f1 + 1; f2 < freqs; ++f2) {
            const double* a = row(f1);
            const double* b = row(f2);
            auto sup = [&](double theta) {
                double best = 0.0;
                for (std::size_t m = 0; m < hgs; ++m) best = std::max(best, theta * a[m] + (1.0 - theta) * b[m]);
                return best;
            };
            const auto r = numeric::golden_minimize(sup, 0.0, 1.0, 1e-12, options.budget);
            cands.push_back({r.value, n + f1, n + f2, r.x});
            ++pairs;
        }
    }
    const auto keep = std::min<std::size_t>(cands.size(), static_cast<std::size_t>(std::max(1, options.candidates)));
    std::partial_sort(cands.begin(), cands.begin() + static_cast<std::ptrdiff_t>(keep), cands.end(),
                      [](const Candidate& l, const Candidate& r) { return l.score < r.score; });

    const auto family = OrliczFamily::power(j_max, p);
    SharpnessResult out;
    out.pairs = pairs;
    out.best_ratio = -1.0;
    for (std::size_t c = 0; c < keep; ++c) {
        const auto& cand = cands[c];
        auto spec = two_frequency(j_max, p, cand.k1, cand.k2, cand.theta);
        const double e = best_approx(family, spec, n, NormKind::luxemburg);
        const double w = modulus(spec, phi, delta, family, NormKind::luxemburg, hg).value;
        const double ratio = e / w;
        if (ratio > out.best_ratio) {
            out.best_ratio = ratio;
            out.witness = std::move(spec);
            out.k1 = cand.k1;
            out.k2 = cand.k2;
            out.theta = cand.theta;
            out.E = e;
            out.omega = w;
        }
    }
    return out;
}

WitnessRatio lp_witness_ratio(const SharpConstantResult& lp, const Multiplier& phi, int h_grid) {
    int radius = lp.n;
    for (std::size_t c = 0; c < lp.rho.size(); ++c) {
        if (lp.rho[c] > 0.0) radius = lp.first_frequency + static_cast<int>(c);
    }
    WitnessRatio out;
    out.witness = Spectrum(radius);
    for (std::size_t c = 0; c < lp.rho.size(); ++c) {
        if (lp.rho[c] > 0.0) out.witness.set(lp.first_frequency + static_cast<int>(c), std::pow(lp.rho[c], 1.0 / lp.p));
    }
    const auto family = OrliczFamily::power(radius, lp.p);
    out.E = best_approx(family, out.witness, lp.n, NormKind::luxemburg);
    out.omega = modulus(out.witness, phi, lp.tau / lp.n, family, NormKind::luxemburg, h_grid).value;
    out.ratio = out.E / out.omega;
    return out;
}

}  // namespace orlapprox
