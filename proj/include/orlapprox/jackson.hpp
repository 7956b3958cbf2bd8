#pragma once

#include <variant>
#include <vector>

#include "orlapprox/orlicz.hpp"
#include "orlapprox/smoothness.hpp"
#include "orlapprox/spectrum.hpp"

namespace orlapprox {

/// Nondecreasing step function on [0, tau] given by its jumps w_i at u_i.
class DiscreteMeasure {
public:
    /// Empty placeholder; not a valid measure.
    DiscreteMeasure() = default;
    DiscreteMeasure(double tau, std::vector<double> nodes, std::vector<double> weights);

    /// `count` equal weights summing to 1 at the midpoints of a uniform
    /// partition of [0, tau].
    static DiscreteMeasure uniform(double tau, int count);
    static DiscreteMeasure dirac(double tau, double node, double weight = 1.0);

    double tau() const { return tau_; }
    const std::vector<double>& nodes() const { return nodes_; }
    const std::vector<double>& weights() const { return weights_; }
    /// v(tau) - v(0).
    double total() const { return total_; }

private:
    double tau_ = 0.0;
    std::vector<double> nodes_;
    std::vector<double> weights_;
    double total_ = 0.0;
};

/// phi(t)^p with fast paths for the classical multiplier.
double phi_power(const Multiplier& phi, double p, double t);

struct IFunctionalResult {
    double value = 0.0;
    int argmin = 0;
    /// Same minimum taken over [n, 2 k_max].
    double doubled_value = 0.0;
    int doubled_argmin = 0;
};

/// min over n <= k <= k_max of sum_i phi^p(k u_i / n) w_i. k_max = 0 selects 64 n.
/// argmin is the smallest minimizing k, ties taken up to roundoff.
IFunctionalResult i_functional(const Multiplier& phi, double p, int n, const DiscreteMeasure& measure, int k_max = 0);

/// ((v(tau) - v(0)) / I)^{1/p}: the direct-inequality constant certified by
/// one measure. Throws DegenerateMeasureError when I vanishes.
double ratio_upper_bound(const Multiplier& phi, double p, int n, const DiscreteMeasure& measure, int k_max = 0);

struct SharpConstantOptions {
    int grid = 512;
    int j_max = 0;  ///< 0 selects 64 n
    /// Re-solve with grid and j_max doubled and report the constant.
    bool sensitivity = true;
    /// Optional starting set: frequency ratios j/n and node positions u/tau
    /// expected near the optimum (for example from a neighbouring n).
    /// Only affects speed.
    std::vector<double> seed_ratios;
    std::vector<double> seed_nodes;
};

struct SharpConstantDiagnostics {
    int grid = 0;
    int j_max = 0;
    double primal = 0.0;
    double dual = 0.0;
    double duality_gap = 0.0;
    /// Frequencies where the I-functional of the recovered measure is attained.
    std::vector<int> argmin_frequencies;
    std::vector<int> support_frequencies;
    int pivots = 0;
    int rounds = 0;
    bool sensitivity_run = false;
    double sensitivity_constant = 0.0;
};

struct SharpConstantResult {
    double J = 0.0;
    double C = 0.0;
    double p = 1.0;
    int n = 1;
    double tau = 0.0;
    /// rho[j - first_frequency] for j in [n, j_max]; sums to 1.
    int first_frequency = 1;
    std::vector<double> rho;
    DiscreteMeasure measure;
    SharpConstantDiagnostics diagnostics;
};

/// Discretized minimax
///   J = min_{rho in simplex} max_i sum_{j=n}^{j_max} rho_j phi^p(j u_i / n),
///   u_i = tau i / grid, i = 1..grid,
/// solved as the packing LP  max 1^T x, A x <= 1, x >= 0  (J = 1 / optimum).
/// The dense simplex runs on a growing column subset; columns are priced
/// against the current duals until no frequency in [n, j_max] has a
/// positive reduced cost, so the optimum is that of the full program.
/// C = J^{-1/p}; the duals normalized to mass 1 give the extremal measure.
SharpConstantResult sharp_constant_lp(const Multiplier& phi, double p, int n, double tau,
                                      const SharpConstantOptions& options = {});

/// sharp_constant_lp for each n in [n_first, n_last]; every solve is seeded
/// with the support of the previous one. j_max = 0 means 64 n per entry.
std::vector<SharpConstantResult> sharp_constant_sweep(const Multiplier& phi, double p, int n_first, int n_last,
                                                      double tau, const SharpConstantOptions& options = {});

struct GeneralOrlicz {};
struct SpExponent {
    double p = 2.0;
};
using DirectMode = std::variant<GeneralOrlicz, SpExponent>;

struct LpConstant {
    int grid = 512;
    int j_max = 0;
};
struct MeasureConstant {
    DiscreteMeasure measure;
    int k_max = 0;
};
struct FixedConstant {
    double value = 0.0;
};
using ConstantSource = std::variant<LpConstant, MeasureConstant, FixedConstant>;

struct DirectReport {
    int n = 0;
    double lhs = 0.0;       ///< E_n(f)
    double omega = 0.0;     ///< omega_phi(f, tau / n)
    double constant = 0.0;  ///< C before the norm factor
    double factor = 1.0;    ///< 2 for the Luxemburg norm in the general mode
    double rhs = 0.0;
    double slack = 0.0;
    bool pass = false;
    double h_argmax = 0.0;
    double refinement_gap = 0.0;
};

/// E_n(f) <= c omega_phi(f, tau/n). General mode: c = C_{n,phi,1} for the
/// Orlicz norm and 2 C_{n,phi,1} for the Luxemburg norm, measured in
/// `family`. S^p mode: c = C_{n,phi,p} with the l_p norm; `family` and
/// `kind` are ignored. A FixedConstant is taken as C before the factor.
/// PASS iff slack >= -1e-4 rhs.
DirectReport verify_direct(const OrliczFamily& family, const Spectrum& spec, int n, const Multiplier& phi, double tau,
                           const DirectMode& mode, NormKind kind, const ConstantSource& source,
                           int h_grid = kDefaultHGrid);

/// verify_direct for n in [n_first, n_last] with constants[n - n_first]
/// taken as C before the factor. One modulus profile serves every n.
std::vector<DirectReport> verify_direct_sweep(const OrliczFamily& family, const Spectrum& spec, int n_first, int n_last,
                                              const Multiplier& phi, double tau, const DirectMode& mode, NormKind kind,
                                              const std::vector<double>& constants, int h_grid = kDefaultHGrid);

struct SharpnessOptions {
    int j_max = 0;  ///< 0 selects 16 n
    int h_grid = kDefaultHGrid;
    int budget = 60;  ///< golden-section iterations in theta
    int candidates = 8;
};

struct SharpnessResult {
    double best_ratio = 0.0;
    Spectrum witness;
    int k1 = 0;
    int k2 = 0;
    double theta = 1.0;
    double E = 0.0;
    double omega = 0.0;
    long pairs = 0;
};

/// Largest E_n / omega_phi(., tau/n) in S^p over spectra with
/// |c_{k1}|^p = theta, |c_{k2}|^p = 1 - theta, n <= k1 < k2 <= j_max.
/// Pairs are scored on a tabulated h-grid; the best few are re-scored with
/// best_approx and modulus.
SharpnessResult sharpness_search(const Multiplier& phi, double p, int n, double tau,
                                 const SharpnessOptions& options = {});

struct WitnessRatio {
    double ratio = 0.0;
    double E = 0.0;
    double omega = 0.0;
    Spectrum witness;
};

/// Ratio attained by the LP weights themselves: |c_j|^p = rho_j.
WitnessRatio lp_witness_ratio(const SharpConstantResult& lp, const Multiplier& phi, int h_grid = kDefaultHGrid);

}  // namespace orlapprox
