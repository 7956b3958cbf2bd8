#pragma once

// Brute-force reference computations for small instances.

#include <vector>

#include "orlapprox/orlicz.hpp"
#include "orlapprox/spectrum.hpp"

namespace orlapprox {

struct DualAscentResult {
    double value = 0.0;
    std::vector<double> lambda;  ///< laid out like Spectrum::values()
    int sweeps = 0;
};

/// Orlicz norm from its dual definition
///   sup { sum_k lambda_k |c_k| : sum_k conj(M_k)(lambda_k) <= 1 }
/// by pairwise coordinate ascent over the nonzero coefficients. Meant for
/// at most a handful of nonzero terms.
DualAscentResult orlicz_norm_dual_ascent(const OrliczFamily& family, const Spectrum& coeffs, int sweeps = 60);

struct DirectApproxResult {
    double value = 0.0;
    Spectrum polynomial;  ///< the minimizing P, degree <= n-1
    int sweeps = 0;
};

/// min_P ||f - P|| over trigonometric polynomials of degree <= n-1 by
/// coordinate descent on the real and imaginary parts of P's coefficients,
/// with a step that halves after every sweep without improvement. Stops
/// after `sweeps` sweeps or once the step falls below 1e-13 of its start.
DirectApproxResult best_approx_direct(const OrliczFamily& family, const Spectrum& spec, int n, NormKind kind,
                                      int sweeps = 400);

}  // namespace orlapprox
