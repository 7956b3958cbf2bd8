#pragma once

#include <utility>
#include <vector>

#include "orlapprox/orlicz.hpp"
#include "orlapprox/spectrum.hpp"

namespace orlapprox {

/// Best approximation E_n(f) by trigonometric polynomials of degree <= n-1,
/// evaluated as the norm of the coefficient tail |k| >= n.
/// Requires 1 <= n <= K+1; larger n raises WindowError.
double best_approx(const OrliczFamily& family, const Spectrum& spec, int n, NormKind kind);

/// (n, E_n) for n_first <= n <= n_last, in increasing n.
std::vector<std::pair<int, double>> best_approx_sequence(const OrliczFamily& family, const Spectrum& spec,
                                                         int n_first, int n_last, NormKind kind);

}  // namespace orlapprox
