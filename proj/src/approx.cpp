#include "orlapprox/approx.hpp"

#include <cmath>

#include "orlapprox/errors.hpp"

namespace orlapprox {

double best_approx(const OrliczFamily& family, const Spectrum& spec, int n, NormKind kind) {
    if (n < 1 || n > spec.radius() + 1) {
        throw WindowError("best_approx: n=" + std::to_string(n) + " exceeds the window (need 1 <= n <= " +
                          std::to_string(spec.radius() + 1) + ")");
    }
    auto mags = spec.magnitudes();
    for (int k = -(n - 1); k <= n - 1; ++k) mags[static_cast<std::size_t>(k + spec.radius())] = 0.0;
    return norm_of_magnitudes(family, mags, kind);
}

std::vector<std::pair<int, double>> best_approx_sequence(const OrliczFamily& family, const Spectrum& spec,
                                                         int n_first, int n_last, NormKind kind) {
    if (n_first < 1 || n_last < n_first || n_last > spec.radius() + 1) {
        throw WindowError("best_approx_sequence: range [" + std::to_string(n_first) + ", " +
                          std::to_string(n_last) + "] outside [1, " + std::to_string(spec.radius() + 1) + "]");
    }
    std::vector<std::pair<int, double>> out;
    out.reserve(static_cast<std::size_t>(n_last - n_first + 1));
    for (int n = n_first; n <= n_last; ++n) out.emplace_back(n, best_approx(family, spec, n, kind));
    return out;
}

}  // namespace orlapprox
