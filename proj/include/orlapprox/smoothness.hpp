#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "orlapprox/orlicz.hpp"
#include "orlapprox/spectrum.hpp"

namespace orlapprox {

/// Even, bounded, nonnegative phi with phi(0) = 0, acting on coefficients as
/// c_k -> phi(k h) c_k.
class Multiplier {
public:
    enum class Kind { classical, custom };

    /// phi(t) = 2^alpha |sin(t/2)|^alpha; recovers the order-alpha modulus.
    static Multiplier classical(double alpha);

    /// Arbitrary callable. When `bound` is absent C(phi) is estimated as the
    /// maximum over a dense grid on [-4 pi, 4 pi].
    static Multiplier custom(std::function<double(double)> fn, std::string label = "custom",
                             std::optional<double> bound = std::nullopt);

    /// Piecewise-linear table on [0, T], extended evenly. Beyond T the table
    /// repeats with period T when `periodic`, otherwise holds phi(T).
    static Multiplier tabulated(std::vector<std::pair<double, double>> points, bool periodic);

    Kind kind() const { return kind_; }
    std::optional<double> alpha() const;
    const std::string& label() const { return label_; }

    double operator()(double t) const;

    /// C(phi) = max_t phi(t).
    double bound() const { return bound_; }

private:
    Multiplier() = default;

    Kind kind_ = Kind::classical;
    double alpha_ = 1.0;
    double bound_ = 2.0;
    std::function<double(double)> fn_;
    std::string label_;
};

struct MultiplierReport {
    bool valid = true;
    std::vector<std::string> issues;
    /// Fraction of grid points where phi vanishes; a proxy for the
    /// measure-zero zero-set requirement, not an exact test.
    double zero_fraction = 0.0;
    double bound_estimate = 0.0;
};

/// Grid checks on [-4 pi, 4 pi]: phi(0) = 0, evenness, nonnegativity,
/// finiteness and phi <= C(phi). Requires grid_size >= 64.
MultiplierReport validate_multiplier(const Multiplier& phi, int grid_size = 4096);

/// Coefficient-wise phi(k h) c_k.
Spectrum generalized_difference(const Spectrum& spec, const Multiplier& phi, double h);

/// || Delta_h^phi f || in the chosen norm.
double difference_norm(const Spectrum& spec, const Multiplier& phi, double h, const OrliczFamily& family,
                       NormKind kind);

struct ModulusResult {
    double value = 0.0;           ///< certified lower bound on sup_{|h| <= delta}
    double h_argmax = 0.0;
    double grid_value = 0.0;      ///< best value on the uniform grid alone
    double refinement_gap = 0.0;  ///< value - grid_value
    int h_grid = 0;
};

inline constexpr int kDefaultHGrid = 2048;

/// sup_{0 <= h <= delta} ||Delta_h^phi f||: uniform grid of h_grid points on
/// [0, delta] followed by golden-section refinement around the best point.
ModulusResult modulus(const Spectrum& spec, const Multiplier& phi, double delta, const OrliczFamily& family,
                      NormKind kind, int h_grid = kDefaultHGrid);

/// modulus() at several deltas sharing one scan. Deltas are visited in
/// increasing order; each new interval (previous delta, delta] is scanned at
/// step delta / (h_grid - 1), so every entry is at least as well resolved as
/// a standalone call. Results are in input order.
std::vector<ModulusResult> modulus_profile(const Spectrum& spec, const Multiplier& phi, std::span<const double> deltas,
                                           const OrliczFamily& family, NormKind kind, int h_grid = kDefaultHGrid);

}  // namespace orlapprox
