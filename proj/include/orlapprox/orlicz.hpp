#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orlapprox/spectrum.hpp"

namespace orlapprox {

enum class NormKind { luxemburg, orlicz };

std::string_view to_string(NormKind kind);
NormKind parse_norm_kind(std::string_view text);

/// A value in [0, +inf] where infinity is an explicit flag, never an overflow.
struct ExtendedReal {
    double value = 0.0;
    bool infinite = false;

    static constexpr ExtendedReal infinity() { return {0.0, true}; }
    static constexpr ExtendedReal finite(double v) { return {v, false}; }

    bool is_finite() const { return !infinite; }
    friend bool operator==(const ExtendedReal&, const ExtendedReal&) = default;
};

ExtendedReal operator+(ExtendedReal a, ExtendedReal b);

/// One Orlicz function M: convex, nondecreasing, M(0) = 0.
///
/// The power kind M(u) = weight * u^exponent (exponent >= 1, weight >= 0)
/// carries a closed-form Young conjugate; custom kinds use a numeric sup.
class OrliczFunction {
public:
    enum class Kind { power, custom };

    static OrliczFunction power(double exponent, double weight = 1.0);
    /// u^p (p^{-1/p} q^{-1/q})^p, whose conjugate is exactly v^q.
    static OrliczFunction scaled_power(double exponent);
    static OrliczFunction custom(std::function<double(double)> fn, std::string label = "custom");
    /// Piecewise-linear interpolation through (u, M(u)) points starting at
    /// (0, 0), extended linearly with the last slope.
    static OrliczFunction tabulated(std::vector<std::pair<double, double>> points);

    Kind kind() const { return kind_; }
    double exponent() const { return exponent_; }
    double weight() const { return weight_; }
    const std::string& label() const { return label_; }

    double operator()(double u) const;

    /// Young conjugate sup_{u >= 0} (u v - M(u)).
    ExtendedReal conjugate(double v) const;

private:
    OrliczFunction() = default;

    Kind kind_ = Kind::power;
    double exponent_ = 1.0;
    double weight_ = 1.0;
    std::function<double(double)> fn_;
    std::string label_;
};

enum class FamilyKind { power, scaled_power, custom };

std::string_view to_string(FamilyKind kind);

/// Musielak-Orlicz family {M_k}, |k| <= K.
class OrliczFamily {
public:
    OrliczFamily(int radius, FamilyKind kind, std::vector<OrliczFunction> functions);

    static OrliczFamily power(int radius, double exponent, double weight = 1.0);
    static OrliczFamily power(int radius, std::vector<double> exponents, std::vector<double> weights);
    static OrliczFamily scaled_power(int radius, double exponent);
    static OrliczFamily custom(int radius, const OrliczFunction& fn);
    static OrliczFamily custom(int radius, std::vector<OrliczFunction> functions);

    int radius() const { return radius_; }
    FamilyKind kind() const { return kind_; }
    const OrliczFunction& at(int k) const;

    /// Power-kind entries sharing an exponent share a group id; -1 otherwise.
    int power_group(int k) const { return groups_[static_cast<std::size_t>(k + radius_)]; }
    std::span<const double> group_exponents() const { return group_exponents_; }

    /// Sample-grid checks of M(0) = 0, nonnegativity, monotonicity and
    /// midpoint convexity. Returns one message per violation.
    std::vector<std::string> check_invariants(int grid = 64) const;

private:
    int radius_;
    FamilyKind kind_;
    std::vector<OrliczFunction> functions_;
    std::vector<int> groups_;
    std::vector<double> group_exponents_;
};

/// Sum_k M_k(|c_k| / a).
double modular(const OrliczFamily& family, const Spectrum& coeffs, double a);

/// inf{a > 0 : modular <= 1}; bracketing then bisection to 1e-10 relative.
double luxemburg_norm(const OrliczFamily& family, const Spectrum& coeffs);

ExtendedReal conjugate(const OrliczFamily& family, int k, double v);

/// Orlicz (dual) norm, computed through the Amemiya form
/// inf_{kappa > 0} (1 + sum_k M_k(kappa |c_k|)) / kappa.
double orlicz_norm(const OrliczFamily& family, const Spectrum& coeffs);

double norm(const OrliczFamily& family, const Spectrum& coeffs, NormKind kind);

/// Norm of a magnitude sequence laid out like Spectrum::values() for a
/// window of radius (mags.size() - 1) / 2.
double norm_of_magnitudes(const OrliczFamily& family, std::span<const double> mags, NormKind kind);

struct DualEvaluation {
    bool feasible = false;
    double value = 0.0;               ///< sum_k lambda_k |c_k|
    ExtendedReal conjugate_sum;       ///< sum_k conj(M_k)(lambda_k)
};

/// Objective of the dual definition at one weight sequence lambda. An
/// infeasible lambda is reported through `feasible`, not silently clipped.
DualEvaluation dual_feasible_value(const OrliczFamily& family, const Spectrum& coeffs,
                                   std::span<const double> lambda);

}  // namespace orlapprox
