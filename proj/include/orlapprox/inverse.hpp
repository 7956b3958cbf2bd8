#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orlapprox/orlicz.hpp"
#include "orlapprox/smoothness.hpp"
#include "orlapprox/spectrum.hpp"

namespace orlapprox {

/// Candidate modulus majorant omega(delta) on [0, 1].
class Majorant {
public:
    enum class Kind { power, power_log, custom };

    /// t^r.
    static Majorant power(double r);
    /// t^r (1/r + ln(1/t)), nondecreasing on (0, 1] for every r > 0.
    static Majorant power_log(double r);
    static Majorant custom(std::function<double(double)> fn, std::string label = "custom");

    Kind kind() const { return kind_; }
    double exponent() const { return r_; }
    const std::string& label() const { return label_; }

    double operator()(double t) const;

private:
    Majorant() = default;

    Kind kind_ = Kind::power;
    double r_ = 1.0;
    std::function<double(double)> fn_;
    std::string label_;
};

struct MajorantReport {
    bool valid = true;
    std::vector<std::string> issues;
};

/// Grid proxies on a log-spaced grid of [1e-6, 1]: positivity, monotonicity,
/// no relative jump above 5% between neighbours (continuity), and
/// omega(1e-6) < limit_tol * omega(1) (vanishing at 0).
MajorantReport validate_majorant(const Majorant& omega, int grid = 4096, double limit_tol = 0.5);

struct InverseReport {
    int n = 0;
    double lhs = 0.0;  ///< modulus at tau/n
    double rhs = 0.0;
    double slack = 0.0;
    bool pass = false;
};

/// Throws PreconditionError naming the first grid point where phi decreases
/// on [0, tau] or where phi(tau) falls short of max phi.
void check_monotone_multiplier(const Multiplier& phi, double tau, int grid = 1024);

/// omega_phi(f, tau/n) <= sum_{v=1}^n [phi(tau v/n) - phi(tau (v-1)/n)] E_v(f).
/// PASS iff lhs <= rhs (1 + 1e-9). Requires 1 <= n <= K+1.
InverseReport inverse_bound_general(const OrliczFamily& family, const Spectrum& spec, const Multiplier& phi,
                                    double tau, int n, NormKind kind, int h_grid = kDefaultHGrid);

/// omega_alpha(f, pi/n) <= alpha (2 pi/n)^alpha sum_{v=1}^n v^{alpha-1} E_v(f).
InverseReport inverse_bound_alpha(const OrliczFamily& family, const Spectrum& spec, double alpha, int n,
                                  NormKind kind, int h_grid = kDefaultHGrid);

/// Right-hand sides from e[v - 1] = E_v(f), v = 1..n.
double inverse_rhs_general(const Multiplier& phi, double tau, int n, std::span<const double> e);
double inverse_rhs_alpha(double alpha, int n, std::span<const double> e);

/// One bound for every n in [1, n_max], sharing one E_v sequence and one
/// modulus profile.
std::vector<InverseReport> inverse_general_sweep(const OrliczFamily& family, const Spectrum& spec,
                                                 const Multiplier& phi, double tau, int n_max, NormKind kind,
                                                 int h_grid = kDefaultHGrid);
std::vector<InverseReport> inverse_alpha_sweep(const OrliczFamily& family, const Spectrum& spec, double alpha,
                                               int n_max, NormKind kind, int h_grid = kDefaultHGrid);

enum class GrowthVerdict { bounded, growing };

std::string_view to_string(GrowthVerdict v);

struct ConditionBReport {
    /// ratio[n - 1] = sum_{v<=n} v^{alpha-1} omega(1/v) / (n^alpha omega(1/n)).
    std::vector<double> ratio;
    GrowthVerdict verdict = GrowthVerdict::bounded;
    double growth = 0.0;  ///< R(n_max) / R(n_max / 4)
};

/// BOUNDED iff R(n_max) / R(n_max/4) < 1.05. Requires alpha > 0, n_max >= 64
/// and a majorant passing validate_majorant.
ConditionBReport check_condition_B(const Majorant& omega, double alpha, int n_max = 16384);

enum class RateCategory { beta_below_alpha, beta_equals_alpha, beta_above_alpha };

std::string_view to_string(RateCategory c);

struct RateReport {
    double beta = 0.0;         ///< fitted slope of log E_n against log(1/n)
    double omega_slope = 0.0;  ///< fitted slope of log omega_alpha(f, 1/n)
    double predicted_omega_slope = 0.0;
    bool log_flag = false;
    RateCategory category = RateCategory::beta_below_alpha;
    std::vector<int> n_used;
};

/// Least squares on log-log points after dropping the two smallest n; at
/// least 6 points must remain. E_n = 0 at any n refuses with DomainError.
RateReport classify_rates(const OrliczFamily& family, const Spectrum& spec, double alpha, NormKind kind,
                          std::vector<int> n_range, int h_grid = kDefaultHGrid);

enum class MembershipVerdict { both_bounded, both_growing, inconsistent };

std::string_view to_string(MembershipVerdict v);

struct MembershipReport {
    double e_ratio_sup = 0.0;
    double omega_ratio_sup = 0.0;
    double e_growth = 0.0;  ///< sup over last quarter / sup over first quarter
    double omega_growth = 0.0;
    MembershipVerdict verdict = MembershipVerdict::both_bounded;
};

/// sup_n E_n / omega(1/n) and sup_n omega_alpha(f, 1/n) / omega(1/n) over
/// n_range; a ratio grows when its last-quarter sup exceeds 1.2 times its
/// first-quarter sup. Throws PreconditionError unless omega is BOUNDED
/// under check_condition_B.
MembershipReport class_membership(const OrliczFamily& family, const Spectrum& spec, double alpha,
                                  const Majorant& omega, NormKind kind, std::vector<int> n_range,
                                  int h_grid = kDefaultHGrid, int b_n_max = 16384);

}  // namespace orlapprox
