#pragma once

#include <complex>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace orlapprox {

using Complex = std::complex<double>;

/// Two-sided Fourier coefficients c_k for -K <= k <= K.
///
/// Storage is a dense array of length 2K+1, position K holding the constant
/// term. Frequencies outside the window are not represented; every operation
/// that would need one raises WindowError instead of treating it as zero.
class Spectrum {
public:
    Spectrum() : Spectrum(0) {}
    explicit Spectrum(int radius);
    Spectrum(int radius, std::vector<Complex> coeffs, std::string tail_note = {});

    int radius() const { return radius_; }
    std::size_t size() const { return coeffs_.size(); }

    /// Bounds-checked access by frequency.
    Complex at(int k) const;
    void set(int k, Complex value);

    /// Coefficients in frequency order -K..K.
    std::span<const Complex> values() const { return coeffs_; }
    std::vector<double> magnitudes() const;

    /// Documentation-only description of the analytic tail beyond the window.
    const std::string& tail_note() const { return tail_note_; }
    void set_tail_note(std::string note) { tail_note_ = std::move(note); }

    bool is_zero() const;
    Spectrum scaled(Complex factor) const;
    Spectrum operator+(const Spectrum& other) const;
    Spectrum operator-(const Spectrum& other) const;

private:
    int radius_;
    std::vector<Complex> coeffs_;
    std::string tail_note_;
};

// Coefficient rules ---------------------------------------------------------

struct DeltaRule {
    int frequency = 0;
    Complex amplitude = 1.0;
};

/// c_k = ratio^{|k|}, ratio in (0, 1).
struct GeometricRule {
    double ratio = 0.5;
};

/// c_k = |k|^{-exponent} for k != 0, c_0 = 0.
struct PowerRule {
    double exponent = 1.0;
};

/// c_{+-2^j} = a_j. When `amplitudes` is empty, a_j = decay^j.
struct LacunaryRule {
    std::vector<double> amplitudes;
    double decay = 0.5;
};

using CoefficientRule = std::variant<DeltaRule, GeometricRule, PowerRule, LacunaryRule>;

using RuleParams = std::map<std::string, std::vector<double>, std::less<>>;

/// Builds a rule from its textual tag ("delta", "geometric", "power",
/// "lacunary"). Unknown tags and missing parameters raise ConfigError.
CoefficientRule make_rule(std::string_view tag, const RuleParams& params);

Spectrum spectrum_from_rule(const CoefficientRule& rule, int radius);

/// Rectangle-rule Fourier coefficients of samples f(2*pi*j/N), j = 0..N-1.
/// Requires N >= 2K+2; smaller N is refused as aliased.
Spectrum spectrum_from_samples(std::span<const Complex> samples, int radius);

/// Reads "x real imag" lines (x on the uniform grid 2*pi*j/N). Blank lines
/// and lines starting with '#' are skipped.
std::vector<Complex> read_samples(const std::filesystem::path& path);

/// Fourier sum S_{n-1}: keeps |k| <= n-1. Requires 1 <= n <= K+1.
Spectrum partial_sum(const Spectrum& spec, int n);

/// Complement of partial_sum: keeps |k| >= n.
Spectrum tail(const Spectrum& spec, int n);

}  // namespace orlapprox
