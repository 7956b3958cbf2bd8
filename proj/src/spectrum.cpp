#include "orlapprox/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "orlapprox/errors.hpp"

namespace orlapprox {

namespace {

void check_degree(const Spectrum& spec, int n, const char* op) {
    if (n < 1 || n > spec.radius() + 1) {
        throw WindowError(std::string(op) + ": degree n=" + std::to_string(n) +
                          " outside [1, K+1] for window K=" + std::to_string(spec.radius()));
    }
}

double param(const RuleParams& params, std::string_view tag, std::string_view key) {
    auto it = params.find(key);
    if (it == params.end() || it->second.empty()) {
        throw ConfigError("rule '" + std::string(tag) + "' needs parameter '" + std::string(key) + "'");
    }
    return it->second.front();
}

}  // namespace

Spectrum::Spectrum(int radius) : radius_(radius) {
    if (radius < 0) throw DomainError("spectrum radius must be >= 0");
    coeffs_.assign(static_cast<std::size_t>(2 * radius + 1), Complex{});
}

Spectrum::Spectrum(int radius, std::vector<Complex> coeffs, std::string tail_note)
    : radius_(radius), coeffs_(std::move(coeffs)), tail_note_(std::move(tail_note)) {
    if (radius < 0) throw DomainError("spectrum radius must be >= 0");
    if (coeffs_.size() != static_cast<std::size_t>(2 * radius + 1)) {
        throw ConfigError("spectrum of radius " + std::to_string(radius) + " needs " +
                          std::to_string(2 * radius + 1) + " coefficients, got " +
                          std::to_string(coeffs_.size()));
    }
    for (const auto& c : coeffs_) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            throw DomainError("spectrum coefficients must be finite");
        }
    }
}

Complex Spectrum::at(int k) const {
    if (k < -radius_ || k > radius_) {
        throw WindowError("frequency " + std::to_string(k) + " outside window K=" + std::to_string(radius_));
    }
    return coeffs_[static_cast<std::size_t>(k + radius_)];
}

void Spectrum::set(int k, Complex value) {
    if (k < -radius_ || k > radius_) {
        throw WindowError("frequency " + std::to_string(k) + " outside window K=" + std::to_string(radius_));
    }
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
        throw DomainError("spectrum coefficients must be finite");
    }
    coeffs_[static_cast<std::size_t>(k + radius_)] = value;
}

std::vector<double> Spectrum::magnitudes() const {
    std::vector<double> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = std::abs(coeffs_[i]);
    return out;
}

bool Spectrum::is_zero() const {
    for (const auto& c : coeffs_) {
        if (c != Complex{}) return false;
    }
    return true;
}

Spectrum Spectrum::scaled(Complex factor) const {
    Spectrum out = *this;
    for (auto& c : out.coeffs_) c *= factor;
    return out;
}

Spectrum Spectrum::operator+(const Spectrum& other) const {
    if (other.radius_ != radius_) throw ConfigError("spectrum windows differ");
    Spectrum out = *this;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] += other.coeffs_[i];
    return out;
}

Spectrum Spectrum::operator-(const Spectrum& other) const { return *this + other.scaled(-1.0); }

CoefficientRule make_rule(std::string_view tag, const RuleParams& params) {
    auto allow = [&](std::initializer_list<std::string_view> keys) {
        for (const auto& [key, value] : params) {
            if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
                throw ConfigError("rule '" + std::string(tag) + "' takes no parameter '" + key + "'");
            }
        }
    };
    if (tag == "delta") allow({"k0", "amplitude"});
    if (tag == "geometric") allow({"ratio"});
    if (tag == "power") allow({"s"});
    if (tag == "lacunary") allow({"amplitudes", "decay"});
    if (tag == "delta") {
        DeltaRule r;
        r.frequency = static_cast<int>(std::lround(param(params, tag, "k0")));
        if (auto it = params.find("amplitude"); it != params.end() && !it->second.empty()) {
            r.amplitude = Complex(it->second[0], it->second.size() > 1 ? it->second[1] : 0.0);
        }
        return r;
    }
    if (tag == "geometric") return GeometricRule{param(params, tag, "ratio")};
    if (tag == "power") return PowerRule{param(params, tag, "s")};
    if (tag == "lacunary") {
        LacunaryRule r;
        if (auto it = params.find("amplitudes"); it != params.end()) {
            r.amplitudes = it->second;
        } else {
            r.decay = param(params, tag, "decay");
        }
        return r;
    }
    throw ConfigError("unknown coefficient rule '" + std::string(tag) + "'");
}

Spectrum spectrum_from_rule(const CoefficientRule& rule, int radius) {
    Spectrum out(radius);
    std::visit(
        [&](const auto& r) {
            using R = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<R, DeltaRule>) {
                out.set(r.frequency, r.amplitude);
                out.set_tail_note("finite support");
            } else if constexpr (std::is_same_v<R, GeometricRule>) {
                if (!(r.ratio > 0.0 && r.ratio < 1.0)) throw DomainError("geometric ratio must lie in (0, 1)");
                for (int k = -radius; k <= radius; ++k) out.set(k, std::pow(r.ratio, std::abs(k)));
                out.set_tail_note("geometric decay r^|k|");
            } else if constexpr (std::is_same_v<R, PowerRule>) {
                if (!(r.exponent > 0.0)) throw DomainError("power-decay exponent must be > 0");
                for (int k = 1; k <= radius; ++k) {
                    const double c = std::pow(static_cast<double>(k), -r.exponent);
                    out.set(k, c);
                    out.set(-k, c);
                }
                out.set_tail_note("power decay |k|^-s");
            } else {
                int j = 0;
                for (long f = 1; f <= radius; f *= 2, ++j) {
                    double a;
                    if (r.amplitudes.empty()) {
                        a = std::pow(r.decay, j);
                    } else if (static_cast<std::size_t>(j) < r.amplitudes.size()) {
                        a = r.amplitudes[static_cast<std::size_t>(j)];
                    } else {
                        break;
                    }
                    out.set(static_cast<int>(f), a);
                    out.set(-static_cast<int>(f), a);
                }
                out.set_tail_note("lacunary support at +-2^j");
            }
        },
        rule);
    return out;
}

Spectrum spectrum_from_samples(std::span<const Complex> samples, int radius) {
    const auto n = static_cast<long>(samples.size());
    if (radius < 0) throw DomainError("spectrum radius must be >= 0");
    if (n < 2L * radius + 2) {
        throw WindowError("aliasing: " + std::to_string(n) + " samples cannot resolve window K=" +
                          std::to_string(radius) + " (need N >= 2K+2)");
    }
    // Exact roots of unity indexed by (k*j mod N) keep the phase error at one rounding.
    std::vector<Complex> roots(static_cast<std::size_t>(n));
    for (long j = 0; j < n; ++j) {
        const double angle = -2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
        roots[static_cast<std::size_t>(j)] = Complex(std::cos(angle), std::sin(angle));
    }
    Spectrum out(radius);
    for (int k = -radius; k <= radius; ++k) {
        const long kk = ((k % n) + n) % n;
        Complex acc{};
        for (long j = 0; j < n; ++j) acc += samples[static_cast<std::size_t>(j)] * roots[static_cast<std::size_t>((kk * j) % n)];
        out.set(k, acc / static_cast<double>(n));
    }
    out.set_tail_note("rectangle-rule quadrature of " + std::to_string(n) + " samples");
    return out;
}

std::vector<Complex> read_samples(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open sample file " + path.string());
    std::vector<double> xs;
    std::vector<Complex> values;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream row(line);
        double x, re, im;
        if (!(row >> x >> re >> im)) {
            throw ConfigError(path.string() + ":" + std::to_string(lineno) + ": expected 'x real imag'");
        }
        xs.push_back(x);
        values.emplace_back(re, im);
    }
    if (values.empty()) throw ConfigError("sample file " + path.string() + " has no samples");
    const double step = 2.0 * std::numbers::pi / static_cast<double>(values.size());
    for (std::size_t j = 0; j < xs.size(); ++j) {
        if (std::abs(xs[j] - step * static_cast<double>(j)) > 1e-9 * (1.0 + std::abs(xs[j]))) {
            throw ConfigError("sample " + std::to_string(j) + " at x=" + std::to_string(xs[j]) +
                              " is off the uniform grid 2*pi*j/N");
        }
    }
    return values;
}

Spectrum partial_sum(const Spectrum& spec, int n) {
    check_degree(spec, n, "partial_sum");
    Spectrum out = spec;
    for (int k = n; k <= spec.radius(); ++k) {
        out.set(k, 0.0);
        out.set(-k, 0.0);
    }
    return out;
}

Spectrum tail(const Spectrum& spec, int n) {
    check_degree(spec, n, "tail");
    Spectrum out = spec;
    for (int k = -(n - 1); k <= n - 1; ++k) out.set(k, 0.0);
    return out;
}

}  // namespace orlapprox
