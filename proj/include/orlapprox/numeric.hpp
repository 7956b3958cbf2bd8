#pragma once

// Small one-dimensional solvers shared by the norm, modulus and search code.

#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>

namespace orlapprox::numeric {

inline constexpr double kRelTol = 1e-10;
inline constexpr int kMaxIter = 200;

struct Extremum {
    double x = 0.0;
    double value = 0.0;
    int iterations = 0;
};

/// Golden-section search for the minimum of a unimodal function on [lo, hi].
/// Stops when the bracket is narrower than `x_tol` or after kMaxIter steps.
template <class F>
Extremum golden_minimize(F&& f, double lo, double hi, double x_tol, int max_iter = kMaxIter) {
    constexpr double inv_phi = 0.6180339887498949;
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    int it = 0;
    while (std::abs(b - a) > x_tol && it < max_iter) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
        ++it;
    }
    return fc <= fd ? Extremum{c, fc, it} : Extremum{d, fd, it};
}

template <class F>
Extremum golden_maximize(F&& f, double lo, double hi, double x_tol, int max_iter = kMaxIter) {
    auto r = golden_minimize([&](double x) { return -f(x); }, lo, hi, x_tol, max_iter);
    r.value = -r.value;
    return r;
}

/// Deterministic uniform generator; raw 64-bit output is mapped to doubles by
/// bit manipulation so sequences are identical across standard libraries.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    int integer(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::uint64_t state_;
};

}  // namespace orlapprox::numeric
