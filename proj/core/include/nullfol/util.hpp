#pragma once

#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

namespace nullfol {

// Raised when an iterative solver or quadrature fails to reach its tolerance.
class numeric_failure : public std::runtime_error {
public:
    explicit numeric_failure(const std::string& what, double residual = 0.0)
        : std::runtime_error(what), residual_(residual) {}
    double residual() const { return residual_; }

private:
    double residual_;
};

inline constexpr double kPi = 3.14159265358979323846264338327950288;

// Deterministic uniform doubles in [0,1). std::uniform_real_distribution is
// implementation-defined, so map the raw 64-bit stream by hand.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    std::uint64_t next_u64() {
        // xorshift* keeps the stream identical across standard libraries.
        std::uint64_t x = state_;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        state_ = x;
        return x * 0x2545f4914f6cdd1dull;
    }

    double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    int uniform_int(int lo, int hi) {  // inclusive bounds
        return lo + int(next_u64() % std::uint64_t(hi - lo + 1));
    }

private:
    std::uint64_t state_;
};

// Fixed-width decimal formatting shared by the CSV and JSON writers; 17
// significant digits round-trips IEEE doubles exactly.
inline std::string format_real(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

// Composite Simpson on a uniform grid; falls back to trapezoid when fewer
// than three samples or a non-uniform spacing is detected.
double integrate_samples(const std::vector<double>& s, const std::vector<double>& f);

// Cumulative 4th-order integral: out[i] = int_{s0}^{s_i} f ds.
std::vector<double> cumulative_integral(const std::vector<double>& s,
                                        const std::vector<double>& f);

}  // namespace nullfol
