#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace anihsi {

/// Rejected input (precondition failure). CLI maps this to exit code 1.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Numerical failure (non-convergence, tail tolerance exceeded, diagnostic
/// residues). CLI maps this to exit code 2.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw InputError(msg);
}

using Point = std::vector<double>;

/// Deterministic RNG: mt19937_64 + hand-rolled Box-Muller so streams are
/// identical across standard library implementations.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform() {  // in (0,1]
        return (static_cast<double>(eng_() >> 11) + 1.0) * 0x1.0p-53;
    }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    double normal() {
        double u1 = uniform(), u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
    }
    Point normal_point(int n, double scale = 1.0) {
        Point p(n);
        for (auto& v : p) v = scale * normal();
        return p;
    }

  private:
    std::mt19937_64 eng_;
};

/// Worker count: min(ANIHSI_THREADS if set, hardware concurrency).
unsigned thread_count();

/// Index-parallel loop. Results must be written to disjoint slots so the
/// output is independent of the thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

/// Gauss-Legendre nodes/weights on [-1,1], cached.
const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int n);

/// Least-squares slope of y against x.
double fit_slope(std::span<const double> x, std::span<const double> y);

/// Shortest round-trip decimal form (17 significant digits).
std::string format_g17(double v);

std::uint64_t binomial(int n, int k);  // exact, throws past n = 40

}  // namespace anihsi
