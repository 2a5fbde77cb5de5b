#pragma once

#include <span>

#include "anihsi/profile.hpp"

namespace anihsi {

struct DistanceSolverConfig {
    double abs_tolerance = 1e-12;  // stopping tolerance on log rho (relative on rho)
    int max_iterations = 200;
};

/// The anisotropic distance: the unique rho > 0 with
/// sum_i x_i^2 rho^{-2 lambda_i} = 1, and rho(0) = 0.
///
/// Solved as a safeguarded Newton iteration in u = log rho on the bracket
/// [max_i |x_i|^{1/lambda_i}, n^{1/(2 min lambda)} max_i |x_i|^{1/lambda_i}],
/// after normalizing out the bracket's lower end to keep exponentials tame.
double rho(std::span<const double> x, const AnisotropyProfile& profile,
           const DistanceSolverConfig& config = {});

/// t^lambda x = (t^{lambda_1} x_1, ..., t^{lambda_n} x_n).
Point dilate(std::span<const double> x, double t, const AnisotropyProfile& profile);

/// |rho(t^lambda x) - t rho(x)| / (t rho(x)).
double check_homogeneity(std::span<const double> x, double t,
                         const AnisotropyProfile& profile,
                         const DistanceSolverConfig& config = {});

/// Largest C1 with rho(x - t) >= C1 rho(t) - rho(x) on a seeded pseudo-random
/// sample of pairs; reported empirically, not used to gate anything.
double estimate_quasi_triangle_constant(const AnisotropyProfile& profile,
                                        int sample_count, std::uint64_t seed,
                                        const DistanceSolverConfig& config = {});

}  // namespace anihsi
