#pragma once

#include <optional>
#include <string>
#include <vector>

#include "anihsi/util.hpp"

namespace anihsi {

/// The anisotropy vector and everything derived from it.
///
/// alpha_star solves 1/a* = (1/n) sum 1/alpha_j; lambda_i = a*/alpha_i
/// (so sum lambda_i = n); theta = min_i lambda_i; gamma and m_cap drive the
/// admissibility condition, which only bites when a* >= n.
struct AnisotropyProfile {
    std::vector<double> alpha;
    double alpha_star = 0;
    std::vector<double> lambda;
    double theta = 0;
    double gamma = 0;
    int m_cap = 0;
    int min_diff_order = 0;  // smallest even 2l with 2l > max alpha_j

    int dim() const { return static_cast<int>(alpha.size()); }
};

struct AdmissibilityReport {
    bool valid = true;
    std::optional<std::vector<int>> violating_index;
    std::vector<int> checked_orders;  // |k| values examined
    double tolerance = 0;
};

AnisotropyProfile derive_profile(std::span<const double> alpha);

/// Enumerates multi-indices with |k| in {0,...,m_cap-1} and flags the first
/// (lexicographic within each |k|) with |sum (1+k_j)/alpha_j - 1| <= tolerance.
AdmissibilityReport check_admissibility(const AnisotropyProfile& profile,
                                        double tolerance = 1e-12);

/// Flat key/value JSON record {alpha, alpha_star, lambda, theta, gamma,
/// m_cap, min_diff_order, valid}.
std::string profile_to_json(const AnisotropyProfile& profile,
                            const AdmissibilityReport& report);

}  // namespace anihsi
