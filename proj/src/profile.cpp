#include "anihsi/profile.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

namespace anihsi {

AnisotropyProfile derive_profile(std::span<const double> alpha) {
    require(!alpha.empty(), "derive_profile: empty order vector");
    for (double a : alpha) require(a > 0, "derive_profile: orders must be positive");
    AnisotropyProfile p;
    p.alpha.assign(alpha.begin(), alpha.end());
    const int n = p.dim();
    double inv_sum = 0;
    for (double a : alpha) inv_sum += 1.0 / a;
    p.alpha_star = n / inv_sum;
    p.lambda.resize(n);
    for (int i = 0; i < n; ++i) p.lambda[i] = p.alpha_star / alpha[i];
    const double amax = *std::max_element(alpha.begin(), alpha.end());
    p.theta = p.alpha_star / amax;
    p.gamma = amax * (1.0 - inv_sum);
    p.m_cap = p.gamma > 0 ? static_cast<int>(std::floor(p.gamma)) : 0;
    int two_ell = 2;
    while (two_ell <= amax) two_ell += 2;
    p.min_diff_order = two_ell;
    return p;
}

namespace {

// Multi-indices k >= 0 with |k| = total, lexicographic order.
void enumerate(int n, int total, std::vector<int>& k, int pos,
               const std::function<bool(const std::vector<int>&)>& visit, bool& stop) {
    if (stop) return;
    if (pos == n - 1) {
        k[pos] = total;
        if (visit(k)) stop = true;
        return;
    }
    for (int v = 0; v <= total && !stop; ++v) {
        k[pos] = v;
        enumerate(n, total - v, k, pos + 1, visit, stop);
    }
}

}  // namespace

AdmissibilityReport check_admissibility(const AnisotropyProfile& profile, double tolerance) {
    require(tolerance > 0, "check_admissibility: tolerance must be positive");
    AdmissibilityReport rep;
    rep.tolerance = tolerance;
    if (profile.m_cap <= 0) return rep;  // condition vacuous
    const int n = profile.dim();
    std::vector<int> k(n);
    for (int total = 0; total < profile.m_cap; ++total) {
        rep.checked_orders.push_back(total);
        bool stop = false;
        enumerate(n, total, k, 0, [&](const std::vector<int>& idx) {
            double s = 0;
            for (int i = 0; i < n; ++i) s += (1.0 + idx[i]) / profile.alpha[i];
            if (std::abs(s - 1.0) <= tolerance) {
                rep.valid = false;
                rep.violating_index = idx;
                return true;
            }
            return false;
        }, stop);
        if (!rep.valid) break;
    }
    return rep;
}

std::string profile_to_json(const AnisotropyProfile& p, const AdmissibilityReport& r) {
    nlohmann::json j;
    j["alpha"] = p.alpha;
    j["alpha_star"] = p.alpha_star;
    j["lambda"] = p.lambda;
    j["theta"] = p.theta;
    j["gamma"] = p.gamma;
    j["m_cap"] = p.m_cap;
    j["min_diff_order"] = p.min_diff_order;
    j["valid"] = r.valid;
    if (r.violating_index) j["violating_index"] = *r.violating_index;
    j["checked_orders"] = r.checked_orders;
    j["tolerance"] = r.tolerance;
    return j.dump();
}

}  // namespace anihsi
