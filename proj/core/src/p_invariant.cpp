#include "sph/p_invariant.hpp"

namespace sph {

LpProblem p_lp(const SphericalSkeleton& sk) {
    const std::size_t s = sk.sigma.size();
    LpProblem lp;
    lp.c = zeros(s);
    const auto rows = sk.rows();
    const auto m = sk.coefficients();
    for (std::size_t d = 0; d < rows.size(); ++d) {
        RatVector a(s);
        for (std::size_t k = 0; k < s; ++k) {
            lp.c[k] += static_cast<long>(rows[d][k]);
            a[k] = -static_cast<long>(rows[d][k]);
        }
        lp.A.push_back(a);
        lp.b.emplace_back(static_cast<long>(m[d]));
    }
    return lp;
}

PInvariantReport compute_p_unchecked(const SphericalSkeleton& sk) {
    PInvariantReport r;
    r.lp = p_lp(sk);
    r.offset = 0;
    for (auto m : sk.coefficients()) r.offset += static_cast<long>(m - 1);
    r.bound = sk.root_system.parabolic_count(sk.sp);
    r.lp_result = solve(r.lp);
    if (r.lp_result.status != LpStatus::Optimal) {
        r.finite = false;
        return r;
    }
    r.p_value = r.offset + r.lp_result.value;
    r.theta = r.lp_result.x;
    r.dual = r.lp_result.y;
    r.gap = Rational(static_cast<long>(r.bound)) - r.p_value;
    r.is_equality = *r.gap == 0;
    return r;
}

PInvariantReport compute_p(const SphericalSkeleton& sk) {
    require_valid(sk);
    return compute_p_unchecked(sk);
}

Rational p_objective(const SphericalSkeleton& sk, const RatVector& theta) {
    Rational v = 0;
    const auto rows = sk.rows();
    const auto m = sk.coefficients();
    for (std::size_t d = 0; d < rows.size(); ++d) v += static_cast<long>(m[d] - 1) + dot(to_rat(rows[d]), theta);
    return v;
}

bool theta_feasible(const SphericalSkeleton& sk, const RatVector& theta) {
    if (theta.size() != sk.sigma.size()) return false;
    for (const auto& t : theta)
        if (t < 0) return false;
    const auto rows = sk.rows();
    const auto m = sk.coefficients();
    for (std::size_t d = 0; d < rows.size(); ++d)
        if (dot(to_rat(rows[d]), theta) < -static_cast<long>(m[d])) return false;
    return true;
}

bool theta_is_vertex(const SphericalSkeleton& sk, const RatVector& theta) {
    if (!theta_feasible(sk, theta)) return false;
    const std::size_t s = sk.sigma.size();
    RatMatrix active;
    for (std::size_t k = 0; k < s; ++k)
        if (theta[k] == 0) active.push_back(unit(s, k));
    const auto rows = sk.rows();
    const auto m = sk.coefficients();
    for (std::size_t d = 0; d < rows.size(); ++d) {
        auto r = to_rat(rows[d]);
        if (dot(r, theta) == -static_cast<long>(m[d])) active.push_back(r);
    }
    return rank(active) == s;
}

std::vector<MukaiRow> mukai_gap_table(const std::vector<std::pair<std::string, SphericalSkeleton>>& sks) {
    std::vector<MukaiRow> out;
    for (const auto& [name, sk] : sks) {
        MukaiRow row;
        row.name = name;
        try {
            row.report = compute_p(sk);
        } catch (const Error& e) {
            row.error = e.what();
        }
        out.push_back(std::move(row));
    }
    return out;
}

SmoothnessResult smoothness_test(const SphericalSkeleton& sk, const std::set<std::string>& ids) {
    require_valid(sk);
    SmoothnessResult r;
    r.local = localize(sk, ids);
    r.report = compute_p(r.local);
    r.smooth = r.report.finite && r.report.is_equality;
    return r;
}

}  // namespace sph
