#pragma once

#include "sph/lp.hpp"
#include "sph/skeleton.hpp"

#include <optional>
#include <string>

namespace sph {

struct PInvariantReport {
    bool finite = true;
    Rational p_value;              // meaningful iff finite
    std::size_t bound = 0;         // |R+ \ R+_{S^p}|
    std::optional<Rational> gap;   // bound - p_value
    RatVector theta;               // optimal vertex in Sigma-coordinates
    RatVector dual;                // one multiplier per divisor of Delta
    Rational offset;               // sum over Delta of (m_D - 1)
    bool is_equality = false;
    LpProblem lp;
    LpResult lp_result;

    std::string p_string() const { return finite ? to_string(p_value) : std::string("inf"); }
};

// max sum_D <rho(D), x> subject to -<rho(D), x> <= m_D, x >= 0.
LpProblem p_lp(const SphericalSkeleton& sk);

PInvariantReport compute_p(const SphericalSkeleton& sk);
// Skips validation; for inputs already known to be valid.
PInvariantReport compute_p_unchecked(const SphericalSkeleton& sk);

// Objective sum_D (m_D - 1 + <rho(D), theta>) and membership of theta in Q*_R and cone(Sigma).
Rational p_objective(const SphericalSkeleton& sk, const RatVector& theta);
bool theta_feasible(const SphericalSkeleton& sk, const RatVector& theta);
// theta is a vertex of Q*_R intersected with cone(Sigma).
bool theta_is_vertex(const SphericalSkeleton& sk, const RatVector& theta);

struct MukaiRow {
    std::string name;
    std::optional<PInvariantReport> report;
    std::string error;
};

std::vector<MukaiRow> mukai_gap_table(const std::vector<std::pair<std::string, SphericalSkeleton>>& sks);

struct SmoothnessResult {
    SphericalSkeleton local;
    PInvariantReport report;
    bool smooth = false;
};

SmoothnessResult smoothness_test(const SphericalSkeleton& sk, const std::set<std::string>& ids);

}  // namespace sph
