#pragma once

#include "sph/rational.hpp"

#include <string>

namespace sph {

// maximize c.x subject to A x <= b, x >= 0.
struct LpProblem {
    RatVector c;
    RatMatrix A;
    RatVector b;
};

enum class LpStatus { Optimal, Unbounded, Infeasible };

const char* to_string(LpStatus s);

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rational value;  // meaningful iff Optimal
    RatVector x;     // primal vertex (Optimal) or a feasible point (Unbounded)
    RatVector y;     // dual multipliers, one per row (Optimal)
    RatVector ray;   // improving direction with A ray <= 0, ray >= 0, c.ray > 0 (Unbounded)
    std::size_t pivots = 0;
};

// Dense tableau simplex, Bland's rule, two phases when b has negative entries.
LpResult solve(const LpProblem& p);

// Primal and dual feasibility plus zero gap, all exact.
bool check_certificate(const LpProblem& p, const LpResult& r);
bool check_certificate(const LpProblem& p, const RatVector& x, const RatVector& y);

// Dual feasibility alone: A^T y >= c, y >= 0. Gives the upper bound b.y.
bool dual_feasible(const LpProblem& p, const RatVector& y);

}  // namespace sph
