#pragma once

#include "sph/geometry.hpp"
#include "sph/p_invariant.hpp"

#include <optional>

namespace sph {

// Embedding-level data over a skeleton. Vectors over Delta follow delta_ids() order.
struct AugmentedData {
    SphericalSkeleton skeleton;
    std::size_t lattice_rank = 0;
    std::vector<IntVector> sigma_in_M;  // one per gamma in sigma, basis coordinates of M
    std::vector<IntVector> rho_prime;   // one per divisor, dual basis coordinates of N
    std::vector<std::int64_t> m;        // one per divisor
    // coroots[i][j] = <alpha_i^vee, b_j>; enables the (a2), (sigma1), (sigma2), (s) checks.
    std::optional<std::vector<IntVector>> coroots;

    RatVector u(std::size_t d) const;  // rho'(D) / m_D
};

// Shapes, m agreement, (a1) restriction law, and the coroot axioms when a table is present.
std::vector<Violation> validate_augmentation(const AugmentedData& aug);

// {u in N_Q : <u, gamma> <= 0 for gamma in sigma}.
bool in_valuation_cone(const AugmentedData& aug, const RatVector& u);

struct FanoPolytope {
    AugmentedData aug;
    VPolytope Q;
    VPolytope Qstar;
    HPolytope Qstar_h;
    std::vector<std::size_t> supported;  // indices into Qstar.vertices
};

// Q defaults to conv(u_D : D in Delta). Throws OriginNotInterior when Q* is undefined.
FanoPolytope make_fano(const AugmentedData& aug, const std::optional<std::vector<RatVector>>& Q = std::nullopt);

// Conditions (1)-(4); an origin on the boundary reports (2) and skips (4).
std::vector<Violation> validate_reflexive(const AugmentedData& aug, const VPolytope& Q);

// v is supported iff max{sum lambda : v + sum lambda_gamma gamma in Q*, lambda >= 0} is 0.
std::vector<std::size_t> supported_vertices(const AugmentedData& aug, const VPolytope& Q, const VPolytope& Qstar);

struct DvCurve {
    std::size_t divisor;  // index into Delta (a color)
    std::size_t vertex;   // index into Qstar.vertices
    Rational degree;
};

struct EdgeCurve {
    std::size_t v, w;  // indices into Qstar.vertices
    IntVector chi;     // primitive, v - w = degree * chi
    std::int64_t degree = 0;
};

struct CurveDegreeReport {
    std::vector<DvCurve> dv_curves;
    std::vector<EdgeCurve> edge_curves;
    Rational iota;  // minimum over both curve families
    Rational epsilon;
    std::int64_t picard = 0;
    std::size_t dim = 0;
    Rational mukai_lhs;  // picard * (iota - 1)
    bool degrees_positive_integers = true;
};

// Throws NoSupportedVertices.
CurveDegreeReport curve_degrees(const FanoPolytope& fp);

struct SigmaEvaluation {
    std::size_t vertex;
    Rational value;  // sum_D (m_D - 1 + <rho'(D), v>)
};

struct MukaiReport {
    CurveDegreeReport curves;
    bool holds = false;  // picard * (iota - 1) <= dim
    bool iota_le_epsilon = false;
    bool rfs_holds = false;  // epsilon (|Delta| - rank) <= sum (m_D + <rho'(D), theta>) at vertices and midpoints
    std::vector<SigmaEvaluation> sigma_vertices;
    bool p_finite = true;
    Rational p_polytope;  // optimum over Q* meet cone(Sigma)
    PInvariantReport p_skeleton;
    bool p_matches = false;
};

// Throws NotQFactorial when some dual face of a supported vertex does not have exactly
// lattice_rank vertices of Q, or a vertex serves two divisors.
MukaiReport mukai_check(const FanoPolytope& fp);

// Every color with u_D outside the valuation cone is a vertex of Q.
bool color_vertex_check(const FanoPolytope& fp);

}  // namespace sph
