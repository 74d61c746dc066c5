#pragma once

#include "sph/rational.hpp"

#include <set>
#include <utility>

namespace sph {

inline constexpr std::size_t kMaxPolytopeDim = 8;

// Rows read <normal, v> >= offset.
struct HalfSpace {
    RatVector normal;
    Rational offset;
};

struct HPolytope {
    std::size_t ambient_dim = 0;
    std::vector<HalfSpace> rows;

    bool contains(const RatVector& v) const;
    std::set<std::size_t> active(const RatVector& v) const;
};

struct VPolytope {
    std::size_t ambient_dim = 0;
    std::vector<RatVector> vertices;
};

// Drops points lying in the convex hull of the remaining ones, and duplicates.
VPolytope make_vpolytope(std::size_t dim, std::vector<RatVector> points);

bool in_convex_hull(const std::vector<RatVector>& points, const RatVector& target);

// Unbounded when some coordinate LP is unbounded; empty polytope yields no vertices.
VPolytope vertex_enumerate(const HPolytope& p);

bool origin_in_interior(const VPolytope& q);

// {v : <u, v> >= -1 for every vertex u}.
HPolytope dualize(const VPolytope& q);

// Vertices u of q with <u, v> = -1; v must be a vertex of the polar.
std::set<std::size_t> dual_face(const VPolytope& q, const RatVector& v);

// Pairs of vertex indices of vertex_enumerate(p) spanning an edge of p.
std::vector<std::pair<std::size_t, std::size_t>> edges(const HPolytope& p, const VPolytope& verts);

// target in the cone spanned by generators (all with the same length as target).
bool cone_contains(const std::vector<RatVector>& generators, const RatVector& target);

}  // namespace sph
