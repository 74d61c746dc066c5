#include "sph/geometry.hpp"

#include "sph/lp.hpp"

#include <algorithm>
#include <iterator>

namespace sph {

bool HPolytope::contains(const RatVector& v) const {
    for (const auto& h : rows)
        if (dot(h.normal, v) < h.offset) return false;
    return true;
}

std::set<std::size_t> HPolytope::active(const RatVector& v) const {
    std::set<std::size_t> out;
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (dot(rows[i].normal, v) == rows[i].offset) out.insert(i);
    return out;
}

namespace {

// Equality constraint rows a.x = t become a.x <= t and -a.x <= -t.
void add_equality(LpProblem& lp, const RatVector& a, const Rational& t) {
    lp.A.push_back(a);
    lp.b.push_back(t);
    RatVector na = a;
    for (auto& x : na) x = -x;
    lp.A.push_back(na);
    lp.b.push_back(-t);
}

// Free variables v = v+ - v-, so a row <a, v> >= o becomes -a.v+ + a.v- <= -o.
LpProblem free_lp(const HPolytope& p, const RatVector& objective) {
    const std::size_t d = p.ambient_dim;
    LpProblem lp;
    lp.c = zeros(2 * d);
    for (std::size_t i = 0; i < d; ++i) {
        lp.c[i] = objective[i];
        lp.c[d + i] = -objective[i];
    }
    for (const auto& h : p.rows) {
        RatVector row(2 * d);
        for (std::size_t i = 0; i < d; ++i) {
            row[i] = -h.normal[i];
            row[d + i] = h.normal[i];
        }
        lp.A.push_back(row);
        lp.b.push_back(-h.offset);
    }
    return lp;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

RatMatrix rows_of(const HPolytope& p, const std::set<std::size_t>& idx) {
    RatMatrix m;
    for (auto i : idx) m.push_back(p.rows[i].normal);
    return m;
}

}  // namespace

bool in_convex_hull(const std::vector<RatVector>& points, const RatVector& target) {
    if (points.empty()) return false;
    const std::size_t d = target.size();
    LpProblem lp;
    lp.c = zeros(points.size());
    for (std::size_t i = 0; i < d; ++i) {
        RatVector a(points.size());
        for (std::size_t j = 0; j < points.size(); ++j) a[j] = points[j][i];
        add_equality(lp, a, target[i]);
    }
    add_equality(lp, RatVector(points.size(), Rational(1)), Rational(1));
    return solve(lp).status == LpStatus::Optimal;
}

VPolytope make_vpolytope(std::size_t dim, std::vector<RatVector> points) {
    for (const auto& p : points)
        if (p.size() != dim) throw Error(ErrorCode::ParseError, "point dimension mismatch");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    VPolytope out;
    out.ambient_dim = dim;
    for (std::size_t i = 0; i < points.size(); ++i) {
        std::vector<RatVector> others;
        for (std::size_t j = 0; j < points.size(); ++j)
            if (j != i) others.push_back(points[j]);
        if (!in_convex_hull(others, points[i])) out.vertices.push_back(points[i]);
    }
    return out;
}

VPolytope vertex_enumerate(const HPolytope& p) {
    const std::size_t d = p.ambient_dim;
    if (d > kMaxPolytopeDim)
        throw Error(ErrorCode::DimensionTooLarge, "ambient dimension " + std::to_string(d) + " exceeds 8");
    for (const auto& h : p.rows)
        if (h.normal.size() != d) throw Error(ErrorCode::ParseError, "half-space dimension mismatch");
    VPolytope out;
    out.ambient_dim = d;
    if (d == 0) {
        if (p.contains({})) out.vertices.push_back({});
        return out;
    }
    for (std::size_t i = 0; i < d; ++i) {
        for (int sign : {1, -1}) {
            RatVector obj = zeros(d);
            obj[i] = sign;
            auto r = solve(free_lp(p, obj));
            if (r.status == LpStatus::Infeasible) return out;
            if (r.status == LpStatus::Unbounded)
                throw Error(ErrorCode::UnboundedPolytope, "coordinate " + std::to_string(i + 1) + " unbounded");
        }
    }
    if (p.rows.size() < d) return out;
    std::vector<std::size_t> idx(d);
    for (std::size_t i = 0; i < d; ++i) idx[i] = i;
    std::vector<RatVector> found;
    do {
        RatMatrix m;
        RatVector rhs;
        for (auto i : idx) {
            m.push_back(p.rows[i].normal);
            rhs.push_back(p.rows[i].offset);
        }
        RatVector x;
        if (!solve_square(m, rhs, x)) continue;
        if (!p.contains(x)) continue;
        if (std::find(found.begin(), found.end(), x) == found.end()) found.push_back(x);
    } while (next_combination(idx, p.rows.size()));
    std::sort(found.begin(), found.end());
    out.vertices = std::move(found);
    return out;
}

bool origin_in_interior(const VPolytope& q) {
    const std::size_t d = q.ambient_dim, k = q.vertices.size();
    if (k == 0) return d == 0;
    RatMatrix vm(q.vertices.begin(), q.vertices.end());
    if (rank(vm) != d) return false;
    // max t with 0 = sum (mu_j + t) u_j, sum (mu_j + t) = 1, mu, t >= 0
    LpProblem lp;
    lp.c = zeros(k + 1);
    lp.c[k] = 1;
    for (std::size_t i = 0; i < d; ++i) {
        RatVector a(k + 1);
        Rational s = 0;
        for (std::size_t j = 0; j < k; ++j) {
            a[j] = q.vertices[j][i];
            s += q.vertices[j][i];
        }
        a[k] = s;
        add_equality(lp, a, Rational(0));
    }
    RatVector ones(k + 1, Rational(1));
    ones[k] = Rational(static_cast<long>(k));
    add_equality(lp, ones, Rational(1));
    auto r = solve(lp);
    return r.status == LpStatus::Optimal && r.value > 0;
}

HPolytope dualize(const VPolytope& q) {
    if (!origin_in_interior(q)) throw Error(ErrorCode::OriginNotInterior, "0 is not an interior point");
    HPolytope h;
    h.ambient_dim = q.ambient_dim;
    for (const auto& u : q.vertices) h.rows.push_back({u, Rational(-1)});
    return h;
}

std::set<std::size_t> dual_face(const VPolytope& q, const RatVector& v) {
    HPolytope h = dualize(q);
    if (v.size() != h.ambient_dim || !h.contains(v))
        throw Error(ErrorCode::NotAVertex, to_string(v) + " is not in the dual polytope");
    auto act = h.active(v);
    if (rank(rows_of(h, act)) != h.ambient_dim)
        throw Error(ErrorCode::NotAVertex, to_string(v) + " is not a vertex of the dual polytope");
    return act;
}

std::vector<std::pair<std::size_t, std::size_t>> edges(const HPolytope& p, const VPolytope& verts) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const std::size_t d = p.ambient_dim;
    if (d == 0) return out;
    std::vector<std::set<std::size_t>> act;
    for (const auto& v : verts.vertices) act.push_back(p.active(v));
    for (std::size_t i = 0; i < verts.vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < verts.vertices.size(); ++j) {
            std::set<std::size_t> common;
            std::set_intersection(act[i].begin(), act[i].end(), act[j].begin(), act[j].end(),
                                  std::inserter(common, common.begin()));
            if (d == 1 || (!common.empty() && rank(rows_of(p, common)) == d - 1)) out.emplace_back(i, j);
        }
    }
    return out;
}

bool cone_contains(const std::vector<RatVector>& generators, const RatVector& target) {
    bool zero = std::all_of(target.begin(), target.end(), [](const Rational& x) { return x == 0; });
    if (zero) return true;
    if (generators.empty()) return false;
    LpProblem lp;
    lp.c = zeros(generators.size());
    for (std::size_t i = 0; i < target.size(); ++i) {
        RatVector a(generators.size());
        for (std::size_t j = 0; j < generators.size(); ++j) a[j] = generators[j][i];
        add_equality(lp, a, target[i]);
    }
    return solve(lp).status == LpStatus::Optimal;
}

}  // namespace sph
