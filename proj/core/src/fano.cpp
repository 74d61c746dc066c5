#include "sph/fano.hpp"

#include <algorithm>
#include <numeric>

namespace sph {

namespace {

Rational pair_int(const IntVector& a, const IntVector& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) s += Rational(static_cast<long>(a[i] * b[i]));
    return s;
}

bool is_integral(const RatVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return is_integer(x); });
}

std::int64_t gcd_all(const IntVector& v) {
    std::int64_t g = 0;
    for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
    return g;
}

}  // namespace

RatVector AugmentedData::u(std::size_t d) const {
    RatVector out = to_rat(rho_prime[d]);
    for (auto& x : out) x /= Rational(static_cast<long>(m[d]));
    return out;
}

std::vector<Violation> validate_augmentation(const AugmentedData& aug) {
    std::vector<Violation> out;
    auto bad = [&](const std::string& a, const std::string& w) { out.push_back({a, w}); };
    const auto& sk = aug.skeleton;
    const auto ids = sk.delta_ids();
    const auto rows = sk.rows();
    const auto coeffs = sk.coefficients();
    const std::size_t r = aug.lattice_rank, s = sk.sigma.size(), nd = ids.size();

    if (aug.sigma_in_M.size() != s) bad("shape", "sigma_in_M needs one vector per spherical root");
    if (aug.rho_prime.size() != nd) bad("shape", "rho_prime needs one vector per divisor");
    if (aug.m.size() != nd) bad("shape", "m needs one entry per divisor");
    for (const auto& v : aug.sigma_in_M)
        if (v.size() != r) bad("shape", "sigma_in_M vector of wrong length");
    for (const auto& v : aug.rho_prime)
        if (v.size() != r) bad("shape", "rho_prime vector of wrong length");
    if (!out.empty()) return out;

    if (s > r || rank(to_rat(aug.sigma_in_M)) != s) bad("shape", "sigma_in_M is not linearly independent");

    for (std::size_t d = 0; d < nd; ++d) {
        if (aug.m[d] < 1) bad("m", ids[d] + " has non-positive m");
        else if (d < sk.colors.size() && aug.m[d] != coeffs[d])
            bad("m", ids[d] + " m differs from the skeleton");
        else if (d >= sk.colors.size() && aug.m[d] != 1)
            bad("m", ids[d] + " is G-invariant and needs m = 1");
        for (std::size_t k = 0; k < s; ++k)
            if (pair_int(aug.rho_prime[d], aug.sigma_in_M[k]) != Rational(static_cast<long>(rows[d][k])))
                bad("(a1)", ids[d] + " restricted to gamma" + std::to_string(k + 1) + " differs from rho(D)");
    }

    if (!aug.coroots) return out;
    const auto& cr = *aug.coroots;
    const auto& rs = sk.root_system;
    if (cr.size() != rs.rank()) {
        bad("shape", "coroot table needs one row per simple root");
        return out;
    }
    for (const auto& row : cr)
        if (row.size() != r) {
            bad("shape", "coroot row of wrong length");
            return out;
        }
    for (std::size_t a = 0; a < rs.rank(); ++a)
        for (std::size_t k = 0; k < s; ++k)
            if (pair_int(cr[a], aug.sigma_in_M[k]) != Rational(static_cast<long>(rs.pair(a, sk.sigma[k].coeffs))))
                bad("coroot", "alpha" + std::to_string(a + 1) + " on gamma" + std::to_string(k + 1) +
                                  " disagrees with the Cartan pairing");
    const IntVector zero(r, 0);
    for (auto a : sk.sp)
        if (cr[a] != zero) bad("(s)", "alpha" + std::to_string(a + 1) + " in S^p has nonzero coroot on M");
    for (const auto& g : sk.sigma) {
        auto supp = g.support();
        if (supp.size() == 1 && g.coeffs[*supp.begin()] == 2) {
            auto a = *supp.begin();
            for (auto x : cr[a])
                if (x % 2 != 0) bad("(sigma1)", "2alpha" + std::to_string(a + 1) + " in Sigma but coroot not even on M");
        }
        if (g.kind == PatternKind::OrthogonalSum) {
            auto a = *supp.begin(), b = *supp.rbegin();
            if (cr[a] != cr[b])
                bad("(sigma2)", "alpha" + std::to_string(a + 1) + "+alpha" + std::to_string(b + 1) +
                                    " in Sigma but coroots differ on M");
        }
    }
    for (std::size_t d = 0; d < sk.colors.size(); ++d) {
        const auto& c = sk.colors[d];
        const auto a = *c.moved_by.begin();
        IntVector target = cr[a];
        if (c.kind == ColorKind::PairPlus) {
            for (std::size_t e = 0; e < sk.colors.size(); ++e)
                if (sk.colors[e].kind == ColorKind::PairMinus && sk.colors[e].moved_by == c.moved_by) {
                    IntVector sum(r);
                    for (std::size_t j = 0; j < r; ++j) sum[j] = aug.rho_prime[d][j] + aug.rho_prime[e][j];
                    if (sum != target) bad("(a2)", c.id + " and " + sk.colors[e].id + " do not sum to the coroot");
                }
            continue;
        }
        if (c.kind == ColorKind::PairMinus) continue;
        IntVector have = aug.rho_prime[d];
        if (c.kind == ColorKind::Half)
            for (auto& x : have) x *= 2;
        if (have != target) bad("coroot", c.id + " does not match the coroot of the roots moving it");
    }
    return out;
}

bool in_valuation_cone(const AugmentedData& aug, const RatVector& u) {
    for (const auto& g : aug.sigma_in_M)
        if (dot(u, to_rat(g)) > 0) return false;
    return true;
}

std::vector<std::size_t> supported_vertices(const AugmentedData& aug, const VPolytope& Q, const VPolytope& Qstar) {
    std::vector<std::size_t> out;
    const std::size_t s = aug.sigma_in_M.size();
    for (std::size_t i = 0; i < Qstar.vertices.size(); ++i) {
        const auto& v = Qstar.vertices[i];
        if (s == 0) {
            out.push_back(i);
            continue;
        }
        // -<u, v + sum lambda gamma> <= 1 for every vertex u of Q.
        LpProblem lp{RatVector(s, Rational(1)), {}, {}};
        for (const auto& u : Q.vertices) {
            RatVector row(s);
            for (std::size_t k = 0; k < s; ++k) row[k] = -dot(u, to_rat(aug.sigma_in_M[k]));
            lp.A.push_back(row);
            lp.b.push_back(1 + dot(u, v));
        }
        auto res = solve(lp);
        if (res.status == LpStatus::Optimal && res.value == 0) out.push_back(i);
    }
    return out;
}

FanoPolytope make_fano(const AugmentedData& aug, const std::optional<std::vector<RatVector>>& Q) {
    FanoPolytope fp;
    fp.aug = aug;
    std::vector<RatVector> pts;
    if (Q) {
        pts = *Q;
    } else {
        for (std::size_t d = 0; d < aug.rho_prime.size(); ++d) pts.push_back(aug.u(d));
    }
    fp.Q = make_vpolytope(aug.lattice_rank, pts);
    fp.Qstar_h = dualize(fp.Q);
    fp.Qstar = vertex_enumerate(fp.Qstar_h);
    fp.supported = supported_vertices(aug, fp.Q, fp.Qstar);
    return fp;
}

std::vector<Violation> validate_reflexive(const AugmentedData& aug, const VPolytope& Qin) {
    std::vector<Violation> out;
    auto bad = [&](const std::string& a, const std::string& w) { out.push_back({a, w}); };
    const auto Q = make_vpolytope(aug.lattice_rank, Qin.vertices);
    const auto ids = aug.skeleton.delta_ids();
    const std::size_t ncol = aug.skeleton.colors.size();

    for (std::size_t d = 0; d < ncol; ++d)
        if (!in_convex_hull(Q.vertices, aug.u(d))) bad("(1)", "u(" + ids[d] + ") = " + to_string(aug.u(d)) + " not in Q");

    const bool interior = origin_in_interior(Q);
    if (!interior) bad("(2)", "0 is not an interior point of Q");

    for (const auto& v : Q.vertices) {
        bool ok = is_integral(v) && in_valuation_cone(aug, v);
        for (std::size_t d = 0; d < ncol && !ok; ++d) ok = aug.u(d) == v;
        if (!ok) bad("(3)", "vertex " + to_string(v) + " is neither a color point nor a lattice point of V");
    }

    if (!interior) return out;
    const auto Qstar = vertex_enumerate(dualize(Q));
    for (auto i : supported_vertices(aug, Q, Qstar))
        if (!is_integral(Qstar.vertices[i]))
            bad("(4)", "supported vertex " + to_string(Qstar.vertices[i]) + " is not in M");
    return out;
}

CurveDegreeReport curve_degrees(const FanoPolytope& fp) {
    if (fp.supported.empty()) throw Error(ErrorCode::NoSupportedVertices, "Q* has no supported vertex");
    const auto& aug = fp.aug;
    const std::size_t nd = aug.rho_prime.size(), ncol = aug.skeleton.colors.size();
    CurveDegreeReport rep;
    std::optional<Rational> iota, eps;
    auto upd = [](std::optional<Rational>& t, const Rational& x) {
        if (!t || x < *t) t = x;
    };
    for (std::size_t d = 0; d < nd; ++d)
        for (auto vi : fp.supported) {
            const auto& v = fp.Qstar.vertices[vi];
            const Rational uv = dot(aug.u(d), v);
            if (uv == -1) continue;
            const Rational deg = Rational(static_cast<long>(aug.m[d])) * (1 + uv);
            upd(eps, deg);
            if (d < ncol) {
                rep.dv_curves.push_back({d, vi, deg});
                upd(iota, deg);
                if (!is_integer(deg) || deg <= 0) rep.degrees_positive_integers = false;
            }
        }
    const std::set<std::size_t> sup(fp.supported.begin(), fp.supported.end());
    for (auto [a, b] : edges(fp.Qstar_h, fp.Qstar)) {
        if (!sup.count(a) || !sup.count(b)) continue;
        const auto diff = sub(fp.Qstar.vertices[a], fp.Qstar.vertices[b]);
        if (!is_integral(diff)) {
            rep.degrees_positive_integers = false;
            continue;
        }
        IntVector d(diff.size());
        for (std::size_t i = 0; i < d.size(); ++i) d[i] = to_int64(diff[i]);
        const auto g = gcd_all(d);
        EdgeCurve e{a, b, d, g};
        for (auto& x : e.chi) x /= g;
        rep.edge_curves.push_back(e);
        upd(iota, Rational(static_cast<long>(g)));
    }
    if (!iota) throw Error(ErrorCode::NoSupportedVertices, "no curve families through supported vertices");
    rep.iota = *iota;
    rep.epsilon = eps ? *eps : *iota;
    rep.picard = static_cast<std::int64_t>(nd) - static_cast<std::int64_t>(aug.lattice_rank);
    rep.dim = aug.lattice_rank + aug.skeleton.root_system.parabolic_count(aug.skeleton.sp);
    rep.mukai_lhs = Rational(static_cast<long>(rep.picard)) * (rep.iota - 1);
    return rep;
}

MukaiReport mukai_check(const FanoPolytope& fp) {
    const auto& aug = fp.aug;
    const std::size_t nd = aug.rho_prime.size(), s = aug.sigma_in_M.size();
    for (auto vi : fp.supported) {
        const auto face = dual_face(fp.Q, fp.Qstar.vertices[vi]);
        if (face.size() != aug.lattice_rank)
            throw Error(ErrorCode::NotQFactorial, "dual face of " + to_string(fp.Qstar.vertices[vi]) + " has " +
                                                      std::to_string(face.size()) + " vertices");
        for (auto qi : face) {
            std::size_t uses = 0;
            for (std::size_t d = 0; d < nd; ++d) uses += aug.u(d) == fp.Q.vertices[qi] ? 1 : 0;
            if (uses > 1)
                throw Error(ErrorCode::NotQFactorial, "vertex " + to_string(fp.Q.vertices[qi]) + " serves two divisors");
        }
    }
    MukaiReport rep;
    rep.curves = curve_degrees(fp);
    const auto& c = rep.curves;
    rep.holds = c.mukai_lhs <= Rational(static_cast<long>(c.dim));
    rep.iota_le_epsilon = c.iota <= c.epsilon;

    Rational msum = 0;
    for (auto x : aug.m) msum += Rational(static_cast<long>(x));
    auto total = [&](const RatVector& theta) {
        Rational t = 0;
        for (std::size_t d = 0; d < nd; ++d) t += dot(to_rat(aug.rho_prime[d]), theta);
        return t;
    };
    const Rational need = c.epsilon * Rational(static_cast<long>(c.picard));
    rep.rfs_holds = true;
    for (std::size_t i = 0; i < fp.supported.size(); ++i)
        for (std::size_t j = i; j < fp.supported.size(); ++j) {
            const auto theta = scale(Rational(1, 2), add(fp.Qstar.vertices[fp.supported[i]], fp.Qstar.vertices[fp.supported[j]]));
            if (msum + total(theta) < need) rep.rfs_holds = false;
        }

    std::vector<RatVector> gens;
    for (const auto& g : aug.sigma_in_M) gens.push_back(to_rat(g));
    for (auto vi : fp.supported) {
        const auto& v = fp.Qstar.vertices[vi];
        if (s > 0 && cone_contains(gens, v)) rep.sigma_vertices.push_back({vi, msum - Rational(static_cast<long>(nd)) + total(v)});
        else if (s == 0 && std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; }))
            rep.sigma_vertices.push_back({vi, msum - Rational(static_cast<long>(nd))});
    }

    // sup over theta = sum lambda gamma in Q*: objective sum_D <rho'(D), theta>.
    LpProblem lp{RatVector(s, Rational(0)), {}, {}};
    for (std::size_t k = 0; k < s; ++k) lp.c[k] = total(gens[k]);
    for (const auto& u : fp.Q.vertices) {
        RatVector row(s);
        for (std::size_t k = 0; k < s; ++k) row[k] = -dot(u, gens[k]);
        lp.A.push_back(row);
        lp.b.push_back(Rational(1));
    }
    const Rational offset = msum - Rational(static_cast<long>(nd));
    if (s == 0) {
        rep.p_polytope = offset;
    } else {
        auto res = solve(lp);
        rep.p_finite = res.status == LpStatus::Optimal;
        if (rep.p_finite) rep.p_polytope = offset + res.value;
    }
    rep.p_skeleton = compute_p(aug.skeleton);
    rep.p_matches = rep.p_finite == rep.p_skeleton.finite && (!rep.p_finite || rep.p_polytope == rep.p_skeleton.p_value);
    return rep;
}

bool color_vertex_check(const FanoPolytope& fp) {
    for (std::size_t d = 0; d < fp.aug.skeleton.colors.size(); ++d) {
        const auto u = fp.aug.u(d);
        if (in_valuation_cone(fp.aug, u)) continue;
        if (std::find(fp.Q.vertices.begin(), fp.Q.vertices.end(), u) == fp.Q.vertices.end()) return false;
    }
    return true;
}

}  // namespace sph
