#include "sph/skeleton.hpp"

#include "sph/geometry.hpp"

#include <algorithm>
#include <map>

namespace sph {

const char* to_string(ColorKind k) {
    switch (k) {
        case ColorKind::PairPlus: return "pair_plus";
        case ColorKind::PairMinus: return "pair_minus";
        case ColorKind::Half: return "half";
        case ColorKind::Around: return "around";
    }
    return "around";
}

std::optional<ColorKind> parse_color_kind(const std::string& s) {
    for (auto k : {ColorKind::PairPlus, ColorKind::PairMinus, ColorKind::Half, ColorKind::Around})
        if (s == to_string(k)) return k;
    return std::nullopt;
}

std::vector<std::string> SphericalSkeleton::delta_ids() const {
    std::vector<std::string> ids;
    for (const auto& c : colors) ids.push_back(c.id);
    for (const auto& g : gamma) ids.push_back(g.id);
    return ids;
}

std::vector<IntVector> SphericalSkeleton::rows() const {
    std::vector<IntVector> r;
    for (const auto& c : colors) r.push_back(c.pairings);
    for (const auto& g : gamma) r.push_back(g.pairings);
    return r;
}

std::vector<std::int64_t> SphericalSkeleton::coefficients() const {
    std::vector<std::int64_t> m;
    for (const auto& c : colors) m.push_back(c.m);
    for (std::size_t i = 0; i < gamma.size(); ++i) m.push_back(1);
    return m;
}

IntVector cartan_row(const RootSystem& rs, const std::vector<SphericalRoot>& sigma, std::size_t alpha) {
    IntVector row;
    for (const auto& g : sigma) row.push_back(rs.pair(alpha, g.coeffs));
    return row;
}

std::string standard_color_id(const IndexSet& moved_by, ColorKind kind) {
    std::string id = "D";
    bool first = true;
    for (auto a : moved_by) {
        id += (first ? "" : "_") + std::to_string(a + 1);
        first = false;
    }
    if (kind == ColorKind::PairPlus) id += "+";
    if (kind == ColorKind::PairMinus) id += "-";
    return id;
}

namespace {

std::optional<std::size_t> find_multiple(const std::vector<SphericalRoot>& sigma, std::size_t alpha,
                                         std::int64_t factor) {
    for (std::size_t k = 0; k < sigma.size(); ++k) {
        const auto& c = sigma[k].coeffs;
        if (alpha >= c.size() || c[alpha] != factor) continue;
        bool only = true;
        for (std::size_t j = 0; j < c.size() && only; ++j) only = j == alpha || c[j] == 0;
        if (only) return k;
    }
    return std::nullopt;
}

std::optional<std::size_t> orthogonal_partner(const RootSystem& rs, const std::vector<SphericalRoot>& sigma,
                                              std::size_t alpha) {
    for (const auto& g : sigma) {
        auto supp = g.support();
        if (supp.size() != 2 || !supp.count(alpha)) continue;
        std::size_t beta = *supp.begin() == alpha ? *supp.rbegin() : *supp.begin();
        if (rs.cartan()[alpha][beta] == 0 && g.coeffs[alpha] == 1 && g.coeffs[beta] == 1) return beta;
    }
    return std::nullopt;
}

IntVector restrict_row(const IntVector& row, const std::vector<std::size_t>& keep) {
    IntVector out;
    for (auto k : keep) out.push_back(row[k]);
    return out;
}

bool is_standard_id(const Color& c) { return c.id == standard_color_id(c.moved_by, c.kind); }

std::string fresh_id(std::string id, const std::set<std::string>& taken) {
    while (taken.count(id)) id += "'";
    return id;
}

}  // namespace

std::vector<Color> reconstruct_colors(const RootSystem& rs, const std::vector<SphericalRoot>& sigma,
                                      const IndexSet& sp, const std::vector<Arrow>& arrows) {
    for (const auto& a : arrows)
        if (!find_multiple(sigma, a.alpha, 1) || a.target >= sigma.size())
            throw Error(ErrorCode::InvalidSkeleton, "arrow must start at a simple root in sigma");
    std::vector<Color> colors;
    IndexSet handled;
    for (std::size_t a = 0; a < rs.rank(); ++a) {
        if (sp.count(a) || handled.count(a)) continue;
        const IntVector total = cartan_row(rs, sigma, a);
        if (auto k = find_multiple(sigma, a, 1)) {
            IntVector plus(sigma.size(), 0);
            plus[*k] = 1;
            for (const auto& ar : arrows)
                if (ar.alpha == a) plus[ar.target] = -1;
            IntVector minus(sigma.size());
            for (std::size_t j = 0; j < sigma.size(); ++j) minus[j] = total[j] - plus[j];
            colors.push_back({standard_color_id({a}, ColorKind::PairPlus), {a}, ColorKind::PairPlus, plus, 1});
            colors.push_back({standard_color_id({a}, ColorKind::PairMinus), {a}, ColorKind::PairMinus, minus, 1});
        } else if (find_multiple(sigma, a, 2)) {
            IntVector half(sigma.size());
            for (std::size_t j = 0; j < sigma.size(); ++j) half[j] = total[j] / 2;
            colors.push_back({standard_color_id({a}, ColorKind::Half), {a}, ColorKind::Half, half, 1});
        } else {
            IndexSet moved{a};
            if (auto b = orthogonal_partner(rs, sigma, a)) {
                moved.insert(*b);
                handled.insert(*b);
            }
            colors.push_back({standard_color_id(moved, ColorKind::Around), moved, ColorKind::Around, total,
                              2 - rs.two_rho_pair(a, sp)});
        }
    }
    return colors;
}

SphericalSkeleton make_skeleton(const RootSystem& rs, std::vector<SphericalRoot> sigma, IndexSet sp,
                                const std::vector<Arrow>& arrows, std::vector<GammaDivisor> gamma) {
    SphericalSkeleton sk;
    sk.root_system = rs;
    sk.colors = reconstruct_colors(rs, sigma, sp, arrows);
    sk.sigma = std::move(sigma);
    sk.sp = std::move(sp);
    sk.gamma = std::move(gamma);
    return sk;
}

std::vector<Violation> validate(const SphericalSkeleton& sk) {
    std::vector<Violation> out;
    const auto& rs = sk.root_system;
    const std::size_t n = rs.rank(), s = sk.sigma.size();
    auto bad = [&](const std::string& axiom, const std::string& w) { out.push_back({axiom, w}); };

    bool shapes_ok = true;
    for (std::size_t k = 0; k < s; ++k) {
        if (sk.sigma[k].coeffs.size() != n) {
            bad("shape", "gamma" + std::to_string(k + 1) + " has wrong length");
            shapes_ok = false;
        }
    }
    for (auto a : sk.sp)
        if (a >= n) {
            bad("shape", "S^p index " + std::to_string(a + 1) + " out of range");
            shapes_ok = false;
        }
    for (const auto& c : sk.colors) {
        if (c.pairings.size() != s) {
            bad("shape", c.id + " row length differs from |Sigma|");
            shapes_ok = false;
        }
        if (c.moved_by.empty() || *c.moved_by.rbegin() >= n) {
            bad("shape", c.id + " has an invalid moved_by set");
            shapes_ok = false;
        }
    }
    for (const auto& g : sk.gamma)
        if (g.pairings.size() != s) {
            bad("shape", g.id + " row length differs from |Sigma|");
            shapes_ok = false;
        }
    if (!shapes_ok) return out;

    std::set<std::string> ids;
    for (const auto& id : sk.delta_ids())
        if (!ids.insert(id).second) bad("ids", "duplicate divisor id " + id);

    for (std::size_t k = 0; k < s; ++k) {
        const auto& g = sk.sigma[k];
        const std::string w = "gamma" + std::to_string(k + 1);
        try {
            embed(rs, g.kind, g.embedding);
            if (expand(rs, g) != g.coeffs) bad("pattern", w + " coefficients do not match its pattern");
            if (!is_compatible(rs, g, sk.sp)) bad("(S)", w + " is not compatible with S^p");
        } catch (const Error& e) {
            bad("pattern", w + ": " + e.what());
        }
    }
    if (s > 0) {
        RatMatrix m;
        for (const auto& g : sk.sigma) m.push_back(to_rat(g.coeffs));
        if (rank(m) != s) bad("independence", "Sigma is linearly dependent");
    }

    IndexSet sigma_s;
    for (std::size_t a = 0; a < n; ++a)
        if (find_multiple(sk.sigma, a, 1)) sigma_s.insert(a);

    for (std::size_t a = 0; a < n; ++a) {
        std::vector<const Color*> movers;
        for (const auto& c : sk.colors)
            if (c.moved_by.count(a)) movers.push_back(&c);
        const std::string w = "alpha" + std::to_string(a + 1);
        if (sk.sp.count(a)) {
            if (!movers.empty()) bad("colors", w + " lies in S^p but moves " + movers.front()->id);
            continue;
        }
        if (movers.empty()) bad("colors", w + " is not in S^p and moves no color");
        const IntVector total = cartan_row(rs, sk.sigma, a);
        if (sigma_s.count(a)) {
            if (movers.size() != 2) {
                bad("(A2)", w + " in Sigma moves " + std::to_string(movers.size()) + " colors, expected 2");
            } else {
                for (std::size_t k = 0; k < s; ++k)
                    if (movers[0]->pairings[k] + movers[1]->pairings[k] != total[k]) {
                        bad("(A2)", movers[0]->id + " + " + movers[1]->id + " differs from alpha^vee at gamma" +
                                        std::to_string(k + 1));
                        break;
                    }
            }
        }
        if (auto k2 = find_multiple(sk.sigma, a, 2)) {
            for (std::size_t k = 0; k < s; ++k) {
                if (total[k] % 2 != 0) bad("(Sigma1)", w + " pairs oddly with gamma" + std::to_string(k + 1));
                if (k != *k2 && total[k] > 0) bad("(Sigma1)", w + " pairs positively with gamma" + std::to_string(k + 1));
            }
        }
        if (auto b = orthogonal_partner(rs, sk.sigma, a); b && a < *b) {
            if (cartan_row(rs, sk.sigma, *b) != total)
                bad("(Sigma2)", w + " and alpha" + std::to_string(*b + 1) + " restrict differently to Lambda");
        }
    }

    for (const auto& c : sk.colors) {
        const std::size_t a = *c.moved_by.begin();
        if (c.is_pair()) {
            for (auto b : c.moved_by)
                if (!sigma_s.count(b)) bad("(A3)", c.id + " is a pair color but alpha" + std::to_string(b + 1) + " is not in Sigma");
            for (std::size_t k = 0; k < s; ++k) {
                if (c.pairings[k] > 1) bad("(A1)", c.id + " pairs " + std::to_string(c.pairings[k]) + " with gamma" + std::to_string(k + 1));
                if (c.pairings[k] == 1) {
                    bool allowed = false;
                    for (auto b : c.moved_by)
                        if (find_multiple(sk.sigma, b, 1) == k) allowed = true;
                    if (!allowed) bad("(A1)", c.id + " pairs 1 with gamma" + std::to_string(k + 1) + " which is not its root");
                }
            }
            if (c.m != 1) bad("coefficient", c.id + " must have m = 1");
            continue;
        }
        for (auto b : c.moved_by)
            if (sigma_s.count(b)) bad("(A3)", c.id + " is moved by alpha" + std::to_string(b + 1) + " in Sigma but is not a pair color");
        if (c.kind == ColorKind::Half) {
            if (c.moved_by.size() != 1 || !find_multiple(sk.sigma, a, 2))
                bad("colors", c.id + " is half but 2 alpha is not in Sigma");
            auto total = cartan_row(rs, sk.sigma, a);
            for (std::size_t k = 0; k < s; ++k)
                if (2 * c.pairings[k] != total[k]) {
                    bad("colors", c.id + " is not half of alpha^vee at gamma" + std::to_string(k + 1));
                    break;
                }
        } else {
            for (auto b : c.moved_by)
                if (cartan_row(rs, sk.sigma, b) != c.pairings) bad("colors", c.id + " differs from alpha" + std::to_string(b + 1) + "^vee");
            if (find_multiple(sk.sigma, a, 2)) bad("colors", c.id + " is around but 2 alpha is in Sigma");
        }
        auto m = anticanonical_coefficient(rs, sk.sp, a, sk.sigma);
        if (c.m != m) bad("coefficient", c.id + " has m = " + std::to_string(c.m) + ", expected " + std::to_string(m));
    }

    for (const auto& g : sk.gamma)
        for (std::size_t k = 0; k < s; ++k)
            if (g.pairings[k] > 0) bad("Gamma", g.id + " pairs positively with gamma" + std::to_string(k + 1));
    return out;
}

void require_valid(const SphericalSkeleton& sk) {
    auto v = validate(sk);
    if (v.empty()) return;
    std::string msg;
    for (const auto& x : v) msg += (msg.empty() ? "" : "; ") + x.axiom + " " + x.witness;
    throw Error(ErrorCode::InvalidSkeleton, msg);
}

bool is_complete(const SphericalSkeleton& sk) {
    const std::size_t s = sk.sigma.size();
    std::vector<RatVector> gens;
    for (const auto& r : sk.rows()) gens.push_back(to_rat(r));
    for (std::size_t i = 0; i < s; ++i)
        for (int sign : {1, -1}) {
            RatVector t = zeros(s);
            t[i] = sign;
            if (!cone_contains(gens, t)) return false;
        }
    return true;
}

SphericalSkeleton product(const SphericalSkeleton& a, const SphericalSkeleton& b) {
    SphericalSkeleton p;
    p.root_system = product(a.root_system, b.root_system);
    const std::size_t ra = a.root_system.rank(), rb = b.root_system.rank();
    const std::size_t sa = a.sigma.size(), sb = b.sigma.size();
    for (auto g : a.sigma) {
        g.coeffs.resize(ra + rb, 0);
        p.sigma.push_back(g);
    }
    for (auto g : b.sigma) {
        for (auto& e : g.embedding) e += ra;
        Root c(ra, 0);
        c.insert(c.end(), g.coeffs.begin(), g.coeffs.end());
        g.coeffs = c;
        p.sigma.push_back(g);
    }
    p.sp = a.sp;
    for (auto x : b.sp) p.sp.insert(x + ra);
    std::set<std::string> taken;
    for (auto c : a.colors) {
        c.pairings.resize(sa + sb, 0);
        taken.insert(c.id);
        p.colors.push_back(c);
    }
    for (const auto& g : a.gamma) {
        auto row = g.pairings;
        row.resize(sa + sb, 0);
        taken.insert(g.id);
        p.gamma.push_back({g.id, row});
    }
    for (auto c : b.colors) {
        const bool standard = is_standard_id(c);
        IndexSet moved;
        for (auto x : c.moved_by) moved.insert(x + ra);
        c.moved_by = moved;
        if (standard) c.id = standard_color_id(c.moved_by, c.kind);
        c.id = fresh_id(c.id, taken);
        taken.insert(c.id);
        IntVector row(sa, 0);
        row.insert(row.end(), c.pairings.begin(), c.pairings.end());
        c.pairings = row;
        p.colors.push_back(c);
    }
    for (const auto& g : b.gamma) {
        IntVector row(sa, 0);
        row.insert(row.end(), g.pairings.begin(), g.pairings.end());
        auto id = fresh_id(g.id, taken);
        taken.insert(id);
        p.gamma.push_back({id, row});
    }
    return p;
}

SphericalSkeleton normalize(const SphericalSkeleton& sk) {
    SphericalSkeleton out = sk;
    out.gamma.clear();
    for (const auto& g : sk.gamma)
        if (std::any_of(g.pairings.begin(), g.pairings.end(), [](std::int64_t x) { return x != 0; }))
            out.gamma.push_back(g);
    return out;
}

IntVector gamma_weights(const SphericalSkeleton& sk) {
    IntVector n(sk.sigma.size(), 0);
    for (const auto& g : sk.gamma)
        for (std::size_t k = 0; k < n.size(); ++k) n[k] -= g.pairings[k];
    return n;
}

namespace {

SphericalSkeleton indicator_gamma(const SphericalSkeleton& sk, const IntVector& copies) {
    SphericalSkeleton out = sk;
    out.gamma.clear();
    std::size_t counter = 0;
    for (std::size_t k = 0; k < copies.size(); ++k)
        for (std::int64_t c = 0; c < copies[k]; ++c) {
            IntVector row(sk.sigma.size(), 0);
            row[k] = -1;
            out.gamma.push_back({"G" + std::to_string(++counter), row});
        }
    return out;
}

}  // namespace

SphericalSkeleton elementary(const SphericalSkeleton& sk) { return indicator_gamma(sk, gamma_weights(sk)); }

SphericalSkeleton reduced_elementary(const SphericalSkeleton& sk) {
    auto n = gamma_weights(sk);
    for (auto& x : n) x = x > 0 ? 1 : 0;
    return indicator_gamma(sk, n);
}

SphericalSkeleton with_markings(const SphericalSkeleton& sk, const std::vector<std::size_t>& marked) {
    IntVector n(sk.sigma.size(), 0);
    for (auto k : marked) {
        if (k >= n.size()) throw Error(ErrorCode::ParameterOutOfRange, "marking index out of range");
        n[k] = 1;
    }
    return indicator_gamma(sk, n);
}

SphericalSkeleton localize(const SphericalSkeleton& sk, const std::set<std::string>& ids) {
    const auto all_ids = sk.delta_ids();
    for (const auto& id : ids)
        if (std::find(all_ids.begin(), all_ids.end(), id) == all_ids.end())
            throw Error(ErrorCode::SubsetNotInDelta, "unknown divisor id '" + id + "'");
    const auto& rs = sk.root_system;
    IndexSet s_i;
    for (std::size_t a = 0; a < rs.rank(); ++a) {
        bool inside = true;
        for (const auto& c : sk.colors)
            if (c.moved_by.count(a) && !ids.count(c.id)) inside = false;
        if (inside) s_i.insert(a);
    }
    auto sub = subsystem(rs, s_i);
    std::map<std::size_t, std::size_t> to_new;
    for (std::size_t i = 0; i < sub.to_parent.size(); ++i) to_new[sub.to_parent[i]] = i;

    SphericalSkeleton out;
    out.root_system = sub.system;
    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < sk.sigma.size(); ++k) {
        auto supp = sk.sigma[k].support();
        if (!std::includes(s_i.begin(), s_i.end(), supp.begin(), supp.end())) continue;
        keep.push_back(k);
        SphericalRoot g = sk.sigma[k];
        for (auto& e : g.embedding) e = to_new.at(e);
        g.coeffs.assign(sub.system.rank(), 0);
        for (auto p : supp) g.coeffs[to_new.at(p)] = sk.sigma[k].coeffs[p];
        out.sigma.push_back(g);
    }
    for (auto a : sk.sp) out.sp.insert(to_new.at(a));
    for (const auto& c : sk.colors) {
        IndexSet moved;
        for (auto a : c.moved_by)
            if (s_i.count(a)) moved.insert(to_new.at(a));
        if (moved.empty()) {
            if (ids.count(c.id)) out.gamma.push_back({c.id, restrict_row(c.pairings, keep)});
            continue;
        }
        Color d = c;
        d.moved_by = moved;
        d.pairings = restrict_row(c.pairings, keep);
        if (!d.is_pair()) d.m = anticanonical_coefficient(out.root_system, out.sp, *moved.begin(), out.sigma);
        out.colors.push_back(d);
    }
    for (const auto& g : sk.gamma)
        if (ids.count(g.id)) out.gamma.push_back({g.id, restrict_row(g.pairings, keep)});
    return out;
}

namespace {

using ColorKey = std::tuple<std::vector<std::size_t>, IntVector, std::int64_t, bool>;

}  // namespace

bool isomorphic(const SphericalSkeleton& a, const SphericalSkeleton& b) {
    const std::size_t n = a.root_system.rank(), s = a.sigma.size();
    if (b.root_system.rank() != n || b.sigma.size() != s || a.colors.size() != b.colors.size() ||
        a.gamma.size() != b.gamma.size() || a.sp.size() != b.sp.size())
        return false;
    auto fa = a.root_system.factor_names(), fb = b.root_system.factor_names();
    std::sort(fa.begin(), fa.end());
    std::sort(fb.begin(), fb.end());
    if (fa != fb) return false;

    std::vector<ColorKey> keys_b;
    for (const auto& c : b.colors)
        keys_b.emplace_back(std::vector<std::size_t>(c.moved_by.begin(), c.moved_by.end()), c.pairings, c.m, c.is_pair());
    std::sort(keys_b.begin(), keys_b.end());
    std::vector<IntVector> gamma_b;
    for (const auto& g : b.gamma) gamma_b.push_back(g.pairings);
    std::sort(gamma_b.begin(), gamma_b.end());

    std::vector<std::size_t> cand(n);
    for (std::size_t i = 0; i < n; ++i) cand[i] = i;
    for (const auto& phi : cartan_embeddings(a.root_system.cartan(), b.root_system.cartan(), cand)) {
        std::vector<std::size_t> pi(s);
        bool ok = true;
        for (std::size_t k = 0; k < s && ok; ++k) {
            Root img(n, 0);
            for (std::size_t i = 0; i < n; ++i) img[phi[i]] = a.sigma[k].coeffs[i];
            ok = false;
            for (std::size_t j = 0; j < s; ++j)
                if (b.sigma[j].coeffs == img && b.sigma[j].kind == a.sigma[k].kind) {
                    pi[k] = j;
                    ok = true;
                    break;
                }
        }
        if (!ok) continue;
        IndexSet sp;
        for (auto x : a.sp) sp.insert(phi[x]);
        if (sp != b.sp) continue;
        auto permute = [&](const IntVector& row) {
            IntVector r(s);
            for (std::size_t k = 0; k < s; ++k) r[pi[k]] = row[k];
            return r;
        };
        std::vector<ColorKey> keys_a;
        for (const auto& c : a.colors) {
            std::vector<std::size_t> moved;
            for (auto x : c.moved_by) moved.push_back(phi[x]);
            std::sort(moved.begin(), moved.end());
            keys_a.emplace_back(moved, permute(c.pairings), c.m, c.is_pair());
        }
        std::sort(keys_a.begin(), keys_a.end());
        if (keys_a != keys_b) continue;
        std::vector<IntVector> gamma_a;
        for (const auto& g : a.gamma) gamma_a.push_back(permute(g.pairings));
        std::sort(gamma_a.begin(), gamma_a.end());
        if (gamma_a == gamma_b) return true;
    }
    return false;
}

bool equivalent(const SphericalSkeleton& a, const SphericalSkeleton& b) { return isomorphic(normalize(a), normalize(b)); }

SphericalSkeleton apply_automorphism(const SphericalSkeleton& sk, const std::vector<std::size_t>& perm) {
    const auto& c = sk.root_system.cartan();
    const std::size_t n = c.size();
    if (perm.size() != n) throw Error(ErrorCode::BadEmbedding, "permutation has wrong length");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (c[perm[i]][perm[j]] != c[i][j]) throw Error(ErrorCode::BadEmbedding, "not a diagram automorphism");
    SphericalSkeleton out = sk;
    for (auto& g : out.sigma) {
        for (auto& e : g.embedding) e = perm[e];
        Root r(n, 0);
        for (std::size_t i = 0; i < n; ++i) r[perm[i]] = g.coeffs[i];
        g.coeffs = r;
    }
    out.sp.clear();
    for (auto x : sk.sp) out.sp.insert(perm[x]);
    for (auto& col : out.colors) {
        const bool standard = is_standard_id(col);
        IndexSet moved;
        for (auto x : col.moved_by) moved.insert(perm[x]);
        col.moved_by = moved;
        if (standard) col.id = standard_color_id(moved, col.kind);
    }
    return out;
}

}  // namespace sph
