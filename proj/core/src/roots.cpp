#include "sph/roots.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace sph {

SimpleType make_simple_type(char letter, int rank) {
    bool ok = false;
    switch (letter) {
        case 'A': ok = rank >= 1; break;
        case 'B': ok = rank >= 2; break;
        case 'C': ok = rank >= 2; break;
        case 'D': ok = rank >= 3; break;
        case 'E': ok = rank >= 6 && rank <= 8; break;
        case 'F': ok = rank == 4; break;
        case 'G': ok = rank == 2; break;
        default: break;
    }
    if (!ok)
        throw Error(ErrorCode::ParameterOutOfRange,
                    "no simple type " + std::string(1, letter) + std::to_string(rank));
    return SimpleType{letter, rank};
}

SimpleType parse_simple_type(const std::string& text) {
    if (text.size() < 2) throw Error(ErrorCode::ParseError, "bad simple type '" + text + "'");
    for (std::size_t i = 1; i < text.size(); ++i)
        if (text[i] < '0' || text[i] > '9') throw Error(ErrorCode::ParseError, "bad simple type '" + text + "'");
    if (text.size() > 4) throw Error(ErrorCode::ParameterOutOfRange, "rank too large in '" + text + "'");
    return make_simple_type(text[0], std::stoi(text.substr(1)));
}

IntMatrix simple_cartan(const SimpleType& t) {
    const std::size_t n = static_cast<std::size_t>(t.rank);
    IntMatrix c(n, IntVector(n, 0));
    for (std::size_t i = 0; i < n; ++i) c[i][i] = 2;
    auto link = [&](std::size_t i, std::size_t j) { c[i][j] = c[j][i] = -1; };
    switch (t.letter) {
        case 'A':
            for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
            break;
        case 'B':
            for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1);
            c[n - 2][n - 1] = -1;
            c[n - 1][n - 2] = -2;  // alpha_n short
            break;
        case 'C':
            for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1);
            c[n - 2][n - 1] = -2;  // alpha_n long
            c[n - 1][n - 2] = -1;
            break;
        case 'D':
            for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1);
            link(n - 3, n - 1);
            break;
        case 'E':
            link(0, 2);
            link(2, 3);
            link(3, 4);
            link(1, 3);
            for (std::size_t i = 4; i + 1 < n; ++i) link(i, i + 1);
            break;
        case 'F':
            link(0, 1);
            link(2, 3);
            c[1][2] = -1;
            c[2][1] = -2;  // alpha_3, alpha_4 short
            break;
        case 'G':
            c[0][1] = -3;  // alpha_1 short
            c[1][0] = -1;
            break;
        default: break;
    }
    return c;
}

RootSystem::RootSystem(std::vector<SimpleType> factors) : factors_(std::move(factors)) {
    std::size_t n = 0;
    for (const auto& f : factors_) n += static_cast<std::size_t>(f.rank);
    cartan_.assign(n, IntVector(n, 0));
    std::size_t off = 0;
    for (std::size_t k = 0; k < factors_.size(); ++k) {
        auto c = simple_cartan(factors_[k]);
        offsets_.push_back(off);
        for (std::size_t i = 0; i < c.size(); ++i) {
            factor_index_.push_back(k);
            for (std::size_t j = 0; j < c.size(); ++j) cartan_[off + i][off + j] = c[i][j];
        }
        off += c.size();
    }
    positive_ = positive_roots(all());
}

RootSystem RootSystem::parse(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
        if (ch == 'x' || ch == 'X' || ch == '*') {
            parts.push_back(cur);
            cur.clear();
        } else if (ch != ' ') {
            cur += ch;
        }
    }
    if (!cur.empty() || !parts.empty()) parts.push_back(cur);
    return parse(parts);
}

RootSystem RootSystem::parse(const std::vector<std::string>& factors) {
    std::vector<SimpleType> out;
    for (const auto& f : factors) {
        if (f.find_first_of("xX*") != std::string::npos) {
            auto sub = parse(f);
            out.insert(out.end(), sub.factors().begin(), sub.factors().end());
        } else {
            out.push_back(parse_simple_type(f));
        }
    }
    return RootSystem(out);
}

std::vector<std::string> RootSystem::factor_names() const {
    std::vector<std::string> out;
    for (const auto& f : factors_) out.push_back(f.name());
    return out;
}

std::string RootSystem::name() const {
    std::string s;
    for (const auto& f : factors_) s += (s.empty() ? "" : "x") + f.name();
    return s.empty() ? "0" : s;
}

std::int64_t RootSystem::pair(std::size_t i, const Root& v) const {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < v.size(); ++j) s += cartan_[i][j] * v[j];
    return s;
}

Rational RootSystem::pair(std::size_t i, const RatVector& v) const {
    Rational s = 0;
    for (std::size_t j = 0; j < v.size(); ++j) s += Rational(static_cast<long>(cartan_[i][j])) * v[j];
    return s;
}

IndexSet RootSystem::all() const {
    IndexSet s;
    for (std::size_t i = 0; i < rank(); ++i) s.insert(i);
    return s;
}

std::vector<Root> RootSystem::positive_roots(const IndexSet& subset) const {
    const std::size_t n = rank();
    std::set<Root> roots;
    std::vector<Root> layer;
    for (auto i : subset) {
        Root e(n, 0);
        e[i] = 1;
        roots.insert(e);
        layer.push_back(e);
    }
    // Root strings: r + alpha_i is a root iff p - <alpha_i^vee, r> > 0, p = max{k : r - k alpha_i in R}.
    while (!layer.empty()) {
        std::vector<Root> next;
        for (const auto& r : layer) {
            for (auto i : subset) {
                std::int64_t p = 0;
                Root down = r;
                for (;;) {
                    down[i] -= 1;
                    if (!roots.count(down)) break;
                    ++p;
                }
                if (p - pair(i, r) > 0) {
                    Root up = r;
                    up[i] += 1;
                    if (roots.insert(up).second) next.push_back(up);
                }
            }
        }
        layer = std::move(next);
    }
    return {roots.begin(), roots.end()};
}

RatVector RootSystem::half_sum(const IndexSet& subset) const {
    RatVector h = zeros(rank());
    for (const auto& r : positive_roots(subset))
        for (std::size_t j = 0; j < r.size(); ++j) h[j] += Rational(static_cast<long>(r[j]), 2);
    return h;
}

std::int64_t RootSystem::two_rho_pair(std::size_t i, const IndexSet& subset) const {
    if (subset.empty()) return 0;
    std::int64_t s = 0;
    for (const auto& r : positive_roots(subset)) s += pair(i, r);
    return s;
}

std::size_t RootSystem::parabolic_count(const IndexSet& sp) const {
    return positive_.size() - (sp.empty() ? 0 : positive_roots(sp).size());
}

RootSystem product(const RootSystem& a, const RootSystem& b) {
    auto f = a.factors();
    f.insert(f.end(), b.factors().begin(), b.factors().end());
    return RootSystem(f);
}

std::vector<std::vector<std::size_t>> cartan_embeddings(const IntMatrix& pattern, const IntMatrix& target,
                                                        const std::vector<std::size_t>& candidates) {
    std::vector<std::vector<std::size_t>> out;
    const std::size_t k = pattern.size();
    std::vector<std::size_t> map(k);
    std::vector<bool> used(target.size(), false);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == k) {
            out.push_back(map);
            return;
        }
        for (auto t : candidates) {
            if (used[t] || target[t][t] != pattern[i][i]) continue;
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j)
                ok = target[t][map[j]] == pattern[i][j] && target[map[j]][t] == pattern[j][i];
            if (!ok) continue;
            used[t] = true;
            map[i] = t;
            self(self, i + 1);
            used[t] = false;
        }
    };
    rec(rec, 0);
    return out;
}

bool identify_component(const IntMatrix& cartan, SimpleType& type, std::vector<std::size_t>& order) {
    const int n = static_cast<int>(cartan.size());
    if (n == 0) return false;
    std::vector<std::size_t> cand(cartan.size());
    std::iota(cand.begin(), cand.end(), 0);
    std::vector<SimpleType> tries;
    tries.push_back({'A', n});
    if (n >= 2) tries.push_back({'B', n});
    if (n >= 3) tries.push_back({'C', n});
    if (n >= 4) tries.push_back({'D', n});
    if (n >= 6 && n <= 8) tries.push_back({'E', n});
    if (n == 4) tries.push_back({'F', 4});
    if (n == 2) tries.push_back({'G', 2});
    for (const auto& t : tries) {
        auto emb = cartan_embeddings(simple_cartan(t), cartan, cand);
        if (!emb.empty()) {
            type = t;
            order = emb.front();
            return true;
        }
    }
    return false;
}

SubSystem subsystem(const RootSystem& r, const IndexSet& subset) {
    // connected components in increasing order of their smallest index
    std::vector<std::vector<std::size_t>> comps;
    IndexSet left = subset;
    while (!left.empty()) {
        std::vector<std::size_t> comp{*left.begin()};
        left.erase(left.begin());
        for (std::size_t q = 0; q < comp.size(); ++q) {
            for (auto it = left.begin(); it != left.end();) {
                if (r.cartan()[comp[q]][*it] != 0) {
                    comp.push_back(*it);
                    it = left.erase(it);
                } else {
                    ++it;
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(comp);
    }
    SubSystem out;
    std::vector<SimpleType> types;
    for (const auto& comp : comps) {
        IntMatrix c(comp.size(), IntVector(comp.size()));
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (std::size_t j = 0; j < comp.size(); ++j) c[i][j] = r.cartan()[comp[i]][comp[j]];
        SimpleType t;
        std::vector<std::size_t> order;
        if (!identify_component(c, t, order)) throw Error(ErrorCode::InvalidSkeleton, "non-finite subdiagram");
        // keep the original orientation when the reversed labelling is equally valid
        if (t.letter == 'A' && order.size() > 1 && order.front() > order.back())
            std::reverse(order.begin(), order.end());
        types.push_back(t);
        for (auto o : order) out.to_parent.push_back(comp[o]);
    }
    out.system = RootSystem(types);
    return out;
}

std::vector<std::vector<std::size_t>> diagram_automorphisms(const RootSystem& r) {
    std::vector<std::size_t> cand(r.rank());
    std::iota(cand.begin(), cand.end(), 0);
    return cartan_embeddings(r.cartan(), r.cartan(), cand);
}

}  // namespace sph
