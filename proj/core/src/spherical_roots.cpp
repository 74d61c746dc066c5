#include "sph/spherical_roots.hpp"

#include <algorithm>

namespace sph {

namespace {

struct KindInfo {
    PatternKind kind;
    const char* name;
};

constexpr KindInfo kKindNames[] = {
    {PatternKind::Simple, "simple"},
    {PatternKind::Double, "double"},
    {PatternKind::OrthogonalSum, "orthogonal_sum"},
    {PatternKind::AChain, "a_chain"},
    {PatternKind::D3, "d3"},
    {PatternKind::BChain, "b_chain"},
    {PatternKind::BChainDoubled, "b_chain_doubled"},
    {PatternKind::B3, "b3"},
    {PatternKind::CChain1, "c_chain_1"},
    {PatternKind::CChain2, "c_chain_2"},
    {PatternKind::DChain, "d_chain"},
    {PatternKind::F4, "f4"},
    {PatternKind::G2Sum, "g2_sum"},
    {PatternKind::G2Doubled, "g2_doubled"},
};

std::vector<std::size_t> range(std::size_t lo, std::size_t hi) {
    std::vector<std::size_t> v;
    for (std::size_t i = lo; i < hi; ++i) v.push_back(i);
    return v;
}

}  // namespace

const char* pattern_name(PatternKind k) {
    for (const auto& e : kKindNames)
        if (e.kind == k) return e.name;
    return "unknown";
}

std::optional<PatternKind> parse_pattern(const std::string& name) {
    for (const auto& e : kKindNames)
        if (name == e.name) return e.kind;
    return std::nullopt;
}

std::size_t min_support(PatternKind k) {
    switch (k) {
        case PatternKind::Simple:
        case PatternKind::Double: return 1;
        case PatternKind::D3:
        case PatternKind::B3: return 3;
        case PatternKind::DChain:
        case PatternKind::F4: return 4;
        default: return 2;
    }
}

std::size_t max_support(PatternKind k) {
    switch (k) {
        case PatternKind::Simple:
        case PatternKind::Double: return 1;
        case PatternKind::OrthogonalSum:
        case PatternKind::G2Sum:
        case PatternKind::G2Doubled: return 2;
        case PatternKind::D3:
        case PatternKind::B3: return 3;
        case PatternKind::F4: return 4;
        default: return 0;
    }
}

SphericalRootPattern make_pattern(PatternKind k, std::size_t n) {
    if (n < min_support(k) || (max_support(k) != 0 && n > max_support(k)) || n > 64)
        throw Error(ErrorCode::ParameterOutOfRange,
                    std::string(pattern_name(k)) + " has no support of size " + std::to_string(n));
    const auto ni = static_cast<std::int64_t>(n);
    const int rk = static_cast<int>(n);
    SphericalRootPattern p{k, n, {}, {}, {}, {}, 0};
    switch (k) {
        case PatternKind::Simple:
            p = {k, 1, simple_cartan({'A', 1}), {1}, {}, {{0, 1}}, 1};
            break;
        case PatternKind::Double:
            p = {k, 1, simple_cartan({'A', 1}), {2}, {}, {{0, 2}}, 1};
            break;
        case PatternKind::OrthogonalSum:
            p = {k, 2, {{2, 0}, {0, 2}}, {1, 1}, {}, {{0, 2}, {1, 2}}, 2};
            break;
        case PatternKind::AChain:
            p = {k, n, simple_cartan({'A', rk}), IntVector(n, 1), range(1, n - 1), {{0, 1}, {n - 1, 1}}, ni};
            break;
        case PatternKind::D3:
            p = {k, 3, simple_cartan({'A', 3}), {1, 2, 1}, {0, 2}, {{1, 2}}, 4};
            break;
        case PatternKind::BChain:
            p = {k, n, simple_cartan({'B', rk}), IntVector(n, 1), range(1, n - 1), {{0, 1}}, ni};
            break;
        case PatternKind::BChainDoubled:
            p = {k, n, simple_cartan({'B', rk}), IntVector(n, 2), range(1, n), {{0, 2}}, 2 * ni - 1};
            break;
        case PatternKind::B3:
            p = {k, 3, simple_cartan({'B', 3}), {1, 2, 3}, {0, 1}, {{2, 2}}, 6};
            break;
        case PatternKind::CChain1:
        case PatternKind::CChain2: {
            IntVector c(n, 2);
            c.front() = 1;
            c.back() = 1;
            auto sp = range(2, n);
            if (k == PatternKind::CChain2) sp.insert(sp.begin(), 0);
            p = {k, n, simple_cartan({'C', rk}), c, sp, {{1, 1}},
                 k == PatternKind::CChain1 ? 2 * ni - 2 : 2 * ni - 1};
            break;
        }
        case PatternKind::DChain: {
            IntVector c(n, 2);
            c[n - 2] = 1;
            c[n - 1] = 1;
            p = {k, n, simple_cartan({'D', rk}), c, range(1, n), {{0, 2}}, 2 * ni - 2};
            break;
        }
        case PatternKind::F4:
            p = {k, 4, simple_cartan({'F', 4}), {1, 2, 3, 2}, {0, 1, 2}, {{3, 1}}, 11};
            break;
        case PatternKind::G2Sum:
            p = {k, 2, simple_cartan({'G', 2}), {1, 1}, {}, {{1, 1}}, 2};
            break;
        case PatternKind::G2Doubled:
            p = {k, 2, simple_cartan({'G', 2}), {4, 2}, {1}, {{0, 2}}, 5};
            break;
    }
    return p;
}

IndexSet SphericalRoot::support() const {
    IndexSet s;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) s.insert(i);
    return s;
}

SphericalRoot embed(const RootSystem& rs, PatternKind k, const std::vector<std::size_t>& embedding) {
    auto pat = make_pattern(k, embedding.size());
    for (auto e : embedding)
        if (e >= rs.rank()) throw Error(ErrorCode::BadEmbedding, "embedding index out of range");
    for (std::size_t i = 0; i < embedding.size(); ++i)
        for (std::size_t j = 0; j < embedding.size(); ++j)
            if ((i != j && embedding[i] == embedding[j]) || rs.cartan()[embedding[i]][embedding[j]] != pat.cartan[i][j])
                throw Error(ErrorCode::BadEmbedding,
                            std::string("support does not induce the diagram of ") + pattern_name(k));
    SphericalRoot r;
    r.kind = k;
    r.embedding = embedding;
    r.coeffs = expand(rs, r);
    return r;
}

Root expand(const RootSystem& rs, const SphericalRoot& root) {
    auto pat = make_pattern(root.kind, root.embedding.size());
    Root v(rs.rank(), 0);
    for (std::size_t i = 0; i < root.embedding.size(); ++i) {
        if (root.embedding[i] >= rs.rank()) throw Error(ErrorCode::BadEmbedding, "embedding index out of range");
        v[root.embedding[i]] += pat.coeffs[i];
    }
    return v;
}

std::optional<SphericalRoot> recognize(const RootSystem& rs, const Root& coeffs, std::optional<PatternKind> kind,
                                       const IndexSet* sp) {
    if (coeffs.size() != rs.rank()) return std::nullopt;
    std::vector<std::size_t> supp;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] < 0) return std::nullopt;
        if (coeffs[i] != 0) supp.push_back(i);
    }
    const std::size_t n = supp.size();
    if (n == 0) return std::nullopt;
    for (auto k : kAllPatternKinds) {
        if (kind && *kind != k) continue;
        if (n < min_support(k) || (max_support(k) != 0 && n > max_support(k))) continue;
        auto pat = make_pattern(k, n);
        for (const auto& emb : cartan_embeddings(pat.cartan, rs.cartan(), supp)) {
            bool match = true;
            for (std::size_t i = 0; i < n && match; ++i) match = coeffs[emb[i]] == pat.coeffs[i];
            if (!match) continue;
            SphericalRoot r{k, emb, coeffs};
            if (sp && !is_compatible(rs, r, *sp)) continue;
            return r;
        }
    }
    return std::nullopt;
}

bool is_compatible(const RootSystem& rs, const SphericalRoot& root, const IndexSet& sp) {
    auto pat = make_pattern(root.kind, root.embedding.size());
    IndexSet want;
    for (auto p : pat.sp_pattern) want.insert(root.embedding[p]);
    auto supp = root.support();
    IndexSet have;
    for (auto i : sp)
        if (supp.count(i)) have.insert(i);
    if (have != want) return false;
    for (auto i : sp)
        if (!supp.count(i) && rs.pair(i, root.coeffs) != 0) return false;
    return true;
}

std::int64_t anticanonical_coefficient(const RootSystem& rs, const IndexSet& sp, std::size_t alpha,
                                       const std::vector<SphericalRoot>& sigma) {
    for (const auto& g : sigma) {
        auto supp = g.support();
        if (supp.size() == 1 && *supp.begin() == alpha && (g.coeffs[alpha] == 1 || g.coeffs[alpha] == 2)) return 1;
    }
    return 2 - rs.two_rho_pair(alpha, sp);
}

}  // namespace sph
