#include "sph/spherical_roots.hpp"

#include <gtest/gtest.h>

using namespace sph;

TEST(SphericalRoots, DoubleOnA3) {
    const auto rs = RootSystem::parse("A3");
    EXPECT_EQ(expand(rs, embed(rs, PatternKind::Double, {2})), (Root{0, 0, 2}));
}

TEST(SphericalRoots, F4Pattern) {
    const auto rs = RootSystem::parse("F4");
    EXPECT_EQ(expand(rs, embed(rs, PatternKind::F4, {0, 1, 2, 3})), (Root{1, 2, 3, 2}));
    EXPECT_EQ(make_pattern(PatternKind::F4, 4).coefficient, 11);
}

TEST(SphericalRoots, G2Doubled) {
    const auto rs = RootSystem::parse("G2");
    EXPECT_EQ(expand(rs, embed(rs, PatternKind::G2Doubled, {0, 1})), (Root{4, 2}));
    EXPECT_EQ(expand(rs, embed(rs, PatternKind::G2Sum, {0, 1})), (Root{1, 1}));
}

TEST(SphericalRoots, BadEmbedding) {
    const auto rs = RootSystem::parse("A3");
    EXPECT_THROW(embed(rs, PatternKind::G2Sum, {0, 1}), Error);
    EXPECT_THROW(embed(rs, PatternKind::OrthogonalSum, {0, 1}), Error);
    EXPECT_NO_THROW(embed(rs, PatternKind::OrthogonalSum, {0, 2}));
}

TEST(SphericalRoots, Recognize) {
    const auto rs = RootSystem::parse("B3");
    const auto r = recognize(rs, {1, 2, 3});
    ASSERT_TRUE(r);
    EXPECT_EQ(r->kind, PatternKind::B3);
    EXPECT_FALSE(recognize(rs, {1, 3, 1}));
    const auto c = RootSystem::parse("C3");
    IndexSet sp1 = {2}, sp2 = {0, 2};
    EXPECT_EQ(recognize(c, {1, 2, 1}, std::nullopt, &sp1)->kind, PatternKind::CChain1);
    EXPECT_EQ(recognize(c, {1, 2, 1}, std::nullopt, &sp2)->kind, PatternKind::CChain2);
}

TEST(SphericalRoots, Compatibility) {
    const auto a2 = RootSystem::parse("A2");
    const auto simple = embed(a2, PatternKind::Simple, {0});
    EXPECT_TRUE(is_compatible(a2, simple, {}));
    EXPECT_FALSE(is_compatible(a2, simple, {1}));

    const auto b4 = RootSystem::parse("B4");
    const auto db = embed(b4, PatternKind::BChainDoubled, {0, 1, 2, 3});
    EXPECT_TRUE(is_compatible(b4, db, {1, 2, 3}));
    EXPECT_FALSE(is_compatible(b4, db, {1, 2}));
}

TEST(SphericalRoots, AnticanonicalCoefficient) {
    const auto a1 = RootSystem::parse("A1");
    EXPECT_EQ(anticanonical_coefficient(a1, {}, 0, {embed(a1, PatternKind::Simple, {0})}), 1);
    EXPECT_EQ(anticanonical_coefficient(a1, {}, 0, {embed(a1, PatternKind::Double, {0})}), 1);
    const auto a2 = RootSystem::parse("A2xA2");
    const std::vector<SphericalRoot> ge = {embed(a2, PatternKind::OrthogonalSum, {0, 2}),
                                           embed(a2, PatternKind::OrthogonalSum, {1, 3})};
    for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(anticanonical_coefficient(a2, {}, i, ge), 2);
    for (std::size_t n = 2; n <= 8; ++n) {
        const RootSystem an({{'A', static_cast<int>(n)}});
        std::vector<std::size_t> emb(n);
        for (std::size_t i = 0; i < n; ++i) emb[i] = i;
        IndexSet sp;
        for (std::size_t i = 1; i + 1 < n; ++i) sp.insert(i);
        const std::vector<SphericalRoot> chain = {embed(an, PatternKind::AChain, emb)};
        EXPECT_EQ(anticanonical_coefficient(an, sp, 0, chain), static_cast<std::int64_t>(n));
        EXPECT_EQ(anticanonical_coefficient(an, sp, n - 1, chain), static_cast<std::int64_t>(n));
    }
}

// Third-column coefficients against Luna's formula on the pattern's own support.
TEST(SphericalRoots, PatternCoefficientsMatchLuna) {
    for (auto kind : kAllPatternKinds) {
        const auto lo = min_support(kind), hi_raw = max_support(kind);
        const auto hi = hi_raw == 0 ? std::size_t(8) : hi_raw;
        for (std::size_t n = lo; n <= hi; ++n) {
            const auto pat = make_pattern(kind, n);
            SimpleType t;
            std::vector<std::size_t> order;
            std::vector<SimpleType> factors;
            if (kind == PatternKind::OrthogonalSum) {
                factors = {{'A', 1}, {'A', 1}};
            } else {
                ASSERT_TRUE(identify_component(pat.cartan, t, order)) << pattern_name(kind);
                factors = {t};
            }
            const RootSystem rs(factors);
            std::vector<std::size_t> emb(n);
            for (std::size_t i = 0; i < n; ++i) emb[i] = i;
            if (kind != PatternKind::OrthogonalSum)
                for (std::size_t pos = 0; pos < n; ++pos) emb[order[pos]] = pos;
            const auto root = embed(rs, kind, emb);
            IntVector expanded(n);
            for (std::size_t i = 0; i < n; ++i) expanded[i] = root.coeffs[emb[i]];
            EXPECT_EQ(expanded, pat.coeffs);
            IndexSet sp;
            for (auto i : pat.sp_pattern) sp.insert(emb[i]);
            EXPECT_TRUE(is_compatible(rs, root, sp)) << pattern_name(kind) << " n=" << n;
            ASSERT_FALSE(pat.color_slots.empty());
            for (const auto& slot : pat.color_slots) {
                EXPECT_EQ(sp.count(emb[slot.position]), 0u);
                EXPECT_EQ(anticanonical_coefficient(rs, sp, emb[slot.position], {root}), pat.coefficient)
                    << pattern_name(kind) << " n=" << n << " slot " << slot.position;
            }
        }
    }
}

TEST(SphericalRoots, PatternNamesRoundTrip) {
    for (auto kind : kAllPatternKinds) EXPECT_EQ(parse_pattern(pattern_name(kind)), kind);
    EXPECT_FALSE(parse_pattern("nonsense"));
}
