#include "sph/skeleton.hpp"

#include "fixtures.hpp"
#include "random.hpp"

#include <gtest/gtest.h>

using namespace sph;
using sph::testing::load_skeleton;

namespace {

bool has_axiom(const std::vector<Violation>& vs, const std::string& axiom) {
    for (const auto& v : vs)
        if (v.axiom == axiom) return true;
    return false;
}

std::size_t count_id_prefix(const std::vector<GammaDivisor>& g) { return g.size(); }

}  // namespace

TEST(Skeleton, WorkedExampleValid) {
    const auto sk = load_skeleton("ex35.json");
    EXPECT_TRUE(validate(sk).empty());
    ASSERT_EQ(sk.colors.size(), 2u);
    EXPECT_EQ(sk.colors[0].pairings, (IntVector{1}));
    EXPECT_EQ(sk.colors[1].pairings, (IntVector{1}));
    EXPECT_EQ(sk.colors[0].pairings[0] + sk.colors[1].pairings[0], sk.root_system.pair(0, sk.sigma[0].coeffs));
}

TEST(Skeleton, PairingTwoViolatesA1) {
    auto sk = load_skeleton("ex35.json");
    sk.colors[0].pairings[0] = 2;
    EXPECT_TRUE(has_axiom(validate(sk), "(A1)"));
    EXPECT_THROW(require_valid(sk), Error);
}

TEST(Skeleton, PositiveGammaRejected) {
    auto sk = load_skeleton("ex35.json");
    sk.gamma[0].pairings[0] = 1;
    EXPECT_FALSE(validate(sk).empty());
}

TEST(Skeleton, Completeness) {
    EXPECT_TRUE(is_complete(load_skeleton("ex35.json")));
    auto sk = load_skeleton("ex35.json");
    sk.gamma = {{"Z", {0}}};
    EXPECT_FALSE(is_complete(sk));
}

TEST(Skeleton, ProductWithEmptyIsIdentity) {
    const auto sk = load_skeleton("ex35.json");
    const auto empty = make_skeleton(RootSystem(), {}, {});
    const auto p = product(sk, empty);
    EXPECT_TRUE(isomorphic(p, sk));
    EXPECT_EQ(p.delta_size(), sk.delta_size());
}

TEST(Skeleton, ProductBoundAdds) {
    const auto a = generate(parse_family_spec("2:A2")), b = generate(parse_family_spec("29"));
    const auto ab = product(a, b);
    EXPECT_TRUE(validate(ab).empty());
    EXPECT_EQ(ab.root_system.parabolic_count(ab.sp),
              a.root_system.parabolic_count(a.sp) + b.root_system.parabolic_count(b.sp));
    EXPECT_EQ(ab.sigma.size(), a.sigma.size() + b.sigma.size());
}

TEST(Skeleton, Normalize) {
    const auto sk = load_skeleton("ex35.json");
    const auto n = normalize(sk);
    ASSERT_EQ(n.gamma.size(), 1u);
    EXPECT_EQ(n.gamma[0].id, "D4");
    const auto again = normalize(n);
    EXPECT_EQ(again.gamma.size(), 1u);
    EXPECT_TRUE(equivalent(sk, n));
    EXPECT_FALSE(isomorphic(sk, n));
}

TEST(Skeleton, ElementaryTransforms) {
    auto sk = generate(parse_family_spec("2:A2"));
    sk.gamma = {{"G1", {-2, -1}}};
    EXPECT_EQ(gamma_weights(sk), (IntVector{2, 1}));
    const auto el = elementary(sk);
    ASSERT_EQ(count_id_prefix(el.gamma), 3u);
    std::size_t first = 0, second = 0;
    for (const auto& g : el.gamma) {
        if (g.pairings == IntVector{-1, 0}) ++first;
        if (g.pairings == IntVector{0, -1}) ++second;
    }
    EXPECT_EQ(first, 2u);
    EXPECT_EQ(second, 1u);
    const auto vel = reduced_elementary(sk);
    EXPECT_EQ(vel.gamma.size(), 2u);
    EXPECT_TRUE(validate(el).empty());
    EXPECT_TRUE(validate(vel).empty());
    EXPECT_TRUE(isomorphic(reduced_elementary(vel), vel));
    EXPECT_TRUE(isomorphic(elementary(vel), vel));
}

TEST(Skeleton, WithMarkings) {
    const auto sk = with_markings(generate(parse_family_spec("2:A3")), {0, 2});
    ASSERT_EQ(sk.gamma.size(), 2u);
    EXPECT_EQ(sk.gamma[0].pairings, (IntVector{-1, 0, 0}));
    EXPECT_EQ(sk.gamma[1].pairings, (IntVector{0, 0, -1}));
}

TEST(Skeleton, LocalizeFull) {
    const auto sk = load_skeleton("ex35.json");
    const auto ids = sk.delta_ids();
    const auto loc = localize(sk, {ids.begin(), ids.end()});
    EXPECT_EQ(loc.sigma, sk.sigma);
    EXPECT_EQ(loc.gamma.size(), sk.gamma.size());
    EXPECT_TRUE(isomorphic(normalize(loc), normalize(sk)));
}

TEST(Skeleton, LocalizeWorkedExample) {
    const auto loc = localize(load_skeleton("ex35.json"), {"D1", "D2", "D4"});
    EXPECT_EQ(loc.sigma.size(), 1u);
    ASSERT_EQ(loc.gamma.size(), 1u);
    EXPECT_EQ(loc.gamma[0].id, "D4");
    EXPECT_EQ(loc.colors.size(), 2u);
}

TEST(Skeleton, LocalizeDropsHalfPair) {
    const auto loc = localize(load_skeleton("ex35.json"), {"D1", "D4"});
    EXPECT_TRUE(loc.sigma.empty());
    EXPECT_EQ(loc.root_system.rank(), 0u);
    EXPECT_THROW(localize(load_skeleton("ex35.json"), {"D9"}), Error);
}

TEST(Skeleton, DiagramFlipIsomorphism) {
    for (int n = 2; n <= 6; ++n) {
        const auto spec = parse_family_spec("2:A" + std::to_string(n));
        for (int k = 1; k <= n; ++k) {
            const auto a = mark(spec, static_cast<std::size_t>(k)), b = mark(spec, static_cast<std::size_t>(n - k + 1));
            EXPECT_TRUE(isomorphic(a, b)) << n << " " << k;
            for (int j = 1; j <= n; ++j) {
                if (j == k || j == n - k + 1) continue;
                EXPECT_FALSE(isomorphic(a, mark(spec, static_cast<std::size_t>(j)))) << n << " " << k << " " << j;
            }
        }
    }
}

TEST(Skeleton, IsomorphicToSelf) {
    for (const auto& spec : enumerate_specs(4)) {
        const auto sk = mark(spec, 1);
        EXPECT_TRUE(isomorphic(sk, sk)) << spec.label();
    }
}

TEST(Skeleton, CartanRowIdentity) {
    for (const auto& spec : enumerate_specs(6)) {
        const auto sk = generate(spec);
        const auto& rs = sk.root_system;
        for (std::size_t a = 0; a < rs.rank(); ++a) {
            std::vector<const Color*> pair;
            for (const auto& c : sk.colors)
                if (c.is_pair() && c.moved_by.count(a)) pair.push_back(&c);
            if (pair.empty()) continue;
            ASSERT_EQ(pair.size(), 2u) << spec.label();
            IntVector sum(sk.sigma.size());
            for (std::size_t j = 0; j < sum.size(); ++j) sum[j] = pair[0]->pairings[j] + pair[1]->pairings[j];
            EXPECT_EQ(sum, cartan_row(rs, sk.sigma, a)) << spec.label();
        }
    }
}

TEST(Skeleton, ElementaryOutputsValidate) {
    sph::testing::SkeletonSampler s(21);
    for (int i = 0; i < 100; ++i) {
        const auto sk = s.next();
        const auto el = elementary(sk), vel = reduced_elementary(sk);
        EXPECT_TRUE(validate(el).empty());
        EXPECT_TRUE(validate(vel).empty());
        const auto w = gamma_weights(sk);
        IndexSet marked, expected;
        for (std::size_t j = 0; j < w.size(); ++j)
            if (w[j] > 0) expected.insert(j);
        for (const auto& g : vel.gamma)
            for (std::size_t j = 0; j < g.pairings.size(); ++j)
                if (g.pairings[j] < 0) marked.insert(j);
        EXPECT_EQ(marked, expected);
    }
}

TEST(Skeleton, EquivalenceIsAnEquivalenceRelation) {
    sph::testing::SkeletonSampler s(8, 3);
    std::vector<SphericalSkeleton> pool;
    for (int i = 0; i < 12; ++i) {
        const auto sk = s.next();
        pool.push_back(sk);
        auto z = sk;
        z.gamma.push_back({"Z", IntVector(sk.sigma.size(), 0)});
        pool.push_back(z);
    }
    const auto n = pool.size();
    std::vector<std::vector<bool>> eq(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) eq[i][j] = equivalent(pool[i], pool[j]);
    for (std::size_t i = 0; i < n; ++i) {
        EXPECT_TRUE(eq[i][i]);
        for (std::size_t j = 0; j < n; ++j) {
            EXPECT_EQ(eq[i][j], eq[j][i]);
            for (std::size_t k = 0; k < n; ++k)
                if (eq[i][j] && eq[j][k]) {
                    EXPECT_TRUE(eq[i][k]);
                }
        }
    }
    for (std::size_t i = 0; i < n; i += 2) EXPECT_TRUE(eq[i][i + 1]);
}

TEST(Skeleton, HorosphericalAllowed) {
    const auto sk = make_skeleton(RootSystem::parse("A2"), {}, {1});
    EXPECT_TRUE(validate(sk).empty());
    ASSERT_EQ(sk.colors.size(), 1u);
    EXPECT_TRUE(sk.colors[0].pairings.empty());
    EXPECT_EQ(sk.colors[0].m, 3);
}
