#include "sph/catalog.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace sph;

TEST(Catalog, GroupEmbeddingA) {
    for (int n = 1; n <= 8; ++n) {
        const auto sk = generate(parse_family_spec("2:A" + std::to_string(n)));
        const auto N = static_cast<std::size_t>(n);
        EXPECT_EQ(sk.root_system.name(), "A" + std::to_string(n) + "xA" + std::to_string(n));
        EXPECT_TRUE(sk.sp.empty());
        ASSERT_EQ(sk.sigma.size(), N);
        ASSERT_EQ(sk.colors.size(), N);
        const auto cartan = simple_cartan({'A', n});
        for (std::size_t i = 0; i < N; ++i) {
            EXPECT_EQ(sk.sigma[i].kind, PatternKind::OrthogonalSum);
            EXPECT_EQ(sk.colors[i].m, 2);
            EXPECT_EQ(sk.colors[i].moved_by.size(), 2u);
            EXPECT_EQ(sk.colors[i].pairings, cartan[i]);
        }
    }
}

TEST(Catalog, Family3Arrow) {
    for (int m = 1; m <= 3; ++m) {
        const auto sk = generate(parse_family_spec("3:l=1,m=" + std::to_string(m)));
        EXPECT_TRUE(validate(sk).empty());
        const auto M = static_cast<std::size_t>(m);
        ASSERT_EQ(sk.sigma.size(), M + 1);
        // The simple root alpha_{m+1} sits last.
        const auto& simple = sk.sigma.back();
        EXPECT_EQ(simple.kind, PatternKind::Simple);
        EXPECT_EQ(*simple.support().begin(), M);
        std::vector<const Color*> pair;
        for (const auto& c : sk.colors)
            if (c.is_pair()) pair.push_back(&c);
        ASSERT_EQ(pair.size(), 2u);
        const Color* plus = pair[0]->kind == ColorKind::PairPlus ? pair[0] : pair[1];
        // <rho(D+), alpha_m + alpha_{m+2}> = -1.
        EXPECT_EQ(plus->pairings[M - 1], -1);
    }
}

TEST(Catalog, Family28) {
    const auto sk = generate(parse_family_spec("28"));
    EXPECT_EQ(sk.root_system.name(), "F4");
    ASSERT_EQ(sk.sigma.size(), 1u);
    EXPECT_EQ(sk.sigma[0].coeffs, (Root{1, 2, 3, 2}));
    ASSERT_EQ(sk.colors.size(), 1u);
    EXPECT_EQ(sk.colors[0].m, 11);
}

TEST(Catalog, MarkLastRowIsIndicator) {
    for (int n = 2; n <= 6; ++n)
        for (int k = 1; k <= n; ++k) {
            const auto sk = mark(parse_family_spec("2:A" + std::to_string(n)), static_cast<std::size_t>(k));
            ASSERT_EQ(sk.gamma.size(), 1u);
            IntVector e(static_cast<std::size_t>(n), 0);
            e[static_cast<std::size_t>(k - 1)] = -1;
            EXPECT_EQ(sk.gamma[0].pairings, e);
        }
}

TEST(Catalog, Family30Values) {
    const auto spec = parse_family_spec("30");
    EXPECT_EQ(compute_p(mark(spec, 1)).p_value, 0);
    EXPECT_EQ(compute_p(mark(spec, 2)).p_value, 1);
}

TEST(Catalog, EveryMarkingValidAndComplete) {
    for (const auto& spec : enumerate_specs(8)) {
        const auto base = generate(spec);
        EXPECT_TRUE(validate(base).empty()) << spec.label();
        for (std::size_t k = 1; k <= base.sigma.size(); ++k) {
            const auto sk = mark(spec, k);
            EXPECT_TRUE(validate(sk).empty()) << spec.label() << " " << k;
            EXPECT_TRUE(is_complete(sk)) << spec.label() << " " << k;
        }
    }
}

TEST(Catalog, ParseSpecs) {
    EXPECT_EQ(parse_family_spec("2:G2").type, (SimpleType{'G', 2}));
    const auto s3 = parse_family_spec("3:l=1,m=2");
    EXPECT_EQ(s3.l, 1);
    EXPECT_EQ(s3.m, 2);
    EXPECT_EQ(s3.label(), "3:l=1,m=2");
    EXPECT_EQ(parse_family_spec("10:l=1,m=2").family, "10/11");
    EXPECT_EQ(parse_family_spec("11:l=1,m=2").label(), "10/11:l=1,m=2");
    EXPECT_EQ(parse_family_spec("29:F4").family, "29");
    EXPECT_THROW(parse_family_spec("31"), Error);
    EXPECT_THROW(parse_family_spec("2:X9"), Error);
    EXPECT_THROW(check_parameters(parse_family_spec("3:l=0,m=0")), Error);
    EXPECT_THROW(mark(parse_family_spec("29"), 7), Error);
}

TEST(Catalog, TableRowsSpotChecks) {
    EXPECT_EQ(compute_p(mark(parse_family_spec("2:E6"), 1)).p_value, make_rational(37, 2));
    EXPECT_EQ(expected_p(parse_family_spec("2:E6"), 1), make_rational(37, 2));
    for (int n = 1; n <= 8; ++n) {
        const auto spec = parse_family_spec("2:A" + std::to_string(n));
        for (int k = 1; k <= (n + 1) / 2; ++k) {
            const Rational want = n * n - 2 * k * n + 3 * n + 2 * k * k - 6 * k + 4;
            EXPECT_EQ(compute_p(mark(spec, static_cast<std::size_t>(k))).p_value, want) << n << " " << k;
            EXPECT_EQ(expected_p(spec, static_cast<std::size_t>(k)), want);
        }
    }
}

TEST(Catalog, VerifyTables) {
    const auto rep = verify_tables(8);
    EXPECT_EQ(rep.mismatches(), 0u);
    std::map<std::string, std::size_t> groups;
    bool has_37_2 = false, has_13_2 = false, has_3_2 = false, has_zero = false;
    for (const auto& row : rep.rows) {
        ++groups[row.group];
        EXPECT_TRUE(row.match) << row.spec.label() << " " << row.marking << " " << row.error;
        EXPECT_TRUE(row.valid && row.complete) << row.spec.label();
        if (!row.report.finite) continue;
        has_37_2 = has_37_2 || row.report.p_value == make_rational(37, 2);
        has_13_2 = has_13_2 || row.report.p_value == make_rational(13, 2);
        has_3_2 = has_3_2 || (row.spec.family == "29" && row.report.p_value == make_rational(3, 2));
        has_zero = has_zero || (row.spec.family == "30" && row.report.p_value == 0);
    }
    EXPECT_EQ(groups["classical-group-embeddings"], 136u);
    EXPECT_EQ(groups["exceptional-group-embeddings"], 27u);
    EXPECT_EQ(groups["classical-symmetric"], 462u);
    EXPECT_EQ(groups["exceptional-symmetric"], 50u);
    EXPECT_TRUE(has_37_2 && has_13_2 && has_3_2 && has_zero);
}

TEST(Catalog, EqualityVertices) {
    for (int n = 1; n <= 8; ++n) {
        const auto spec = parse_family_spec("2:A" + std::to_string(n));
        const auto theta = equality_vertex(spec, 1);
        ASSERT_TRUE(theta);
        RatVector want;
        for (int k = 1; k <= n; ++k) want.push_back(k * k);
        EXPECT_EQ(*theta, want);
        const auto sk = mark(spec, 1);
        EXPECT_TRUE(theta_feasible(sk, *theta));
        EXPECT_EQ(p_objective(sk, *theta), n * n + n);
    }
    for (int m = 1; m <= 3; ++m) {
        const auto spec = parse_family_spec("6:m=" + std::to_string(m));
        const auto theta = equality_vertex(spec, 1);
        ASSERT_TRUE(theta) << spec.label();
        RatVector want;
        for (int k = 1; k <= m; ++k) want.push_back(2 * k * k - k);
        EXPECT_EQ(*theta, want);
        EXPECT_EQ(p_objective(mark(spec, 1), *theta), 2 * m * m + 2 * m);
    }
    const auto s19 = parse_family_spec("19");
    std::optional<RatVector> t19;
    std::size_t k19 = 0;
    for (std::size_t k = 1; k <= generate(s19).sigma.size() && !t19; ++k)
        if ((t19 = equality_vertex(s19, k))) k19 = k;
    ASSERT_TRUE(t19);
    EXPECT_EQ(*t19, (RatVector{1, 10}));
    EXPECT_EQ(p_objective(mark(s19, k19), *t19), 24);
}

TEST(Catalog, VerifyEqualityCases) {
    const auto rep = verify_equality_cases(8);
    EXPECT_EQ(rep.failures(), 0u);
    EXPECT_FALSE(rep.listed.empty());
    for (const auto& r : rep.listed) {
        EXPECT_TRUE(r.finite && r.p == r.bound) << r.spec.label();
        EXPECT_TRUE(r.theta_feasible && r.theta_attains && r.theta_vertex) << r.spec.label();
    }
    for (const auto& r : rep.strict) EXPECT_TRUE(r.finite && r.p < r.bound) << r.spec.label();
    for (const auto& r : rep.pairs) EXPECT_TRUE(r.finite && r.p < r.bound) << r.spec.label();
}

TEST(Catalog, DiagramSymmetry) {
    for (const auto& spec : enumerate_specs(8)) {
        if (!spec.type || spec.type->letter != 'A') continue;
        const auto n = static_cast<std::size_t>(spec.type->rank);
        for (std::size_t k = 1; k <= n; ++k)
            EXPECT_EQ(compute_p(mark(spec, k)).p_value, compute_p(mark(spec, n - k + 1)).p_value) << spec.label();
    }
}

TEST(Catalog, ParallelForCoversRange) {
    std::vector<int> hits(1000, 0);
    parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i] += 1; });
    for (int h : hits) EXPECT_EQ(h, 1);
    EXPECT_THROW(parallel_for(10, 3, [](std::size_t i) {
                     if (i == 5) throw Error(ErrorCode::ParameterOutOfRange, "x");
                 }),
                 Error);
}
