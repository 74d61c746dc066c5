#include "sph/fano.hpp"

#include "fixtures.hpp"
#include "random.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace sph;
using sph::testing::load_augmented;
using sph::testing::rv;

namespace {

std::vector<RatVector> supported_points(const FanoPolytope& fp) {
    std::vector<RatVector> out;
    for (auto i : fp.supported) out.push_back(fp.Qstar.vertices[i]);
    std::sort(out.begin(), out.end());
    return out;
}

bool has_axiom(const std::vector<Violation>& vs, const std::string& axiom) {
    return std::any_of(vs.begin(), vs.end(), [&](const Violation& v) { return v.axiom == axiom; });
}

AugmentedData toric(const std::vector<IntVector>& rays) {
    AugmentedData a;
    std::vector<GammaDivisor> g;
    for (std::size_t i = 0; i < rays.size(); ++i) g.push_back({"G" + std::to_string(i + 1), {}});
    a.skeleton = make_skeleton(RootSystem(), {}, {}, {}, g);
    a.lattice_rank = rays.front().size();
    a.rho_prime = rays;
    a.m = std::vector<std::int64_t>(rays.size(), 1);
    return a;
}

}  // namespace

TEST(Fano, WorkedExampleEndToEnd) {
    const auto doc = load_augmented("ex32_augmented.json");
    EXPECT_TRUE(validate_augmentation(doc.data).empty());
    ASSERT_TRUE(doc.polytope);
    EXPECT_TRUE(validate_reflexive(doc.data, make_vpolytope(2, *doc.polytope)).empty());
    const auto fp = make_fano(doc.data, doc.polytope);
    EXPECT_EQ(supported_points(fp), (std::vector<RatVector>{rv({-1, 1}), rv({2, 1})}));

    const auto c = curve_degrees(fp);
    std::vector<Rational> dv;
    for (const auto& d : c.dv_curves) dv.push_back(d.degree);
    std::sort(dv.begin(), dv.end());
    EXPECT_EQ(dv, (std::vector<Rational>{2, 2, 3}));
    for (const auto& d : c.dv_curves) {
        // C(D1, -b1+b2) is absent: u_{D1} lies in the dual face.
        EXPECT_FALSE(d.divisor == 0 && fp.Qstar.vertices[d.vertex] == rv({-1, 1}));
    }
    ASSERT_EQ(c.edge_curves.size(), 1u);
    EXPECT_EQ(c.edge_curves[0].degree, 3);
    EXPECT_EQ(c.iota, 2);
    EXPECT_EQ(c.epsilon, 2);
    EXPECT_EQ(c.picard, 2);
    EXPECT_EQ(c.dim, 3u);
    EXPECT_EQ(c.mukai_lhs, 2);

    const auto m = mukai_check(fp);
    EXPECT_TRUE(m.holds);
    EXPECT_TRUE(m.iota_le_epsilon);
    EXPECT_TRUE(m.rfs_holds);
    EXPECT_TRUE(m.p_finite && m.p_matches);
    EXPECT_EQ(m.p_polytope, 1);
    EXPECT_EQ(m.p_skeleton.p_value, 1);
    EXPECT_EQ(m.p_polytope, Rational(static_cast<long>(c.dim)) - 2);
    EXPECT_TRUE(color_vertex_check(fp));
}

TEST(Fano, DoubledRootExample) {
    const auto doc = load_augmented("ex61_augmented.json");
    EXPECT_TRUE(validate_augmentation(doc.data).empty());
    const auto fp = make_fano(doc.data, doc.polytope);
    EXPECT_TRUE(validate_reflexive(doc.data, fp.Q).empty());
    std::vector<RatVector> qs = fp.Qstar.vertices;
    std::sort(qs.begin(), qs.end());
    EXPECT_EQ(qs, (std::vector<RatVector>{rv({-1, 0}), rv({0, -1}), rv({0, 1}), rv({1, 0})}));
    EXPECT_EQ(supported_points(fp), (std::vector<RatVector>{rv({0, 1}), rv({1, 0})}));
    EXPECT_EQ(curve_degrees(fp).iota, 1);
}

TEST(Fano, OriginOnBoundaryViolatesInterior) {
    const auto doc = load_augmented("ex32_origin_on_boundary.json");
    const auto vs = validate_reflexive(doc.data, make_vpolytope(2, *doc.polytope));
    EXPECT_TRUE(has_axiom(vs, "(2)"));
    EXPECT_THROW(make_fano(doc.data, doc.polytope), Error);
}

TEST(Fano, RestrictionLawChecked) {
    auto doc = load_augmented("ex32_augmented.json");
    doc.data.rho_prime[0] = {2, 0};
    EXPECT_TRUE(has_axiom(validate_augmentation(doc.data), "(a1)"));
    auto bad_m = load_augmented("ex32_augmented.json");
    bad_m.data.m[3] = 2;
    EXPECT_FALSE(validate_augmentation(bad_m.data).empty());
}

TEST(Fano, EmptySigmaAllVerticesSupported) {
    const auto p2 = toric({{1, 0}, {0, 1}, {-1, -1}});
    const auto fp = make_fano(p2);
    EXPECT_EQ(fp.supported.size(), fp.Qstar.vertices.size());
    EXPECT_TRUE(color_vertex_check(fp));
    const auto c = curve_degrees(fp);
    ASSERT_EQ(c.edge_curves.size(), 3u);
    for (const auto& e : c.edge_curves) EXPECT_EQ(e.degree, 3);
    EXPECT_EQ(c.iota, 3);
    EXPECT_EQ(c.picard, 1);
    EXPECT_EQ(c.dim, 2u);
}

TEST(Fano, ProjectiveLine) {
    const auto fp = make_fano(toric({{1}, {-1}}));
    const auto m = mukai_check(fp);
    EXPECT_EQ(m.curves.picard, 1);
    EXPECT_EQ(m.curves.iota, 2);
    EXPECT_EQ(m.curves.dim, 1u);
    EXPECT_EQ(m.curves.mukai_lhs, 1);
    EXPECT_TRUE(m.holds);
}

TEST(Fano, ProjectivePlaneFromFiles) {
    const auto p1 = load_augmented("p1_augmented.json");
    EXPECT_EQ(curve_degrees(make_fano(p1.data, p1.polytope)).iota, 2);
    const auto p2 = load_augmented("p2_augmented.json");
    EXPECT_EQ(curve_degrees(make_fano(p2.data, p2.polytope)).iota, 3);
}

TEST(Fano, EdgeDifferencesAreIntegerMultiples) {
    for (const auto& aug : sph::testing::fano_instances(4, 30)) {
        const auto fp = make_fano(aug);
        for (const auto& e : curve_degrees(fp).edge_curves) {
            const auto diff = sub(fp.Qstar.vertices[e.v], fp.Qstar.vertices[e.w]);
            EXPECT_EQ(diff, scale(e.degree, to_rat(e.chi)));
            EXPECT_GT(e.degree, 0);
        }
    }
}

TEST(Fano, BaseChangeInvariance) {
    const auto base = load_augmented("ex32_augmented.json").data;
    const auto ref = mukai_check(make_fano(base));
    for (const IntMatrix& U : {IntMatrix{{1, 1}, {0, 1}}, IntMatrix{{0, 1}, {1, 0}}, IntMatrix{{2, 1}, {1, 1}}}) {
        const auto t = sph::testing::transform(base, U);
        EXPECT_TRUE(validate_augmentation(t).empty());
        const auto m = mukai_check(make_fano(t));
        EXPECT_EQ(m.curves.iota, ref.curves.iota);
        EXPECT_EQ(m.curves.epsilon, ref.curves.epsilon);
        EXPECT_EQ(m.p_polytope, ref.p_polytope);
        EXPECT_EQ(m.sigma_vertices.size(), ref.sigma_vertices.size());
    }
}

TEST(Fano, ValuationCone) {
    const auto a = load_augmented("ex32_augmented.json").data;
    EXPECT_FALSE(in_valuation_cone(a, rv({1, 0})));
    EXPECT_TRUE(in_valuation_cone(a, rv({0, -1})));
    EXPECT_TRUE(in_valuation_cone(a, rv({-1, 1})));
}

TEST(Fano, NoSupportedVertexIsAnError) {
    auto fp = make_fano(load_augmented("ex32_augmented.json").data);
    fp.supported.clear();
    try {
        curve_degrees(fp);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NoSupportedVertices);
    }
}

TEST(Fano, CubeFanIsNotQFactorial) {
    std::vector<IntVector> rays;
    for (int x : {-1, 1})
        for (int y : {-1, 1})
            for (int z : {-1, 1}) rays.push_back({x, y, z});
    const auto fp = make_fano(toric(rays));
    EXPECT_EQ(fp.Qstar.vertices.size(), 6u);
    try {
        mukai_check(fp);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotQFactorial);
    }
}
