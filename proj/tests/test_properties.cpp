#include "properties.hpp"

#include <gtest/gtest.h>

using namespace sph::testing;

namespace {

void expect_ok(const PropertyResult& r, std::size_t n) {
    EXPECT_EQ(r.checked, n);
    EXPECT_EQ(r.failures, 0u) << r.first_failure;
}

}  // namespace

TEST(Properties, Nonnegative) { expect_ok(prop_nonnegative(1, 500), 500); }
TEST(Properties, MonotoneChain) { expect_ok(prop_monotone_chain(1, 500), 500); }
TEST(Properties, MarkingMonotone) { expect_ok(prop_marking_monotone(2, 200), 200); }
TEST(Properties, ProductAdditive) { expect_ok(prop_product_additive(3, 100), 100); }
TEST(Properties, LpOracle) { expect_ok(prop_lp_oracle(4, 300), 300); }
TEST(Properties, EquivalenceInvariance) { expect_ok(prop_equivalence_invariance(5, 100), 100); }

TEST(Properties, ClosedFormCertificates) {
    const auto r = closed_form_certificates(8);
    EXPECT_EQ(r.checked, 1u + 1 + 2 + 2 + 3 + 3 + 4 + 4);
    EXPECT_EQ(r.failures, 0u) << r.first_failure;
}

TEST(Properties, FanoPropositions) {
    const auto r = fano_propositions(6, 60);
    EXPECT_EQ(r.checked, 64u);
    EXPECT_EQ(r.failures, 0u) << r.first_failure;
}
