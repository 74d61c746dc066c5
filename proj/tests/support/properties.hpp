#pragma once

#include <cstdint>
#include <string>

namespace sph::testing {

struct PropertyResult {
    std::size_t checked = 0;
    std::size_t failures = 0;
    std::string first_failure;

    bool ok() const { return checked > 0 && failures == 0; }
    void fail(const std::string& what) {
        if (failures++ == 0) first_failure = what;
    }
};

PropertyResult prop_nonnegative(std::uint64_t seed, std::size_t n);
PropertyResult prop_monotone_chain(std::uint64_t seed, std::size_t n);
PropertyResult prop_marking_monotone(std::uint64_t seed, std::size_t n);
PropertyResult prop_product_additive(std::uint64_t seed, std::size_t n);
PropertyResult prop_lp_oracle(std::uint64_t seed, std::size_t n);
PropertyResult prop_equivalence_invariance(std::uint64_t seed, std::size_t n);

// Closed-form dual certificates of the A_n group embedding for n <= max_n, k <= ceil(n/2).
PropertyResult closed_form_certificates(std::size_t max_n);

// End-to-end checks of the two worked examples.
PropertyResult worked_examples();

// iota <= epsilon and color_vertex_check on every valid Fano test instance.
PropertyResult fano_propositions(std::uint64_t seed, std::size_t random_count);

}  // namespace sph::testing
