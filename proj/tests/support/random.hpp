#pragma once

#include "sph/catalog.hpp"
#include "sph/fano.hpp"

#include <random>

namespace sph::testing {

// Valid skeletons drawn from catalog families, their products and localizations,
// and horospherical systems, with random Gamma rows.
class SkeletonSampler {
public:
    explicit SkeletonSampler(std::uint64_t seed, std::size_t max_rank = 4);

    SphericalSkeleton next();
    // A catalog skeleton with empty Gamma.
    SphericalSkeleton family();
    std::vector<GammaDivisor> random_gamma(std::size_t sigma_size, std::size_t max_count);

    std::mt19937_64& rng() { return rng_; }
    std::size_t uniform(std::size_t lo, std::size_t hi);  // inclusive

private:
    SphericalSkeleton horospherical();

    std::mt19937_64 rng_;
    std::vector<FamilySpec> specs_;
};

// Brute-force LP oracle: max over basic feasible points, and unboundedness by
// enumerating the vertices of {r >= 0, A r <= 0, sum r = 1}.
struct OracleResult {
    LpStatus status;
    Rational value;
};
OracleResult brute_force_lp(const LpProblem& p);

// Augmented data of the two worked examples (Sigma = {alpha} and Sigma = {2 alpha} on A1).
AugmentedData worked_example_32();
AugmentedData worked_example_61();

// Rank-2 augmented data: the worked examples under random unimodular base change,
// and random toric reflexive polygons.
std::vector<AugmentedData> fano_instances(std::uint64_t seed, std::size_t random_count);

AugmentedData transform(const AugmentedData& a, const IntMatrix& U);  // M-basis change by U in GL_r(Z)

}  // namespace sph::testing
