#pragma once

#include "sph/rational.hpp"

#include <set>
#include <string>

namespace sph {

struct SimpleType {
    char letter = 'A';
    int rank = 1;

    std::string name() const { return std::string(1, letter) + std::to_string(rank); }
    bool operator==(const SimpleType&) const = default;
};

// Throws ParameterOutOfRange on ranks that do not exist (D2, E5, F3, ...).
SimpleType make_simple_type(char letter, int rank);
SimpleType parse_simple_type(const std::string& text);

IntMatrix simple_cartan(const SimpleType& t);

using Root = IntVector;
using IndexSet = std::set<std::size_t>;  // 0-based simple-root indices

class RootSystem {
public:
    RootSystem() = default;
    explicit RootSystem(std::vector<SimpleType> factors);

    // "A2xA2", "E6", "" (rank 0); also lists of factor names.
    static RootSystem parse(const std::string& text);
    static RootSystem parse(const std::vector<std::string>& factors);

    const std::vector<SimpleType>& factors() const { return factors_; }
    std::size_t rank() const { return cartan_.size(); }
    const IntMatrix& cartan() const { return cartan_; }
    std::vector<std::string> factor_names() const;
    std::string name() const;

    // Factor containing simple root i and the offset of that factor.
    std::size_t factor_of(std::size_t i) const { return factor_index_[i]; }
    std::size_t offset(std::size_t factor) const { return offsets_[factor]; }

    // <alpha_i^vee, v> for v in simple-root coordinates.
    std::int64_t pair(std::size_t i, const Root& v) const;
    Rational pair(std::size_t i, const RatVector& v) const;

    const std::vector<Root>& positive_roots() const { return positive_; }
    std::vector<Root> positive_roots(const IndexSet& subset) const;

    // Half-sum of positive roots of the subsystem spanned by subset.
    RatVector half_sum(const IndexSet& subset) const;

    // <alpha_i^vee, 2 rho_subset>.
    std::int64_t two_rho_pair(std::size_t i, const IndexSet& subset) const;

    // |R+| - |R+ of the subsystem spanned by sp|.
    std::size_t parabolic_count(const IndexSet& sp) const;

    IndexSet all() const;

    bool operator==(const RootSystem& o) const { return factors_ == o.factors_; }

private:
    std::vector<SimpleType> factors_;
    IntMatrix cartan_;
    std::vector<std::size_t> factor_index_, offsets_;
    std::vector<Root> positive_;
};

RootSystem product(const RootSystem& a, const RootSystem& b);

// Subsystem on a subset of simple roots, renumbered into Bourbaki order per
// connected component. to_parent[i] is the parent index of new simple root i.
struct SubSystem {
    RootSystem system;
    std::vector<std::size_t> to_parent;
};
SubSystem subsystem(const RootSystem& r, const IndexSet& subset);

// Identifies the type of a connected Cartan matrix and returns, for each
// Bourbaki position, the matching row of the input. False for non-finite types.
bool identify_component(const IntMatrix& cartan, SimpleType& type, std::vector<std::size_t>& order);

// All injective maps pattern-index -> target-index with
// target[map[i]][map[j]] == pattern[i][j].
std::vector<std::vector<std::size_t>> cartan_embeddings(const IntMatrix& pattern, const IntMatrix& target,
                                                        const std::vector<std::size_t>& candidates);

// Automorphisms of the Dynkin diagram (Cartan-preserving permutations).
std::vector<std::vector<std::size_t>> diagram_automorphisms(const RootSystem& r);

}  // namespace sph
