#pragma once

#include "sph/roots.hpp"

#include <optional>
#include <string>

namespace sph {

// The fourteen rows of the table of spherically closed spherical roots.
enum class PatternKind {
    Simple,         // alpha_1
    Double,         // 2 alpha_1
    OrthogonalSum,  // alpha_1 + alpha_1'
    AChain,         // alpha_1 + ... + alpha_n, A_n
    D3,             // alpha_1 + 2 alpha_2 + alpha_3, A_3
    BChain,         // alpha_1 + ... + alpha_n, B_n
    BChainDoubled,  // 2 alpha_1 + ... + 2 alpha_n, B_n
    B3,             // alpha_1 + 2 alpha_2 + 3 alpha_3
    CChain1,        // alpha_1 + 2 alpha_2 + ... + 2 alpha_{n-1} + alpha_n, alpha_1 not in S^p
    CChain2,        // same root, alpha_1 in S^p
    DChain,         // 2 alpha_1 + ... + 2 alpha_{n-2} + alpha_{n-1} + alpha_n
    F4,             // alpha_1 + 2 alpha_2 + 3 alpha_3 + 2 alpha_4
    G2Sum,          // alpha_1 + alpha_2
    G2Doubled,      // 4 alpha_1 + 2 alpha_2
};

inline constexpr PatternKind kAllPatternKinds[] = {
    PatternKind::Simple, PatternKind::Double,  PatternKind::OrthogonalSum, PatternKind::AChain,
    PatternKind::D3,     PatternKind::BChain,  PatternKind::BChainDoubled, PatternKind::B3,
    PatternKind::CChain1, PatternKind::CChain2, PatternKind::DChain,       PatternKind::F4,
    PatternKind::G2Sum,  PatternKind::G2Doubled,
};

const char* pattern_name(PatternKind k);
std::optional<PatternKind> parse_pattern(const std::string& name);

struct ColorSlot {
    std::size_t position;
    std::int64_t pairing;
};

struct SphericalRootPattern {
    PatternKind kind;
    std::size_t support_size;
    IntMatrix cartan;  // of the support, Bourbaki order
    IntVector coeffs;
    std::vector<std::size_t> sp_pattern;
    std::vector<ColorSlot> color_slots;
    std::int64_t coefficient;
};

// Smallest and largest admissible support size for a kind.
std::size_t min_support(PatternKind k);
std::size_t max_support(PatternKind k);  // 0 = unbounded

// Throws ParameterOutOfRange when n is not admissible for k.
SphericalRootPattern make_pattern(PatternKind k, std::size_t n);

struct SphericalRoot {
    PatternKind kind = PatternKind::Simple;
    std::vector<std::size_t> embedding;  // pattern position -> ambient simple root
    Root coeffs;                         // expanded over ambient simple roots

    IndexSet support() const;
    bool operator==(const SphericalRoot& o) const { return kind == o.kind && coeffs == o.coeffs; }
};

// Builds a root from an explicit embedding; BadEmbedding when the induced
// subdiagram does not match the pattern.
SphericalRoot embed(const RootSystem& rs, PatternKind k, const std::vector<std::size_t>& embedding);

Root expand(const RootSystem& rs, const SphericalRoot& root);

// Finds a pattern and embedding producing coeffs. When kind is given only that
// kind is tried; sp disambiguates the two C-chain kinds.
std::optional<SphericalRoot> recognize(const RootSystem& rs, const Root& coeffs,
                                       std::optional<PatternKind> kind = std::nullopt,
                                       const IndexSet* sp = nullptr);

bool is_compatible(const RootSystem& rs, const SphericalRoot& root, const IndexSet& sp);

// Luna's m_D for colors moved by alpha: 1 if alpha or 2 alpha is in sigma,
// otherwise <alpha^vee, 2 rho_S - 2 rho_{S^p}>.
std::int64_t anticanonical_coefficient(const RootSystem& rs, const IndexSet& sp, std::size_t alpha,
                                       const std::vector<SphericalRoot>& sigma);

}  // namespace sph
