#pragma once

#include "sph/spherical_roots.hpp"

#include <string>

namespace sph {

enum class ColorKind { PairPlus, PairMinus, Half, Around };

const char* to_string(ColorKind k);
std::optional<ColorKind> parse_color_kind(const std::string& s);

struct Color {
    std::string id;
    IndexSet moved_by;
    ColorKind kind = ColorKind::Around;
    IntVector pairings;  // <rho(D), gamma> over sigma
    std::int64_t m = 1;

    bool is_pair() const { return kind == ColorKind::PairPlus || kind == ColorKind::PairMinus; }
};

struct GammaDivisor {
    std::string id;
    IntVector pairings;  // entries <= 0, m = 1
};

// An arrow from the color D+ of alpha (alpha in sigma) to sigma[target]: <rho(D+), sigma[target]> = -1.
struct Arrow {
    std::size_t alpha;
    std::size_t target;
};

struct SphericalSkeleton {
    RootSystem root_system;
    std::vector<SphericalRoot> sigma;
    IndexSet sp;
    std::vector<Color> colors;
    std::vector<GammaDivisor> gamma;

    std::size_t delta_size() const { return colors.size() + gamma.size(); }
    std::vector<std::string> delta_ids() const;
    // Pairing rows of all of Delta, colors first.
    std::vector<IntVector> rows() const;
    std::vector<std::int64_t> coefficients() const;
};

// <alpha^vee, gamma> for gamma in sigma.
IntVector cartan_row(const RootSystem& rs, const std::vector<SphericalRoot>& sigma, std::size_t alpha);

std::string standard_color_id(const IndexSet& moved_by, ColorKind kind);

// Full color set of the spherically closed spherical system (sigma, sp, arrows).
std::vector<Color> reconstruct_colors(const RootSystem& rs, const std::vector<SphericalRoot>& sigma,
                                      const IndexSet& sp, const std::vector<Arrow>& arrows = {});

SphericalSkeleton make_skeleton(const RootSystem& rs, std::vector<SphericalRoot> sigma, IndexSet sp,
                                const std::vector<Arrow>& arrows = {}, std::vector<GammaDivisor> gamma = {});

struct Violation {
    std::string axiom;
    std::string witness;
};

std::vector<Violation> validate(const SphericalSkeleton& sk);
void require_valid(const SphericalSkeleton& sk);  // throws InvalidSkeleton

bool is_complete(const SphericalSkeleton& sk);

SphericalSkeleton product(const SphericalSkeleton& a, const SphericalSkeleton& b);

// Drops Gamma divisors with zero rows.
SphericalSkeleton normalize(const SphericalSkeleton& sk);

// n_gamma = -sum over Gamma of <rho(D), gamma>.
IntVector gamma_weights(const SphericalSkeleton& sk);
SphericalSkeleton elementary(const SphericalSkeleton& sk);
SphericalSkeleton reduced_elementary(const SphericalSkeleton& sk);

// Reduced elementary skeleton with one indicator divisor per marked sigma index.
SphericalSkeleton with_markings(const SphericalSkeleton& sk, const std::vector<std::size_t>& marked);

SphericalSkeleton localize(const SphericalSkeleton& sk, const std::set<std::string>& ids);

bool isomorphic(const SphericalSkeleton& a, const SphericalSkeleton& b);
bool equivalent(const SphericalSkeleton& a, const SphericalSkeleton& b);

// Relabels the skeleton along a Dynkin diagram automorphism (perm[i] = image of i).
SphericalSkeleton apply_automorphism(const SphericalSkeleton& sk, const std::vector<std::size_t>& perm);

}  // namespace sph
