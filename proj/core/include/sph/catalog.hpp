#pragma once

#include "sph/p_invariant.hpp"

#include <functional>
#include <optional>
#include <string>

namespace sph {

// A symmetric family with its parameters. family is one of
// 2, 3, 4, 5, 6, 8, 9, 10/11, 12, 13, 14, 15, 16/1, 16/2, 17, 18, ..., 30.
struct FamilySpec {
    std::string family;
    std::optional<SimpleType> type;  // family 2 only
    int l = -1;
    int m = -1;

    std::string params() const;  // "A3", "l=1,m=2", "" for fixed families
    std::string label() const;   // "2:A3", "3:l=1,m=2", "29"
    bool operator==(const FamilySpec&) const = default;
};

const std::vector<std::string>& family_names();

// "2:G2", "3:l=1,m=2", "5:m=4", "29", "29:F4".
FamilySpec parse_family_spec(const std::string& text);

// Throws ParameterOutOfRange outside the printed existence conditions.
void check_parameters(const FamilySpec& spec);

// Simple factor rank of the family's root system (for family 2, the rank of one factor).
std::size_t family_rank(const FamilySpec& spec);

// The skeleton with empty Gamma.
SphericalSkeleton generate(const FamilySpec& spec);

// generate(spec) plus one indicator divisor at gamma_index (1-based).
SphericalSkeleton mark(const FamilySpec& spec, std::size_t gamma_index);

// All parameter choices whose simple factors have rank <= max_rank; fixed families always.
std::vector<FamilySpec> enumerate_specs(std::size_t max_rank);

// Closed form or printed value of p for a single marking (1-based), if one is printed.
std::optional<Rational> expected_p(const FamilySpec& spec, std::size_t gamma_index);
std::optional<std::size_t> printed_bound(const FamilySpec& spec);

// Which of the four reference tables lists the family.
std::string table_group(const FamilySpec& spec);

// Marked vertex theta for the equality cases, if (spec, marking) is one of them.
std::optional<RatVector> equality_vertex(const FamilySpec& spec, std::size_t gamma_index);

std::string root_label(const SphericalRoot& r);  // "2a1+a2"

struct TableRow {
    std::string group;
    FamilySpec spec;
    std::size_t marking = 0;  // 1-based
    std::string marking_root;
    std::optional<Rational> expected;
    std::optional<std::size_t> printed_bound;
    PInvariantReport report;
    bool complete = false;
    bool valid = false;
    bool match = false;
    std::string error;
};

struct TablesReport {
    std::vector<TableRow> rows;
    std::size_t mismatches() const;
};

// Runs fn(i) for i < n on up to jobs worker threads (0 = hardware concurrency).
void parallel_for(std::size_t n, std::size_t jobs, const std::function<void(std::size_t)>& fn);

TablesReport verify_tables(std::size_t max_rank, std::size_t jobs = 0);

struct EqualityRow {
    FamilySpec spec;
    std::vector<std::size_t> markings;  // 1-based
    bool listed = false;                // single marking among the equality cases
    Rational p;
    bool finite = true;
    std::size_t bound = 0;
    RatVector theta;  // printed vertex, listed rows only
    bool theta_feasible = false;
    bool theta_attains = false;
    bool theta_vertex = false;
    bool pass = false;
};

struct EqualityReport {
    std::vector<EqualityRow> listed;   // equality cases
    std::vector<EqualityRow> strict;   // all other single markings
    std::vector<EqualityRow> pairs;    // two equality markings on one family
    std::size_t failures() const;
};

EqualityReport verify_equality_cases(std::size_t max_rank, std::size_t jobs = 0);

}  // namespace sph
