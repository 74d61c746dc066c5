#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sph {

// Exact rational backed by GMP; always canonical (lowest terms, positive denominator).
using Rational = mpq_class;
using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>;
using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;

enum class ErrorCode {
    UnboundedPolytope,
    DimensionTooLarge,
    OriginNotInterior,
    NotAVertex,
    BadEmbedding,
    SubsetNotInDelta,
    InvalidSkeleton,
    ParameterOutOfRange,
    NoSupportedVertices,
    NotQFactorial,
    ParseError,
    SchemaViolation,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

Rational make_rational(std::int64_t num, std::int64_t den = 1);

// "p/q" or "p" when the denominator is 1.
std::string to_string(const Rational& q);

// Accepts "p", "-p", "p/q".
Rational parse_rational(const std::string& text);

bool is_integer(const Rational& q);
std::int64_t to_int64(const Rational& q);

RatVector to_rat(const IntVector& v);
RatMatrix to_rat(const IntMatrix& m);

Rational dot(const RatVector& a, const RatVector& b);
RatVector add(const RatVector& a, const RatVector& b);
RatVector sub(const RatVector& a, const RatVector& b);
RatVector scale(const Rational& s, const RatVector& v);
RatVector mat_vec(const RatMatrix& m, const RatVector& v);
RatMatrix transpose(const RatMatrix& m);
RatVector zeros(std::size_t n);
RatVector unit(std::size_t n, std::size_t i);

std::string to_string(const RatVector& v);

// Rank over Q by Gaussian elimination.
std::size_t rank(RatMatrix m);

// Solves the square system m x = rhs; returns false when m is singular.
bool solve_square(RatMatrix m, RatVector rhs, RatVector& x);

}  // namespace sph
