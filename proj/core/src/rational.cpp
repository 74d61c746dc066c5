#include "sph/rational.hpp"

#include <sstream>

namespace sph {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::UnboundedPolytope: return "UnboundedPolytope";
        case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
        case ErrorCode::OriginNotInterior: return "OriginNotInterior";
        case ErrorCode::NotAVertex: return "NotAVertex";
        case ErrorCode::BadEmbedding: return "BadEmbedding";
        case ErrorCode::SubsetNotInDelta: return "SubsetNotInDelta";
        case ErrorCode::InvalidSkeleton: return "InvalidSkeleton";
        case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
        case ErrorCode::NoSupportedVertices: return "NoSupportedVertices";
        case ErrorCode::NotQFactorial: return "NotQFactorial";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::SchemaViolation: return "SchemaViolation";
    }
    return "Unknown";
}

Rational make_rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator");
    Rational q(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw Error(ErrorCode::ParseError, "empty rational");
    auto slash = text.find('/');
    auto valid_int = [](const std::string& s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i >= s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
        throw Error(ErrorCode::ParseError, "bad rational '" + text + "'");
    if (num[0] == '+') num.erase(0, 1);
    mpz_class d(den);
    if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + text + "'");
    Rational q(mpz_class(num), d);
    q.canonicalize();
    return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::int64_t to_int64(const Rational& q) {
    if (!is_integer(q) || !q.get_num().fits_slong_p())
        throw Error(ErrorCode::ParseError, "not a machine integer: " + to_string(q));
    return q.get_num().get_si();
}

RatVector to_rat(const IntVector& v) {
    RatVector out;
    out.reserve(v.size());
    for (auto x : v) out.emplace_back(static_cast<long>(x));
    return out;
}

RatMatrix to_rat(const IntMatrix& m) {
    RatMatrix out;
    out.reserve(m.size());
    for (const auto& row : m) out.push_back(to_rat(row));
    return out;
}

Rational dot(const RatVector& a, const RatVector& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) s += a[i] * b[i];
    return s;
}

RatVector add(const RatVector& a, const RatVector& b) {
    RatVector out(a);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
}

RatVector sub(const RatVector& a, const RatVector& b) {
    RatVector out(a);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
    return out;
}

RatVector scale(const Rational& s, const RatVector& v) {
    RatVector out(v);
    for (auto& x : out) x *= s;
    return out;
}

RatVector mat_vec(const RatMatrix& m, const RatVector& v) {
    RatVector out;
    out.reserve(m.size());
    for (const auto& row : m) out.push_back(dot(row, v));
    return out;
}

RatMatrix transpose(const RatMatrix& m) {
    if (m.empty()) return {};
    RatMatrix t(m[0].size(), RatVector(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

RatVector zeros(std::size_t n) { return RatVector(n, Rational(0)); }

RatVector unit(std::size_t n, std::size_t i) {
    RatVector v = zeros(n);
    v[i] = 1;
    return v;
}

std::string to_string(const RatVector& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << to_string(v[i]);
    os << ')';
    return os.str();
}

std::size_t rank(RatMatrix m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size(), r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            Rational f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

bool solve_square(RatMatrix m, RatVector rhs, RatVector& x) {
    std::size_t n = m.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) return false;
        std::swap(m[piv], m[c]);
        std::swap(rhs[piv], rhs[c]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m[i][c] == 0) continue;
            Rational f = m[i][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
            rhs[i] -= f * rhs[c];
        }
    }
    x.assign(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
    return true;
}

}  // namespace sph
