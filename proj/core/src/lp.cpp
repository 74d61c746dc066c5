#include "sph/lp.hpp"

#include <optional>

namespace sph {

const char* to_string(LpStatus s) {
    switch (s) {
        case LpStatus::Optimal: return "optimal";
        case LpStatus::Unbounded: return "unbounded";
        case LpStatus::Infeasible: return "infeasible";
    }
    return "unknown";
}

namespace {

// Columns: n structural, m slack, k artificial; last column is the rhs.
struct Tableau {
    std::size_t m = 0, n = 0, k = 0;
    RatMatrix rows;
    std::vector<std::size_t> basis;
    RatVector cost;   // cost per column (maximization)
    RatVector zrow;   // reduced costs c_B B^-1 a_j - c_j, last entry = objective value
    std::size_t pivots = 0;

    std::size_t cols() const { return n + m + k; }

    void reprice() {
        zrow.assign(cols() + 1, Rational(0));
        for (std::size_t j = 0; j <= cols(); ++j) {
            Rational s = 0;
            for (std::size_t i = 0; i < m; ++i)
                if (rows[i][j] != 0 && cost[basis[i]] != 0) s += cost[basis[i]] * rows[i][j];
            zrow[j] = j < cols() ? s - cost[j] : s;
        }
    }

    void pivot(std::size_t r, std::size_t c) {
        Rational pv = rows[r][c];
        for (auto& x : rows[r]) x /= pv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rational f = rows[i][c];
            for (std::size_t j = 0; j <= cols(); ++j)
                if (rows[r][j] != 0) rows[i][j] -= f * rows[r][j];
        }
        if (zrow[c] != 0) {
            Rational f = zrow[c];
            for (std::size_t j = 0; j <= cols(); ++j)
                if (rows[r][j] != 0) zrow[j] -= f * rows[r][j];
        }
        basis[r] = c;
        ++pivots;
    }

    // Returns the entering column of an unbounded ray, or nullopt at optimality.
    std::optional<std::size_t> run(std::size_t usable_cols) {
        for (;;) {
            std::optional<std::size_t> enter;
            for (std::size_t j = 0; j < usable_cols; ++j)
                if (zrow[j] < 0) { enter = j; break; }
            if (!enter) return std::nullopt;
            std::optional<std::size_t> leave;
            Rational best;
            for (std::size_t i = 0; i < m; ++i) {
                if (rows[i][*enter] <= 0) continue;
                Rational ratio = rows[i][cols()] / rows[i][*enter];
                if (!leave || ratio < best || (ratio == best && basis[i] < basis[*leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (!leave) return enter;
            pivot(*leave, *enter);
        }
    }
};

}  // namespace

LpResult solve(const LpProblem& p) {
    const std::size_t m = p.A.size(), n = p.c.size();
    for (const auto& row : p.A)
        if (row.size() != n) throw Error(ErrorCode::ParseError, "LP row length mismatch");
    if (p.b.size() != m) throw Error(ErrorCode::ParseError, "LP rhs length mismatch");

    Tableau t;
    t.m = m;
    t.n = n;
    std::vector<std::size_t> neg;
    for (std::size_t i = 0; i < m; ++i)
        if (p.b[i] < 0) neg.push_back(i);
    t.k = neg.size();
    t.rows.assign(m, RatVector(t.cols() + 1, Rational(0)));
    t.basis.assign(m, 0);
    std::size_t art = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const bool flip = p.b[i] < 0;
        for (std::size_t j = 0; j < n; ++j) t.rows[i][j] = flip ? Rational(-p.A[i][j]) : p.A[i][j];
        t.rows[i][n + i] = flip ? -1 : 1;
        t.rows[i][t.cols()] = flip ? Rational(-p.b[i]) : p.b[i];
        if (flip) {
            t.rows[i][n + m + art] = 1;
            t.basis[i] = n + m + art;
            ++art;
        } else {
            t.basis[i] = n + i;
        }
    }

    LpResult res;
    if (t.k > 0) {
        // phase 1: maximize minus the sum of artificials
        t.cost.assign(t.cols(), Rational(0));
        for (std::size_t a = 0; a < t.k; ++a) t.cost[n + m + a] = -1;
        t.reprice();
        t.run(t.cols());
        if (t.zrow[t.cols()] < 0) {
            res.status = LpStatus::Infeasible;
            res.pivots = t.pivots;
            return res;
        }
        // drive degenerate artificials out of the basis
        for (std::size_t i = 0; i < m; ++i) {
            if (t.basis[i] < n + m) continue;
            for (std::size_t j = 0; j < n + m; ++j) {
                if (t.rows[i][j] != 0) {
                    t.pivot(i, j);
                    break;
                }
            }
        }
    }

    t.cost.assign(t.cols(), Rational(0));
    for (std::size_t j = 0; j < n; ++j) t.cost[j] = p.c[j];
    t.reprice();
    auto ray_col = t.run(n + m);

    res.x = zeros(n);
    for (std::size_t i = 0; i < m; ++i)
        if (t.basis[i] < n) res.x[t.basis[i]] = t.rows[i][t.cols()];
    res.pivots = t.pivots;
    if (ray_col) {
        res.status = LpStatus::Unbounded;
        res.ray = zeros(n);
        if (*ray_col < n) res.ray[*ray_col] = 1;
        for (std::size_t i = 0; i < m; ++i)
            if (t.basis[i] < n) res.ray[t.basis[i]] = -t.rows[i][*ray_col];
        return res;
    }
    res.status = LpStatus::Optimal;
    res.value = dot(p.c, res.x);
    res.y = zeros(m);
    for (std::size_t i = 0; i < m; ++i) res.y[i] = t.zrow[n + i];
    return res;
}

bool dual_feasible(const LpProblem& p, const RatVector& y) {
    if (y.size() != p.A.size()) return false;
    for (const auto& v : y)
        if (v < 0) return false;
    for (std::size_t j = 0; j < p.c.size(); ++j) {
        Rational s = 0;
        for (std::size_t i = 0; i < p.A.size(); ++i) s += p.A[i][j] * y[i];
        if (s < p.c[j]) return false;
    }
    return true;
}

bool check_certificate(const LpProblem& p, const RatVector& x, const RatVector& y) {
    if (x.size() != p.c.size()) return false;
    for (const auto& v : x)
        if (v < 0) return false;
    for (std::size_t i = 0; i < p.A.size(); ++i)
        if (dot(p.A[i], x) > p.b[i]) return false;
    if (!dual_feasible(p, y)) return false;
    return dot(p.c, x) == dot(p.b, y);
}

bool check_certificate(const LpProblem& p, const LpResult& r) {
    if (r.status != LpStatus::Optimal) return false;
    return check_certificate(p, r.x, r.y) && r.value == dot(p.c, r.x);
}

}  // namespace sph
