#pragma once

// Exact rational LP feasibility by the two-phase simplex method (phase one
// only), with Bland's pivoting rule. Infeasible systems come back with a
// Farkas certificate that callers can re-check by substitution.

#include "branchdec/rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace branchdec {

enum class Relation { less_equal, equal, greater_equal };

struct LinearConstraint {
    std::vector<Rational> coeffs;
    Relation relation = Relation::equal;
    Rational rhs = 0;
};

struct LinearProgram {
    std::size_t num_vars = 0;
    /// Variables not listed here are sign-unrestricted when true.
    std::vector<bool> free_var;
    std::vector<LinearConstraint> rows;

    explicit LinearProgram(std::size_t n = 0) : num_vars(n), free_var(n, false) {}

    std::size_t add_var(bool is_free) {
        free_var.push_back(is_free);
        for (auto& r : rows) r.coeffs.emplace_back(0);
        return num_vars++;
    }

    void add_row(std::vector<Rational> coeffs, Relation rel, Rational rhs) {
        if (coeffs.size() != num_vars) throw DimensionMismatch(coeffs.size(), num_vars);
        rows.push_back({std::move(coeffs), rel, std::move(rhs)});
    }
};

struct Feasibility {
    bool feasible = false;
    /// A feasible point (feasible == true).
    std::vector<Rational> point;
    /// Row multipliers y with y.b > 0 contradicting every feasible point (feasible == false).
    std::vector<Rational> farkas;
};

/// Re-checks a Farkas certificate against the program, independently of the solver.
inline bool certifies_infeasible(const LinearProgram& lp, const std::vector<Rational>& y) {
    if (y.size() != lp.rows.size()) return false;
    Rational yb = 0;
    for (std::size_t i = 0; i < lp.rows.size(); ++i) {
        yb += y[i] * lp.rows[i].rhs;
        if (lp.rows[i].relation == Relation::less_equal && y[i] > 0) return false;
        if (lp.rows[i].relation == Relation::greater_equal && y[i] < 0) return false;
    }
    if (yb <= 0) return false;
    for (std::size_t j = 0; j < lp.num_vars; ++j) {
        Rational s = 0;
        for (std::size_t i = 0; i < lp.rows.size(); ++i) s += y[i] * lp.rows[i].coeffs[j];
        if (lp.free_var[j] ? s != 0 : s > 0) return false;
    }
    return true;
}

inline bool satisfies(const LinearProgram& lp, const std::vector<Rational>& x) {
    if (x.size() != lp.num_vars) return false;
    for (std::size_t j = 0; j < lp.num_vars; ++j)
        if (!lp.free_var[j] && x[j] < 0) return false;
    for (const auto& r : lp.rows) {
        Rational s = 0;
        for (std::size_t j = 0; j < lp.num_vars; ++j) s += r.coeffs[j] * x[j];
        switch (r.relation) {
            case Relation::less_equal:
                if (s > r.rhs) return false;
                break;
            case Relation::equal:
                if (s != r.rhs) return false;
                break;
            case Relation::greater_equal:
                if (s < r.rhs) return false;
                break;
        }
    }
    return true;
}

inline Feasibility solve_feasibility(const LinearProgram& lp) {
    const std::size_t m = lp.rows.size();

    // Standard form columns: x_j (or x_j^+, x_j^-), then one slack per inequality.
    struct Column {
        std::size_t var;
        int sign;  // contribution to the original variable
    };
    std::vector<Column> columns;
    for (std::size_t j = 0; j < lp.num_vars; ++j) {
        columns.push_back({j, 1});
        if (lp.free_var[j]) columns.push_back({j, -1});
    }
    const std::size_t nstruct = columns.size();
    std::vector<std::size_t> slack_row;
    for (std::size_t i = 0; i < m; ++i)
        if (lp.rows[i].relation != Relation::equal) slack_row.push_back(i);
    const std::size_t n = nstruct + slack_row.size();
    const std::size_t width = n + m + 1;  // + artificials + rhs

    RationalMatrix t(m, std::vector<Rational>(width, Rational(0)));
    std::vector<int> row_flip(m, 1);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t c = 0; c < nstruct; ++c) t[i][c] = columns[c].sign * lp.rows[i].coeffs[columns[c].var];
        t[i][width - 1] = lp.rows[i].rhs;
    }
    for (std::size_t s = 0; s < slack_row.size(); ++s) {
        const std::size_t i = slack_row[s];
        t[i][nstruct + s] = lp.rows[i].relation == Relation::less_equal ? 1 : -1;
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (t[i][width - 1] < 0) {
            row_flip[i] = -1;
            for (std::size_t c = 0; c < n; ++c) t[i][c] = -t[i][c];
            t[i][width - 1] = -t[i][width - 1];
        }
        t[i][n + i] = 1;
    }

    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

    // Reduced costs of the phase-one objective (sum of artificials).
    std::vector<Rational> reduced(width, Rational(0));
    for (std::size_t c = 0; c < width; ++c) {
        Rational s = c >= n && c < n + m ? Rational(1) : Rational(0);
        for (std::size_t i = 0; i < m; ++i) s -= t[i][c];
        reduced[c] = s;
    }
    // reduced[width-1] holds minus the objective value.

    while (true) {
        std::size_t enter = width;
        for (std::size_t c = 0; c + 1 < width; ++c) {
            if (reduced[c] < 0) {
                enter = c;
                break;
            }
        }
        if (enter == width) break;
        std::size_t leave = m;
        Rational best;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            Rational ratio = t[i][width - 1] / t[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) throw std::logic_error("phase-one objective unbounded");
        const Rational piv = t[leave][enter];
        for (auto& x : t[leave]) x /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            const Rational f = t[i][enter];
            for (std::size_t c = 0; c < width; ++c) t[i][c] -= f * t[leave][c];
        }
        if (reduced[enter] != 0) {
            const Rational f = reduced[enter];
            for (std::size_t c = 0; c < width; ++c) reduced[c] -= f * t[leave][c];
        }
        basis[leave] = enter;
    }

    Feasibility out;
    const Rational objective = -reduced[width - 1];
    if (objective > 0) {
        out.feasible = false;
        out.farkas.resize(m);
        for (std::size_t i = 0; i < m; ++i) out.farkas[i] = row_flip[i] * (1 - reduced[n + i]);
        return out;
    }
    out.feasible = true;
    std::vector<Rational> value(n + m, Rational(0));
    for (std::size_t i = 0; i < m; ++i) value[basis[i]] = t[i][width - 1];
    out.point.assign(lp.num_vars, Rational(0));
    for (std::size_t c = 0; c < nstruct; ++c) out.point[columns[c].var] += columns[c].sign * value[c];
    return out;
}

}  // namespace branchdec
