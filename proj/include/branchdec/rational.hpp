#pragma once

// Exact rational scalars, coordinate vectors and the small amount of dense
// linear algebra the rest of the library needs (rank, kernels, projections).

#include "branchdec/errors.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace branchdec {

using Rational = mpq_class;

/// Parses "p", "-p", "p/q" (surrounding blanks allowed). The result is canonical.
inline Rational parse_rational(std::string_view text) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty rational");
    auto valid_integer = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    const auto slash = text.find('/');
    std::string num(text.substr(0, slash));
    std::string den = slash == std::string_view::npos ? std::string("1") : std::string(text.substr(slash + 1));
    if (!valid_integer(num) || !valid_integer(den) || den.front() == '-' || den.front() == '+')
        throw ParseError("malformed rational '" + std::string(text) + "'");
    if (num.front() == '+') num.erase(0, 1);
    mpz_class n(num, 10);
    mpz_class d(den, 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

/// "p/q", or "p" when the denominator is one.
inline std::string format_rational(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

class RationalVector {
public:
    RationalVector() = default;
    explicit RationalVector(std::size_t dim) : coords_(dim, Rational(0)) {}
    explicit RationalVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}
    RationalVector(std::initializer_list<Rational> coords) : coords_(coords) {}

    static RationalVector from_ints(std::initializer_list<long> values) {
        RationalVector v;
        v.coords_.reserve(values.size());
        for (long x : values) v.coords_.emplace_back(x);
        return v;
    }

    static RationalVector unit(std::size_t dim, std::size_t i) {
        RationalVector v(dim);
        v[i] = 1;
        return v;
    }

    std::size_t dim() const { return coords_.size(); }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    Rational& operator[](std::size_t i) { return coords_[i]; }
    std::span<const Rational> coords() const { return coords_; }
    auto begin() const { return coords_.begin(); }
    auto end() const { return coords_.end(); }

    bool is_zero() const {
        return std::all_of(coords_.begin(), coords_.end(), [](const Rational& x) { return x == 0; });
    }

    RationalVector& operator+=(const RationalVector& o) {
        check_dim(o);
        for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
        return *this;
    }
    RationalVector& operator-=(const RationalVector& o) {
        check_dim(o);
        for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
        return *this;
    }
    RationalVector& operator*=(const Rational& c) {
        for (auto& x : coords_) x *= c;
        return *this;
    }

    friend RationalVector operator+(RationalVector a, const RationalVector& b) { return a += b; }
    friend RationalVector operator-(RationalVector a, const RationalVector& b) { return a -= b; }
    friend RationalVector operator*(const Rational& c, RationalVector a) { return a *= c; }
    friend RationalVector operator-(RationalVector a) {
        for (auto& x : a.coords_) x = -x;
        return a;
    }

    friend bool operator==(const RationalVector& a, const RationalVector& b) { return a.coords_ == b.coords_; }
    friend std::strong_ordering operator<=>(const RationalVector& a, const RationalVector& b) {
        const std::size_t n = std::min(a.dim(), b.dim());
        for (std::size_t i = 0; i < n; ++i) {
            if (a[i] < b[i]) return std::strong_ordering::less;
            if (b[i] < a[i]) return std::strong_ordering::greater;
        }
        return a.dim() <=> b.dim();
    }

    /// Positive iff the first nonzero coordinate is positive.
    int lex_sign() const {
        for (const auto& x : coords_) {
            if (x != 0) return sgn(x);
        }
        return 0;
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (i) s += ",";
            s += format_rational(coords_[i]);
        }
        return s + ")";
    }

    friend std::ostream& operator<<(std::ostream& os, const RationalVector& v) { return os << v.to_string(); }

private:
    void check_dim(const RationalVector& o) const {
        if (o.dim() != dim()) throw DimensionMismatch(dim(), o.dim());
    }

    std::vector<Rational> coords_;
};

/// Standard Euclidean form in the coordinate model.
inline Rational inner_product(const RationalVector& v, const RationalVector& w) {
    if (v.dim() != w.dim()) throw DimensionMismatch(v.dim(), w.dim());
    Rational s = 0;
    for (std::size_t i = 0; i < v.dim(); ++i) s += v[i] * w[i];
    return s;
}

/// Comma separated list of rationals, e.g. "1,1,-1,-1" or "1/2,0,-1/2".
inline RationalVector parse_vector(std::string_view text) {
    std::vector<Rational> coords;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        coords.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? text.size() - start
                                                                                          : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return RationalVector(std::move(coords));
}

/// Rescales v to the primitive integer vector on the same ray (zero stays zero).
inline RationalVector primitive_integer(const RationalVector& v) {
    if (v.is_zero()) return v;
    mpz_class lcm_den = 1;
    for (const auto& x : v) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den_mpz_t());
    mpz_class gcd_num = 0;
    for (const auto& x : v) {
        mpz_class n = x.get_num() * (lcm_den / x.get_den());
        mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), n.get_mpz_t());
    }
    RationalVector out(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) out[i] = Rational(v[i].get_num() * (lcm_den / v[i].get_den()) / gcd_num);
    return out;
}

// ---------------------------------------------------------------------------
// Dense exact linear algebra. Matrices are row lists.

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<std::size_t> row_reduce(RationalMatrix& m, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[sel], m[row]);
        const Rational inv = 1 / m[row][col];
        for (auto& x : m[row]) x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            const Rational f = m[r][col];
            for (std::size_t c = 0; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline RationalMatrix rows_of(std::span<const RationalVector> vectors) {
    RationalMatrix m;
    m.reserve(vectors.size());
    for (const auto& v : vectors) m.emplace_back(v.begin(), v.end());
    return m;
}

inline std::size_t rank(std::span<const RationalVector> vectors) {
    if (vectors.empty()) return 0;
    auto m = rows_of(vectors);
    return row_reduce(m, vectors.front().dim()).size();
}

/// Basis of {x : v.x = 0 for all v}, in the ambient dimension `dim`.
inline std::vector<RationalVector> orthogonal_complement(std::span<const RationalVector> vectors, std::size_t dim) {
    auto m = rows_of(vectors);
    const auto pivots = row_reduce(m, dim);
    std::vector<bool> is_pivot(dim, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<RationalVector> basis;
    for (std::size_t free = 0; free < dim; ++free) {
        if (is_pivot[free]) continue;
        RationalVector v(dim);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// A basis (subset-free, echelon form) of span(vectors).
inline std::vector<RationalVector> span_basis(std::span<const RationalVector> vectors, std::size_t dim) {
    auto m = rows_of(vectors);
    const auto pivots = row_reduce(m, dim);
    std::vector<RationalVector> basis;
    for (std::size_t r = 0; r < pivots.size(); ++r) basis.emplace_back(m[r]);
    return basis;
}

/// Solves  sum_j x_j * columns[j] = target  if solvable.
inline std::optional<std::vector<Rational>> solve_combination(std::span<const RationalVector> columns,
                                                              const RationalVector& target) {
    const std::size_t n = columns.size();
    const std::size_t dim = target.dim();
    RationalMatrix m(dim, std::vector<Rational>(n + 1));
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = columns[j][i];
        m[i][n] = target[i];
    }
    const auto pivots = row_reduce(m, n + 1);
    if (!pivots.empty() && pivots.back() == n) return std::nullopt;
    std::vector<Rational> x(n, Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m[r][n];
    return x;
}

/// General linear system  A x = b  (rows of A given as vectors); any solution.
inline std::optional<RationalVector> solve_linear_system(std::span<const RationalVector> rows,
                                                         std::span<const Rational> rhs, std::size_t nvars) {
    RationalMatrix m;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::vector<Rational> row(rows[i].begin(), rows[i].end());
        row.push_back(rhs[i]);
        m.push_back(std::move(row));
    }
    const auto pivots = row_reduce(m, nvars + 1);
    if (!pivots.empty() && pivots.back() == nvars) return std::nullopt;
    RationalVector x(nvars);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m[r][nvars];
    return x;
}

/// Orthogonal projection of v onto span(basis); basis need not be orthogonal
/// but must be linearly independent.
inline RationalVector project_onto(const RationalVector& v, std::span<const RationalVector> basis) {
    RationalVector out(v.dim());
    if (basis.empty()) return out;
    const std::size_t k = basis.size();
    // Gram system G c = (b_i . v)
    std::vector<RationalVector> gram;
    std::vector<Rational> rhs;
    for (std::size_t i = 0; i < k; ++i) {
        RationalVector row(k);
        for (std::size_t j = 0; j < k; ++j) row[j] = inner_product(basis[i], basis[j]);
        gram.push_back(std::move(row));
        rhs.push_back(inner_product(basis[i], v));
    }
    auto c = solve_linear_system(gram, rhs, k);
    if (!c) throw std::logic_error("project_onto: dependent basis");
    for (std::size_t i = 0; i < k; ++i) out += (*c)[i] * basis[i];
    return out;
}

inline RationalVector apply(const RationalMatrix& m, const RationalVector& v) {
    if (!m.empty() && m.front().size() != v.dim()) throw DimensionMismatch(m.front().size(), v.dim());
    RationalVector out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < v.dim(); ++j) s += m[i][j] * v[j];
        out[i] = s;
    }
    return out;
}

}  // namespace branchdec
