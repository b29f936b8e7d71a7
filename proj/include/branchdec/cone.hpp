#pragma once

// Finitely generated convex cones over the rationals and exact decisions of
// whether two of them (or a cone and a subspace) share a nonzero point.

#include "branchdec/rational.hpp"
#include "branchdec/simplex.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace branchdec {

/// { sum c_i g_i + sum d_j l_j : c_i >= 0 }.
class Cone {
public:
    explicit Cone(std::size_t ambient_dim = 0) : ambient_dim_(ambient_dim) {}

    Cone(std::size_t ambient_dim, std::vector<RationalVector> generators, std::vector<RationalVector> lineality = {})
        : ambient_dim_(ambient_dim) {
        for (auto& g : generators) add_generator(std::move(g));
        for (auto& l : lineality) add_lineality(std::move(l));
    }

    void add_generator(RationalVector g) {
        if (g.dim() != ambient_dim_) throw DimensionMismatch(g.dim(), ambient_dim_);
        if (!g.is_zero()) generators_.push_back(std::move(g));
    }

    void add_lineality(RationalVector l) {
        if (l.dim() != ambient_dim_) throw DimensionMismatch(l.dim(), ambient_dim_);
        if (!l.is_zero()) lineality_.push_back(std::move(l));
    }

    std::size_t ambient_dim() const { return ambient_dim_; }
    const std::vector<RationalVector>& generators() const { return generators_; }
    const std::vector<RationalVector>& lineality() const { return lineality_; }
    bool is_zero() const { return generators_.empty() && lineality_.empty(); }

    /// Exact membership test (an LP).
    bool contains(const RationalVector& v) const {
        if (v.dim() != ambient_dim_) throw DimensionMismatch(v.dim(), ambient_dim_);
        LinearProgram lp;
        for (std::size_t i = 0; i < generators_.size(); ++i) lp.add_var(false);
        for (std::size_t i = 0; i < lineality_.size(); ++i) lp.add_var(true);
        for (std::size_t k = 0; k < ambient_dim_; ++k) {
            std::vector<Rational> row;
            for (const auto& g : generators_) row.push_back(g[k]);
            for (const auto& l : lineality_) row.push_back(l[k]);
            lp.add_row(std::move(row), Relation::equal, v[k]);
        }
        return solve_feasibility(lp).feasible;
    }

    /// Throws unless functional is strictly positive on every generator.
    void certify_pointed(const RationalVector& functional) const {
        if (!lineality_.empty()) throw PointednessError("cone with a lineality space is not pointed");
        for (const auto& g : generators_) {
            if (inner_product(functional, g) <= 0)
                throw PointednessError("pointedness certificate fails on generator " + g.to_string());
        }
    }

private:
    std::size_t ambient_dim_ = 0;
    std::vector<RationalVector> generators_;
    std::vector<RationalVector> lineality_;
};

struct IntersectionResult {
    bool meets = false;
    /// A nonzero common point (meets == true).
    std::optional<RationalVector> point;
    /// Convex weights on the first cone's generators producing `point`.
    std::vector<Rational> weights;
    /// A functional strictly positive on the first cone's generators that
    /// separates it from the other set (meets == false).
    std::optional<RationalVector> separator;
};

/// Does C meet span(subspace) outside the origin?  C must be pointed, certified by `functional`.
inline IntersectionResult cone_meets_subspace(const Cone& cone, const std::vector<RationalVector>& subspace,
                                              const RationalVector& functional) {
    cone.certify_pointed(functional);
    IntersectionResult out;
    const std::size_t dim = cone.ambient_dim();
    if (cone.generators().empty()) {
        // Vacuous: the zero functional annihilates the subspace and there is nothing to be positive on.
        out.separator = RationalVector(dim);
        return out;
    }
    for (const auto& w : subspace)
        if (w.dim() != dim) throw DimensionMismatch(w.dim(), dim);
    const auto normals = orthogonal_complement(subspace, dim);
    const auto& gens = cone.generators();

    LinearProgram lp(gens.size());
    lp.add_row(std::vector<Rational>(gens.size(), Rational(1)), Relation::equal, 1);
    for (const auto& n : normals) {
        std::vector<Rational> row;
        for (const auto& g : gens) row.push_back(inner_product(g, n));
        lp.add_row(std::move(row), Relation::equal, 0);
    }
    const auto res = solve_feasibility(lp);
    if (res.feasible) {
        out.meets = true;
        out.weights = res.point;
        RationalVector p(dim);
        for (std::size_t i = 0; i < gens.size(); ++i) p += res.point[i] * gens[i];
        out.point = std::move(p);
    } else {
        RationalVector s(dim);
        for (std::size_t j = 0; j < normals.size(); ++j) s -= res.farkas[j + 1] * normals[j];
        out.separator = std::move(s);
    }
    return out;
}

/// Does C1 meet C2 outside the origin?  C1 must be pointed (certified); C2 is arbitrary.
inline IntersectionResult cones_meet(const Cone& first, const RationalVector& first_functional, const Cone& second) {
    first.certify_pointed(first_functional);
    if (first.ambient_dim() != second.ambient_dim()) throw DimensionMismatch(first.ambient_dim(), second.ambient_dim());
    IntersectionResult out;
    const std::size_t dim = first.ambient_dim();
    const auto& g1 = first.generators();
    if (g1.empty()) {
        out.separator = RationalVector(dim);
        return out;
    }
    const auto& g2 = second.generators();
    const auto& l2 = second.lineality();

    LinearProgram lp;
    for (std::size_t i = 0; i < g1.size(); ++i) lp.add_var(false);
    for (std::size_t i = 0; i < g2.size(); ++i) lp.add_var(false);
    for (std::size_t i = 0; i < l2.size(); ++i) lp.add_var(true);
    {
        std::vector<Rational> row(lp.num_vars, Rational(0));
        for (std::size_t i = 0; i < g1.size(); ++i) row[i] = 1;
        lp.add_row(std::move(row), Relation::equal, 1);
    }
    for (std::size_t k = 0; k < dim; ++k) {
        std::vector<Rational> row;
        for (const auto& g : g1) row.push_back(g[k]);
        for (const auto& g : g2) row.push_back(-g[k]);
        for (const auto& l : l2) row.push_back(-l[k]);
        lp.add_row(std::move(row), Relation::equal, 0);
    }
    const auto res = solve_feasibility(lp);
    if (res.feasible) {
        out.meets = true;
        out.weights.assign(res.point.begin(), res.point.begin() + static_cast<std::ptrdiff_t>(g1.size()));
        RationalVector p(dim);
        for (std::size_t i = 0; i < g1.size(); ++i) p += res.point[i] * g1[i];
        out.point = std::move(p);
    } else {
        RationalVector s(dim);
        for (std::size_t k = 0; k < dim; ++k) s[k] = -res.farkas[k + 1];
        out.separator = std::move(s);
    }
    return out;
}

}  // namespace branchdec
