#pragma once

// Subalgebras g' of g at the level of t-weights, and the involutions sigma
// (commuting with theta) that define symmetric pairs (g, g^sigma).

#include "branchdec/cone.hpp"
#include "branchdec/parabolic.hpp"
#include "branchdec/rational.hpp"
#include "branchdec/root_datum.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace branchdec {

class ValidationFailed : public std::runtime_error {
public:
    ValidationFailed(const std::string& what, std::vector<std::string> issues)
        : std::runtime_error(what + ": " + join(issues)), issues_(std::move(issues)) {}
    const std::vector<std::string>& issues() const { return issues_; }

private:
    static std::string join(const std::vector<std::string>& v) {
        std::string s;
        for (const auto& x : v) s += (s.empty() ? "" : "; ") + x;
        return s;
    }
    std::vector<std::string> issues_;
};

/// A basis vector of g'_C written in weight vectors of g_C: its support is a
/// set of weight entries of the base, all restricting to `cartan_weight` on t'.
struct EmbeddedVector {
    std::vector<WeightRef> support;
    int multiplicity = 1;
    RationalVector cartan_weight;
};

/// g' inside g: a Cartan part t' of t, extra zero-weight dimensions, and one
/// entry per root-vector family. Counting g' cap q is exact as long as the
/// supports are pairwise disjoint (validated).
struct SubalgebraDatum {
    DatumPtr base;
    std::string label;
    std::vector<RationalVector> cartan_basis;
    long zero_dim = 0;
    std::vector<EmbeddedVector> vectors;
    long declared_dim = 0;

    long computed_dim() const {
        long n = static_cast<long>(cartan_basis.size()) + zero_dim;
        for (const auto& v : vectors) n += v.multiplicity;
        return n;
    }

    template <class Pred>
    long count_where(Pred&& entry_ok) const {
        long n = static_cast<long>(cartan_basis.size()) + zero_dim;
        for (const auto& v : vectors)
            if (std::all_of(v.support.begin(), v.support.end(), entry_ok)) n += v.multiplicity;
        return n;
    }

    std::vector<std::string> validate() const {
        std::vector<std::string> issues;
        const auto& d = *base;
        for (const auto& b : cartan_basis)
            if (!d.in_t(b)) issues.push_back("Cartan vector " + b.to_string() + " is not in t");
        if (rank(cartan_basis) != cartan_basis.size()) issues.push_back("Cartan vectors are dependent");
        if (zero_dim < 0 || zero_dim > d.zero_weight_dim())
            issues.push_back("zero-weight dimension out of range");
        std::map<WeightRef, int> used;
        for (const auto& v : vectors) {
            if (v.support.empty()) {
                issues.push_back("empty support");
                continue;
            }
            for (const auto& r : v.support) {
                const auto& ws = d.weights(r.part);
                if (r.index >= ws.size()) {
                    issues.push_back("support references a missing weight");
                    continue;
                }
                used[r] += v.multiplicity;
                if (project_onto(ws[r.index].weight, cartan_basis) != v.cartan_weight)
                    issues.push_back("support weight " + ws[r.index].weight.to_string() +
                                     " does not restrict to " + v.cartan_weight.to_string());
            }
        }
        for (const auto& [r, n] : used)
            if (r.index < d.weights(r.part).size() && n > d.multiplicity(r))
                issues.push_back(std::string("weight ") + d.weight(r).to_string() + " in " + part_tag(r.part) +
                                 " is used by overlapping supports");
        if (computed_dim() != declared_dim)
            issues.push_back("dimension check: computed dim g' = " + std::to_string(computed_dim()) +
                             " but declared " + std::to_string(declared_dim));
        return issues;
    }
};

// ---------------------------------------------------------------------------

struct RestrictedRootSystem {
    std::vector<RationalVector> space_basis;
    WeightMultiset roots;
    WeightMultiset positive;
};

class InvolutionData {
public:
    DatumPtr base;
    std::string label;
    RationalMatrix matrix;
    /// Sign of sigma on the weight space of each sigma-fixed nonzero weight.
    std::map<std::pair<Part, RationalVector>, int> epsilon;
    int default_sign_k = 1;
    int default_sign_p = 1;
    long zero_weight_fixed_dim = 0;
    long declared_dim_gprime = 0;
    std::optional<WeightMultiset> expected_restricted_roots;

    RationalVector act(const RationalVector& w) const { return branchdec::apply(matrix, w); }

    int sign(Part part, const RationalVector& w) const {
        auto it = epsilon.find({part, w});
        if (it != epsilon.end()) return it->second;
        return part == Part::compact ? default_sign_k : default_sign_p;
    }

    /// Basis of t^{+sigma} (sign = 1) or t^{-sigma} (sign = -1).
    std::vector<RationalVector> eigenspace(int eigen_sign) const {
        const auto& d = *base;
        std::vector<RationalVector> rows = d.constraints;
        for (std::size_t i = 0; i < d.coord_dim; ++i) {
            RationalVector r(d.coord_dim);
            for (std::size_t j = 0; j < d.coord_dim; ++j) r[j] = matrix[i][j] - (i == j ? eigen_sign : 0);
            rows.push_back(std::move(r));
        }
        return orthogonal_complement(rows, d.coord_dim);
    }

    struct Counts {
        long pairs = 0, fixed_plus = 0, fixed_minus = 0;
    };

    Counts count_orbits() const {
        Counts c;
        const auto& d = *base;
        for (Part part : {Part::compact, Part::noncompact}) {
            for (const auto& e : d.weights(part)) {
                if (e.weight.is_zero()) continue;
                const auto image = act(e.weight);
                if (image == e.weight) {
                    (sign(part, e.weight) > 0 ? c.fixed_plus : c.fixed_minus) += e.multiplicity;
                } else if (e.weight < image) {
                    c.pairs += e.multiplicity;
                }
            }
        }
        return c;
    }

    long computed_dim_fixed() const {
        const auto c = count_orbits();
        return static_cast<long>(eigenspace(1).size()) + zero_weight_fixed_dim + c.pairs + c.fixed_plus;
    }

    long computed_dim_anti() const {
        const auto c = count_orbits();
        return static_cast<long>(eigenspace(-1).size()) + (base->zero_weight_dim() - zero_weight_fixed_dim) + c.pairs +
               c.fixed_minus;
    }
};

struct ValidationReport {
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

inline ValidationReport validate_involution(const InvolutionData& inv) {
    ValidationReport rep;
    auto fail = [&](std::string s) { rep.failures.push_back(std::move(s)); };
    const auto& d = *inv.base;
    const std::size_t n = d.coord_dim;
    if (inv.matrix.size() != n || std::any_of(inv.matrix.begin(), inv.matrix.end(),
                                              [&](const auto& row) { return row.size() != n; })) {
        fail("matrix shape: expected " + std::to_string(n) + "x" + std::to_string(n));
        return rep;
    }
    bool involutive = true, isometric = true;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Rational sq = 0, gram = 0;
            for (std::size_t k = 0; k < n; ++k) {
                sq += inv.matrix[i][k] * inv.matrix[k][j];
                gram += inv.matrix[k][i] * inv.matrix[k][j];
            }
            if (sq != (i == j ? 1 : 0)) involutive = false;
            if (gram != (i == j ? 1 : 0)) isometric = false;
        }
    }
    if (!involutive) fail("involution: matrix squared is not the identity");
    if (!isometric) fail("isometry: matrix does not preserve the inner product");
    for (const auto& b : d.t_basis())
        if (!d.in_t(inv.act(b))) fail("matrix does not preserve t");
    for (Part part : {Part::compact, Part::noncompact}) {
        for (const auto& e : d.weights(part)) {
            const auto image = inv.act(e.weight);
            if (d.weights(part).multiplicity_of(image) != e.multiplicity)
                fail(std::string("sigma does not permute Delta(") + part_tag(part) + ",t): " + e.weight.to_string() +
                     " -> " + image.to_string());
        }
    }
    for (const auto& [key, s] : inv.epsilon) {
        const auto& [part, w] = key;
        if (s != 1 && s != -1) fail("epsilon value must be +1 or -1 at " + w.to_string());
        if (d.weights(part).multiplicity_of(w) == 0)
            fail(std::string("epsilon keyed on a weight not in Delta(") + part_tag(part) + ",t): " + w.to_string());
        else if (!(inv.act(w) == w))
            fail("epsilon keyed on a weight not fixed by sigma: " + w.to_string());
    }
    if (inv.zero_weight_fixed_dim < 0 || inv.zero_weight_fixed_dim > d.zero_weight_dim())
        fail("zero-weight fixed dimension out of range");
    if (!rep.ok()) return rep;

    const long computed = inv.computed_dim_fixed();
    if (computed != inv.declared_dim_gprime)
        fail("dimension check: computed dim g^sigma = " + std::to_string(computed) + " but declared " +
             std::to_string(inv.declared_dim_gprime));
    if (computed + inv.computed_dim_anti() != d.declared_dim_g)
        fail("dimension check: dim g^sigma + dim g^-sigma != dim g");

    // A compact root vanishing on t^{-sigma} must have its root space inside
    // k^sigma, otherwise t^{-sigma} is not maximal abelian in k^{-sigma}.
    const auto anti = inv.eigenspace(-1);
    for (const auto& e : d.compact_weights) {
        if (!project_onto(e.weight, anti).is_zero()) continue;
        if (!(inv.act(e.weight) == e.weight) || inv.sign(Part::compact, e.weight) != 1)
            fail("maximality: compact root " + e.weight.to_string() +
                 " vanishes on t^-sigma but its root space is not fixed by sigma");
    }
    return rep;
}

inline void require_valid(const InvolutionData& inv) {
    auto rep = validate_involution(inv);
    if (!rep.ok()) throw ValidationFailed("involution '" + inv.label + "' failed validation", rep.failures);
}

/// The same involution in the general subalgebra model: t' = t^sigma; one
/// vector per sigma-orbit {w, sigma w} and per fixed weight with sign +1.
inline SubalgebraDatum to_subalgebra(const InvolutionData& inv) {
    SubalgebraDatum s;
    s.base = inv.base;
    s.label = inv.label;
    s.cartan_basis = inv.eigenspace(1);
    s.zero_dim = inv.zero_weight_fixed_dim;
    s.declared_dim = inv.declared_dim_gprime;
    const auto& d = *inv.base;
    for (Part part : {Part::compact, Part::noncompact}) {
        const auto& ws = d.weights(part);
        for (std::size_t i = 0; i < ws.size(); ++i) {
            const auto& w = ws[i].weight;
            if (w.is_zero()) continue;
            const auto image = inv.act(w);
            const auto cw = project_onto(w, s.cartan_basis);
            if (image == w) {
                if (inv.sign(part, w) > 0) s.vectors.push_back({{{part, i}}, ws[i].multiplicity, cw});
            } else if (w < image) {
                auto j = ws.find(image);
                if (!j) continue;  // rejected by validation
                s.vectors.push_back({{{part, i}, {part, *j}}, ws[i].multiplicity, cw});
            }
        }
    }
    return s;
}

inline InvolutionData build_theta_involution(const DatumPtr& base) {
    InvolutionData inv;
    inv.base = base;
    inv.label = "theta:" + base->name;
    inv.matrix.assign(base->coord_dim, std::vector<Rational>(base->coord_dim, Rational(0)));
    for (std::size_t i = 0; i < base->coord_dim; ++i) inv.matrix[i][i] = 1;
    inv.default_sign_k = 1;
    inv.default_sign_p = -1;
    inv.zero_weight_fixed_dim = 0;
    inv.declared_dim_gprime = static_cast<long>(base->dim_t) + base->compact_weights.total();
    return inv;
}

/// Group case: base = g1 + g1 and sigma swaps the two copies.
inline InvolutionData build_swap_involution(const DatumPtr& base) {
    const auto& sm = base->summands;
    const std::size_t half = sm.size() / 2;
    bool ok = sm.size() >= 2 && sm.size() % 2 == 0 && base->coord_dim % 2 == 0;
    for (std::size_t i = 0; ok && i < half; ++i)
        ok = sm[i].name == sm[i + half].name && sm[i].size == sm[i + half].size;
    if (!ok) throw CatalogError("swap involution needs a datum of the form g1 + g1, got " + base->name);
    const std::size_t n = base->coord_dim / 2;
    InvolutionData inv;
    inv.base = base;
    std::string single;
    for (std::size_t i = 0; i < half; ++i) single += (i ? "+" : "") + sm[i].name;
    inv.label = "swap:" + (half > 1 ? "(" + single + ")" : single) + "^2";
    inv.matrix.assign(2 * n, std::vector<Rational>(2 * n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        inv.matrix[i][n + i] = 1;
        inv.matrix[n + i][i] = 1;
    }
    inv.zero_weight_fixed_dim = base->zero_weight_dim() / 2;
    inv.declared_dim_gprime = base->declared_dim_g / 2;
    return inv;
}

inline RestrictedRootSystem restricted_roots(const InvolutionData& inv) {
    require_valid(inv);
    RestrictedRootSystem rs;
    rs.space_basis = inv.eigenspace(-1);
    for (const auto& e : inv.base->compact_weights) {
        auto r = project_onto(e.weight, rs.space_basis);
        if (r.is_zero()) continue;
        rs.roots.add(r, e.multiplicity);
        if (r.lex_sign() > 0) rs.positive.add(r, e.multiplicity);
    }
    return rs;
}

/// Simple roots of a positive system: the positive roots that are not sums of two positive roots.
inline std::vector<RationalVector> simple_roots(const WeightMultiset& positive) {
    std::vector<RationalVector> simple;
    for (const auto& a : positive) {
        bool decomposable = false;
        for (const auto& b : positive) {
            if (positive.multiplicity_of(a.weight - b.weight) > 0) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) simple.push_back(a.weight);
    }
    return simple;
}

/// Dominant chamber of the restricted root system inside t^{-sigma}.
inline Cone momentum_chamber(const InvolutionData& inv) {
    const auto rs = restricted_roots(inv);
    const std::size_t dim = inv.base->coord_dim;
    Cone chamber(dim);
    std::vector<RationalVector> root_list;
    for (const auto& e : rs.roots) root_list.push_back(e.weight);
    // Lineality: t^{-sigma} orthogonal to all restricted roots.
    {
        std::vector<RationalVector> rows = root_list;
        for (const auto& c : orthogonal_complement(rs.space_basis, dim)) rows.push_back(c);
        for (auto& l : orthogonal_complement(rows, dim)) chamber.add_lineality(std::move(l));
    }
    if (root_list.empty()) return chamber;
    const auto simple = simple_roots(rs.positive);
    if (simple.size() != rank(root_list))
        throw std::logic_error("restricted positive system has " + std::to_string(simple.size()) +
                               " simple roots for rank " + std::to_string(rank(root_list)));
    // Fundamental coweights: v_i in span(simple) with v_i . a_j = delta_ij.
    for (std::size_t i = 0; i < simple.size(); ++i) {
        std::vector<RationalVector> rows;
        std::vector<Rational> rhs;
        for (std::size_t j = 0; j < simple.size(); ++j) {
            RationalVector row(simple.size());
            for (std::size_t k = 0; k < simple.size(); ++k) row[k] = inner_product(simple[j], simple[k]);
            rows.push_back(std::move(row));
            rhs.emplace_back(i == j ? 1 : 0);
        }
        auto c = solve_linear_system(rows, rhs, simple.size());
        if (!c) throw std::logic_error("simple restricted roots are dependent");
        RationalVector v(dim);
        for (std::size_t k = 0; k < simple.size(); ++k) v += (*c)[k] * simple[k];
        chamber.add_generator(std::move(v));
    }
    return chamber;
}

inline void require_same_base(const SubalgebraDatum& sub, const ThetaStableParabolic& q) {
    if (!(sub.base == q.base_ptr() || *sub.base == q.base()))
        throw std::invalid_argument("subalgebra '" + sub.label + "' and parabolic live over different algebras");
}

inline long dim_gprime_cap_q(const SubalgebraDatum& sub, const ThetaStableParabolic& q) {
    require_same_base(sub, q);
    return sub.count_where([&](const WeightRef& r) { return q.in_q(r); });
}

inline long dim_gprime_cap_q(const InvolutionData& inv, const ThetaStableParabolic& q) {
    return dim_gprime_cap_q(to_subalgebra(inv), q);
}

}  // namespace branchdec
