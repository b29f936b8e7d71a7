#pragma once

// theta-stable parabolic subalgebras q = l + u of g_C, cut out by the signs of
// the weights on a defining element X of sqrt(-1) t.

#include "branchdec/rational.hpp"
#include "branchdec/root_datum.hpp"
#include "branchdec/simplex.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace branchdec {

using DatumPtr = std::shared_ptr<const RootDatum>;

class ThetaStableParabolic {
public:
    ThetaStableParabolic(DatumPtr base, RationalVector x) : base_(std::move(base)), x_(std::move(x)) {
        const auto& d = *base_;
        if (x_.dim() != d.coord_dim) throw DimensionMismatch(x_.dim(), d.coord_dim);
        if (!d.in_t(x_)) throw std::invalid_argument("defining element " + x_.to_string() + " is not in t");
        for (Part part : {Part::compact, Part::noncompact}) {
            auto& signs = part == Part::compact ? sign_k_ : sign_p_;
            for (const auto& e : d.weights(part)) {
                const int s = sgn(inner_product(e.weight, x_));
                signs.push_back(s);
                auto& levi = part == Part::compact ? levi_compact_ : levi_noncompact_;
                auto& nil = part == Part::compact ? u_compact_ : u_noncompact_;
                if (s == 0) levi.add(e.weight, e.multiplicity);
                if (s > 0) nil.add(e.weight, e.multiplicity);
            }
        }
        rho_u_ = RationalVector(d.coord_dim);
        rho_u_ += u_compact_.sum(d.coord_dim);
        rho_u_ += u_noncompact_.sum(d.coord_dim);
        rho_u_ *= Rational(1, 2);
    }

    const RootDatum& base() const { return *base_; }
    const DatumPtr& base_ptr() const { return base_; }
    const RationalVector& defining_element() const { return x_; }

    /// Delta(l cap k) without zero, Delta(l cap p) with zero weights, Delta(u cap k), Delta(u cap p).
    const WeightMultiset& levi_compact() const { return levi_compact_; }
    const WeightMultiset& levi_noncompact() const { return levi_noncompact_; }
    const WeightMultiset& u_compact() const { return u_compact_; }
    const WeightMultiset& u_noncompact() const { return u_noncompact_; }
    const RationalVector& rho_u() const { return rho_u_; }
    long S() const { return u_compact_.total(); }

    /// -1 (in u-bar), 0 (in l), +1 (in u).
    int sign(WeightRef r) const { return r.part == Part::compact ? sign_k_[r.index] : sign_p_[r.index]; }
    bool in_levi(WeightRef r) const { return sign(r) == 0; }
    bool in_q(WeightRef r) const { return sign(r) >= 0; }

    long dim_u() const { return u_compact_.total() + u_noncompact_.total(); }
    long dim_levi() const {
        return static_cast<long>(base_->dim_t) + levi_compact_.total() + levi_noncompact_.total();
    }
    long dim_q() const { return dim_levi() + dim_u(); }

    /// Nonzero weights of l (compact and noncompact), with multiplicity entries.
    WeightMultiset levi_roots() const {
        WeightMultiset out;
        for (const auto& e : levi_compact_) out.add(e.weight, e.multiplicity);
        for (const auto& e : levi_noncompact_)
            if (!e.weight.is_zero()) out.add(e.weight, e.multiplicity);
        return out;
    }

    WeightMultiset u_weights() const {
        WeightMultiset out;
        for (const auto& e : u_compact_) out.add(e.weight, e.multiplicity);
        for (const auto& e : u_noncompact_) out.add(e.weight, e.multiplicity);
        return out;
    }

    ThetaStableParabolic opposite() const { return ThetaStableParabolic(base_, -x_); }

    /// Identity is the partition, not X.
    friend bool operator==(const ThetaStableParabolic& a, const ThetaStableParabolic& b) {
        return (a.base_ == b.base_ || *a.base_ == *b.base_) && a.sign_k_ == b.sign_k_ && a.sign_p_ == b.sign_p_;
    }

private:
    DatumPtr base_;
    RationalVector x_;
    std::vector<int> sign_k_, sign_p_;
    WeightMultiset levi_compact_, levi_noncompact_, u_compact_, u_noncompact_;
    RationalVector rho_u_;
};

inline ThetaStableParabolic build_parabolic(DatumPtr base, const RationalVector& x) {
    return ThetaStableParabolic(std::move(base), x);
}

// ---------------------------------------------------------------------------
// Face enumeration of the weight hyperplane arrangement inside t.

struct Hyperplane {
    RationalVector normal;  // primitive, lex-positive
    bool compact = false;   // normal direction occurs among the k weights
};

/// Distinct hyperplanes {w.X = 0} of the datum, sorted by normal.
inline std::vector<Hyperplane> weight_hyperplanes(const RootDatum& d) {
    std::vector<Hyperplane> hs;
    for (Part part : {Part::compact, Part::noncompact}) {
        for (const auto& e : d.weights(part)) {
            if (e.weight.is_zero()) continue;
            RationalVector n = primitive_integer(e.weight);
            if (n.lex_sign() < 0) n = -n;
            auto it = std::find_if(hs.begin(), hs.end(), [&](const Hyperplane& h) { return h.normal == n; });
            if (it == hs.end()) {
                hs.push_back({n, part == Part::compact});
            } else if (part == Part::compact) {
                it->compact = true;
            }
        }
    }
    std::sort(hs.begin(), hs.end(), [](const Hyperplane& a, const Hyperplane& b) { return a.normal < b.normal; });
    return hs;
}

inline constexpr std::size_t default_rank_bound = 7;

namespace detail {

struct AllowedSigns {
    bool negative = true, zero = true, positive = true;
};

/// Faces of the arrangement {h.X = 0} restricted to t, subject to per-hyperplane
/// sign restrictions. Each face comes back as (sign vector, representative X).
inline std::vector<std::pair<std::vector<int>, RationalVector>> enumerate_faces(
    const RootDatum& d, const std::vector<Hyperplane>& hs, const std::vector<AllowedSigns>& allowed) {
    const auto basis = d.t_basis();
    const std::size_t k = basis.size();
    struct Partial {
        std::vector<int> signs;
        LinearProgram lp;
        std::vector<Rational> point;
    };
    LinearProgram root(k);
    for (std::size_t i = 0; i < k; ++i) root.free_var[i] = true;
    std::vector<Partial> faces{{{}, root, std::vector<Rational>(k, Rational(0))}};
    for (std::size_t h = 0; h < hs.size(); ++h) {
        std::vector<Rational> coeffs;
        for (const auto& b : basis) coeffs.push_back(inner_product(hs[h].normal, b));
        std::vector<Partial> next;
        for (const auto& f : faces) {
            for (int s : {-1, 0, 1}) {
                if ((s < 0 && !allowed[h].negative) || (s == 0 && !allowed[h].zero) ||
                    (s > 0 && !allowed[h].positive))
                    continue;
                Partial child{f.signs, f.lp, {}};
                child.signs.push_back(s);
                if (s == 0) child.lp.add_row(coeffs, Relation::equal, 0);
                if (s > 0) child.lp.add_row(coeffs, Relation::greater_equal, 1);
                if (s < 0) child.lp.add_row(coeffs, Relation::less_equal, -1);
                auto res = solve_feasibility(child.lp);
                if (!res.feasible) continue;
                child.point = std::move(res.point);
                next.push_back(std::move(child));
            }
        }
        faces = std::move(next);
    }
    std::vector<std::pair<std::vector<int>, RationalVector>> out;
    for (const auto& f : faces) {
        RationalVector x(d.coord_dim);
        for (std::size_t i = 0; i < k; ++i) x += f.point[i] * basis[i];
        out.emplace_back(f.signs, primitive_integer(x));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

}  // namespace detail

/// One parabolic per face of the weight arrangement; with dominant_only, only
/// faces in the closed dominant chamber of the lex-positive system of Delta(k,t).
inline std::vector<ThetaStableParabolic> enumerate_parabolics(const DatumPtr& base, bool dominant_only,
                                                              std::size_t rank_bound = default_rank_bound) {
    if (base->dim_t > rank_bound) throw RankBoundExceeded(base->dim_t, rank_bound);
    const auto hs = weight_hyperplanes(*base);
    std::vector<detail::AllowedSigns> allowed(hs.size());
    if (dominant_only)
        for (std::size_t i = 0; i < hs.size(); ++i)
            if (hs[i].compact) allowed[i].negative = false;
    std::vector<ThetaStableParabolic> out;
    for (auto& [signs, x] : detail::enumerate_faces(*base, hs, allowed)) out.emplace_back(base, x);
    return out;
}

/// Parabolics q~ containing q (faces of the closure of the face of q).
inline std::vector<ThetaStableParabolic> coarsenings(const ThetaStableParabolic& q) {
    const auto& d = q.base();
    const auto hs = weight_hyperplanes(d);
    std::vector<detail::AllowedSigns> allowed(hs.size());
    for (std::size_t i = 0; i < hs.size(); ++i) {
        const int s = sgn(inner_product(hs[i].normal, q.defining_element()));
        allowed[i] = {s < 0, true, s > 0};
    }
    std::vector<ThetaStableParabolic> out;
    for (auto& [signs, x] : detail::enumerate_faces(d, hs, allowed)) out.emplace_back(q.base_ptr(), x);
    return out;
}

// ---------------------------------------------------------------------------
// Parameters.

enum class Convention { orbit, aq_shifted };

struct OrbitParameter {
    RationalVector lambda;
    Convention convention = Convention::orbit;
};

/// Sign function choosing a positive system; the default is lexicographic.
using PositivityRule = std::function<int(const RationalVector&)>;

inline int lex_positivity(const RationalVector& v) { return v.lex_sign(); }

namespace detail {

inline void check_parameter(const ThetaStableParabolic& q, const OrbitParameter& lam) {
    const auto& d = q.base();
    if (!d.equal_rank)
        throw UnsupportedError("parameter ranges need a fundamental Cartan; " + d.name + " is not of equal rank");
    if (lam.lambda.dim() != d.coord_dim) throw DimensionMismatch(lam.lambda.dim(), d.coord_dim);
    if (!d.in_t(lam.lambda)) throw std::invalid_argument("parameter " + lam.lambda.to_string() + " is not in t*");
    for (const auto& e : q.levi_roots())
        if (inner_product(lam.lambda, e.weight) != 0)
            throw std::invalid_argument("parameter does not vanish on the Levi root " + e.weight.to_string());
}

}  // namespace detail

/// Half the sum of the roots of l that are positive for `rule`.
inline RationalVector rho_levi(const ThetaStableParabolic& q, const PositivityRule& rule = lex_positivity) {
    RationalVector s(q.base().coord_dim);
    for (const auto& e : q.levi_roots()) {
        const int sg = rule(e.weight);
        if (sg == 0) throw std::invalid_argument("positivity rule is not generic on the Levi roots");
        if (sg > 0) s += Rational(e.multiplicity) * e.weight;
    }
    return Rational(1, 2) * s;
}

inline RationalVector to_orbit_convention(const ThetaStableParabolic& q, const OrbitParameter& lam) {
    return lam.convention == Convention::orbit ? lam.lambda : lam.lambda + q.rho_u();
}

/// <lambda + rho_l, alpha> > 0 for every alpha in Delta(u).
inline bool good_range(const ThetaStableParabolic& q, const OrbitParameter& lam,
                       const PositivityRule& rule = lex_positivity) {
    detail::check_parameter(q, lam);
    const RationalVector shifted = to_orbit_convention(q, lam) + rho_levi(q, rule);
    for (const auto& e : q.u_weights())
        if (inner_product(shifted, e.weight) <= 0) return false;
    return true;
}

/// <lambda_aq + rho(u), alpha> >= 0 for every alpha in Delta(u).
inline bool weakly_fair(const ThetaStableParabolic& q, const OrbitParameter& lam) {
    detail::check_parameter(q, lam);
    const RationalVector shifted = to_orbit_convention(q, lam);
    for (const auto& e : q.u_weights())
        if (inner_product(shifted, e.weight) < 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Symmetric-type predicates.

/// X' in t with X' = 0 on Delta(l) and X' = 1 on Delta(u), if any; then
/// exp(pi sqrt(-1) ad X') is an involution of g with fixed algebra l.
inline std::optional<RationalVector> symmetric_grading(const ThetaStableParabolic& q) {
    const auto& d = q.base();
    const auto basis = d.t_basis();
    std::vector<RationalVector> rows;
    std::vector<Rational> rhs;
    auto add = [&](const RationalVector& w, int value) {
        RationalVector row(basis.size());
        for (std::size_t i = 0; i < basis.size(); ++i) row[i] = inner_product(w, basis[i]);
        rows.push_back(std::move(row));
        rhs.emplace_back(value);
    };
    for (const auto& e : q.levi_roots()) add(e.weight, 0);
    for (const auto& e : q.u_weights()) add(e.weight, 1);
    if (rows.empty()) return RationalVector(d.coord_dim);
    auto y = solve_linear_system(rows, rhs, basis.size());
    if (!y) return std::nullopt;
    RationalVector x(d.coord_dim);
    for (std::size_t i = 0; i < basis.size(); ++i) x += (*y)[i] * basis[i];
    return x;
}

inline bool is_symmetric_type(const ThetaStableParabolic& q) { return symmetric_grading(q).has_value(); }

/// A symmetric-type q~ containing q with L~/L compact, if any.
inline std::optional<ThetaStableParabolic> virtually_symmetric_witness(const ThetaStableParabolic& q) {
    const auto& d = q.base();
    for (const auto& big : coarsenings(q)) {
        bool compact_fibre = true;
        for (std::size_t i = 0; i < d.noncompact_weights.size() && compact_fibre; ++i) {
            const WeightRef r{Part::noncompact, i};
            if (big.in_levi(r) && !q.in_levi(r)) compact_fibre = false;
        }
        if (compact_fibre && is_symmetric_type(big)) return big;
    }
    return std::nullopt;
}

inline bool is_virtually_symmetric_type(const ThetaStableParabolic& q) {
    return virtually_symmetric_witness(q).has_value();
}

}  // namespace branchdec
