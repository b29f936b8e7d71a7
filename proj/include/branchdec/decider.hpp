#pragma once

// Decisions for a pair (g, g') and a theta-stable parabolic q: discrete
// decomposability, the K'-admissibility sufficient test, the open-orbit
// dimension condition, rho compatibility, and the symmetric-type flags.

#include "branchdec/cone.hpp"
#include "branchdec/errors.hpp"
#include "branchdec/involution.hpp"
#include "branchdec/parabolic.hpp"
#include "branchdec/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace branchdec {

enum class Question {
    deco_symm_ii,
    admissible_sufficient,
    transitive_gq,
    rho_compat,
    symmetric_type,
    virtually_symmetric_type
};

inline std::string question_name(Question q) {
    switch (q) {
        case Question::deco_symm_ii: return "deco_symm_ii";
        case Question::admissible_sufficient: return "admissible_sufficient";
        case Question::transitive_gq: return "transitive_gq";
        case Question::rho_compat: return "rho_compat";
        case Question::symmetric_type: return "symmetric_type";
        case Question::virtually_symmetric_type: return "virtually_symmetric_type";
    }
    return "unknown";
}

/// Short CLI spelling (deco, admissible, transitive, rho, symtype, virtsym) or the full name.
inline std::optional<Question> parse_question(const std::string& s) {
    for (Question q : {Question::deco_symm_ii, Question::admissible_sufficient, Question::transitive_gq,
                       Question::rho_compat, Question::symmetric_type, Question::virtually_symmetric_type})
        if (s == question_name(q)) return q;
    if (s == "deco") return Question::deco_symm_ii;
    if (s == "admissible") return Question::admissible_sufficient;
    if (s == "transitive") return Question::transitive_gq;
    if (s == "rho") return Question::rho_compat;
    if (s == "symtype") return Question::symmetric_type;
    if (s == "virtsym") return Question::virtually_symmetric_type;
    return std::nullopt;
}

struct Verdict {
    Question question = Question::deco_symm_ii;
    bool answer = false;
    std::vector<std::string> equivalents;

    /// Certificate: what it is, named vectors, and convex weights when the
    /// certificate is an intersection point.
    std::string witness_kind;
    std::vector<std::pair<std::string, RationalVector>> witness_vectors;
    std::vector<Rational> witness_weights;

    /// Ordered raw facts (dimensions, secondary booleans).
    std::vector<std::pair<std::string, std::string>> facts;
    std::string note;

    std::string pair_id;
    std::string base;
    RationalVector X;
    std::vector<std::string> refs;

    const RationalVector* witness(const std::string& name) const {
        for (const auto& [n, v] : witness_vectors)
            if (n == name) return &v;
        return nullptr;
    }
    std::optional<std::string> fact(const std::string& name) const {
        for (const auto& [n, v] : facts)
            if (n == name) return v;
        return std::nullopt;
    }
};

namespace detail {

inline Verdict start(Question question, const std::string& pair_id, const ThetaStableParabolic& q) {
    Verdict v;
    v.question = question;
    v.pair_id = pair_id;
    v.base = q.base().name;
    v.X = q.defining_element();
    return v;
}

inline void require_same_base(const InvolutionData& inv, const ThetaStableParabolic& q) {
    if (!(inv.base == q.base_ptr() || *inv.base == q.base()))
        throw std::invalid_argument("involution '" + inv.label + "' and parabolic live over different algebras");
}

inline Cone u_cap_p_cone(const ThetaStableParabolic& q) {
    Cone c(q.base().coord_dim);
    for (const auto& e : q.u_noncompact()) c.add_generator(e.weight);
    return c;
}

inline const std::vector<std::string>& deco_equivalents() {
    static const std::vector<std::string> labels{
        "(i) discretely decomposable for some lambda in the weakly fair range",
        "(i)' discretely decomposable for every lambda in the weakly fair range",
        "(iii) K'-admissible for some lambda in the weakly fair range",
        "(iii)' K'-admissible for every lambda in the weakly fair range",
        "(iv) associated-variety condition (reported through the equivalence only)",
    };
    return labels;
}

inline std::string yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace detail

/// True iff R+ Delta(u cap p) meets sqrt(-1) t^{-sigma} only at 0.
inline Verdict discretely_decomposable(const InvolutionData& inv, const ThetaStableParabolic& q) {
    require_valid(inv);
    detail::require_same_base(inv, q);
    Verdict v = detail::start(Question::deco_symm_ii, inv.label, q);
    v.refs = {"discrete decomposability criterion for symmetric pairs",
              "asymptotic K-support of A_q(lambda) bounded by R+ Delta(u cap p)"};
    v.note = "lambda-independent within the weakly fair range";
    const auto cone = detail::u_cap_p_cone(q);
    const auto anti = inv.eigenspace(-1);
    const auto res = cone_meets_subspace(cone, anti, q.defining_element());
    v.answer = !res.meets;
    if (v.answer) v.equivalents = detail::deco_equivalents();
    if (res.meets) {
        const auto& p = *res.point;
        if (!(project_onto(p, anti) == p)) throw std::logic_error("intersection witness is not in t^-sigma");
        v.witness_kind = "intersection_point";
        v.witness_vectors.emplace_back("point", p);
        v.witness_weights = res.weights;
        std::size_t i = 0;
        for (const auto& g : cone.generators()) v.witness_vectors.emplace_back("generator_" + std::to_string(i++), g);
    } else {
        v.witness_kind = "separating_functional";
        v.witness_vectors.emplace_back("separator", *res.separator);
    }
    v.facts.emplace_back("dim_t_minus_sigma", std::to_string(anti.size()));
    v.facts.emplace_back("u_cap_p_generators", std::to_string(cone.generators().size()));
    return v;
}

/// True iff R+ Delta(u cap p) meets the dominant restricted chamber only at
/// 0, which guarantees K'-admissibility. False is inconclusive on its own.
inline Verdict admissible_sufficient(const InvolutionData& inv, const ThetaStableParabolic& q) {
    require_valid(inv);
    detail::require_same_base(inv, q);
    Verdict v = detail::start(Question::admissible_sufficient, inv.label, q);
    v.refs = {"K'-admissibility sufficient criterion via the momentum set",
              "momentum set of a symmetric subgroup equals the dominant restricted chamber"};
    const auto cone = detail::u_cap_p_cone(q);
    const auto chamber = momentum_chamber(inv);
    const auto res = cones_meet(cone, q.defining_element(), chamber);
    v.answer = !res.meets;
    if (res.meets) {
        v.witness_kind = "intersection_point";
        v.witness_vectors.emplace_back("point", *res.point);
        v.witness_weights = res.weights;
        std::size_t i = 0;
        for (const auto& g : cone.generators()) v.witness_vectors.emplace_back("generator_" + std::to_string(i++), g);
        const auto deco = discretely_decomposable(inv, q);
        v.facts.emplace_back("deco_symm_ii", detail::yes_no(deco.answer));
        v.note = std::string("inconclusive by this test alone; the symmetric-pair discrete decomposability "
                             "criterion decides: K'-admissible = ") +
                 detail::yes_no(deco.answer);
    } else {
        v.witness_kind = "separating_functional";
        v.witness_vectors.emplace_back("separator", *res.separator);
        v.equivalents = {"K'-admissible", "Hilbert direct sum of irreducible G'-representations"};
    }
    v.facts.emplace_back("chamber_generators", std::to_string(chamber.generators().size()));
    v.facts.emplace_back("chamber_lineality", std::to_string(chamber.lineality().size()));
    return v;
}

namespace detail {

struct SubalgebraCounts {
    long dim_g, dim_q, dim_gprime, cap_q, cap_qbar, cap_l;
};

inline SubalgebraCounts counts(const SubalgebraDatum& sub, const ThetaStableParabolic& q) {
    require_same_base(sub, q);
    SubalgebraCounts c{};
    c.dim_g = q.base().declared_dim_g;
    c.dim_q = q.dim_q();
    c.dim_gprime = sub.computed_dim();
    c.cap_q = dim_gprime_cap_q(sub, q);
    c.cap_qbar = sub.count_where([&](const WeightRef& r) { return q.sign(r) <= 0; });
    c.cap_l = sub.count_where([&](const WeightRef& r) { return q.in_levi(r); });
    return c;
}

inline void require_valid(const SubalgebraDatum& sub) {
    auto issues = sub.validate();
    if (!issues.empty()) throw ValidationFailed("subalgebra '" + sub.label + "' failed validation", issues);
}

}  // namespace detail

/// g'_C + q = g_C, i.e. G'/L' -> G/L is open. Besides the codimension count
/// this also requires g'_C cap q to be parabolic in g'_C, which the count
/// alone does not force.
inline Verdict transitive_check(const SubalgebraDatum& sub, const ThetaStableParabolic& q) {
    detail::require_valid(sub);
    Verdict v = detail::start(Question::transitive_gq, sub.label, q);
    v.refs = {"open-orbit condition g'_C + q = g_C"};
    const auto c = detail::counts(sub, q);
    const bool codim = c.dim_gprime - c.cap_q == c.dim_g - c.dim_q;
    const bool parabolic = c.cap_q + c.cap_qbar - c.cap_l == c.dim_gprime;
    v.answer = codim && parabolic;
    v.witness_kind = "dimension_count";
    v.facts = {{"dim_g", std::to_string(c.dim_g)},
               {"dim_q", std::to_string(c.dim_q)},
               {"dim_gprime", std::to_string(c.dim_gprime)},
               {"dim_gprime_cap_q", std::to_string(c.cap_q)},
               {"dim_gprime_cap_qbar", std::to_string(c.cap_qbar)},
               {"dim_gprime_cap_l", std::to_string(c.cap_l)},
               {"codimension_equal", detail::yes_no(codim)},
               {"gprime_cap_q_parabolic", detail::yes_no(parabolic)}};
    if (v.answer) v.facts.emplace_back("dim_qprime", std::to_string(c.cap_q));
    return v;
}

inline Verdict transitive_check(const InvolutionData& inv, const ThetaStableParabolic& q) {
    require_valid(inv);
    return transitive_check(to_subalgebra(inv), q);
}

/// rho(u) restricted to t' equals rho(u'), where u' = g'_C cap u.
inline Verdict rho_compat_check(const SubalgebraDatum& sub, const ThetaStableParabolic& q) {
    if (!transitive_check(sub, q).answer)
        throw PreconditionError("rho compatibility needs the open-orbit condition, which fails for X = " +
                                q.defining_element().to_string());
    Verdict v = detail::start(Question::rho_compat, sub.label, q);
    v.refs = {"rho(u) restricted to l' equals rho(u')"};
    const std::size_t dim = q.base().coord_dim;
    const RationalVector lhs = project_onto(q.rho_u(), sub.cartan_basis);
    RationalVector rhs(dim);
    for (const auto& e : sub.vectors) {
        bool in_q = true, in_l = true;
        for (const auto& r : e.support) {
            in_q = in_q && q.in_q(r);
            in_l = in_l && q.in_levi(r);
        }
        if (in_q && !in_l) rhs += Rational(e.multiplicity) * e.cartan_weight;
    }
    rhs *= Rational(1, 2);
    v.answer = lhs == rhs;
    v.witness_kind = "rho_pair";
    v.witness_vectors = {{"rho_u_restricted", lhs}, {"rho_uprime", rhs}};
    return v;
}

inline Verdict rho_compat_check(const InvolutionData& inv, const ThetaStableParabolic& q) {
    require_valid(inv);
    return rho_compat_check(to_subalgebra(inv), q);
}

inline Verdict symmetric_type_verdict(const ThetaStableParabolic& q) {
    Verdict v = detail::start(Question::symmetric_type, "", q);
    v.refs = {"parabolic of symmetric type: (g, l) is a symmetric pair"};
    v.note = "multiplicity-freeness conjecture applies as a marker only; no multiplicity is claimed";
    if (auto x = symmetric_grading(q)) {
        v.answer = true;
        v.witness_kind = "grading_element";
        v.witness_vectors.emplace_back("X_prime", *x);
    }
    return v;
}

inline Verdict virtually_symmetric_verdict(const ThetaStableParabolic& q) {
    Verdict v = detail::start(Question::virtually_symmetric_type, "", q);
    v.refs = {"parabolic of virtually symmetric type: a symmetric-type coarsening with compact fibre"};
    v.note = "multiplicity-freeness conjecture applies as a marker only; no multiplicity is claimed";
    if (auto big = virtually_symmetric_witness(q)) {
        v.answer = true;
        v.witness_kind = "coarsening";
        v.witness_vectors.emplace_back("X_coarse", big->defining_element());
        v.witness_vectors.emplace_back("X_prime", *symmetric_grading(*big));
    }
    return v;
}

}  // namespace branchdec
