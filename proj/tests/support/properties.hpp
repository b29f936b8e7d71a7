#pragma once

// Property checks shared by the unit suites and the acceptance binary. Each
// returns the number of cases examined and the first failure, if any.

#include "branchdec/catalog.hpp"
#include "branchdec/cone.hpp"
#include "branchdec/decider.hpp"
#include "branchdec/involution.hpp"
#include "branchdec/parabolic.hpp"
#include "support/fourier_motzkin.hpp"
#include "support/random_instances.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace branchdec::testing {

struct PropertyResult {
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;

    void fail(std::string what) {
        if (failures++ == 0) first_failure = std::move(what);
    }
    bool pass() const { return failures == 0 && cases > 0; }
};

/// Convex weights reproduce `point` from `gens`.
inline bool substitutes(const std::vector<RationalVector>& gens, const std::vector<Rational>& weights,
                        const RationalVector& point) {
    if (weights.size() != gens.size()) return false;
    Rational total = 0;
    RationalVector p(point.dim());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (weights[i] < 0) return false;
        total += weights[i];
        p += weights[i] * gens[i];
    }
    return total == 1 && p == point;
}

inline bool in_span(const RationalVector& v, const std::vector<RationalVector>& basis) {
    std::vector<RationalVector> with = basis;
    with.push_back(v);
    return rank(with) == rank(basis);
}

/// LP kernel versus Fourier-Motzkin oracle on random instances, plus a
/// substitution check of every certificate the kernel returns.
inline PropertyResult oracle_agreement(std::size_t instances, unsigned seed) {
    PropertyResult r;
    InstanceGenerator gen(seed);
    for (std::size_t i = 0; i < instances; ++i) {
        const auto in = gen.subspace_instance();
        const Cone c(in.dim, in.gens);
        const auto lp = cone_meets_subspace(c, in.subspace, in.functional);
        const bool fm = brute_force_meets_subspace(c.generators(), in.subspace, in.dim);
        ++r.cases;
        if (lp.meets != fm) {
            r.fail("cone_meets_subspace disagreement at instance " + std::to_string(i));
            continue;
        }
        if (lp.meets) {
            if (!substitutes(c.generators(), lp.weights, *lp.point) || !in_span(*lp.point, in.subspace))
                r.fail("bad intersection witness at subspace instance " + std::to_string(i));
        } else {
            const auto& s = *lp.separator;
            for (const auto& g : c.generators())
                if (inner_product(s, g) <= 0) r.fail("separator not positive at subspace instance " + std::to_string(i));
            for (const auto& w : in.subspace)
                if (inner_product(s, w) != 0) r.fail("separator not orthogonal at subspace instance " + std::to_string(i));
        }
    }
    for (std::size_t i = 0; i < instances; ++i) {
        const auto in = gen.cone_pair_instance();
        const Cone c1(in.dim, in.g1);
        const Cone c2(in.dim, in.g2, in.l2);
        const auto lp = cones_meet(c1, in.functional, c2);
        const bool fm = brute_force_cones_meet(c1.generators(), c2.generators(), c2.lineality(), in.dim);
        ++r.cases;
        if (lp.meets != fm) {
            r.fail("cones_meet disagreement at instance " + std::to_string(i));
            continue;
        }
        if (lp.meets) {
            if (!substitutes(c1.generators(), lp.weights, *lp.point) || !c2.contains(*lp.point))
                r.fail("bad intersection witness at pair instance " + std::to_string(i));
        } else if (!c1.generators().empty()) {
            const auto& s = *lp.separator;
            for (const auto& g : c1.generators())
                if (inner_product(s, g) <= 0) r.fail("separator not positive at pair instance " + std::to_string(i));
            for (const auto& g : c2.generators())
                if (inner_product(s, g) > 0) r.fail("separator positive on second cone at pair instance " + std::to_string(i));
            for (const auto& l : c2.lineality())
                if (inner_product(s, l) != 0) r.fail("separator not zero on lineality at pair instance " + std::to_string(i));
        }
    }
    return r;
}

inline std::vector<DatumPtr> small_algebras(const CatalogBundle& cat, std::size_t max_rank) {
    std::vector<DatumPtr> out;
    for (const auto& [name, d] : cat.algebras)
        if (d->dim_t <= max_rank) out.push_back(d);
    return out;
}

/// build_parabolic(cX) == build_parabolic(X) for positive rational c.
inline PropertyResult scale_invariance(const std::vector<DatumPtr>& algebras) {
    PropertyResult r;
    const std::vector<Rational> scales{Rational(2), Rational(1, 3), Rational(7, 2)};
    for (const auto& d : algebras) {
        for (const auto& q : enumerate_parabolics(d, false)) {
            for (const auto& c : scales) {
                ++r.cases;
                const auto scaled = build_parabolic(d, c * q.defining_element());
                if (!(scaled == q) || !(scaled.rho_u() == q.rho_u()) || scaled.S() != q.S())
                    r.fail(d->name + ": scaling changes q at X=" + q.defining_element().to_string());
            }
        }
    }
    return r;
}

/// X -> -X: u and u-bar swap, S and |Delta(u cap p)| are kept, rho(u) negates.
inline PropertyResult negation_symmetry(const std::vector<DatumPtr>& algebras) {
    PropertyResult r;
    for (const auto& d : algebras) {
        for (const auto& q : enumerate_parabolics(d, false)) {
            ++r.cases;
            const auto o = q.opposite();
            WeightMultiset negated;
            for (const auto& e : q.u_weights()) negated.add(-e.weight, e.multiplicity);
            if (o.S() != q.S() || o.u_noncompact().total() != q.u_noncompact().total() || !(o.rho_u() == -q.rho_u()) ||
                !(o.u_weights() == negated) || o.dim_levi() != q.dim_levi())
                r.fail(d->name + ": opposite parabolic mismatch at X=" + q.defining_element().to_string());
        }
    }
    return r;
}

inline RationalVector reflect(const RationalVector& v, const RationalVector& beta) {
    return v - (Rational(2) * inner_product(v, beta) / inner_product(beta, beta)) * beta;
}

/// Restricted roots form a (possibly non-reduced) root system with a consistent positive system.
inline PropertyResult reflection_closure(const std::vector<InvolutionData>& involutions) {
    PropertyResult r;
    for (const auto& inv : involutions) {
        ++r.cases;
        const auto rs = restricted_roots(inv);
        const std::string who = inv.label;
        for (const auto& b : rs.roots) {
            for (const auto& g : rs.roots) {
                const auto image = reflect(g.weight, b.weight);
                if (rs.roots.multiplicity_of(image) != g.multiplicity)
                    r.fail(who + ": reflection of " + g.weight.to_string() + " in " + b.weight.to_string() +
                           " leaves the system");
                const Rational n = Rational(2) * inner_product(g.weight, b.weight) / inner_product(b.weight, b.weight);
                if (n.get_den() != 1) r.fail(who + ": non-integral Cartan number");
            }
            if (rs.roots.multiplicity_of(-b.weight) != b.multiplicity) r.fail(who + ": not negation-closed");
        }
        WeightMultiset both = rs.positive;
        for (const auto& e : rs.positive) both.add(-e.weight, e.multiplicity);
        if (!(both == rs.roots)) r.fail(who + ": positive and negative roots do not partition the system");
        for (const auto& a : rs.positive)
            for (const auto& b : rs.positive) {
                const auto s = a.weight + b.weight;
                if (rs.roots.multiplicity_of(s) > 0 && rs.positive.multiplicity_of(s) == 0)
                    r.fail(who + ": positive system not closed under addition");
            }
        const auto chamber = momentum_chamber(inv);
        for (const auto& g : chamber.generators())
            for (const auto& a : rs.positive)
                if (inner_product(g, a.weight) < 0) r.fail(who + ": chamber generator not dominant");
    }
    return r;
}

/// Every verdict certificate checks out by direct substitution.
inline PropertyResult verdict_witnesses(const std::vector<InvolutionData>& involutions, std::size_t max_rank) {
    PropertyResult r;
    for (const auto& inv : involutions) {
        if (inv.base->dim_t > max_rank) continue;
        const auto anti = inv.eigenspace(-1);
        const auto chamber = momentum_chamber(inv);
        for (const auto& q : enumerate_parabolics(inv.base, true, max_rank)) {
            std::vector<RationalVector> gens;
            for (const auto& e : q.u_noncompact()) gens.push_back(e.weight);
            const std::string at = inv.label + " X=" + q.defining_element().to_string();

            const auto deco = discretely_decomposable(inv, q);
            ++r.cases;
            if (!deco.answer) {
                const auto* p = deco.witness("point");
                if (!p || p->is_zero() || !substitutes(gens, deco.witness_weights, *p) || !in_span(*p, anti))
                    r.fail("deco witness fails at " + at);
            } else {
                const auto* s = deco.witness("separator");
                bool ok = s != nullptr;
                for (const auto& g : gens) ok = ok && inner_product(*s, g) > 0;
                for (const auto& w : anti) ok = ok && inner_product(*s, w) == 0;
                if (!ok) r.fail("deco separator fails at " + at);
            }

            const auto adm = admissible_sufficient(inv, q);
            ++r.cases;
            if (!adm.answer) {
                const auto* p = adm.witness("point");
                if (!p || p->is_zero() || !substitutes(gens, adm.witness_weights, *p) || !chamber.contains(*p))
                    r.fail("admissible witness fails at " + at);
            }
            if (deco.answer && !adm.answer) r.fail("deco true but admissible_sufficient false at " + at);
        }
    }
    return r;
}

inline std::vector<InvolutionData> catalog_involutions(const CatalogBundle& cat) {
    std::vector<InvolutionData> out;
    for (const auto& [id, p] : cat.pairs)
        if (p.involution) out.push_back(*p.involution);
    for (const char* id : {"swap:su(1,1)^2", "swap:su(2)^2", "theta:su(2,2)", "theta:so(4,3)"})
        out.push_back(*cat.pair(id).involution);
    return out;
}

}  // namespace branchdec::testing
