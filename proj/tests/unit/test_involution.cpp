#include "branchdec/involution.hpp"
#include "support/fixtures.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

using namespace branchdec;
using branchdec::testing::datum;
using branchdec::testing::source_catalog;

namespace {

bool mentions(const ValidationReport& rep, const std::string& needle) {
    return std::any_of(rep.failures.begin(), rep.failures.end(),
                       [&](const std::string& f) { return f.find(needle) != std::string::npos; });
}

RationalMatrix permutation(const std::vector<std::size_t>& image) {
    RationalMatrix p(image.size(), std::vector<Rational>(image.size(), Rational(0)));
    for (std::size_t i = 0; i < image.size(); ++i) p[image[i]][i] = 1;
    return p;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
    RationalMatrix c(a.size(), std::vector<Rational>(b[0].size(), Rational(0)));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b[0].size(); ++j)
            for (std::size_t k = 0; k < b.size(); ++k) c[i][j] += a[i][k] * b[k][j];
    return c;
}

RationalMatrix transpose(const RationalMatrix& a) {
    RationalMatrix t(a[0].size(), std::vector<Rational>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
    return t;
}

/// P sigma P^-1 with epsilon transported along P.
InvolutionData conjugate(const InvolutionData& inv, const RationalMatrix& p) {
    InvolutionData out = inv;
    out.matrix = multiply(multiply(p, inv.matrix), transpose(p));
    out.epsilon.clear();
    for (const auto& [key, s] : inv.epsilon) out.epsilon[{key.first, branchdec::apply(p, key.second)}] = s;
    return out;
}

}  // namespace

TEST_CASE("theta involutions", "[involution]") {
    const auto t11 = build_theta_involution(datum("su(1,1)"));
    CHECK(validate_involution(t11).ok());
    CHECK(t11.computed_dim_fixed() == 1);
    CHECK(t11.eigenspace(-1).empty());

    const auto t22 = build_theta_involution(datum("su(2,2)"));
    CHECK(validate_involution(t22).ok());
    CHECK(t22.computed_dim_fixed() == 7);

    for (const char* compact : {"su(2)", "su(4)", "so(7)", "g2", "sp(2)"}) {
        INFO(compact);
        const auto d = datum(compact);
        const auto t = build_theta_involution(d);
        CHECK(validate_involution(t).ok());
        CHECK(t.computed_dim_fixed() == d->computed_dim());
    }
}

TEST_CASE("swap involutions", "[involution]") {
    const auto s = build_swap_involution(datum("su(1,1)^2"));
    CHECK(s.label == "swap:su(1,1)^2");
    CHECK(validate_involution(s).ok());
    CHECK(s.computed_dim_fixed() == 3);
    const auto anti = s.eigenspace(-1);
    REQUIRE(anti.size() == 1);
    CHECK(anti[0][0] == -anti[0][1]);
    CHECK(restricted_roots(s).roots.empty());

    CHECK_THROWS_AS(build_swap_involution(datum("su(1,1)+su(2)")), CatalogError);
    CHECK_THROWS_AS(build_swap_involution(datum("su(2,2)")), CatalogError);
}

TEST_CASE("corrupted epsilon fails the dimension check by name", "[involution]") {
    auto inv = *source_catalog().pair("(su(2,2),sp(2,R))").involution;
    REQUIRE(validate_involution(inv).ok());
    inv.epsilon[{Part::noncompact, RationalVector::from_ints({1, 0, -1, 0})}] = -1;
    const auto rep = validate_involution(inv);
    CHECK_FALSE(rep.ok());
    CHECK(mentions(rep, "dimension check"));
    CHECK_THROWS_AS(require_valid(inv), ValidationFailed);
}

TEST_CASE("structural validation failures", "[involution]") {
    const auto base = datum("su(1,1)^2");
    auto inv = build_swap_involution(base);

    auto scaled = inv;
    scaled.matrix[0][1] = 2;
    CHECK(mentions(validate_involution(scaled), "involution"));

    auto shape = inv;
    shape.matrix.pop_back();
    CHECK(mentions(validate_involution(shape), "matrix shape"));

    auto unfixed = inv;
    unfixed.epsilon[{Part::noncompact, RationalVector::from_ints({2, 0})}] = 1;
    CHECK(mentions(validate_involution(unfixed), "not fixed by sigma"));

    auto absent = inv;
    absent.epsilon[{Part::compact, RationalVector::from_ints({2, 0})}] = 1;
    CHECK(mentions(validate_involution(absent), "not in Delta(k,t)"));

    auto zero = inv;
    zero.zero_weight_fixed_dim = 3;
    CHECK(mentions(validate_involution(zero), "zero-weight"));
}

TEST_CASE("every shipped pair validates", "[involution][catalog]") {
    for (const auto& [id, p] : source_catalog().pairs) {
        INFO(id);
        CHECK(p.issues.empty());
        CHECK(p.subalgebra.validate().empty());
        if (!p.involution) continue;
        const auto rep = validate_involution(*p.involution);
        CHECK(rep.ok());
        CHECK(p.involution->computed_dim_fixed() + p.involution->computed_dim_anti() == p.involution->base->computed_dim());
    }
}

TEST_CASE("restricted roots", "[involution]") {
    CHECK(restricted_roots(build_theta_involution(datum("su(2,2)"))).roots.empty());

    const auto s2 = restricted_roots(build_swap_involution(datum("su(2)^2")));
    REQUIRE(s2.roots.size() == 2);
    CHECK(s2.positive.size() == 1);
    CHECK(s2.positive[0].multiplicity == 2);

    const auto& cat = source_catalog();
    const auto sp = cat.pair("(su(2,2),sp(2,R))");
    REQUIRE(sp.involution->expected_restricted_roots);
    CHECK(restricted_roots(*sp.involution).roots == *sp.involution->expected_restricted_roots);
}

TEST_CASE("momentum chambers", "[involution]") {
    const auto theta = momentum_chamber(build_theta_involution(datum("su(2,2)")));
    CHECK(theta.is_zero());

    const auto line = momentum_chamber(build_swap_involution(datum("su(1,1)^2")));
    CHECK(line.generators().empty());
    REQUIRE(line.lineality().size() == 1);
    CHECK(line.contains(RationalVector::from_ints({1, -1})));
    CHECK(line.contains(RationalVector::from_ints({-1, 1})));

    const auto ray = momentum_chamber(build_swap_involution(datum("su(2)^2")));
    CHECK(ray.lineality().empty());
    REQUIRE(ray.generators().size() == 1);
    CHECK(ray.generators()[0][0] == -ray.generators()[0][1]);
    CHECK(ray.contains(ray.generators()[0]));
    CHECK_FALSE(ray.contains(-ray.generators()[0]));
}

TEST_CASE("simple roots of small positive systems", "[involution]") {
    WeightMultiset a2;
    for (auto w : {RationalVector::from_ints({1, -1, 0}), RationalVector::from_ints({0, 1, -1}),
                   RationalVector::from_ints({1, 0, -1})})
        a2.add(w);
    CHECK(simple_roots(a2).size() == 2);

    // Non-reduced BC1: {b, 2b}.
    WeightMultiset bc1;
    bc1.add(RationalVector::from_ints({1}), 2);
    bc1.add(RationalVector::from_ints({2}), 1);
    const auto s = simple_roots(bc1);
    REQUIRE(s.size() == 1);
    CHECK(s[0].to_string() == "(1)");
}

TEST_CASE("fixed and anti-fixed dimensions add up", "[involution][property]") {
    std::vector<InvolutionData> invs;
    for (const auto& name : {"su(1,1)", "su(2,2)", "so(4,3)", "sl(2,C)", "so(5,C)", "g2(R)", "sp(2,R)"})
        invs.push_back(build_theta_involution(datum(name)));
    for (const auto& name : {"su(1,1)", "su(2)", "sl(2,C)", "so(2,1)", "su(2,1)"})
        invs.push_back(build_swap_involution(datum(std::string(name) + "^2")));
    for (const auto& [id, p] : source_catalog().pairs)
        if (p.involution) invs.push_back(*p.involution);
    for (const auto& inv : invs) {
        INFO(inv.label);
        CHECK(inv.computed_dim_fixed() + inv.computed_dim_anti() == inv.base->computed_dim());
        CHECK(inv.eigenspace(1).size() + inv.eigenspace(-1).size() == inv.base->dim_t);
    }
}

TEST_CASE("results transform under conjugation by a compact Weyl permutation", "[involution][property]") {
    const auto& cat = source_catalog();
    const auto p = permutation({1, 0, 2, 3});  // a1 <-> a2
    for (const char* id : {"(su(2,2),sp(2,R))", "(su(2,2),sp(1,1))", "(su(4),sp(2))"}) {
        INFO(id);
        const auto inv = *cat.pair(id).involution;
        const auto moved = conjugate(inv, p);
        REQUIRE(validate_involution(moved).ok());
        CHECK(moved.computed_dim_fixed() == inv.computed_dim_fixed());

        WeightMultiset image;
        for (const auto& e : restricted_roots(inv).roots) image.add(branchdec::apply(p, e.weight), e.multiplicity);
        CHECK(restricted_roots(moved).roots == image);

        for (const auto& q : enumerate_parabolics(inv.base, false)) {
            const auto pq = build_parabolic(inv.base, branchdec::apply(p, q.defining_element()));
            CHECK(dim_gprime_cap_q(moved, pq) == dim_gprime_cap_q(inv, q));
        }
    }
}

TEST_CASE("dim of g' cap q", "[involution]") {
    const auto& cat = source_catalog();
    const auto sp = *cat.pair("(su(2,2),sp(2,R))").involution;
    const auto g = build_parabolic(sp.base, RationalVector(4));
    CHECK(dim_gprime_cap_q(sp, g) == 10);
    CHECK(dim_gprime_cap_q(sp, build_parabolic(sp.base, RationalVector::from_ints({3, -1, -1, -1}))) == 7);

    const auto base = datum("su(2,2)");
    const auto theta = build_theta_involution(base);
    for (const auto& q : enumerate_parabolics(base, false)) {
        INFO(q.defining_element());
        CHECK(dim_gprime_cap_q(theta, q) ==
              static_cast<long>(base->dim_t) + q.levi_compact().total() + q.u_compact().total());
    }

    CHECK_THROWS_AS(dim_gprime_cap_q(sp, build_parabolic(datum("su(2)"), RationalVector::from_ints({1}))),
                    std::invalid_argument);
}

TEST_CASE("subalgebra conversion preserves the dimension", "[involution]") {
    for (const auto& [id, p] : source_catalog().pairs) {
        INFO(id);
        CHECK(p.subalgebra.computed_dim() == p.subalgebra.declared_dim);
        if (p.involution) CHECK(to_subalgebra(*p.involution).computed_dim() == p.involution->computed_dim_fixed());
    }
}
