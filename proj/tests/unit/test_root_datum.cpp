#include "branchdec/cli.hpp"
#include "branchdec/root_datum.hpp"
#include "branchdec/serialization.hpp"
#include "support/fixtures.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace branchdec;
using branchdec::testing::datum;

TEST_CASE("su(1,1) is the rank-one sl(2) model", "[root_datum]") {
    const auto d = build_root_datum("su(1,1)");
    CHECK(d.dim_t == 1);
    CHECK(d.compact_weights.empty());
    CHECK(d.noncompact_weights.total() == 2);
    CHECK(d.noncompact_weights.multiplicity_of(RationalVector::from_ints({2})) == 1);
    CHECK(d.noncompact_weights.multiplicity_of(RationalVector::from_ints({-2})) == 1);
    CHECK(d.computed_dim() == 3);
}

TEST_CASE("su(2,2) root counts", "[root_datum]") {
    const auto d = build_root_datum("su(2,2)");
    CHECK(d.computed_dim() == 15);
    CHECK(d.dim_t == 3);
    CHECK(d.compact_weights.total() == 4);
    CHECK(d.noncompact_weights.total() == 8);
    CHECK(d.equal_rank);
}

TEST_CASE("sl(2,C) as a real algebra", "[root_datum]") {
    const auto d = build_root_datum("sl(2,C)");
    CHECK(d.dim_t == 1);
    CHECK(d.compact_weights.total() == 2);
    CHECK(d.noncompact_weights.total() == 3);
    CHECK(d.zero_weight_dim() == 1);
    CHECK(d.computed_dim() == 6);
    CHECK_FALSE(d.equal_rank);
}

TEST_CASE("so(p,q) with p and q odd has zero noncompact weights", "[root_datum]") {
    const auto d = build_root_datum("so(4,3)");
    CHECK(d.dim_t == 3);
    CHECK(d.computed_dim() == 21);
    CHECK(d.equal_rank);
    const auto e = build_root_datum("so(3,3)");
    CHECK(e.zero_weight_dim() == 1);
    CHECK_FALSE(e.equal_rank);
    CHECK(e.computed_dim() == 15);
}

TEST_CASE("every standard algebra passes its own bookkeeping", "[root_datum]") {
    for (const auto& name : cli::standard_algebras()) {
        INFO(name);
        const auto d = build_root_datum(name);
        CHECK(d.validate().empty());
        CHECK(d.computed_dim() == d.declared_dim_g);
        CHECK(d.compact_weights.negation_closed());
        CHECK(d.noncompact_weights.negation_closed());
        for (const auto& e : d.compact_weights) CHECK(d.in_t(e.weight));
        for (const auto& e : d.noncompact_weights) CHECK(d.in_t(e.weight));
    }
}

TEST_CASE("direct sums concatenate coordinates", "[root_datum]") {
    const auto d = build_root_datum("su(1,1)^2");
    CHECK(d.name == "su(1,1)+su(1,1)");
    CHECK(d.coord_dim == 2);
    CHECK(d.computed_dim() == 6);
    REQUIRE(d.summands.size() == 2);
    CHECK(d.summands[1].offset == 1);
    CHECK(d == build_root_datum("su(1,1)+su(1,1)"));
}

TEST_CASE("degenerate and unknown algebras are rejected", "[root_datum]") {
    for (const char* bad : {"so(1,1)", "so(2)", "su(1)", "sl(1,C)", "e8", "su(2,2", "", "su(1,1)^0"})
        CHECK_THROWS_AS(build_root_datum(bad), CatalogError);
    CHECK_THROWS_AS(build_root_datum(Family::su, {2}), CatalogError);
}

TEST_CASE("root data survive a JSON round trip", "[root_datum]") {
    for (const auto& name : cli::standard_algebras()) {
        INFO(name);
        const auto d = build_root_datum(name);
        const auto text = json_io::to_json(d).dump();
        CHECK(json_io::root_datum_from(json_io::Json::parse(text)) == d);
    }
}

TEST_CASE("shipped algebra files match the builders", "[root_datum][catalog]") {
    const auto& cat = branchdec::testing::source_catalog();
    CHECK(cat.algebras.size() == cli::standard_algebras().size());
    for (const auto& [name, d] : cat.algebras) {
        INFO(name);
        CHECK(*d == build_root_datum(name));
    }
}
