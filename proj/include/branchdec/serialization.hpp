#pragma once

// JSON forms of the catalog types and of verdicts. Rationals are always
// written as "p/q" strings so nothing passes through floating point.

#include "branchdec/decider.hpp"
#include "branchdec/errors.hpp"
#include "branchdec/involution.hpp"
#include "branchdec/rational.hpp"
#include "branchdec/root_datum.hpp"

#include <json.hpp>

#include <memory>
#include <string>
#include <vector>

namespace branchdec::json_io {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// scalars and vectors

inline OrderedJson to_json(const Rational& r) { return format_rational(r); }

inline OrderedJson to_json(const RationalVector& v) {
    OrderedJson a = OrderedJson::array();
    for (const auto& c : v.coords()) a.push_back(format_rational(c));
    return a;
}

inline Rational rational_from(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw ParseError("expected a rational as a \"p/q\" string or an integer, got " + j.dump());
}

inline RationalVector vector_from(const Json& j) {
    if (!j.is_array()) throw ParseError("expected an array of rationals, got " + j.dump());
    std::vector<Rational> c;
    for (const auto& x : j) c.push_back(rational_from(x));
    return RationalVector(std::move(c));
}

inline RationalVector vector_from(const Json& j, std::size_t dim) {
    auto v = vector_from(j);
    if (v.dim() != dim) throw DimensionMismatch(v.dim(), dim);
    return v;
}

inline const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    return j.at(key);
}

template <class T>
T get(const Json& j, const char* key) {
    try {
        return field(j, key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("field '") + key + "': " + e.what());
    }
}

inline Part part_from(const Json& j) {
    const auto s = j.get<std::string>();
    if (s == "k") return Part::compact;
    if (s == "p") return Part::noncompact;
    throw ParseError("part must be \"k\" or \"p\", got \"" + s + "\"");
}

// ---------------------------------------------------------------------------
// weight multisets and root data

inline OrderedJson to_json(const WeightMultiset& ws) {
    OrderedJson a = OrderedJson::array();
    for (const auto& e : ws) a.push_back({{"weight", to_json(e.weight)}, {"multiplicity", e.multiplicity}});
    return a;
}

inline WeightMultiset multiset_from(const Json& j, std::size_t dim) {
    if (!j.is_array()) throw ParseError("expected a weight list");
    WeightMultiset ws;
    for (const auto& e : j) {
        const int m = e.contains("multiplicity") ? e.at("multiplicity").get<int>() : 1;
        if (m < 1) throw ParseError("multiplicities must be positive");
        ws.add(vector_from(field(e, "weight"), dim), m);
    }
    return ws;
}

inline OrderedJson to_json(const RootDatum& d) {
    OrderedJson j;
    j["schema"] = "branchdec/algebra/1";
    j["name"] = d.name;
    j["coord_dim"] = d.coord_dim;
    j["dim_t"] = d.dim_t;
    j["declared_dim_g"] = d.declared_dim_g;
    j["equal_rank"] = d.equal_rank;
    j["constraints"] = OrderedJson::array();
    for (const auto& c : d.constraints) j["constraints"].push_back(to_json(c));
    j["summands"] = OrderedJson::array();
    for (const auto& s : d.summands) j["summands"].push_back({{"name", s.name}, {"offset", s.offset}, {"size", s.size}});
    j["compact_weights"] = to_json(d.compact_weights);
    j["noncompact_weights"] = to_json(d.noncompact_weights);
    return j;
}

/// Parses and validates; throws CatalogError listing every failed invariant.
inline RootDatum root_datum_from(const Json& j) {
    RootDatum d;
    d.name = get<std::string>(j, "name");
    d.coord_dim = get<std::size_t>(j, "coord_dim");
    d.dim_t = get<std::size_t>(j, "dim_t");
    d.declared_dim_g = get<long>(j, "declared_dim_g");
    d.equal_rank = get<bool>(j, "equal_rank");
    if (j.contains("constraints"))
        for (const auto& c : j.at("constraints")) d.constraints.push_back(vector_from(c, d.coord_dim));
    if (j.contains("summands"))
        for (const auto& s : j.at("summands"))
            d.summands.push_back({get<std::string>(s, "name"), get<std::size_t>(s, "offset"), get<std::size_t>(s, "size")});
    else
        d.summands.push_back({d.name, 0, d.coord_dim});
    d.compact_weights = multiset_from(field(j, "compact_weights"), d.coord_dim);
    d.noncompact_weights = multiset_from(field(j, "noncompact_weights"), d.coord_dim);
    const auto issues = d.validate();
    if (!issues.empty()) {
        std::string msg = "algebra '" + d.name + "' is inconsistent:";
        for (const auto& s : issues) msg += " " + s + ";";
        throw CatalogError(msg);
    }
    return d;
}

// ---------------------------------------------------------------------------
// involutions and embeddings

inline OrderedJson to_json(const RationalMatrix& m) {
    OrderedJson a = OrderedJson::array();
    for (const auto& row : m) a.push_back(to_json(RationalVector(row)));
    return a;
}

inline OrderedJson to_json(const InvolutionData& inv) {
    OrderedJson j;
    j["kind"] = "involution";
    j["label"] = inv.label;
    j["base"] = inv.base->name;
    j["matrix"] = to_json(inv.matrix);
    j["default_epsilon"] = {{"k", inv.default_sign_k}, {"p", inv.default_sign_p}};
    j["epsilon"] = OrderedJson::array();
    for (const auto& [key, s] : inv.epsilon)
        j["epsilon"].push_back({{"part", part_tag(key.first)}, {"weight", to_json(key.second)}, {"sign", s}});
    j["zero_weight_fixed_dim"] = inv.zero_weight_fixed_dim;
    j["declared_dim_gprime"] = inv.declared_dim_gprime;
    if (inv.expected_restricted_roots) j["expected_restricted_roots"] = to_json(*inv.expected_restricted_roots);
    return j;
}

inline InvolutionData involution_from(const Json& j, DatumPtr base) {
    InvolutionData inv;
    const std::size_t n = base->coord_dim;
    inv.base = std::move(base);
    inv.label = j.contains("label") ? j.at("label").get<std::string>() : "";
    for (const auto& row : field(j, "matrix")) {
        const auto v = vector_from(row, n);
        inv.matrix.emplace_back(v.coords().begin(), v.coords().end());
    }
    if (j.contains("default_epsilon")) {
        const auto& de = j.at("default_epsilon");
        inv.default_sign_k = get<int>(de, "k");
        inv.default_sign_p = get<int>(de, "p");
    }
    if (j.contains("epsilon"))
        for (const auto& e : j.at("epsilon"))
            inv.epsilon[{part_from(field(e, "part")), vector_from(field(e, "weight"), n)}] = get<int>(e, "sign");
    inv.zero_weight_fixed_dim = j.contains("zero_weight_fixed_dim") ? j.at("zero_weight_fixed_dim").get<long>() : 0;
    inv.declared_dim_gprime = get<long>(j, "declared_dim_gprime");
    if (j.contains("expected_restricted_roots"))
        inv.expected_restricted_roots = multiset_from(j.at("expected_restricted_roots"), n);
    return inv;
}

inline OrderedJson to_json(const SubalgebraDatum& s) {
    OrderedJson j;
    j["kind"] = "embedding";
    j["label"] = s.label;
    j["base"] = s.base->name;
    j["cartan_basis"] = OrderedJson::array();
    for (const auto& b : s.cartan_basis) j["cartan_basis"].push_back(to_json(b));
    j["zero_dim"] = s.zero_dim;
    j["declared_dim_gprime"] = s.declared_dim;
    j["vectors"] = OrderedJson::array();
    for (const auto& v : s.vectors) {
        OrderedJson sup = OrderedJson::array();
        for (const auto& r : v.support)
            sup.push_back({{"part", part_tag(r.part)}, {"weight", to_json(s.base->weight(r))}});
        j["vectors"].push_back({{"support", sup}, {"multiplicity", v.multiplicity}});
    }
    return j;
}

/// Weights in supports are looked up in the base; the t'-weight of each
/// vector is the projection of its first support weight.
inline SubalgebraDatum subalgebra_from(const Json& j, DatumPtr base) {
    SubalgebraDatum s;
    const std::size_t n = base->coord_dim;
    s.base = std::move(base);
    s.label = j.contains("label") ? j.at("label").get<std::string>() : "";
    for (const auto& b : field(j, "cartan_basis")) s.cartan_basis.push_back(vector_from(b, n));
    s.zero_dim = j.contains("zero_dim") ? j.at("zero_dim").get<long>() : 0;
    s.declared_dim = get<long>(j, "declared_dim_gprime");
    for (const auto& v : field(j, "vectors")) {
        EmbeddedVector ev;
        ev.multiplicity = v.contains("multiplicity") ? v.at("multiplicity").get<int>() : 1;
        for (const auto& r : field(v, "support")) {
            const Part part = part_from(field(r, "part"));
            const auto w = vector_from(field(r, "weight"), n);
            auto idx = s.base->weights(part).find(w);
            if (!idx)
                throw CatalogError("support weight " + w.to_string() + " is not in Delta(" + part_tag(part) + ",t) of " +
                                   s.base->name);
            ev.support.push_back({part, *idx});
        }
        if (ev.support.empty()) throw CatalogError("embedded vector with empty support");
        ev.cartan_weight = project_onto(s.base->weight(ev.support.front()), s.cartan_basis);
        s.vectors.push_back(std::move(ev));
    }
    return s;
}

// ---------------------------------------------------------------------------
// verdicts

inline OrderedJson to_json(const Verdict& v) {
    OrderedJson j;
    j["question"] = question_name(v.question);
    j["answer"] = v.answer;
    j["equivalents"] = v.equivalents;
    OrderedJson w;
    w["kind"] = v.witness_kind.empty() ? OrderedJson() : OrderedJson(v.witness_kind);
    OrderedJson vecs = OrderedJson::object();
    for (const auto& [name, vec] : v.witness_vectors) vecs[name] = to_json(vec);
    w["vectors"] = vecs;
    if (!v.witness_weights.empty()) {
        OrderedJson ws = OrderedJson::array();
        for (const auto& c : v.witness_weights) ws.push_back(format_rational(c));
        w["weights"] = ws;
    }
    j["witness"] = w;
    OrderedJson in;
    in["pair"] = v.pair_id;
    in["base"] = v.base;
    in["X"] = to_json(v.X);
    j["inputs"] = in;
    j["paper_refs"] = v.refs;
    OrderedJson facts = OrderedJson::object();
    for (const auto& [k, val] : v.facts) facts[k] = val;
    j["details"] = facts;
    if (!v.note.empty()) j["note"] = v.note;
    return j;
}

}  // namespace branchdec::json_io
