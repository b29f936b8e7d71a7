#pragma once

// Weight-level models of real reductive Lie algebras g = k + p: the t-weights
// of k and of p for a Cartan subalgebra t of k, in a fixed coordinate model
// per family.

#include "branchdec/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <regex>
#include <stdexcept>
#include <string>
#include <vector>

namespace branchdec {

enum class Part { compact, noncompact };

inline const char* part_tag(Part p) { return p == Part::compact ? "k" : "p"; }

/// Sorted multiset of weights; one entry per distinct weight.
class WeightMultiset {
public:
    struct Entry {
        RationalVector weight;
        int multiplicity = 1;
        friend bool operator==(const Entry&, const Entry&) = default;
    };

    WeightMultiset() = default;

    void add(const RationalVector& w, int multiplicity = 1) {
        if (multiplicity < 1) throw std::invalid_argument("weight multiplicity must be positive");
        auto it = std::lower_bound(entries_.begin(), entries_.end(), w,
                                   [](const Entry& e, const RationalVector& v) { return e.weight < v; });
        if (it != entries_.end() && it->weight == w) {
            it->multiplicity += multiplicity;
        } else {
            entries_.insert(it, Entry{w, multiplicity});
        }
    }

    /// Index of the entry holding w, if any.
    std::optional<std::size_t> find(const RationalVector& w) const {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), w,
                                   [](const Entry& e, const RationalVector& v) { return e.weight < v; });
        if (it == entries_.end() || !(it->weight == w)) return std::nullopt;
        return static_cast<std::size_t>(it - entries_.begin());
    }

    int multiplicity_of(const RationalVector& w) const {
        auto i = find(w);
        return i ? entries_[*i].multiplicity : 0;
    }

    /// Cardinality counted with multiplicity.
    long total() const {
        long n = 0;
        for (const auto& e : entries_) n += e.multiplicity;
        return n;
    }

    bool negation_closed(bool ignore_zero = true) const {
        for (const auto& e : entries_) {
            if (ignore_zero && e.weight.is_zero()) continue;
            if (multiplicity_of(-e.weight) != e.multiplicity) return false;
        }
        return true;
    }

    /// Sum of all weights with multiplicity.
    RationalVector sum(std::size_t dim) const {
        RationalVector s(dim);
        for (const auto& e : entries_) s += Rational(e.multiplicity) * e.weight;
        return s;
    }

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    const Entry& operator[](std::size_t i) const { return entries_[i]; }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    friend bool operator==(const WeightMultiset&, const WeightMultiset&) = default;

private:
    std::vector<Entry> entries_;
};

/// Reference to one weight entry of a RootDatum.
struct WeightRef {
    Part part = Part::compact;
    std::size_t index = 0;
    friend auto operator<=>(const WeightRef&, const WeightRef&) = default;
};

struct Summand {
    std::string name;
    std::size_t offset = 0;
    std::size_t size = 0;
    friend bool operator==(const Summand&, const Summand&) = default;
};

struct RootDatum {
    std::string name;
    std::size_t coord_dim = 0;
    /// t is the orthogonal complement of these vectors in coordinate space.
    std::vector<RationalVector> constraints;
    std::size_t dim_t = 0;
    WeightMultiset compact_weights;
    WeightMultiset noncompact_weights;
    long declared_dim_g = 0;
    bool equal_rank = true;
    std::vector<Summand> summands;

    const WeightMultiset& weights(Part p) const { return p == Part::compact ? compact_weights : noncompact_weights; }
    const RationalVector& weight(WeightRef r) const { return weights(r.part)[r.index].weight; }
    int multiplicity(WeightRef r) const { return weights(r.part)[r.index].multiplicity; }

    /// All entries in a fixed order: compact first, then noncompact.
    std::vector<WeightRef> all_refs() const {
        std::vector<WeightRef> refs;
        for (std::size_t i = 0; i < compact_weights.size(); ++i) refs.push_back({Part::compact, i});
        for (std::size_t i = 0; i < noncompact_weights.size(); ++i) refs.push_back({Part::noncompact, i});
        return refs;
    }

    std::vector<RationalVector> t_basis() const { return orthogonal_complement(constraints, coord_dim); }

    bool in_t(const RationalVector& v) const {
        if (v.dim() != coord_dim) return false;
        return std::all_of(constraints.begin(), constraints.end(),
                           [&](const RationalVector& c) { return inner_product(c, v) == 0; });
    }

    long computed_dim() const {
        return static_cast<long>(dim_t) + compact_weights.total() + noncompact_weights.total();
    }

    /// Multiplicity of the zero weight in p.
    int zero_weight_dim() const { return noncompact_weights.multiplicity_of(RationalVector(coord_dim)); }

    /// Every violated structural invariant, as a human readable line.
    std::vector<std::string> validate() const {
        std::vector<std::string> issues;
        if (dim_t != coord_dim - rank(constraints)) issues.push_back("dim_t does not match the constraint rank");
        auto check_part = [&](const WeightMultiset& ws, const char* tag) {
            for (const auto& e : ws) {
                if (e.weight.dim() != coord_dim) {
                    issues.push_back(std::string(tag) + " weight " + e.weight.to_string() + " has wrong dimension");
                } else if (!in_t(e.weight)) {
                    issues.push_back(std::string(tag) + " weight " + e.weight.to_string() + " is not in t");
                }
            }
        };
        check_part(compact_weights, "k");
        check_part(noncompact_weights, "p");
        if (compact_weights.multiplicity_of(RationalVector(coord_dim)) != 0)
            issues.push_back("zero weight present in k");
        if (!compact_weights.negation_closed()) issues.push_back("k weights not closed under negation");
        if (!noncompact_weights.negation_closed()) issues.push_back("p weights not closed under negation");
        if (equal_rank && zero_weight_dim() != 0) issues.push_back("equal-rank datum has zero weights in p");
        if (!equal_rank && zero_weight_dim() == 0) issues.push_back("non-equal-rank datum has no zero weight in p");
        if (computed_dim() != declared_dim_g)
            issues.push_back("dimension bookkeeping: dim t + |k| + |p| = " + std::to_string(computed_dim()) +
                             " but declared " + std::to_string(declared_dim_g));
        return issues;
    }

    friend bool operator==(const RootDatum&, const RootDatum&) = default;
};

namespace detail {

inline RationalVector e(std::size_t dim, std::size_t i) { return RationalVector::unit(dim, i); }

/// e_i - e_j over an index set.
inline void add_type_a(WeightMultiset& ws, std::size_t dim, const std::vector<std::size_t>& idx) {
    for (auto i : idx)
        for (auto j : idx)
            if (i != j) ws.add(e(dim, i) - e(dim, j));
}

/// Weights of the defining representation of so(n) on coordinates [offset, offset + n/2).
inline std::vector<RationalVector> so_vector_weights(std::size_t dim, std::size_t offset, std::size_t n) {
    std::vector<RationalVector> ws;
    for (std::size_t i = 0; i < n / 2; ++i) {
        ws.push_back(e(dim, offset + i));
        ws.push_back(-e(dim, offset + i));
    }
    if (n % 2 == 1) ws.emplace_back(dim);
    return ws;
}

inline void add_so_roots(WeightMultiset& ws, std::size_t dim, std::size_t offset, std::size_t n) {
    const std::size_t m = n / 2;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            for (int si : {1, -1})
                for (int sj : {1, -1})
                    ws.add(Rational(si) * e(dim, offset + i) + Rational(sj) * e(dim, offset + j));
        }
        if (n % 2 == 1) {
            ws.add(e(dim, offset + i));
            ws.add(-e(dim, offset + i));
        }
    }
}

inline void add_sp_roots(WeightMultiset& ws, std::size_t dim, std::size_t offset, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (int si : {1, -1})
                for (int sj : {1, -1})
                    ws.add(Rational(si) * e(dim, offset + i) + Rational(sj) * e(dim, offset + j));
        }
        ws.add(Rational(2) * e(dim, offset + i));
        ws.add(Rational(-2) * e(dim, offset + i));
    }
}

/// G2 roots in the plane x+y+z = 0 of R^3: long e_i - e_j, short e_k - (1,1,1)/3.
inline std::vector<RationalVector> g2_long_roots() {
    std::vector<RationalVector> r;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            if (i != j) r.push_back(e(3, i) - e(3, j));
    return r;
}

inline std::vector<RationalVector> g2_short_roots() {
    std::vector<RationalVector> r;
    const RationalVector third{Rational(1, 3), Rational(1, 3), Rational(1, 3)};
    for (std::size_t k = 0; k < 3; ++k) {
        r.push_back(e(3, k) - third);
        r.push_back(third - e(3, k));
    }
    return r;
}

inline RootDatum finish(RootDatum d) {
    d.dim_t = d.coord_dim - rank(d.constraints);
    if (d.summands.empty()) d.summands.push_back({d.name, 0, d.coord_dim});
    return d;
}

inline RootDatum su_datum(int p, int q) {
    const int n = p + q;
    RootDatum d;
    d.name = q == 0 ? "su(" + std::to_string(p) + ")" : "su(" + std::to_string(p) + "," + std::to_string(q) + ")";
    d.declared_dim_g = static_cast<long>(n) * n - 1;
    if (n == 2) {
        // sl(2) model: one coordinate, roots +-2.
        d.coord_dim = 1;
        WeightMultiset& target = q == 0 ? d.compact_weights : d.noncompact_weights;
        target.add(RationalVector::from_ints({2}));
        target.add(RationalVector::from_ints({-2}));
        return finish(d);
    }
    d.coord_dim = static_cast<std::size_t>(n);
    d.constraints.emplace_back(std::vector<Rational>(d.coord_dim, Rational(1)));
    std::vector<std::size_t> first, second;
    for (int i = 0; i < p; ++i) first.push_back(static_cast<std::size_t>(i));
    for (int i = p; i < n; ++i) second.push_back(static_cast<std::size_t>(i));
    add_type_a(d.compact_weights, d.coord_dim, first);
    add_type_a(d.compact_weights, d.coord_dim, second);
    for (auto i : first)
        for (auto j : second) {
            d.noncompact_weights.add(e(d.coord_dim, i) - e(d.coord_dim, j));
            d.noncompact_weights.add(e(d.coord_dim, j) - e(d.coord_dim, i));
        }
    return finish(d);
}

inline RootDatum so_datum(int p, int q) {
    RootDatum d;
    d.name = q == 0 ? "so(" + std::to_string(p) + ")" : "so(" + std::to_string(p) + "," + std::to_string(q) + ")";
    const auto up = static_cast<std::size_t>(p), uq = static_cast<std::size_t>(q);
    d.coord_dim = up / 2 + uq / 2;
    d.declared_dim_g = static_cast<long>(p + q) * (p + q - 1) / 2;
    d.equal_rank = !(p % 2 == 1 && q % 2 == 1);
    add_so_roots(d.compact_weights, d.coord_dim, 0, up);
    add_so_roots(d.compact_weights, d.coord_dim, up / 2, uq);
    if (q > 0) {
        const auto wp = so_vector_weights(d.coord_dim, 0, up);
        const auto wq = so_vector_weights(d.coord_dim, up / 2, uq);
        for (const auto& a : wp)
            for (const auto& b : wq) d.noncompact_weights.add(a + b);
    }
    return finish(d);
}

inline RootDatum sp_real_datum(int n) {
    RootDatum d;
    d.name = "sp(" + std::to_string(n) + ",R)";
    d.coord_dim = static_cast<std::size_t>(n);
    d.declared_dim_g = static_cast<long>(n) * (2 * n + 1);
    std::vector<std::size_t> idx;
    for (int i = 0; i < n; ++i) idx.push_back(static_cast<std::size_t>(i));
    add_type_a(d.compact_weights, d.coord_dim, idx);
    for (std::size_t i = 0; i < d.coord_dim; ++i) {
        for (std::size_t j = i + 1; j < d.coord_dim; ++j) {
            d.noncompact_weights.add(e(d.coord_dim, i) + e(d.coord_dim, j));
            d.noncompact_weights.add(-(e(d.coord_dim, i) + e(d.coord_dim, j)));
        }
        d.noncompact_weights.add(Rational(2) * e(d.coord_dim, i));
        d.noncompact_weights.add(Rational(-2) * e(d.coord_dim, i));
    }
    return finish(d);
}

inline RootDatum sp_datum(int p, int q) {
    RootDatum d;
    d.name = q == 0 ? "sp(" + std::to_string(p) + ")" : "sp(" + std::to_string(p) + "," + std::to_string(q) + ")";
    const auto up = static_cast<std::size_t>(p), uq = static_cast<std::size_t>(q);
    d.coord_dim = up + uq;
    d.declared_dim_g = static_cast<long>(p + q) * (2 * (p + q) + 1);
    add_sp_roots(d.compact_weights, d.coord_dim, 0, up);
    add_sp_roots(d.compact_weights, d.coord_dim, up, uq);
    for (std::size_t i = 0; i < up; ++i)
        for (std::size_t j = up; j < up + uq; ++j)
            for (int si : {1, -1})
                for (int sj : {1, -1})
                    d.noncompact_weights.add(Rational(si) * e(d.coord_dim, i) + Rational(sj) * e(d.coord_dim, j));
    return finish(d);
}

inline RootDatum g2_datum(bool split) {
    RootDatum d;
    d.name = split ? "g2(R)" : "g2";
    d.coord_dim = 3;
    d.constraints.push_back(RationalVector::from_ints({1, 1, 1}));
    d.declared_dim_g = 14;
    // Split form: k = su(2) + su(2) spanned by the long root e1 - e2 and the
    // orthogonal short root e3 - (1,1,1)/3.
    const RationalVector long_compact = e(3, 0) - e(3, 1);
    const RationalVector short_compact = g2_short_roots()[4];
    auto is_compact = [&](const RationalVector& r) {
        return !split || r == long_compact || r == -long_compact || r == short_compact || r == -short_compact;
    };
    for (const auto& r : g2_long_roots()) (is_compact(r) ? d.compact_weights : d.noncompact_weights).add(r);
    for (const auto& r : g2_short_roots()) (is_compact(r) ? d.compact_weights : d.noncompact_weights).add(r);
    return finish(d);
}

/// g_C viewed as a real Lie algebra: k is the compact form, p = sqrt(-1) k.
inline RootDatum complexify(const RootDatum& compact, std::string name, long complex_dim) {
    RootDatum d;
    d.name = std::move(name);
    d.coord_dim = compact.coord_dim;
    d.constraints = compact.constraints;
    d.declared_dim_g = 2 * complex_dim;
    d.equal_rank = false;
    d.compact_weights = compact.compact_weights;
    for (const auto& e : compact.compact_weights) d.noncompact_weights.add(e.weight, e.multiplicity);
    d.dim_t = d.coord_dim - rank(d.constraints);
    d.noncompact_weights.add(RationalVector(d.coord_dim), static_cast<int>(d.dim_t));
    return finish(d);
}

}  // namespace detail

/// Direct sum; coordinates are concatenated in order.
inline RootDatum direct_sum(const std::vector<RootDatum>& parts) {
    if (parts.empty()) throw std::invalid_argument("direct sum of nothing");
    RootDatum d;
    std::size_t total = 0;
    for (const auto& p : parts) total += p.coord_dim;
    d.coord_dim = total;
    d.equal_rank = true;
    std::size_t offset = 0;
    auto embed = [&](const RationalVector& v, std::size_t off) {
        RationalVector out(total);
        for (std::size_t i = 0; i < v.dim(); ++i) out[off + i] = v[i];
        return out;
    };
    for (const auto& p : parts) {
        if (!d.name.empty()) d.name += "+";
        d.name += p.name;
        for (const auto& c : p.constraints) d.constraints.push_back(embed(c, offset));
        for (const auto& e : p.compact_weights) d.compact_weights.add(embed(e.weight, offset), e.multiplicity);
        for (const auto& e : p.noncompact_weights) d.noncompact_weights.add(embed(e.weight, offset), e.multiplicity);
        d.declared_dim_g += p.declared_dim_g;
        d.equal_rank = d.equal_rank && p.equal_rank;
        for (const auto& s : p.summands) d.summands.push_back({s.name, offset + s.offset, s.size});
        offset += p.coord_dim;
    }
    d.dim_t = d.coord_dim - rank(d.constraints);
    return d;
}

enum class Family { su, so, sp_real, sp, g2_split, g2_compact, sl_complex, so_complex, sp_complex, g2_complex };

/// Instantiates a catalog family. Parameters follow the usual notation:
/// su(p,q), so(p,q), sp(n,R) -> {n}, sp(p,q), complex families -> {n}.
inline RootDatum build_root_datum(Family family, const std::vector<int>& params) {
    auto need = [&](std::size_t n) {
        if (params.size() != n) throw CatalogError("wrong number of family parameters");
    };
    switch (family) {
        case Family::su:
            need(2);
            if (params[0] < 1 || params[1] < 0 || params[0] + params[1] < 2)
                throw CatalogError("su(p,q) needs p >= 1, q >= 0, p + q >= 2");
            return detail::su_datum(params[0], params[1]);
        case Family::so:
            need(2);
            if (params[0] < 1 || params[1] < 0 || params[0] + params[1] < 3)
                throw CatalogError("so(p,q) needs p >= 1, q >= 0, p + q >= 3 (so(1,1) and so(2) are degenerate)");
            return detail::so_datum(params[0], params[1]);
        case Family::sp_real:
            need(1);
            if (params[0] < 1) throw CatalogError("sp(n,R) needs n >= 1");
            return detail::sp_real_datum(params[0]);
        case Family::sp:
            need(2);
            if (params[0] < 1 || params[1] < 0) throw CatalogError("sp(p,q) needs p >= 1, q >= 0");
            return detail::sp_datum(params[0], params[1]);
        case Family::g2_split:
            need(0);
            return detail::g2_datum(true);
        case Family::g2_compact:
            need(0);
            return detail::g2_datum(false);
        case Family::sl_complex: {
            need(1);
            const int n = params[0];
            if (n < 2) throw CatalogError("sl(n,C) needs n >= 2");
            return detail::complexify(detail::su_datum(n, 0), "sl(" + std::to_string(n) + ",C)",
                                      static_cast<long>(n) * n - 1);
        }
        case Family::so_complex: {
            need(1);
            const int n = params[0];
            if (n < 3) throw CatalogError("so(n,C) needs n >= 3");
            return detail::complexify(detail::so_datum(n, 0), "so(" + std::to_string(n) + ",C)",
                                      static_cast<long>(n) * (n - 1) / 2);
        }
        case Family::sp_complex: {
            need(1);
            const int n = params[0];
            if (n < 1) throw CatalogError("sp(n,C) needs n >= 1");
            return detail::complexify(detail::sp_datum(n, 0), "sp(" + std::to_string(n) + ",C)",
                                      static_cast<long>(n) * (2 * n + 1));
        }
        case Family::g2_complex:
            need(0);
            return detail::complexify(detail::g2_datum(false), "g2(C)", 14);
    }
    throw CatalogError("unknown family");
}

/// Builds a datum from its conventional name: "su(2,2)", "so(4,3)", "sp(2,R)",
/// "sp(1,1)", "g2(R)", "su(4)", "so(5,C)", "su(1,1)+su(1,1)", "su(1,1)^2".
inline RootDatum build_root_datum(const std::string& name) {
    if (name.empty()) throw CatalogError("empty algebra name");
    // Direct sums: split on top-level '+'.
    std::vector<std::string> pieces;
    int depth = 0;
    std::string cur;
    for (char c : name) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == '+' && depth == 0) {
            pieces.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    pieces.push_back(cur);
    if (pieces.size() > 1) {
        std::vector<RootDatum> parts;
        for (const auto& p : pieces) parts.push_back(build_root_datum(p));
        return direct_sum(parts);
    }
    static const std::regex power(R"(^(.+)\^([0-9]+)$)");
    std::smatch m;
    if (std::regex_match(name, m, power)) {
        const int k = std::stoi(m[2]);
        if (k < 1) throw CatalogError("bad exponent in '" + name + "'");
        std::vector<RootDatum> parts(static_cast<std::size_t>(k), build_root_datum(m[1].str()));
        return direct_sum(parts);
    }
    static const std::regex two(R"(^(su|so|sp)\(([0-9]+),([0-9]+)\)$)");
    static const std::regex one(R"(^(su|so|sp)\(([0-9]+)\)$)");
    static const std::regex real_sp(R"(^sp\(([0-9]+),R\)$)");
    static const std::regex cplx(R"(^(sl|so|sp)\(([0-9]+),C\)$)");
    if (std::regex_match(name, m, two)) {
        const std::vector<int> pq{std::stoi(m[2]), std::stoi(m[3])};
        const auto fam = m[1] == "su" ? Family::su : m[1] == "so" ? Family::so : Family::sp;
        return build_root_datum(fam, pq);
    }
    if (std::regex_match(name, m, one)) {
        const std::vector<int> pq{std::stoi(m[2]), 0};
        const auto fam = m[1] == "su" ? Family::su : m[1] == "so" ? Family::so : Family::sp;
        return build_root_datum(fam, pq);
    }
    if (std::regex_match(name, m, real_sp)) return build_root_datum(Family::sp_real, {std::stoi(m[1])});
    if (std::regex_match(name, m, cplx)) {
        const auto fam = m[1] == "sl" ? Family::sl_complex : m[1] == "so" ? Family::so_complex : Family::sp_complex;
        return build_root_datum(fam, {std::stoi(m[2])});
    }
    if (name == "g2(R)") return build_root_datum(Family::g2_split, {});
    if (name == "g2") return build_root_datum(Family::g2_compact, {});
    if (name == "g2(C)") return build_root_datum(Family::g2_complex, {});
    throw CatalogError("unknown algebra family '" + name + "'");
}

}  // namespace branchdec
