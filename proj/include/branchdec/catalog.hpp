#pragma once

// Catalog bundle: algebra, pair and table files listed in manifest.json, with
// a content checksum. Ids missing from the files fall back to the built-in
// families ("su(2,2)") and the synthesized pairs "theta:<algebra>" and
// "swap:<algebra>^2".

#include "branchdec/errors.hpp"
#include "branchdec/involution.hpp"
#include "branchdec/root_datum.hpp"
#include "branchdec/serialization.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace branchdec {

/// 64-bit FNV-1a, used for the catalog checksum.
inline std::uint64_t fnv1a(std::string_view bytes, std::uint64_t h = 1469598103934665603ull) {
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

struct PairRecord {
    std::string id;
    std::string kind;  // "involution" or "embedding"
    std::string subgroup;
    std::string source;  // file name, or "built-in"
    std::optional<InvolutionData> involution;
    SubalgebraDatum subalgebra;
    /// Validation failures kept when loading with force.
    std::vector<std::string> issues;

    bool symmetric() const { return involution.has_value(); }
    const InvolutionData& require_involution() const {
        if (!involution)
            throw UnsupportedError("pair " + id + " is not a symmetric pair; only dimension and rho checks apply");
        return *involution;
    }
};

struct TableRow {
    std::string G, Gprime, L;
    std::string pair;
    RationalVector X;
};

/// Levi type of su(p,q): the (a-count, b-count) signature of each block of
/// equal X-coordinates, sorted.
using LeviType = std::vector<std::pair<int, int>>;

struct ExhaustivenessCheck {
    std::string pair;
    std::vector<LeviType> allowed;
};

struct CatalogBundle {
    std::string version = "built-in";
    std::string checksum;
    std::filesystem::path root;
    std::map<std::string, DatumPtr> algebras;
    std::map<std::string, PairRecord> pairs;
    std::vector<TableRow> table;
    std::vector<ExhaustivenessCheck> exhaustiveness;
    std::vector<std::string> warnings;

    DatumPtr algebra(const std::string& name) const {
        if (auto it = algebras.find(name); it != algebras.end()) return it->second;
        try {
            return std::make_shared<const RootDatum>(build_root_datum(name));
        } catch (const CatalogError& e) {
            throw UnknownIdError("unknown algebra '" + name + "' (" + e.what() + ")");
        }
    }

    PairRecord pair(const std::string& id) const {
        if (auto it = pairs.find(id); it != pairs.end()) return it->second;
        PairRecord r;
        r.id = id;
        r.kind = "involution";
        r.source = "built-in";
        if (id.rfind("theta:", 0) == 0) {
            r.involution = build_theta_involution(algebra(id.substr(6)));
            r.subgroup = "K";
        } else if (id.rfind("swap:", 0) == 0 && id.size() > 7 && id.compare(id.size() - 2, 2, "^2") == 0) {
            const auto single = id.substr(5, id.size() - 7);
            r.involution = build_swap_involution(algebra(single + "^2"));
            r.subgroup = "diag";
        } else {
            throw UnknownIdError("unknown pair id '" + id + "'");
        }
        r.involution->label = id;
        r.subalgebra = to_subalgebra(*r.involution);
        return r;
    }
};

namespace detail {

inline std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw CatalogError("cannot read catalog file " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline json_io::Json parse_json(const std::string& text, const std::string& where) {
    try {
        return json_io::Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(where + ": " + e.what());
    }
}

inline std::vector<std::string> check_pair(const PairRecord& r) {
    if (!r.involution) return r.subalgebra.validate();
    auto rep = validate_involution(*r.involution);
    if (rep.ok() && r.involution->expected_restricted_roots) {
        const auto rs = restricted_roots(*r.involution);
        if (!(rs.roots == *r.involution->expected_restricted_roots))
            rep.failures.push_back("restricted roots differ from the declared expected_restricted_roots");
    }
    if (rep.ok()) {
        auto sub_issues = r.subalgebra.validate();
        rep.failures.insert(rep.failures.end(), sub_issues.begin(), sub_issues.end());
    }
    return rep.failures;
}

}  // namespace detail

inline PairRecord pair_from(const json_io::Json& j, const CatalogBundle& bundle, const std::string& source) {
    PairRecord r;
    r.id = json_io::get<std::string>(j, "id");
    r.kind = json_io::get<std::string>(j, "kind");
    r.subgroup = j.contains("subgroup") ? j.at("subgroup").get<std::string>() : "";
    r.source = source;
    const auto base = bundle.algebra(json_io::get<std::string>(j, "base"));
    if (r.kind == "involution") {
        r.involution = json_io::involution_from(j, base);
        if (r.involution->label.empty()) r.involution->label = r.id;
        r.subalgebra = to_subalgebra(*r.involution);
    } else if (r.kind == "embedding") {
        r.subalgebra = json_io::subalgebra_from(j, base);
    } else {
        throw ParseError(source + ": kind must be \"involution\" or \"embedding\"");
    }
    if (r.subalgebra.label.empty()) r.subalgebra.label = r.id;
    return r;
}

/// Loads <dir>/manifest.json. Entries failing validation are rejected
/// unless `force`, in which case they are kept with their issues recorded.
inline CatalogBundle load_catalog(const std::filesystem::path& dir, bool force = false) {
    CatalogBundle b;
    b.root = dir;
    const auto manifest_text = detail::read_file(dir / "manifest.json");
    const auto manifest = detail::parse_json(manifest_text, "manifest.json");
    b.version = json_io::get<std::string>(manifest, "version");
    std::uint64_t h = fnv1a(manifest_text);
    auto files = [&](const char* key) {
        std::vector<std::string> out;
        if (manifest.contains(key))
            for (const auto& f : manifest.at(key)) out.push_back(f.get<std::string>());
        return out;
    };

    for (const auto& f : files("algebras")) {
        const auto text = detail::read_file(dir / f);
        h = fnv1a(f + "\n" + text, h);
        try {
            auto d = json_io::root_datum_from(detail::parse_json(text, f));
            const std::string name = d.name;
            b.algebras[name] = std::make_shared<const RootDatum>(std::move(d));
        } catch (const std::exception& e) {
            throw CatalogError(f + ": " + e.what());
        }
    }
    for (const auto& f : files("pairs")) {
        const auto text = detail::read_file(dir / f);
        h = fnv1a(f + "\n" + text, h);
        PairRecord r;
        try {
            r = pair_from(detail::parse_json(text, f), b, f);
        } catch (const UnknownIdError&) {
            throw;
        } catch (const std::exception& e) {
            throw CatalogError(f + ": " + e.what());
        }
        r.issues = detail::check_pair(r);
        if (!r.issues.empty()) {
            std::string msg = f + ": pair " + r.id + " failed validation:";
            for (const auto& s : r.issues) msg += " " + s + ";";
            if (!force) throw CatalogError(msg);
            b.warnings.push_back(msg);
        }
        const std::string id = r.id;
        b.pairs[id] = std::move(r);
    }
    for (const auto& f : files("tables")) {
        const auto text = detail::read_file(dir / f);
        h = fnv1a(f + "\n" + text, h);
        const auto j = detail::parse_json(text, f);
        try {
            for (const auto& row : json_io::field(j, "rows")) {
                TableRow t;
                t.G = json_io::get<std::string>(row, "G");
                t.Gprime = json_io::get<std::string>(row, "Gprime");
                t.L = json_io::get<std::string>(row, "L");
                t.pair = json_io::get<std::string>(row, "pair");
                t.X = json_io::vector_from(json_io::field(row, "X"));
                b.table.push_back(std::move(t));
            }
            if (j.contains("exhaustiveness")) {
                for (const auto& e : j.at("exhaustiveness")) {
                    ExhaustivenessCheck c;
                    c.pair = json_io::get<std::string>(e, "pair");
                    for (const auto& type : json_io::field(e, "allowed_levi_types")) {
                        LeviType t;
                        for (const auto& blk : type) t.emplace_back(blk.at(0).get<int>(), blk.at(1).get<int>());
                        std::sort(t.begin(), t.end());
                        c.allowed.push_back(std::move(t));
                    }
                    b.exhaustiveness.push_back(std::move(c));
                }
            }
        } catch (const nlohmann::json::exception& e) {
            throw CatalogError(f + ": " + e.what());
        }
    }
    b.checksum = hex64(h);
    return b;
}

/// Levi type of an su(p,q) parabolic (coordinates 0..p-1 are the first block).
inline LeviType su_levi_type(const RationalVector& X, std::size_t p) {
    std::map<Rational, std::pair<int, int>> blocks;
    for (std::size_t i = 0; i < X.dim(); ++i) (i < p ? blocks[X[i]].first : blocks[X[i]].second) += 1;
    LeviType t;
    for (const auto& [value, sig] : blocks) t.push_back(sig);
    std::sort(t.begin(), t.end());
    return t;
}

}  // namespace branchdec
