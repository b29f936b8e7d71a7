#pragma once

// Command dispatch for the branchdec tool. `run` takes the argument list
// (without the program name) and writes to the given streams, so tests can
// drive it in-process.
//
// Exit codes: 0 ok, 1 parse or usage error, 2 unknown id or bad catalog,
// 3 unsupported question or rank bound exceeded, 4 verify found failures.

#include "branchdec/catalog.hpp"
#include "branchdec/decider.hpp"
#include "branchdec/errors.hpp"
#include "branchdec/involution.hpp"
#include "branchdec/parabolic.hpp"
#include "branchdec/serialization.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace branchdec::cli {

enum ExitCode : int { ok = 0, parse_error = 1, unknown_id = 2, unsupported = 3, verify_failed = 4 };

/// Algebras written by `catalog --export`.
inline const std::vector<std::string>& standard_algebras() {
    static const std::vector<std::string> names{
        "su(1,1)", "su(2)",   "su(2,1)", "su(3)",   "su(2,2)", "su(3,1)", "su(4)",   "so(2,1)", "so(3)",
        "so(2,2)", "so(3,1)", "so(4)",   "so(3,2)", "so(4,1)", "so(5)",   "so(4,3)", "so(7)",   "sp(1,R)",
        "sp(2,R)", "sp(1,1)", "sp(2)",   "g2(R)",   "g2",      "sl(2,C)", "sl(4,C)", "so(4,C)", "so(5,C)",
        "sp(2,C)", "so(3,C)", "so(7,C)", "g2(C)", "su(1,1)+su(1,1)", "su(2)+su(2)"};
    return names;
}

inline std::string slug(const std::string& name) {
    std::string s;
    for (char c : name) {
        if (std::isalnum(static_cast<unsigned char>(c))) s += c;
        else if (c == '+') s += "_plus_";
        else if (c == ',') s += '_';
    }
    return s;
}

struct Options {
    std::string catalog_dir;
    bool force = false;
    std::string format;
};

inline std::string default_catalog_dir() {
    if (const char* env = std::getenv("BRANCHDEC_CATALOG"); env && *env) return env;
#ifdef BRANCHDEC_DEFAULT_CATALOG
    if (std::filesystem::exists(std::filesystem::path(BRANCHDEC_DEFAULT_CATALOG) / "manifest.json"))
        return BRANCHDEC_DEFAULT_CATALOG;
#endif
    return "";
}

inline CatalogBundle open_catalog(const Options& o) {
    const std::string dir = o.catalog_dir.empty() ? default_catalog_dir() : o.catalog_dir;
    if (dir.empty()) return CatalogBundle{};
    return load_catalog(dir, o.force);
}

// ---------------------------------------------------------------------------
// classification

struct ClassifyRow {
    RationalVector X;
    long dim_l = 0, dim_u = 0, S = 0;
    std::map<std::string, std::string> cells;
};

inline const std::vector<std::string>& classify_columns() {
    static const std::vector<std::string> cols{"deco", "admissible", "transitive", "rho", "symtype", "virtsym"};
    return cols;
}

inline std::string flag(bool b) { return b ? "true" : "false"; }

inline ClassifyRow classify_one(const PairRecord& pair, const ThetaStableParabolic& q) {
    ClassifyRow row;
    row.X = q.defining_element();
    row.dim_l = q.dim_levi();
    row.dim_u = q.dim_u();
    row.S = q.S();
    if (pair.involution) {
        row.cells["deco"] = flag(discretely_decomposable(*pair.involution, q).answer);
        row.cells["admissible"] = flag(admissible_sufficient(*pair.involution, q).answer);
    } else {
        row.cells["deco"] = row.cells["admissible"] = "n/a";
    }
    const bool tr = transitive_check(pair.subalgebra, q).answer;
    row.cells["transitive"] = flag(tr);
    row.cells["rho"] = tr ? flag(rho_compat_check(pair.subalgebra, q).answer) : "n/a";
    row.cells["symtype"] = flag(is_symmetric_type(q));
    row.cells["virtsym"] = flag(is_virtually_symmetric_type(q));
    return row;
}

/// One row per enumerated q, in the enumeration's canonical order.
inline std::vector<ClassifyRow> classify(const PairRecord& pair, bool dominant_only, std::size_t rank_bound) {
    const auto base = pair.subalgebra.base;
    std::vector<ClassifyRow> rows;
    for (const auto& q : enumerate_parabolics(base, dominant_only, rank_bound)) rows.push_back(classify_one(pair, q));
    return rows;
}

// ---------------------------------------------------------------------------
// verification of the irreducible-restriction table and sweeps

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double millis = 0;
};

inline std::vector<CheckResult> verify_catalog(const CatalogBundle& cat, std::size_t sweep_rank) {
    std::vector<CheckResult> out;
    auto timed = [&](std::string name, const std::function<std::pair<bool, std::string>()>& body) {
        const auto t0 = std::chrono::steady_clock::now();
        CheckResult r;
        r.name = std::move(name);
        try {
            std::tie(r.pass, r.detail) = body();
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("error: ") + e.what();
        }
        r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        out.push_back(std::move(r));
    };

    // Table rows: both parabolics X and -X with the listed Levi factor.
    for (const auto& row : cat.table) {
        for (int s : {1, -1}) {
            const std::string name = "table " + row.G + " > " + row.Gprime + " L=" + row.L + (s > 0 ? " (q)" : " (q-bar)");
            timed(name, [&]() -> std::pair<bool, std::string> {
                const auto pair = cat.pair(row.pair);
                const auto q = build_parabolic(pair.subalgebra.base, Rational(s) * row.X);
                const auto tr = transitive_check(pair.subalgebra, q);
                if (!tr.answer)
                    return {false, "transitive_gq false: dim g'=" + *tr.fact("dim_gprime") +
                                       " dim g'^q=" + *tr.fact("dim_gprime_cap_q") + " dim g=" + *tr.fact("dim_g") +
                                       " dim q=" + *tr.fact("dim_q")};
                const auto rho = rho_compat_check(pair.subalgebra, q);
                std::string d = "X=" + q.defining_element().to_string() + " dim q'=" + *tr.fact("dim_qprime") +
                                " rho=" + rho.witness("rho_uprime")->to_string();
                return {rho.answer, d};
            });
        }
    }

    // Exhaustiveness: the open-orbit condition holds only for the listed Levi types.
    for (const auto& ex : cat.exhaustiveness) {
        timed("exhaustive " + ex.pair, [&]() -> std::pair<bool, std::string> {
            const auto pair = cat.pair(ex.pair);
            const auto& d = *pair.subalgebra.base;
            if (d.summands.size() != 1 || d.name.rfind("su(", 0) != 0)
                throw UnsupportedError("Levi types are implemented for su(p,q) only");
            const std::size_t p = std::stoul(d.name.substr(3));
            std::size_t passing = 0, nontrivial = 0;
            for (const auto& q : enumerate_parabolics(pair.subalgebra.base, false, default_rank_bound)) {
                if (!transitive_check(pair.subalgebra, q).answer) continue;
                ++passing;
                if (q.dim_u() == 0) continue;
                ++nontrivial;
                const auto type = su_levi_type(q.defining_element(), p);
                if (std::find(ex.allowed.begin(), ex.allowed.end(), type) == ex.allowed.end())
                    return {false, "unexpected Levi type at X=" + q.defining_element().to_string()};
            }
            return {nontrivial > 0, std::to_string(nontrivial) + " nontrivial parabolics pass, all of the listed types (" +
                                        std::to_string(passing - nontrivial) + " trivial)"};
        });
    }

    // sigma = theta: every enumerated q gives a discretely decomposable restriction.
    for (const auto& [name, d] : cat.algebras) {
        if (d->dim_t > sweep_rank) continue;
        timed("theta sweep " + name, [&, d = d]() -> std::pair<bool, std::string> {
            const auto inv = build_theta_involution(d);
            std::size_t n = 0;
            for (const auto& q : enumerate_parabolics(d, false, sweep_rank)) {
                ++n;
                if (!discretely_decomposable(inv, q).answer)
                    return {false, "deco false at X=" + q.defining_element().to_string()};
            }
            return {true, std::to_string(n) + " parabolics"};
        });
    }

    // Consistency on symmetric catalog pairs: deco implies the sufficient test.
    for (const auto& [id, pair] : cat.pairs) {
        if (!pair.involution || pair.subalgebra.base->dim_t > sweep_rank) continue;
        timed("consistency " + id, [&, &pair = pair]() -> std::pair<bool, std::string> {
            std::size_t n = 0, deco = 0;
            for (const auto& q : enumerate_parabolics(pair.subalgebra.base, true, sweep_rank)) {
                ++n;
                const bool dd = discretely_decomposable(*pair.involution, q).answer;
                const bool adm = admissible_sufficient(*pair.involution, q).answer;
                deco += dd;
                if (dd && !adm) return {false, "deco true but admissible_sufficient false at X=" +
                                                   q.defining_element().to_string()};
            }
            return {true, std::to_string(deco) + "/" + std::to_string(n) + " dominant parabolics deco"};
        });
    }
    return out;
}

// ---------------------------------------------------------------------------
// text rendering

inline std::string matrix_text(const RationalMatrix& m) {
    std::string s;
    for (const auto& row : m) s += "    " + RationalVector(row).to_string() + "\n";
    return s;
}

inline void print_pair_text(std::ostream& out, const PairRecord& r) {
    const auto& d = *r.subalgebra.base;
    out << "pair " << r.id << "\n";
    out << "  kind: " << r.kind << "  source: " << r.source << "\n";
    out << "  base: " << d.name << "  dim g = " << d.declared_dim_g << "  dim t = " << d.dim_t << "\n";
    out << "  subgroup: " << (r.subgroup.empty() ? "-" : r.subgroup) << "  declared dim g' = " << r.subalgebra.declared_dim
        << "  computed dim g' = " << r.subalgebra.computed_dim() << "\n";
    if (r.involution) {
        const auto& inv = *r.involution;
        out << "  sigma matrix:\n" << matrix_text(inv.matrix);
        out << "  t^sigma basis:";
        for (const auto& b : inv.eigenspace(1)) out << " " << b;
        out << "\n  t^-sigma basis:";
        for (const auto& b : inv.eigenspace(-1)) out << " " << b;
        out << "\n  zero-weight fixed dim: " << inv.zero_weight_fixed_dim << "\n";
        const auto rep = validate_involution(inv);
        out << "  validation: " << (rep.ok() ? "ok" : "FAILED") << "\n";
        for (const auto& f : rep.failures) out << "    - " << f << "\n";
        if (rep.ok()) {
            const auto rs = restricted_roots(inv);
            out << "  restricted roots (" << rs.roots.total() << "):";
            for (const auto& e : rs.roots) out << " " << e.weight << (e.multiplicity > 1 ? "x" + std::to_string(e.multiplicity) : "");
            out << "\n";
        }
    } else {
        out << "  t' basis:";
        for (const auto& b : r.subalgebra.cartan_basis) out << " " << b;
        out << "\n  embedded root vectors: " << r.subalgebra.vectors.size() << "\n";
        const auto issues = r.subalgebra.validate();
        out << "  validation: " << (issues.empty() ? "ok" : "FAILED") << "\n";
        for (const auto& f : issues) out << "    - " << f << "\n";
    }
}

inline void print_parabolic_text(std::ostream& out, const ThetaStableParabolic& q) {
    out << "X = " << q.defining_element() << "\n";
    out << "  dim l = " << q.dim_levi() << "  dim u = " << q.dim_u() << "  dim q = " << q.dim_q() << "  S = " << q.S()
        << "\n  rho(u) = " << q.rho_u() << "\n";
    auto list = [&](const char* label, const WeightMultiset& ws) {
        out << "  " << label << " (" << ws.total() << "):";
        for (const auto& e : ws) out << " " << e.weight;
        out << "\n";
    };
    list("Delta(l cap k)", q.levi_compact());
    list("Delta(l cap p)", q.levi_noncompact());
    list("Delta(u cap k)", q.u_compact());
    list("Delta(u cap p)", q.u_noncompact());
}

inline json_io::OrderedJson parabolic_json(const ThetaStableParabolic& q) {
    json_io::OrderedJson j;
    j["X"] = json_io::to_json(q.defining_element());
    j["dim_l"] = q.dim_levi();
    j["dim_u"] = q.dim_u();
    j["S"] = q.S();
    j["rho_u"] = json_io::to_json(q.rho_u());
    j["levi_compact"] = json_io::to_json(q.levi_compact());
    j["levi_noncompact"] = json_io::to_json(q.levi_noncompact());
    j["u_compact"] = json_io::to_json(q.u_compact());
    j["u_noncompact"] = json_io::to_json(q.u_noncompact());
    return j;
}

// ---------------------------------------------------------------------------

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Discrete decomposability and admissibility criteria for restrictions along symmetric pairs",
                 "branchdec"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--catalog", opt.catalog_dir, "catalog directory (default: $BRANCHDEC_CATALOG)");
    app.add_flag("--force", opt.force, "keep catalog entries that fail validation");

    auto* catalog = app.add_subcommand("catalog", "list the catalog, or export algebra files");
    std::string export_dir;
    catalog->add_option("--export", export_dir, "write algebra JSON files for the standard families");
    catalog->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));

    auto* pair_cmd = app.add_subcommand("pair", "show one pair: sigma matrix, dimensions, validation");
    std::string pair_id;
    pair_cmd->add_option("id", pair_id)->required();
    pair_cmd->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));

    auto* para = app.add_subcommand("parabolic", "show or enumerate theta-stable parabolics of an algebra");
    std::string algebra, xs;
    bool dominant = false;
    std::size_t max_rank = default_rank_bound;
    para->add_option("algebra", algebra)->required();
    para->add_option("--X", xs, "defining element, e.g. 1,1,-1,-1");
    para->add_flag("--dominant", dominant, "only K-dominant representatives");
    para->add_option("--max-rank", max_rank);
    para->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json", "tsv"}));

    auto* check = app.add_subcommand("check", "evaluate one criterion and print a JSON verdict");
    std::string question = "deco";
    check->add_option("--pair", pair_id)->required();
    check->add_option("--X", xs)->required();
    check->add_option("--question", question)
        ->check(CLI::IsMember({"deco", "admissible", "transitive", "rho", "symtype", "virtsym"}));
    check->add_option("--format", opt.format)->check(CLI::IsMember({"json", "text"}));

    auto* cls = app.add_subcommand("classify", "all verdicts for every enumerated parabolic of a pair");
    bool all = false;
    cls->add_option("--pair", pair_id)->required();
    cls->add_option("--max-rank", max_rank);
    cls->add_flag("--all", all, "every parabolic, not only K-dominant representatives");
    cls->add_option("--format", opt.format)->check(CLI::IsMember({"tsv", "json", "text"}));

    auto* ver = app.add_subcommand("verify", "check the table rows, the theta sweep and verdict consistency");
    bool timing = false;
    std::size_t sweep_rank = 3;
    ver->add_flag("--timing", timing, "append per-check wall time (output is then not reproducible)");
    ver->add_option("--max-rank", sweep_rank, "rank bound for the sweeps");
    ver->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : parse_error;
    }

    try {
        if (catalog->parsed()) {
            if (!export_dir.empty()) {
                std::filesystem::create_directories(export_dir);
                for (const auto& name : standard_algebras()) {
                    const auto path = std::filesystem::path(export_dir) / (slug(name) + ".json");
                    std::ofstream f(path);
                    f << json_io::to_json(build_root_datum(name)).dump(2) << "\n";
                    out << "wrote " << path.string() << "\n";
                }
                return ok;
            }
            const auto cat = open_catalog(opt);
            if (opt.format == "json") {
                json_io::OrderedJson j;
                j["version"] = cat.version;
                j["checksum"] = cat.checksum;
                j["algebras"] = json_io::OrderedJson::array();
                for (const auto& [name, d] : cat.algebras)
                    j["algebras"].push_back({{"name", name}, {"dim_t", d->dim_t}, {"dim_g", d->declared_dim_g}});
                j["pairs"] = json_io::OrderedJson::array();
                for (const auto& [id, p] : cat.pairs)
                    j["pairs"].push_back({{"id", id}, {"kind", p.kind}, {"subgroup", p.subgroup}});
                out << j.dump(2) << "\n";
            } else {
                out << "catalog version " << cat.version << " checksum " << cat.checksum << "\n";
                for (const auto& [name, d] : cat.algebras)
                    out << "algebra " << name << "\tdim_t=" << d->dim_t << "\tdim=" << d->declared_dim_g << "\n";
                for (const auto& [id, p] : cat.pairs) out << "pair " << id << "\t" << p.kind << "\n";
                for (const auto& w : cat.warnings) out << "warning " << w << "\n";
            }
            return ok;
        }

        const auto cat = open_catalog(opt);

        if (pair_cmd->parsed()) {
            const auto r = cat.pair(pair_id);
            if (opt.format == "json") {
                auto j = r.involution ? json_io::to_json(*r.involution) : json_io::to_json(r.subalgebra);
                j["id"] = r.id;
                j["subgroup"] = r.subgroup;
                j["computed_dim_gprime"] = r.subalgebra.computed_dim();
                out << j.dump(2) << "\n";
            } else {
                print_pair_text(out, r);
            }
            return ok;
        }

        if (para->parsed()) {
            const auto d = cat.algebra(algebra);
            std::vector<ThetaStableParabolic> qs;
            if (!xs.empty()) qs.push_back(build_parabolic(d, parse_vector(xs)));
            else qs = enumerate_parabolics(d, dominant, max_rank);
            if (opt.format == "json") {
                json_io::OrderedJson a = json_io::OrderedJson::array();
                for (const auto& q : qs) a.push_back(parabolic_json(q));
                out << a.dump(2) << "\n";
            } else if (opt.format == "tsv") {
                out << "X\tdim_l\tdim_u\tS\trho_u\n";
                for (const auto& q : qs)
                    out << q.defining_element() << "\t" << q.dim_levi() << "\t" << q.dim_u() << "\t" << q.S() << "\t"
                        << q.rho_u() << "\n";
            } else {
                for (const auto& q : qs) print_parabolic_text(out, q);
            }
            return ok;
        }

        if (check->parsed()) {
            const auto r = cat.pair(pair_id);
            const auto q = build_parabolic(r.subalgebra.base, parse_vector(xs));
            Verdict v;
            switch (*parse_question(question)) {
                case Question::deco_symm_ii: v = discretely_decomposable(r.require_involution(), q); break;
                case Question::admissible_sufficient: v = admissible_sufficient(r.require_involution(), q); break;
                case Question::transitive_gq: v = transitive_check(r.subalgebra, q); break;
                case Question::rho_compat: v = rho_compat_check(r.subalgebra, q); break;
                case Question::symmetric_type: v = symmetric_type_verdict(q); break;
                case Question::virtually_symmetric_type: v = virtually_symmetric_verdict(q); break;
            }
            if (v.pair_id.empty()) v.pair_id = r.id;
            if (opt.format == "text")
                out << question_name(v.question) << " " << (v.answer ? "true" : "false") << "\n";
            else
                out << json_io::to_json(v).dump(2) << "\n";
            return ok;
        }

        if (cls->parsed()) {
            const auto r = cat.pair(pair_id);
            const auto rows = classify(r, !all, max_rank);
            if (opt.format == "json") {
                json_io::OrderedJson a = json_io::OrderedJson::array();
                for (const auto& row : rows) {
                    json_io::OrderedJson j;
                    j["X"] = json_io::to_json(row.X);
                    j["dim_l"] = row.dim_l;
                    j["dim_u"] = row.dim_u;
                    j["S"] = row.S;
                    for (const auto& c : classify_columns()) j[c] = row.cells.at(c);
                    a.push_back(j);
                }
                out << json_io::OrderedJson{{"pair", r.id}, {"rows", a}}.dump(2) << "\n";
            } else {
                const char* sep = opt.format == "text" ? "  " : "\t";
                out << "X" << sep << "dim_l" << sep << "dim_u" << sep << "S";
                for (const auto& c : classify_columns()) out << sep << c;
                out << "\n";
                for (const auto& row : rows) {
                    out << row.X << sep << row.dim_l << sep << row.dim_u << sep << row.S;
                    for (const auto& c : classify_columns()) out << sep << row.cells.at(c);
                    out << "\n";
                }
            }
            return ok;
        }

        if (ver->parsed()) {
            const auto results = verify_catalog(cat, sweep_rank);
            const auto failed = std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.pass; });
            if (opt.format == "json") {
                json_io::OrderedJson a = json_io::OrderedJson::array();
                for (const auto& r : results) {
                    json_io::OrderedJson j{{"check", r.name}, {"status", r.pass ? "pass" : "fail"}, {"detail", r.detail}};
                    if (timing) j["millis"] = r.millis;
                    a.push_back(j);
                }
                out << json_io::OrderedJson{{"catalog_version", cat.version},
                                            {"checksum", cat.checksum},
                                            {"checks", a},
                                            {"failed", failed}}
                           .dump(2)
                    << "\n";
            } else {
                for (const auto& r : results) {
                    out << (r.pass ? "PASS" : "FAIL") << "\t" << r.name << "\t" << r.detail;
                    if (timing) {
                        std::ostringstream ms;
                        ms.setf(std::ios::fixed);
                        ms.precision(2);
                        ms << r.millis;
                        out << "\t" << ms.str() << " ms";
                    }
                    out << "\n";
                }
                out << "SUMMARY\t" << results.size() - static_cast<std::size_t>(failed) << "/" << results.size()
                    << " checks passed\n";
            }
            return failed == 0 ? ok : verify_failed;
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return parse_error;
    } catch (const UnknownIdError& e) {
        err << "unknown id: " << e.what() << "\n";
        return unknown_id;
    } catch (const CatalogError& e) {
        err << "catalog error: " << e.what() << "\n";
        return unknown_id;
    } catch (const UnsupportedError& e) {
        err << "unsupported: " << e.what() << "\n";
        return unsupported;
    } catch (const PreconditionError& e) {
        err << "unsupported: " << e.what() << "\n";
        return unsupported;
    } catch (const ValidationFailed& e) {
        err << "validation failed: " << e.what() << "\n";
        return unknown_id;
    } catch (const std::invalid_argument& e) {
        err << "invalid input: " << e.what() << "\n";
        return parse_error;
    }
    return ok;
}

}  // namespace branchdec::cli
