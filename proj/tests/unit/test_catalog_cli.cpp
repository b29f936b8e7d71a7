#include "branchdec/catalog.hpp"
#include "branchdec/cli.hpp"
#include "support/fixtures.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace branchdec;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), {"--catalog", BRANCHDEC_SOURCE_CATALOG});
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

/// A scratch copy of the shipped catalog.
fs::path copy_catalog(const std::string& tag) {
    const auto dir = fs::temp_directory_path() / ("branchdec_catalog_" + tag);
    fs::remove_all(dir);
    fs::copy(BRANCHDEC_SOURCE_CATALOG, dir, fs::copy_options::recursive);
    return dir;
}

void replace_in_file(const fs::path& p, const std::string& from, const std::string& to) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string s = ss.str();
    const auto at = s.find(from);
    REQUIRE(at != std::string::npos);
    s.replace(at, from.size(), to);
    std::ofstream(p) << s;
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("the shipped catalog loads cleanly", "[catalog]") {
    const auto& cat = testing::source_catalog();
    CHECK(cat.version == "1.0.0");
    CHECK(cat.warnings.empty());
    CHECK(cat.checksum.size() == 16);
    for (const char* id : {"(su(2,2),sp(2,R))", "(su(2,2),sp(1,1))", "(so(2,2),so(2,1))", "(so(4),so(3))",
                           "(su(4),sp(2))", "(so(4,3),g2(R))", "(so(5,C),so(3,2))", "(sl(4,C),sp(2,C))"})
        CHECK(cat.pairs.count(id) == 1);
    CHECK(cat.exhaustiveness.size() >= 1);
}

TEST_CASE("catalog checksum is stable and content sensitive", "[catalog]") {
    const auto a = load_catalog(BRANCHDEC_SOURCE_CATALOG);
    const auto b = load_catalog(BRANCHDEC_SOURCE_CATALOG);
    CHECK(a.checksum == b.checksum);

    const auto dir = copy_catalog("checksum");
    replace_in_file(dir / "tables" / "irreducible_restrictions.json", "\"U(1,2)\"", "\"U(2,1)\"");
    CHECK(load_catalog(dir).checksum != a.checksum);
    fs::remove_all(dir);
}

TEST_CASE("built-in pair ids", "[catalog]") {
    const auto& cat = testing::source_catalog();
    const auto t = cat.pair("theta:su(2,2)");
    REQUIRE(t.involution);
    CHECK(t.involution->computed_dim_fixed() == 7);
    const auto s = cat.pair("swap:su(1,1)^2");
    REQUIRE(s.involution);
    CHECK(s.subalgebra.computed_dim() == 3);
    CHECK_THROWS_AS(cat.pair("nonsense"), UnknownIdError);
    CHECK_THROWS_AS(cat.pair("theta:e9"), UnknownIdError);
    CHECK_THROWS_AS(cat.algebra("so(1,1)"), UnknownIdError);
}

TEST_CASE("a corrupted pair is rejected unless forced", "[catalog]") {
    const auto dir = copy_catalog("corrupt");
    replace_in_file(dir / "pairs" / "su2_2__sp2R.json", "\"declared_dim_gprime\": 10", "\"declared_dim_gprime\": 11");
    try {
        load_catalog(dir);
        FAIL("corrupted catalog loaded");
    } catch (const CatalogError& e) {
        CHECK(std::string(e.what()).find("dimension check") != std::string::npos);
        CHECK(std::string(e.what()).find("su2_2__sp2R.json") != std::string::npos);
    }
    const auto forced = load_catalog(dir, true);
    CHECK(forced.warnings.size() == 1);
    CHECK_FALSE(forced.pairs.at("(su(2,2),sp(2,R))").issues.empty());

    std::ostringstream out, err;
    CHECK(cli::run({"--catalog", dir.string(), "catalog"}, out, err) == cli::unknown_id);
    CHECK(cli::run({"--catalog", dir.string(), "--force", "catalog"}, out, err) == cli::ok);
    fs::remove_all(dir);
}

TEST_CASE("wrong expected restricted roots are caught", "[catalog]") {
    const auto dir = copy_catalog("roots");
    replace_in_file(dir / "pairs" / "su2_2__sp2R.json", "\"multiplicity\": 2", "\"multiplicity\": 1");
    CHECK_THROWS_AS(load_catalog(dir), CatalogError);
    fs::remove_all(dir);
}

TEST_CASE("missing catalog files", "[catalog]") {
    CHECK_THROWS_AS(load_catalog(fs::temp_directory_path() / "branchdec_no_such_catalog"), CatalogError);
}

TEST_CASE("catalog listing", "[cli]") {
    const auto r = run({"catalog"});
    CHECK(r.code == 0);
    CHECK(r.out.find("algebra su(1,1)") != std::string::npos);
    CHECK(r.out.find("pair (su(2,2),sp(2,R))") != std::string::npos);
    const auto j = json_io::Json::parse(run({"catalog", "--format", "json"}).out);
    CHECK(j.at("version") == "1.0.0");
}

TEST_CASE("pair show", "[cli]") {
    const auto r = run({"pair", "(su(2,2),sp(2,R))"});
    CHECK(r.code == 0);
    CHECK(r.out.find("matrix") != std::string::npos);
    CHECK(r.out.find("10") != std::string::npos);
    const auto j = json_io::Json::parse(run({"pair", "(su(2,2),sp(2,R))", "--format", "json"}).out);
    CHECK(j.at("computed_dim_gprime") == 10);
    CHECK(j.at("matrix").size() == 4);
    CHECK(run({"pair", "(nope)"}).code == cli::unknown_id);
}

TEST_CASE("check examples", "[cli]") {
    auto verdict = [](std::vector<std::string> args) {
        const auto r = run(std::move(args));
        REQUIRE(r.code == 0);
        return json_io::Json::parse(r.out);
    };
    CHECK(verdict({"check", "--pair", "theta:su(2,2)", "--X", "1,1,-1,-1", "--question", "deco"}).at("answer") == true);
    const auto mixed = verdict({"check", "--pair", "swap:su(1,1)^2", "--X", "1,-1", "--question", "deco"});
    CHECK(mixed.at("answer") == false);
    CHECK(mixed.at("witness").at("kind") == "intersection_point");
    CHECK(mixed.at("inputs").at("pair") == "swap:su(1,1)^2");
    CHECK(verdict({"check", "--pair", "(su(2,2),sp(2,R))", "--X", "3,-1,-1,-1", "--question", "transitive"})
              .at("answer") == true);
    CHECK(verdict({"check", "--pair", "(su(2,2),sp(2,R))", "--X", "3,-1,-1,-1", "--question", "rho"}).at("answer") ==
          true);
}

TEST_CASE("exit codes", "[cli]") {
    CHECK(run({"check", "--pair", "swap:su(1,1)^2", "--X", "1,x", "--question", "deco"}).code == cli::parse_error);
    CHECK(run({"check", "--pair", "swap:su(1,1)^2", "--X", "1,-1", "--question", "nope"}).code == cli::parse_error);
    CHECK(run({"frobnicate"}).code == cli::parse_error);
    CHECK(run({"check", "--pair", "(unknown)", "--X", "1", "--question", "deco"}).code == cli::unknown_id);
    CHECK(run({"check", "--pair", "swap:su(1,1)^2", "--X", "1,2,3", "--question", "deco"}).code != cli::ok);
    // Embeddings admit only the dimension and rho checks.
    CHECK(run({"check", "--pair", "(so(4,3),g2(R))", "--X", "0,0,1", "--question", "deco"}).code == cli::unsupported);
    // rho without the open-orbit condition.
    CHECK(run({"check", "--pair", "(su(2,2),sp(2,R))", "--X", "3,1,-1,-3", "--question", "rho"}).code ==
          cli::unsupported);
    CHECK(run({"classify", "--pair", "theta:su(2,2)", "--max-rank", "2"}).code == cli::unsupported);
    CHECK(run({"parabolic", "e9"}).code == cli::unknown_id);
}

TEST_CASE("classify", "[cli]") {
    const auto theta = run({"classify", "--pair", "theta:su(2,2)"});
    REQUIRE(theta.code == 0);
    std::istringstream lines(theta.out);
    std::string header, line;
    std::getline(lines, header);
    CHECK(header.rfind("X\tdim_l\tdim_u\tS\tdeco", 0) == 0);
    std::size_t rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
        std::vector<std::string> cells;
        std::stringstream ls(line);
        for (std::string c; std::getline(ls, c, '\t');) cells.push_back(c);
        REQUIRE(cells.size() == 10);
        CHECK(cells[4] == "true");
    }
    CHECK(rows > 0);

    const auto swap = run({"classify", "--pair", "swap:su(1,1)^2"});
    REQUIRE(swap.code == 0);
    CHECK(count_lines(swap.out) == 1 + 9);

    const auto j = json_io::Json::parse(run({"classify", "--pair", "swap:su(1,1)^2", "--format", "json"}).out);
    REQUIRE(j.at("rows").size() == 9);
    std::size_t deco_false = 0;
    for (const auto& row : j.at("rows")) deco_false += row.at("deco") == "false";
    CHECK(deco_false == 2);
}

TEST_CASE("classify output is deterministic", "[cli]") {
    const auto a = run({"classify", "--pair", "(su(2,2),sp(2,R))", "--all"});
    const auto b = run({"classify", "--pair", "(su(2,2),sp(2,R))", "--all"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(count_lines(a.out) == 1 + 75);
}

TEST_CASE("parabolic command", "[cli]") {
    const auto r = run({"parabolic", "su(1,1)"});
    CHECK(r.code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), 'X') == 3);
    const auto one = json_io::Json::parse(run({"parabolic", "su(2,2)", "--X", "1,1,-1,-1", "--format", "json"}).out);
    REQUIRE(one.size() == 1);
}

TEST_CASE("verify passes on the shipped catalog and is reproducible", "[cli]") {
    const auto a = run({"verify"});
    CHECK(a.code == 0);
    CHECK(a.out.find("FAIL") == std::string::npos);
    CHECK(a.out.find("SUMMARY") != std::string::npos);
    CHECK(run({"verify"}).out == a.out);
    const auto j = json_io::Json::parse(run({"verify", "--format", "json"}).out);
    CHECK(j.at("failed") == 0);
}

TEST_CASE("verify reports named failures on a bad table row", "[cli]") {
    const auto dir = copy_catalog("badrow");
    replace_in_file(dir / "tables" / "irreducible_restrictions.json", "\"X\": [\n        \"3\",\n        \"-1\"",
                    "\"X\": [\n        \"3\",\n        \"1\"");
    std::ostringstream out, err;
    const int code = cli::run({"--catalog", dir.string(), "verify"}, out, err);
    CHECK(code == cli::verify_failed);
    CHECK(out.str().find("FAIL") != std::string::npos);
    fs::remove_all(dir);
}
