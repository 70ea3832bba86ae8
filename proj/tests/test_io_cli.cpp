#include <biform/cli.hpp>
#include <biform/io.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace biform;

namespace {

const char* kHeisenbergJson = R"({
  "name": "h3",
  "dim": 3,
  "brackets": [ {"i": 0, "j": 1, "coeffs": {"2": "1"}} ]
})";

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

// temp file helper for --input tests
struct TempFile {
    std::string path;
    explicit TempFile(const std::string& content)
    {
        static int counter = 0;
        path = "biform_test_input_" + std::to_string(counter++) + ".json";
        std::ofstream f(path);
        f << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("parse_algebra_json")
{
    SECTION("a minimal heisenberg file round-trips against the catalog")
    {
        AlgebraInput in = parse_algebra_json(kHeisenbergJson);
        CHECK(in.algebra.name() == "h3");
        CHECK(in.algebra.dim() == 3);
        LieAlgebra h = catalog::heisenberg(3).algebra;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k) CHECK(in.algebra.c(i, j, k) == h.c(i, j, k));
    }
    SECTION("the antisymmetric completion is implicit")
    {
        AlgebraInput in = parse_algebra_json(kHeisenbergJson);
        CHECK(in.algebra.c(1, 0, 2) == -1);
    }
    SECTION("rationals parse exactly")
    {
        AlgebraInput in = parse_algebra_json(
            R"({"dim": 2, "brackets": [{"i":0,"j":1,"coeffs":{"1":"-3/6"}}]})");
        CHECK(in.algebra.c(0, 1, 1) == Rat(-1) / 2);
    }
    SECTION("parse errors carry the offending field")
    {
        CHECK_THROWS_AS(parse_algebra_json("not json"), ParseError);
        CHECK_THROWS_AS(parse_algebra_json(R"({"brackets": []})"), ParseError);
        CHECK_THROWS_AS(parse_algebra_json(R"({"dim": -1})"), ParseError);
        CHECK_THROWS_AS(
            parse_algebra_json(R"({"dim": 2, "brackets": [{"i":0,"j":5,"coeffs":{}}]})"),
            ParseError);
        CHECK_THROWS_AS(
            parse_algebra_json(R"({"dim": 2, "brackets": [{"i":1,"j":0,"coeffs":{}}]})"),
            ParseError);
        CHECK_THROWS_AS(
            parse_algebra_json(
                R"({"dim": 2, "brackets": [{"i":0,"j":1,"coeffs":{"1":"0.5"}}]})"),
            ParseError);
        CHECK_THROWS_AS(
            parse_algebra_json(
                R"({"dim": 2, "brackets": [{"i":0,"j":1,"coeffs":{"x":"1"}}]})"),
            ParseError);
        try {
            parse_algebra_json(R"({"dim": 2, "brackets": [{"i":0,"j":3,"coeffs":{}}]})");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find("brackets[0]") != std::string::npos);
        }
    }
    SECTION("realization matrices")
    {
        AlgebraInput in = parse_algebra_json(R"({
            "dim": 1, "brackets": [],
            "realization": [ [["0","-1"],["1","0"]] ]
        })");
        REQUIRE(in.realization.has_value());
        CHECK((*in.realization)[0] == Mat{{0, -1}, {1, 0}});

        CHECK_THROWS_AS(parse_algebra_json(R"({"dim": 1, "realization": []})"), ParseError);
        CHECK_THROWS_AS(
            parse_algebra_json(R"({"dim": 1, "realization": [ [["1","0"]] ]})"),
            ParseError);
    }
}

TEST_CASE("algebra json round-trip")
{
    for (const auto& entry : {catalog::heisenberg(5), catalog::su2(), catalog::gl(2)}) {
        std::string text = algebra_to_json(entry.algebra, entry.realization);
        AlgebraInput back = parse_algebra_json(text);
        CHECK(back.algebra.dim() == entry.algebra.dim());
        for (int i = 0; i < entry.algebra.dim(); ++i)
            for (int j = 0; j < entry.algebra.dim(); ++j)
                for (int k = 0; k < entry.algebra.dim(); ++k)
                    CHECK(back.algebra.c(i, j, k) == entry.algebra.c(i, j, k));
        REQUIRE(back.realization.has_value());
        CHECK(*back.realization == *entry.realization);
    }
}

TEST_CASE("input_to_entry validates realizations against the brackets")
{
    AlgebraInput in = parse_algebra_json(R"({
        "dim": 2, "brackets": [{"i":0,"j":1,"coeffs":{"1":"1"}}],
        "realization": [ [["1","0"],["0","0"]], [["0","0"],["0","1"]] ]
    })");
    CHECK_THROWS_AS(input_to_entry(in), ParseError); // commutator is zero, bracket is not
}

TEST_CASE("cli validate")
{
    CliResult ok = run_cli({"validate", "--algebra", "su2"});
    CHECK(ok.code == cli::kExitOk);
    CHECK(ok.out.find("jacobi: ok") != std::string::npos);

    // [e0,e1] = e2 and [e1,e2] = e0 with no third relation breaks Jacobi
    TempFile bad(R"({
        "dim": 3,
        "brackets": [ {"i":0,"j":1,"coeffs":{"0":"1"}}, {"i":0,"j":2,"coeffs":{"2":"1"}} ]
    })");
    CliResult r = run_cli({"validate", "--input", bad.path, "--format", "json"});
    CHECK(r.code == cli::kExitInputError);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["validate"]["jacobi_ok"] == false);
    REQUIRE(doc["validate"]["violations"].size() == 1);
    CHECK(doc["validate"]["violations"][0]["i"] == 0);
    CHECK(doc["validate"]["violations"][0]["j"] == 1);
    CHECK(doc["validate"]["violations"][0]["k"] == 2);

    TempFile empty(R"({"dim": 0})");
    CHECK(run_cli({"validate", "--input", empty.path}).code == cli::kExitOk);
}

TEST_CASE("cli classify")
{
    CliResult ab = run_cli({"classify", "--algebra", "abelian(4)", "--format", "json"});
    REQUIRE(ab.code == cli::kExitOk);
    auto abdoc = nlohmann::json::parse(ab.out);
    CHECK(abdoc["classification"]["dim_invariant_space"] == 6);

    CliResult h = run_cli({"classify", "--algebra", "heisenberg(3)", "--format", "json"});
    REQUIRE(h.code == cli::kExitOk);
    auto hdoc = nlohmann::json::parse(h.out);
    CHECK(hdoc["classification"]["dim_invariant_space"] == 1);
    CHECK(hdoc["classification"]["basis_forms"][0]["pretty"] == "e0*^e1*");

    CliResult u2 = run_cli({"classify", "--algebra", "u(2)", "--format", "json"});
    REQUIRE(u2.code == cli::kExitOk);
    auto udoc = nlohmann::json::parse(u2.out);
    CHECK(udoc["classification"]["dim_invariant_space"] == 0);
    CHECK(udoc["classification"]["dim_a"] == 1);
    CHECK(udoc["classification"]["vanishing_predicate"] == true);
}

TEST_CASE("cli cohomology")
{
    CliResult su = run_cli({"cohomology", "--algebra", "su2", "--format", "json"});
    REQUIRE(su.code == cli::kExitOk);
    auto sudoc = nlohmann::json::parse(su.out);
    CHECK(sudoc["cohomology"]["betti"] == nlohmann::json::array({1, 0, 0}));
    CHECK(sudoc["cohomology"]["vanishing_criterion"]["satisfied"] == true);

    CliResult ab = run_cli({"cohomology", "--algebra", "abelian(3)", "--format", "json"});
    auto abdoc = nlohmann::json::parse(ab.out);
    CHECK(abdoc["cohomology"]["betti"] == nlohmann::json::array({1, 3, 3}));

    CliResult h = run_cli({"cohomology", "--algebra", "heisenberg(3)", "--format", "json"});
    auto hdoc = nlohmann::json::parse(h.out);
    CHECK(hdoc["cohomology"]["vanishing_criterion"]["satisfied"] == false);

    CliResult deg1 = run_cli({"cohomology", "--algebra", "abelian(3)", "--degree", "1",
                              "--format", "json"});
    auto d1doc = nlohmann::json::parse(deg1.out);
    CHECK(d1doc["cohomology"]["betti"] == nlohmann::json::array({1, 3}));
    CHECK_FALSE(d1doc["cohomology"].contains("vanishing_criterion"));
}

TEST_CASE("cli primitivity")
{
    CliResult ab = run_cli({"primitivity", "--algebra", "abelian(2)", "--format", "json"});
    REQUIRE(ab.code == cli::kExitOk);
    auto doc = nlohmann::json::parse(ab.out);
    REQUIRE(doc["primitivity"]["forms"].size() == 1);
    CHECK(doc["primitivity"]["forms"][0]["defect_nonzero"] == true);
    CHECK(doc["primitivity"]["forms"][0]["defect"]["pretty"] == "-e0*^e3* + e1*^e2*");
    CHECK(doc["primitivity"]["no_nonzero_primitive"] == true);

    CliResult su = run_cli({"primitivity", "--algebra", "su2", "--format", "json"});
    auto sudoc = nlohmann::json::parse(su.out);
    CHECK(sudoc["primitivity"]["forms"].empty()); // vacuously primitive-free
    CHECK(sudoc["primitivity"]["no_nonzero_primitive"] == true);
}

TEST_CASE("cli report")
{
    SECTION("dim-0 algebra gives the all-trivial report")
    {
        TempFile empty(R"({"dim": 0})");
        CliResult r = run_cli({"report", "--input", empty.path, "--format", "json"});
        REQUIRE(r.code == cli::kExitOk);
        auto doc = nlohmann::json::parse(r.out);
        CHECK(doc["classification"]["dim_invariant_space"] == 0);
        CHECK(doc["classification"]["passed"] == true);
        CHECK(doc["cohomology"]["betti"] == nlohmann::json::array({1, 0, 0}));
        CHECK(doc["primitivity"]["forms"].empty());
    }
    SECTION("json output round-trips and is byte-deterministic")
    {
        CliResult a = run_cli({"report", "--algebra", "heisenberg(3)", "--format", "json"});
        CliResult b = run_cli({"report", "--algebra", "heisenberg(3)", "--format", "json"});
        REQUIRE(a.code == cli::kExitOk);
        CHECK(a.out == b.out);
        auto doc = nlohmann::json::parse(a.out);
        CHECK(nlohmann::json::parse(doc.dump(2)) == doc);
        for (const char* key : {"algebra", "validate", "classification", "cohomology",
                                "primitivity", "numeric"})
            CHECK(doc.contains(key));
        CHECK(doc["numeric"]["available"] == true);
        CHECK(doc["numeric"]["pass"] == true);
    }
    SECTION("numeric section respects --samples and --seed")
    {
        CliResult r = run_cli({"report", "--algebra", "heisenberg(3)", "--format", "json",
                               "--samples", "3", "--seed", "7"});
        auto doc = nlohmann::json::parse(r.out);
        CHECK(doc["numeric"]["seed"] == 7);
        CHECK(doc["numeric"]["forms"][0]["samples"] == 21 * 3);
    }
}

TEST_CASE("full_report succeeds on every named catalog entry")
{
    report::Options opts;
    opts.samples = 5; // keep the numeric sweep quick
    std::vector<CatalogEntry> entries;
    for (int d = 0; d <= 6; ++d) entries.push_back(catalog::abelian(d));
    for (int d : {3, 5, 7}) entries.push_back(catalog::heisenberg(d));
    entries.push_back(catalog::aff1());
    entries.push_back(catalog::su2());
    entries.push_back(catalog::sl2());
    for (int n = 2; n <= 5; ++n) entries.push_back(catalog::so(n));
    for (int n = 2; n <= 4; ++n) entries.push_back(catalog::su(n));
    for (int n = 1; n <= 4; ++n) entries.push_back(catalog::u(n));
    for (int n = 1; n <= 4; ++n) entries.push_back(catalog::gl(n));
    for (int n = 2; n <= 5; ++n) entries.push_back(catalog::strictly_upper_triangular(n));

    for (const auto& e : entries) {
        INFO(e.name);
        report::json doc = report::full_report(e, opts);
        CHECK(doc["classification"]["passed"] == true);
        CHECK(doc["primitivity"]["no_nonzero_primitive"] == true);
        if (doc["numeric"]["available"].get<bool>()) CHECK(doc["numeric"]["pass"] == true);
        CHECK_FALSE(report::render_table(doc).empty());
    }
}

TEST_CASE("cli error handling")
{
    CHECK(run_cli({"classify", "--algebra", "nosuch(3)"}).code == cli::kExitInputError);
    CHECK(run_cli({"classify", "--algebra", "so(9)"}).code == cli::kExitInputError);
    CHECK(run_cli({"classify"}).code == cli::kExitInputError); // no input source
    CHECK(run_cli({"classify", "--input", "does_not_exist.json"}).code ==
          cli::kExitInputError);
    CHECK(run_cli({}).code == cli::kExitInputError);
    CHECK(run_cli({"frobnicate"}).code == cli::kExitInputError);

    // Jacobi-invalid input is an input error for analysis commands
    TempFile bad(R"({
        "dim": 3,
        "brackets": [ {"i":0,"j":1,"coeffs":{"0":"1"}}, {"i":0,"j":2,"coeffs":{"2":"1"}} ]
    })");
    CliResult r = run_cli({"classify", "--input", bad.path});
    CHECK(r.code == cli::kExitInputError);
    CHECK(r.err.find("Jacobi") != std::string::npos);

    CliResult help = run_cli({"--help"});
    CHECK(help.code == cli::kExitOk);
    CHECK(help.out.find("direct_sum") != std::string::npos);
}
