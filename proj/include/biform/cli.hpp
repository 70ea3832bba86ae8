#pragma once

#include <biform/io.hpp>
#include <biform/report.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace biform::cli {

// Exit codes: 0 success; 1 analysis failure (a theorem identity the
// implementation is supposed to certify did not hold -- this never fires on
// a valid algebra unless the implementation is wrong); 2 input error
// (unparseable file/spec, out-of-range parameters, Jacobi-invalid algebra).
inline constexpr int kExitOk = 0;
inline constexpr int kExitAnalysisFailure = 1;
inline constexpr int kExitInputError = 2;

namespace detail {

inline constexpr const char* kGrammarHelp =
    "Catalog algebra specs (for --algebra):\n"
    "  abelian(d)                      zero bracket, d <= 8\n"
    "  heisenberg(k)                   odd dimension k <= 17, [x_i, y_i] = z\n"
    "  aff(1)                          [H, E] = E\n"
    "  su2                             cyclic basis [e0,e1]=e2, [e1,e2]=e0, [e2,e0]=e1\n"
    "  sl(2)                           h, e, f basis\n"
    "  so(n), su(n), u(n), gl(n)       classical algebras, n <= 8\n"
    "  strictly_upper_triangular(n)    nilpotent, n <= 8\n"
    "  direct_sum(spec, spec)          e.g. direct_sum(su2, abelian(2))\n"
    "Semidirect sums are available through the library API and --input files.\n";

struct CommonArgs {
    std::string algebra_spec;
    std::string input_path;
    std::string format = "table";
};

inline void add_common(CLI::App* cmd, CommonArgs& args, bool with_format = true)
{
    auto* a = cmd->add_option("--algebra", args.algebra_spec,
                              "catalog algebra spec, e.g. heisenberg(3)");
    auto* i = cmd->add_option("--input", args.input_path, "algebra file (JSON)");
    a->excludes(i);
    i->excludes(a);
    if (with_format)
        cmd->add_option("--format", args.format, "output format")
            ->check(CLI::IsMember({"json", "table"}))
            ->capture_default_str();
}

inline AlgebraInput load_input(const CommonArgs& args)
{
    if (!args.algebra_spec.empty()) {
        CatalogEntry e = parse_catalog_spec(args.algebra_spec);
        return AlgebraInput{e.algebra, e.realization};
    }
    if (args.input_path.empty())
        throw ParseError("one of --algebra or --input is required");
    std::ifstream f(args.input_path);
    if (!f) throw ParseError("cannot open input file '" + args.input_path + "'");
    std::stringstream buf;
    buf << f.rdbuf();
    return parse_algebra_json(buf.str());
}

// For everything except `validate`, a Jacobi-invalid algebra is an input
// error; the entry packaging also re-validates any realization.
inline CatalogEntry load_entry(const CommonArgs& args)
{
    AlgebraInput in = load_input(args);
    auto bad = in.algebra.check_jacobi();
    if (!bad.empty())
        throw ParseError("input algebra violates the Jacobi identity (first triple: e" +
                         std::to_string(bad[0][0]) + ", e" + std::to_string(bad[0][1]) +
                         ", e" + std::to_string(bad[0][2]) + "); run `validate` for a full list");
    return input_to_entry(in);
}

inline void emit(const report::json& doc, const CommonArgs& args, std::ostream& out)
{
    if (args.format == "json")
        out << doc.dump(2) << "\n";
    else
        out << report::render_table(doc);
}

} // namespace detail

/// Entry point shared by the binary and the tests; argv order, no program
/// name. Writes results to `out`, diagnostics to `err`.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"exact classification of bi-invariant 2-forms on Lie groups from "
                 "structure constants"};
    app.require_subcommand(1);
    app.footer(detail::kGrammarHelp);

    detail::CommonArgs validate_args, classify_args, cohom_args, prim_args, report_args;
    int degree = 2;
    report::Options opts;

    auto* cmd_validate =
        app.add_subcommand("validate", "parse an algebra and check the Jacobi identity");
    detail::add_common(cmd_validate, validate_args);

    auto* cmd_classify = app.add_subcommand(
        "classify", "compute the space of Ad-invariant 2-forms and verify the "
                    "classification identities");
    detail::add_common(cmd_classify, classify_args);

    auto* cmd_cohom = app.add_subcommand(
        "cohomology", "Chevalley-Eilenberg Betti numbers (degrees <= 2) and the "
                      "H^2/lower-central-series vanishing criterion");
    detail::add_common(cmd_cohom, cohom_args);
    cmd_cohom->add_option("--degree", degree, "largest degree to report (0..2)")
        ->check(CLI::Range(0, 2))
        ->capture_default_str();

    auto* cmd_prim = app.add_subcommand(
        "primitivity", "primitivity defect of every invariant 2-form on the "
                       "abelianization");
    detail::add_common(cmd_prim, prim_args);

    auto* cmd_report = app.add_subcommand(
        "report", "validate + classify + cohomology + primitivity (+ numeric "
                  "Ad(exp tZ) check when a realization exists)");
    detail::add_common(cmd_report, report_args);
    cmd_report->add_option("--tol", opts.tol, "numeric invariance tolerance")
        ->capture_default_str();
    cmd_report->add_option("--seed", opts.seed, "seed for the sampled numeric checks")
        ->capture_default_str();
    cmd_report
        ->add_option("--samples", opts.samples, "random (X,Y,Z) triples per form")
        ->capture_default_str();

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    try {
        if (cmd_validate->parsed()) {
            AlgebraInput in = detail::load_input(validate_args);
            report::json doc;
            doc["algebra"] = report::algebra_header(in.algebra);
            doc["validate"] = report::validate_json(in.algebra);
            detail::emit(doc, validate_args, out);
            return doc["validate"]["jacobi_ok"].get<bool>() ? kExitOk : kExitInputError;
        }
        if (cmd_classify->parsed()) {
            CatalogEntry entry = detail::load_entry(classify_args);
            report::json doc;
            doc["algebra"] = report::algebra_header(entry.algebra);
            try {
                doc["classification"] = report::classification_json(classify(entry.algebra));
            } catch (const ClassificationError& e) {
                doc["classification"] = report::classification_json(e.report);
                detail::emit(doc, classify_args, out);
                err << "error: " << e.what() << "\n";
                return kExitAnalysisFailure;
            }
            detail::emit(doc, classify_args, out);
            return kExitOk;
        }
        if (cmd_cohom->parsed()) {
            CatalogEntry entry = detail::load_entry(cohom_args);
            report::json doc;
            doc["algebra"] = report::algebra_header(entry.algebra);
            doc["cohomology"] = report::cohomology_json(entry.algebra, degree);
            detail::emit(doc, cohom_args, out);
            return kExitOk;
        }
        if (cmd_prim->parsed()) {
            CatalogEntry entry = detail::load_entry(prim_args);
            report::json doc;
            doc["algebra"] = report::algebra_header(entry.algebra);
            doc["primitivity"] = report::primitivity_json(entry.algebra);
            detail::emit(doc, prim_args, out);
            return doc["primitivity"]["no_nonzero_primitive"].get<bool>()
                       ? kExitOk
                       : kExitAnalysisFailure;
        }
        if (cmd_report->parsed()) {
            CatalogEntry entry = detail::load_entry(report_args);
            report::json doc;
            try {
                doc = report::full_report(entry, opts);
            } catch (const ClassificationError& e) {
                err << "error: " << e.what() << "\n";
                return kExitAnalysisFailure;
            }
            detail::emit(doc, report_args, out);
            const bool numeric_ok = !doc["numeric"]["available"].get<bool>() ||
                                    doc["numeric"]["pass"].get<bool>();
            const bool ok = doc["classification"]["passed"].get<bool>() &&
                            doc["primitivity"]["no_nonzero_primitive"].get<bool>() &&
                            numeric_ok;
            return ok ? kExitOk : kExitAnalysisFailure;
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const CatalogParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const numeric::RealizationError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        // logic_error and friends: a verified-at-runtime identity failed
        err << "error: " << e.what() << "\n";
        return kExitAnalysisFailure;
    }
    err << "error: no subcommand given\n";
    return kExitInputError;
}

} // namespace biform::cli
