#pragma once

#include <biform/ce_cohomology.hpp>
#include <biform/invariant_forms.hpp>
#include <biform/numeric_check.hpp>
#include <biform/primitivity.hpp>

#include <json.hpp>

#include <sstream>
#include <string>

namespace biform::report {

using json = nlohmann::ordered_json;

struct Options {
    int max_degree = 2;
    double tol = numeric::kDefaultTol;
    std::uint64_t seed = numeric::kDefaultSeed;
    int samples = 20; // random (X, Y, Z) triples per form; the t-grid is fixed
    int t_samples = 21;
};

inline json algebra_header(const LieAlgebra& L)
{
    return json{{"name", L.name().empty() ? "(unnamed)" : L.name()}, {"dim", L.dim()}};
}

inline json form_json(const AltBilinearForm& f)
{
    json coeffs = json::array();
    for (int idx = 0; idx < pair_count(f.dim()); ++idx) {
        auto [i, j] = pair_from_index(idx, f.dim());
        if (f.coeffs()(i, j) != 0)
            coeffs.push_back(
                {{"i", i}, {"j", j}, {"c", rational_to_string(f.coeffs()(i, j))}});
    }
    return json{{"pretty", f.to_string()}, {"dim", f.dim()}, {"space", f.basis_tag()},
                {"coeffs", coeffs}};
}

inline json validate_json(const LieAlgebra& L)
{
    json out;
    auto bad = L.check_jacobi();
    out["jacobi_ok"] = bad.empty();
    json v = json::array();
    for (const auto& t : bad) v.push_back({{"i", t[0]}, {"j", t[1]}, {"k", t[2]}});
    out["violations"] = v;
    return out;
}

inline json classification_json(const ClassificationReport& rep)
{
    json out;
    out["dim_g"] = rep.dim_g;
    out["dim_a"] = rep.dim_a;
    out["dim_invariant_space"] = rep.dim_invariant_space;
    out["expected_dim"] = rep.expected_dim;
    json forms = json::array();
    for (const auto& f : rep.basis_forms) forms.push_back(form_json(f));
    out["basis_forms"] = forms;
    out["identities"] = json{{"cocycle", rep.cocycle_identity_ok},
                             {"reduced", rep.reduced_identity_ok},
                             {"pullback_descend", rep.pullback_descend_ok},
                             {"descend_pullback", rep.descend_pullback_ok},
                             {"dims_match", rep.dims_match}};
    out["vanishing_predicate"] = rep.vanishing_predicate;
    out["passed"] = rep.passed();
    return out;
}

inline json cohomology_json(const LieAlgebra& L, int max_degree)
{
    json out;
    json betti = json::array();
    for (int k = 0; k <= max_degree; ++k) betti.push_back(cohomology_dim(L, k));
    out["betti"] = betti;
    out["max_degree"] = max_degree;
    if (max_degree >= 2) {
        VanishingCriterion vc = vanishing_criterion(L);
        out["vanishing_criterion"] = json{{"satisfied", vc.satisfied},
                                          {"h2_dim", vc.h2_dim},
                                          {"lcs_stable", vc.lcs_stable},
                                          {"explanation", vc.explanation}};
    }
    return out;
}

inline json primitivity_json(const LieAlgebra& L)
{
    json out;
    QuotientSpace quot = L.abelianization();
    out["dim_a"] = quot.quotient_dim;
    json forms = json::array();
    bool all_nonzero_defect = true;
    for (const auto& eta : invariant_two_forms(L)) {
        AltBilinearForm lam = descend(L, eta, quot);
        DefectForm d = primitivity_defect(lam);
        const bool prim = is_primitive(lam);
        if (!lam.is_zero() && prim) all_nonzero_defect = false;
        forms.push_back(json{{"lambda", form_json(lam)},
                             {"defect", form_json(d.form)},
                             {"defect_nonzero", !d.form.is_zero()},
                             {"primitive", prim}});
    }
    out["forms"] = forms;
    out["no_nonzero_primitive"] = all_nonzero_defect;
    return out;
}

inline json numeric_json(const CatalogEntry& entry, const Options& opts)
{
    json out;
    out["available"] = entry.realization.has_value();
    if (!entry.realization) return out;
    out["tolerance"] = opts.tol;
    out["seed"] = opts.seed;
    out["t_samples"] = opts.t_samples;
    out["z_samples"] = opts.samples;
    bool all_pass = true;
    double worst_fd = 0.0;
    json forms = json::array();
    for (const auto& eta : invariant_two_forms(entry.algebra)) {
        numeric::NumericReport r = numeric::ad_exp_invariance(entry, eta, opts.t_samples,
                                                              opts.samples, opts.tol, opts.seed);
        all_pass = all_pass && r.pass;
        forms.push_back(json{{"form", eta.to_string()},
                             {"samples", r.samples},
                             {"max_relative_error", r.max_relative_error},
                             {"pass", r.pass}});
        worst_fd = std::max(worst_fd, numeric::ad_derivative_consistency(entry, eta,
                                                                         opts.samples, opts.seed));
    }
    if (forms.empty() && entry.algebra.dim() >= 2) {
        // no invariant forms to conjugate, but the d/dt vs ad identity holds
        // for any bilinear form, so still exercise the realization
        AltBilinearForm probe = AltBilinearForm::wedge(entry.algebra.dim(), 0, 1, kGTag);
        worst_fd = numeric::ad_derivative_consistency(entry, probe, opts.samples, opts.seed);
    }
    out["forms"] = forms;
    out["derivative_consistency"] =
        json{{"max_abs_error", worst_fd}, {"tolerance", 1e-6}, {"pass", worst_fd <= 1e-6}};
    out["pass"] = all_pass && worst_fd <= 1e-6;
    return out;
}

/// One document per algebra: validation, classification, cohomology,
/// primitivity, and the numeric cross-check when a realization exists.
/// Throws ClassificationError if a theorem identity fails.
inline json full_report(const CatalogEntry& entry, const Options& opts)
{
    json out;
    out["algebra"] = algebra_header(entry.algebra);
    out["validate"] = validate_json(entry.algebra);
    out["classification"] = classification_json(classify(entry.algebra));
    out["cohomology"] = cohomology_json(entry.algebra, opts.max_degree);
    out["primitivity"] = primitivity_json(entry.algebra);
    out["numeric"] = numeric_json(entry, opts);
    return out;
}

// --- plain-text rendering ------------------------------------------------
//
// The table renderer consumes the machine document, so both outputs always
// describe the same data.

namespace detail {

inline std::string yesno(const json& j) { return j.get<bool>() ? "yes" : "no"; }

inline void render_classification(const json& c, std::ostream& os)
{
    os << "classification\n";
    os << "  dim g                : " << c["dim_g"] << "\n";
    os << "  dim a = g/[g,g]      : " << c["dim_a"] << "\n";
    os << "  invariant 2-forms    : " << c["dim_invariant_space"]
       << " (expected C(dim a, 2) = " << c["expected_dim"] << ")\n";
    os << "  vanishing predicate  : " << yesno(c["vanishing_predicate"])
       << " (dim a <= 1)\n";
    os << "  identities           : cocycle " << yesno(c["identities"]["cocycle"])
       << ", reduced " << yesno(c["identities"]["reduced"]) << ", roundtrips "
       << yesno(c["identities"]["pullback_descend"]) << "/"
       << yesno(c["identities"]["descend_pullback"]) << ", dims "
       << yesno(c["identities"]["dims_match"]) << "\n";
    if (!c["basis_forms"].empty()) {
        os << "  basis:\n";
        for (const auto& f : c["basis_forms"])
            os << "    " << f["pretty"].get<std::string>() << "\n";
    }
    os << "  passed               : " << yesno(c["passed"]) << "\n";
}

inline void render_cohomology(const json& c, std::ostream& os)
{
    os << "cohomology (trivial coefficients)\n  ";
    for (std::size_t k = 0; k < c["betti"].size(); ++k) {
        if (k) os << ", ";
        os << "H^" << k << " = " << c["betti"][k];
    }
    os << "\n";
    if (c.contains("vanishing_criterion")) {
        const auto& vc = c["vanishing_criterion"];
        os << "  vanishing criterion  : " << (vc["satisfied"].get<bool>() ? "holds" : "fails")
           << " (" << vc["explanation"].get<std::string>() << ")\n";
    }
}

inline void render_primitivity(const json& p, std::ostream& os)
{
    os << "primitivity (forms on a, defect on a+a)\n";
    if (p["forms"].empty()) {
        os << "  no nonzero invariant forms; vacuously no primitive 2-forms\n";
        return;
    }
    for (const auto& f : p["forms"]) {
        os << "  lambda = " << f["lambda"]["pretty"].get<std::string>() << "\n";
        os << "    defect = " << f["defect"]["pretty"].get<std::string>()
           << (f["defect_nonzero"].get<bool>() ? "  (nonzero => not primitive)"
                                               : "  (zero)")
           << "\n";
    }
    os << "  verdict: " << (p["no_nonzero_primitive"].get<bool>()
                                ? "no nonzero primitive 2-forms"
                                : "UNEXPECTED primitive form found")
       << "\n";
}

inline void render_numeric(const json& nj, std::ostream& os)
{
    if (!nj["available"].get<bool>()) {
        os << "numeric check: no matrix realization available\n";
        return;
    }
    os << "numeric Ad(exp(tZ)) check (tol " << nj["tolerance"] << ", seed " << nj["seed"]
       << ")\n";
    if (nj["forms"].empty()) os << "  no invariant forms to check\n";
    for (const auto& f : nj["forms"])
        os << "  " << f["form"].get<std::string>() << ": max rel err "
           << f["max_relative_error"] << " over " << f["samples"] << " samples -> "
           << (f["pass"].get<bool>() ? "pass" : "FAIL") << "\n";
    os << "  d/dt consistency     : max abs err "
       << nj["derivative_consistency"]["max_abs_error"] << " -> "
       << (nj["derivative_consistency"]["pass"].get<bool>() ? "pass" : "FAIL") << "\n";
}

} // namespace detail

inline std::string render_table(const json& doc)
{
    std::ostringstream os;
    if (doc.contains("algebra"))
        os << "algebra: " << doc["algebra"]["name"].get<std::string>() << " (dim "
           << doc["algebra"]["dim"] << ")\n";
    if (doc.contains("validate")) {
        const auto& v = doc["validate"];
        os << "jacobi: " << (v["jacobi_ok"].get<bool>() ? "ok" : "VIOLATED") << "\n";
        for (const auto& t : v["violations"])
            os << "  violating triple (e" << t["i"] << ", e" << t["j"] << ", e" << t["k"]
               << ")\n";
    }
    if (doc.contains("classification")) detail::render_classification(doc["classification"], os);
    if (doc.contains("cohomology")) detail::render_cohomology(doc["cohomology"], os);
    if (doc.contains("primitivity")) detail::render_primitivity(doc["primitivity"], os);
    if (doc.contains("numeric")) detail::render_numeric(doc["numeric"], os);
    return os.str();
}

} // namespace biform::report
