#pragma once

#include <biform/catalog.hpp>
#include <biform/lie_algebra.hpp>

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace biform {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A parsed algebra file. Jacobi validity is deliberately not checked at
/// parse time: `validate` wants to report the violating triples itself.
struct AlgebraInput {
    LieAlgebra algebra; // constructed unvalidated
    std::optional<std::vector<Mat>> realization;
};

// Algebra file schema (JSON):
//   {
//     "name": "optional label",
//     "dim": 3,
//     "brackets": [ {"i": 0, "j": 1, "coeffs": {"2": "1", "0": "-1/2"}} ],
//     "realization": [ [["0","1"],["0","0"]], ... ]   // optional, square,
//   }                                                 // one per basis element
//
// Only pairs i < j are stored; the antisymmetric completion is implicit.
// All scalars are exact rational strings "p" or "p/q".
inline AlgebraInput parse_algebra_json(const std::string& text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("algebra file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("algebra file: top level must be an object");
    if (!doc.contains("dim") || !doc["dim"].is_number_integer())
        throw ParseError("algebra file: missing integer field 'dim'");
    const int n = doc["dim"].get<int>();
    if (n < 0) throw ParseError("algebra file: 'dim' must be nonnegative");

    LieAlgebra::Builder bld(n);
    if (doc.contains("brackets")) {
        if (!doc["brackets"].is_array())
            throw ParseError("algebra file: 'brackets' must be an array");
        int entry_no = 0;
        for (const auto& b : doc["brackets"]) {
            ++entry_no;
            auto where = [&] { return "brackets[" + std::to_string(entry_no - 1) + "]"; };
            if (!b.is_object() || !b.contains("i") || !b.contains("j") ||
                !b.contains("coeffs") || !b["i"].is_number_integer() ||
                !b["j"].is_number_integer() || !b["coeffs"].is_object())
                throw ParseError("algebra file: " + where() +
                                 " must be {\"i\": int, \"j\": int, \"coeffs\": object}");
            const int i = b["i"].get<int>();
            const int j = b["j"].get<int>();
            if (i < 0 || j < 0 || i >= n || j >= n)
                throw ParseError("algebra file: " + where() + " has a basis index out of range");
            if (i >= j)
                throw ParseError("algebra file: " + where() +
                                 " must have i < j (the completion is implicit)");
            for (const auto& [key, val] : b["coeffs"].items()) {
                int k = -1;
                try {
                    std::size_t used = 0;
                    k = std::stoi(key, &used);
                    if (used != key.size()) k = -1;
                } catch (...) {
                    k = -1;
                }
                if (k < 0 || k >= n)
                    throw ParseError("algebra file: " + where() + " coefficient key '" + key +
                                     "' is not a basis index");
                if (!val.is_string())
                    throw ParseError("algebra file: " + where() +
                                     " coefficients must be rational strings");
                try {
                    bld.bracket(i, j, k, parse_rational(val.get<std::string>()));
                } catch (const std::invalid_argument& e) {
                    throw ParseError("algebra file: " + where() + ": " + e.what());
                }
            }
        }
    }

    AlgebraInput out{bld.build(doc.value("name", std::string{}),
                               /*validate_jacobi=*/false),
                     std::nullopt};

    if (doc.contains("realization")) {
        if (!doc["realization"].is_array() ||
            static_cast<int>(doc["realization"].size()) != n)
            throw ParseError("algebra file: 'realization' must list one matrix per "
                             "basis element");
        std::vector<Mat> mats;
        int m = -1;
        for (const auto& jm : doc["realization"]) {
            if (!jm.is_array() || jm.empty())
                throw ParseError("algebra file: realization matrices must be nonempty "
                                 "arrays of rows");
            const int rows = static_cast<int>(jm.size());
            if (m < 0) m = rows;
            if (rows != m)
                throw ParseError("algebra file: realization matrices must share one size");
            Mat mat(rows, rows);
            for (int r = 0; r < rows; ++r) {
                const auto& jr = jm[r];
                if (!jr.is_array() || static_cast<int>(jr.size()) != rows)
                    throw ParseError("algebra file: realization matrices must be square");
                for (int c = 0; c < rows; ++c) {
                    if (!jr[c].is_string())
                        throw ParseError("algebra file: realization entries must be "
                                         "rational strings");
                    try {
                        mat(r, c) = parse_rational(jr[c].get<std::string>());
                    } catch (const std::invalid_argument& e) {
                        throw ParseError(std::string("algebra file: realization: ") + e.what());
                    }
                }
            }
            mats.push_back(std::move(mat));
        }
        out.realization = std::move(mats);
    }
    return out;
}

/// Inverse of parse_algebra_json (brackets with i < j, rationals as strings).
inline std::string algebra_to_json(const LieAlgebra& L,
                                   const std::optional<std::vector<Mat>>& realization)
{
    nlohmann::ordered_json doc;
    if (!L.name().empty()) doc["name"] = L.name();
    doc["dim"] = L.dim();
    doc["brackets"] = nlohmann::ordered_json::array();
    for (int i = 0; i < L.dim(); ++i)
        for (int j = i + 1; j < L.dim(); ++j) {
            nlohmann::ordered_json coeffs = nlohmann::ordered_json::object();
            for (int k = 0; k < L.dim(); ++k)
                if (L.c(i, j, k) != 0)
                    coeffs[std::to_string(k)] = rational_to_string(L.c(i, j, k));
            if (!coeffs.empty())
                doc["brackets"].push_back({{"i", i}, {"j", j}, {"coeffs", coeffs}});
        }
    if (realization) {
        doc["realization"] = nlohmann::ordered_json::array();
        for (const auto& m : *realization) {
            nlohmann::ordered_json jm = nlohmann::ordered_json::array();
            for (int r = 0; r < m.rows(); ++r) {
                nlohmann::ordered_json jr = nlohmann::ordered_json::array();
                for (int c = 0; c < m.cols(); ++c) jr.push_back(rational_to_string(m(r, c)));
                jm.push_back(std::move(jr));
            }
            doc["realization"].push_back(std::move(jm));
        }
    }
    return doc.dump(2);
}

/// Packages a parsed (and Jacobi-checked) input as a catalog-style entry,
/// validating any realization against the structure constants.
inline CatalogEntry input_to_entry(const AlgebraInput& input)
{
    LieAlgebra validated(input.algebra.dim(), [&] {
        std::vector<Rat> c;
        c.reserve(static_cast<std::size_t>(input.algebra.dim()) * input.algebra.dim() *
                  input.algebra.dim());
        for (int i = 0; i < input.algebra.dim(); ++i)
            for (int j = 0; j < input.algebra.dim(); ++j)
                for (int k = 0; k < input.algebra.dim(); ++k)
                    c.push_back(input.algebra.c(i, j, k));
        return c;
    }(), input.algebra.name());
    const int ab = validated.abelianization().quotient_dim;
    std::string name = validated.name().empty() ? "input" : validated.name();
    try {
        return catalog::detail::finalize(std::move(name), std::move(validated),
                                         input.realization, ab);
    } catch (const std::logic_error& e) {
        throw ParseError(e.what());
    }
}

} // namespace biform
