#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "eqcoh/gkm.hpp"
#include "eqcoh/polynomial.hpp"
#include "eqcoh/structconst.hpp"
#include "eqcoh/weights.hpp"

namespace eqcoh {

using Json = nlohmann::json;

// [{"coeff":"2","exps":[1,1,0]}, ...] with coefficients as decimal strings
// "num" or "num/den", terms in the canonical monomial order.
Json poly_to_json(const Polynomial& p);
Polynomial poly_from_json(const Json& j, std::size_t num_vars);

// {"n": int, "parts": [poly-json, ...]}
Json class_to_json(const LocalizedClass& c);
LocalizedClass class_from_json(const Json& j);

// LaTeX rendering: prefix "t" gives t_{0}, prefix "a" gives \alpha_{0}.
std::string poly_latex(const Polynomial& p, std::string_view var_prefix = "t");

// Table exports with columns (i, j, k, degree, polynomial, alpha, nonneg).
std::string table_csv(const StructureTable& table);
Json table_json(const StructureTable& table);
std::string table_latex(const StructureTable& table);

}  // namespace eqcoh
