#pragma once

#include "bigalg/multipoly.hpp"
#include "bigalg/polymatrix.hpp"
#include "bigalg/qmatrix.hpp"
#include "bigalg/qpoly.hpp"

#include "json.hpp"

namespace bigalg {

using Json = nlohmann::ordered_json;

/// Integral exponents as numbers, half-integral ones as "p/q" strings.
Json qpoly_to_json(const QPolynomial& q);
Json qmatrix_to_json(const QMatrix& m);
/// {"variables": [...], "terms": [[[exps], "p/q"], ...]}
Json poly_to_json(const MultiPoly& p);
Json polymatrix_to_json(const PolyMatrix& m);
/// One relation as a list of {"monomials": [[name, exp], ...], "coeff": "p/q"} terms.
Json relation_to_json(const MultiPoly& p);
/// Accepts the term-list form above or a plain expression string.
MultiPoly relation_from_json(const Json& j, const VarSetPtr& vars);

}  // namespace bigalg
