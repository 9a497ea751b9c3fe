#pragma once

#include <json.hpp>

#include "orbitkit/catalog.hpp"
#include "orbitkit/contraction.hpp"
#include "orbitkit/quadform.hpp"
#include "orbitkit/structvec.hpp"
#include "orbitkit/witt.hpp"

namespace orbitkit::io {

using ojson = nlohmann::ordered_json;

// ---- emitters (rationals are always "p/q" strings, never numbers) ----
ojson rat_json(const Rat& r);
ojson poly_json(const Poly& p);
ojson ratfunc_json(const RatFunc& f);
// Constants print as plain Rat strings, true rational functions as
// {"num": [...], "den": [...]}.
ojson scalar_qt_json(const RatFunc& f);
ojson order_json(const Order& o);  // integer or "inf"

ojson mat_json(const MatQ& m);    // {"rows","cols","entries"}
ojson mat_json(const MatQt& m);
ojson rows_json(const MatQ& m);   // bare [[...],...]
ojson rows_json(const MatQt& m);

ojson structvec_json(const StructVecQ& lam);
ojson structvec_json(const StructVecQt& lam);
ojson quadform_json(const QuadFormQ& q);
ojson quadform_json(const QuadFormQt& q);
ojson family_json(const ContractionFamily& c);
ojson orbit_polynomial_json(const OrbitPolynomial& p);
ojson algebra_invariants_json(const AlgebraInvariants& inv);
ojson witt_json(const WittInvariants& w);
ojson blocks_json(const BlockDecomposition& b);

// ---- parsers (throw ParseError on malformed input) ----
Rat parse_rat(const ojson& j);
Poly parse_poly(const ojson& j);
RatFunc parse_ratfunc(const ojson& j);
RatFunc parse_scalar_qt(const ojson& j);  // Rat string or RatFunc object

MatQ parse_mat_q(const ojson& j);    // object form or bare rows
MatQt parse_mat_qt(const ojson& j);
StructVecQ parse_structvec_q(const ojson& j);
QuadFormQ parse_quadform_q(const ojson& j);
QuadFormQt parse_quadform_qt(const ojson& j);
ContractionFamily parse_family(const ojson& j);
OrbitPolynomial parse_orbit_polynomial(const ojson& j);

}  // namespace orbitkit::io
