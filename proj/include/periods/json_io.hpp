#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "periods/continuation.hpp"
#include "periods/diffop.hpp"
#include "periods/frobenius.hpp"
#include "periods/mirror.hpp"
#include "periods/toric.hpp"

namespace pe {

using Json = nlohmann::ordered_json;

// series: {"exponent":"p/q","order":N,"coeffs":["p/q",...]}, bit-exact
Json series_to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const Json& j);

// operator: {"var":"z","theta_coeffs":[[c00,c01,...],...]}, integer lists,
// lowest degree first; optional "gauge_shift" and "name" metadata
Json theta_to_json(const ThetaOperator& L);
ThetaOperator theta_from_json(const Json& j);
Rational gauge_shift_from_json(const Json& j);  // 1 when absent

Json log_solution_to_json(const LogSolution& s);
Json basis_to_json(const FrobeniusBasis& b);

// {"algebraic":{"num":[...],"den":[...],"exponent":"p/q"},"flat":{...}}
Json yukawa_to_json(const YukawaCoupling& y);

Json deriv_to_json(const DerivOperator& d);

// polytope: {"vertices":[[2,-1],...]}
Json polytope_to_json(const LatticePolytope2D& p);
LatticePolytope2D polytope_from_json(const Json& j);

// path: {"vertices":[["re","im"],...],"precision_digits":D}
PathPolyline path_from_json(const Json& j, unsigned* digits_out);
Json cmatrix_to_json(const CMatrix& m, unsigned digits);

Json load_json_file(const std::string& path);

}  // namespace pe
