#pragma once

#include <json.hpp>

#include "kstab/piecewise.h"
#include "kstab/polytope.h"

namespace kstab {

using OrderedJson = nlohmann::ordered_json;

OrderedJson rational_json(const Rational& q);  // "p" or "p/q" string
OrderedJson polynomial_json(const Polynomial& p);  // ascending coefficient strings
OrderedJson piecewise_json(const PiecewisePoly& p);
OrderedJson polytope_json(const MomentPolytope& P);

// {vertices: [["x","y"], ...], kappa: ["x","y"], dh_exponent: k} with
// rationals as "p/q" strings (plain integers and decimals also accepted).
MomentPolytope parse_polytope_json(const OrderedJson& j);
MomentPolytope load_polytope_file(const std::string& path);

}  // namespace kstab
