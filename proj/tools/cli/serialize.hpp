#pragma once

#include <fano3lab/autgrp.hpp>
#include <fano3lab/linalgeom.hpp>
#include <fano3lab/planecurves.hpp>
#include <fano3lab/v5.hpp>

#include <json.hpp>

namespace fano3lab::cli {

using Json = nlohmann::json;

// {conductor, coords: [[num, den], ...]} with decimal strings
Json to_json(const CycNum& c);
CycNum scalar_from_json(const Json& j);
// {degree, coeffs, text}; coefficient k multiplies x^(d-k) y^k
Json to_json(const BinaryForm& f, const std::string& x = "x", const std::string& y = "y");
// {variables, degree, terms: [{exponent, coeff}], text}
Json to_json(const MultiPoly& p);
Json to_json(const PlaneCurve& c);
Json to_json(const PlanePoint& p);
Json to_json(const Matrix& m);
Json to_json(const GroupElt2& g);
Json to_json(const PointOnY& p);
Json to_json(const LineOnY& l);

// Renders a result document as indented "key: value" lines; scalar objects
// are printed in the expression syntax.
std::string to_text(const Json& j);

}  // namespace fano3lab::cli
