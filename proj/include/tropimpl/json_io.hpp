#pragma once

#include "tropimpl/chow.hpp"

#include "json.hpp"

namespace tropimpl {

using Json = nlohmann::json;

// Integers that fit in 64 bits are bare JSON integers; rationals and larger integers
// are "num/den" strings.
Json rat_to_json(const Rat& x);
Json int_to_json(const Int& x);
Rat rat_from_json(const Json& j);
Int int_from_json(const Json& j);

Json vector_to_json(const IntVector& v);
Json vector_to_json(const RatVector& v);
IntVector int_vector_from_json(const Json& j);
RatVector rat_vector_from_json(const Json& j);

Json matrix_to_json(const ZMat& m);
ZMat int_matrix_from_json(const Json& j);

Json polytope_to_json(const LatticePolytope& p, bool with_facets = true);
LatticePolytope polytope_from_json(const Json& j);

Json cone_to_json(const Cone& c);
Cone cone_from_json(const Json& j, std::size_t ambient_dim);

Json cycle_to_json(const TropicalCycle& c);
TropicalCycle cycle_from_json(const Json& j);

Json parametrization_to_json(const Parametrization& f);
Parametrization parametrization_from_json(const Json& j);

Json polynomial_to_json(const ImplicitPolynomial& f);
ImplicitPolynomial polynomial_from_json(const Json& j);

Json plucker_to_json(const PluckerPoly& f);
PluckerPoly plucker_from_json(const Json& j);

// Parses text, mapping syntax errors to ErrorCode::Parse.
Json parse_json(const std::string& text);

}  // namespace tropimpl
