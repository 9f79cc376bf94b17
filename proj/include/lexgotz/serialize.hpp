#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "lexgotz/classify.hpp"

namespace lexgotz {

using Json = nlohmann::ordered_json;

// Monomial text grammar, 1-based variables:
//   exponent vector  "[2,0,1]"
//   product          "x1^2*x3"   (unlisted variables have exponent 0, "1" is the unit)

/// Parses either form; throws InvalidArgument on malformed text, an index
/// outside 1..num_vars, or a vector of the wrong length.
Monomial parse_monomial(std::string_view text, std::size_t num_vars);

/// Product form, "1" for the unit. Always re-parses to an equal monomial.
std::string format_monomial(const Monomial& m);

std::string format_expansion(const MacaulayExpansion& expansion);

/// Accepts {"n": 3, "generators": [...]} with generators given as exponent
/// arrays or grammar strings.
MonomialIdeal ideal_from_json(const Json& json);
Json ideal_to_json(const MonomialIdeal& ideal);

/// A count as a JSON number when it fits in 64 bits, otherwise a decimal string.
Json natural_to_json(const Natural& value);

/// {"q": H(I, q)} in ascending q.
Json hilbert_to_json(const HilbertTable& table);

Json expansion_to_json(const Natural& a, unsigned d);

/// Stable keys: n, d, u, v, initial, completely, gotzmann, route, linear_quotients,
/// componentwise_lexsegment, taylor_minimal, a, b, c, j, then the extras t, size,
/// linear_quotients_order.
Json report_to_json(const ClassificationReport& report);

}  // namespace lexgotz
