#pragma once

#include <string>
#include <string_view>

#include "dmcyl/algebra.hpp"

namespace dmcyl {

// Parses the polynomial expression grammar used by diagram files and the CLI:
// identifiers [a-zA-Z][a-zA-Z0-9_]*, integer or rational (p/q) coefficients,
// operators + - * ^ and parentheses, e.g. "-3*t^2" or "(a+b)^2".
// Errors report the offset and, for unknown generators, the identifier.
Polynomial parse_polynomial(const AlgebraPtr& alg, std::string_view text);

}  // namespace dmcyl
