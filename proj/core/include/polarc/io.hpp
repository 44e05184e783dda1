#pragma once

#include <string>
#include <string_view>

#include "polarc/chebyshev.hpp"
#include "polarc/signs.hpp"
#include "polarc/vector_system.hpp"

namespace polarc {

// JSON interchange formats:
//   system:        {"field": "real"|"complex", "dim": n, "vectors": [[...], ...]}
//                  complex entries are [re, im] pairs
//   signs:         {"kind": "real"|"phase", "entries": [+-1, ...] | [[re, im], ...]}
//   factorization: {"n": n, "K": K, "directions": [[x, y], ...]}
// Parsers throw Error with Errc::parse_error for malformed documents and the
// usual validation codes for well-formed but invalid content.

std::string system_to_json(const UnitVectorSystem& system);
UnitVectorSystem system_from_json(std::string_view text);

std::string signs_to_json(const SignAssignment& signs);
SignAssignment signs_from_json(std::string_view text);

std::string factorization_to_json(const Factorization& f);
Factorization factorization_from_json(std::string_view text);

UnitVectorSystem load_system(const std::string& path);

}  // namespace polarc
