#pragma once

#include "jetfields/derivation.hpp"
#include "jetfields/formal_map.hpp"
#include "jetfields/jet.hpp"
#include "jetfields/jet_matrix.hpp"

#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>

namespace jetfields {

// Text syntax (full grammar in docs/grammar.md):
//   series  x1^2*x2 - 3/2*x3 + (x1 + x2)^2
//   field   (x1^2)*d1 + (x1*x2)*d2
//   map     x1 -> x1; x2 -> x2 + x1^2
// Variables are x1..xn. Terms above the declared order are rejected, never
// truncated. Errors are ParseError with the offending position.

Jet parse_series(std::string_view text, std::size_t n, int order);
Derivation parse_field(std::string_view text, std::size_t n, int order);
FormalMap parse_map(std::string_view text, std::size_t n, int order);

/// Canonical text: graded order, explicit signs, reduced p/q coefficients.
std::string format_series(const Jet& f);
/// "(series)*dk" for each nonzero coefficient, joined by " + "; "0" if none.
std::string format_field(const Derivation& d);
/// "x1 -> ...; x2 -> ..."
std::string format_map(const FormalMap& s);
/// One "[a, b, ...]" line per row.
std::string format_matrix(const JetMatrix& m);

inline std::ostream& operator<<(std::ostream& os, const Jet& f) { return os << format_series(f); }
inline std::ostream& operator<<(std::ostream& os, const Derivation& d) { return os << format_field(d); }
inline std::ostream& operator<<(std::ostream& os, const FormalMap& s) { return os << format_map(s); }

} // namespace jetfields
