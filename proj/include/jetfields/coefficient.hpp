#pragma once

#include <gmpxx.h>

#include <string>

namespace jetfields {

/// Exact rational coefficient. GMP keeps it canonical: reduced, positive
/// denominator.
using Coefficient = mpq_class;

/// "p/q", or "p" when q = 1.
inline std::string to_string(const Coefficient& c) { return c.get_str(); }

/// Builds num/den from decimal strings; throws DomainError on a zero
/// denominator or malformed digits.
Coefficient coefficient_from_strings(const std::string& num, const std::string& den);

} // namespace jetfields
