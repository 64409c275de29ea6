#pragma once

#include <string>

#include <gmpxx.h>

namespace kostka {

/// Arbitrary-precision non-negative integer used for every tableau and
/// composition count in the library.
using Count = mpz_class;

inline std::string to_decimal(const Count& c) { return c.get_str(10); }

} // namespace kostka
