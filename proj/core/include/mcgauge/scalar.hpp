/// @file scalar.hpp
/// Exact rational coefficients. All arithmetic in the engine is exact; no
/// floating point anywhere. Scalars are GMP rationals kept in lowest terms
/// with positive denominator (mpq_class canonicalizes on construction from
/// integers and after every arithmetic operation we route through helpers
/// that canonicalize).

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "mcgauge/errors.hpp"

namespace mcgauge {

/// Exact rational number, always in lowest terms, denominator > 0.
using Scalar = mpq_class;

/// Exact rational num/den, canonicalized (mpq_class's fraction constructor
/// does *not* reduce on its own). Throws InputError when den = 0.
Scalar make_scalar(long num, long den = 1);

/// Parse "num", "-num" or "num/den" (den > 0 after canonicalization).
/// Throws InputError on malformed input.
Scalar scalar_from_string(const std::string& text);

/// Canonical rendering: "num" when the denominator is 1, else "num/den".
std::string scalar_to_string(const Scalar& value);

/// Exact n! as a Scalar (n small; used by series weights).
Scalar factorial(unsigned n);

}  // namespace mcgauge
