#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace mdyn {

// Exact rational helpers. Rationals travel through the artifact as canonical
// mpq_class values; file formats use "p/q" strings or plain decimals.

// Parses "p/q", "p", or a decimal like "-0.3"/"3.9e-1".
mpq_class parse_rational(const std::string& text);

// Canonical "p/q" (or "p" when the denominator is 1).
std::string rational_string(const mpq_class& q);

// Decimal expansion with the given number of significant digits (round to
// nearest). Exact when the denominator divides a power of ten and fits.
std::string rational_decimal(const mpq_class& q, int digits = 20);

// Total size of numerator+denominator in bits; used to cap exact propagation.
size_t rational_bits(const mpq_class& q);

// The rational with the smallest denominator in [lo, hi] (Stern-Brocot walk).
// Returns nullopt if the search exceeds max_denominator.
std::optional<mpq_class> simplest_rational_in(const mpq_class& lo, const mpq_class& hi,
                                              unsigned long max_denominator);

// sqrt(q) when it is rational, nullopt otherwise.
std::optional<mpq_class> exact_sqrt(const mpq_class& q);

inline int sgn(const mpq_class& q) { return mpq_sgn(q.get_mpq_t()); }

} // namespace mdyn
