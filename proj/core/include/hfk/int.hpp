#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace hfk {

/// Arbitrary-precision signed integer. Every quantity in the library is
/// exact; nothing is ever rounded or truncated.
using Int = mpz_class;

/// Exact rational in canonical form (reduced, positive denominator).
using Rational = mpq_class;

inline Int to_int(std::int64_t v) {
  Int r;
  mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
  return r;
}

inline std::string to_string(const Int& v) { return v.get_str(); }

/// Parses a base-10 integer with optional leading sign. Throws
/// InvalidArgument on malformed input.
Int parse_int(const std::string& text);

/// True when `v` fits in a signed 64-bit word.
inline bool fits_i64(const Int& v) { return mpz_fits_slong_p(v.get_mpz_t()) != 0; }

inline std::int64_t to_i64(const Int& v) { return mpz_get_si(v.get_mpz_t()); }

/// Least nonnegative residue of `a` modulo |m|.
inline Int mod_floor(const Int& a, const Int& m) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline bool divides(const Int& d, const Int& n) {
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

}  // namespace hfk
