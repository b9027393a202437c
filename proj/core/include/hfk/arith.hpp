#pragma once

#include <optional>
#include <vector>

#include "hfk/int.hpp"

namespace hfk {

/// Inputs to factorize() and everything built on it must satisfy
/// |n| <= this bound. Trial division up to 10^6 keeps each call cheap.
inline const Int& default_factor_cap() {
  static const Int cap("1000000000000");
  return cap;
}

struct ExtGcd {
  Int g;  // gcd(a, b) > 0
  Int x;
  Int y;  // a*x + b*y == g
};

/// Extended Euclid. Throws InvalidArgument for (0, 0).
ExtGcd ext_gcd(const Int& a, const Int& b);

/// Inverse of a modulo m (m >= 2). Throws InvalidArgument when gcd(a, m) != 1.
Int inverse_mod(const Int& a, const Int& m);

/// Jacobi symbol (a | m) for odd m >= 1.
int jacobi(const Int& a, const Int& m);

/// Primality of |n|.
///
/// Miller-Rabin with the first thirteen prime bases (2..41) is a proof for
/// |n| < 3317044064679887385961981 (about 3.3e24). Above that bound 32 further
/// rounds are run with bases drawn from a fixed-seed generator, so the answer
/// is still reproducible; the error probability is below 4^-45.
bool is_prime(const Int& n);

/// The proven range of is_prime().
const Int& deterministic_prime_bound();

/// Square root of a modulo an odd prime l, as the smaller of the two roots
/// z and l - z. Throws NonResidue if (a | l) = -1.
Int sqrt_mod_prime(const Int& a, const Int& l);

/// Some z with z^2 = a (mod m), or nullopt when none exists. The modulus is
/// factored, roots are lifted per prime power and recombined by CRT; the
/// returned root lies in [0, m).
std::optional<Int> sqrt_mod(const Int& a, const Int& m, const Int& cap = default_factor_cap());

struct PrimePower {
  Int prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
  int sign = 1;
  std::vector<PrimePower> factors;  // strictly increasing primes

  /// sign * prod(prime^exponent)
  Int value() const;
};

/// Trial-division factorization. Throws InvalidArgument for 0 and
/// ModulusTooLarge when |n| > cap.
Factorization factorize(const Int& n, const Int& cap = default_factor_cap());

/// Signed squarefree s with n = s * k^2.
Int squarefree_part(const Int& n, const Int& cap = default_factor_cap());

/// 2-adic valuation of a nonzero integer.
unsigned valuation2(const Int& n);

}  // namespace hfk
