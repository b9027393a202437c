#pragma once

#include "hfk/int.hpp"

namespace hfk {

/// An odd prime l = m (mod n) together with a root of n x (x + 1) = epsilon
/// (mod l).
struct PrimeWitness {
  int epsilon = 1;  // +1 or -1
  Int l;
  Int root_x0;  // 0 <= root_x0 < l

  friend bool operator==(const PrimeWitness&, const PrimeWitness&) = default;
};

inline const Int& default_prime_bound() {
  static const Int bound(100'000'000);
  return bound;
}

/// True iff l is an odd prime, l = m (mod n) and n x (x + 1) = epsilon
/// (mod l) is solvable, i.e. n (n + 4 epsilon) is a square mod l. Returns
/// false (never throws) when any condition, including n >= 1,
/// gcd(m, n) = 1 and epsilon in {1, -1}, fails.
bool check_prime_witness(const Int& m, const Int& n, int epsilon, const Int& l);

/// Smallest odd prime l <= bound with l = m (mod n) admitting a solution of
/// n x (x + 1) = epsilon (mod l) for some epsilon. At equal l, epsilon = +1
/// wins.
///
/// Candidates are scanned as l = m + k n in increasing order. Throws
/// InvalidArgument unless n >= 1 and gcd(m, n) = 1, NoSolutionClass for
/// n = 5 and m = 2 (mod 5), SearchExhausted when nothing up to `bound` works.
PrimeWitness find_prime_witness(const Int& m, const Int& n, const Int& bound = default_prime_bound());

}  // namespace hfk
