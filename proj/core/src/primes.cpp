#include "hfk/primes.hpp"

#include "hfk/arith.hpp"
#include "hfk/errors.hpp"

namespace hfk {

namespace {

bool coprime(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g == 1;
}

// n (n + 4 epsilon) is a square modulo the odd prime l, zero included.
bool discriminant_is_square(const Int& n, int epsilon, const Int& l) {
  return jacobi(n * (n + 4 * epsilon), l) != -1;
}

}  // namespace

bool check_prime_witness(const Int& m, const Int& n, int epsilon, const Int& l) {
  if (n < 1 || (epsilon != 1 && epsilon != -1)) return false;
  if (!coprime(m, n)) return false;
  if (l < 3 || mpz_even_p(l.get_mpz_t()) || !is_prime(l)) return false;
  if (!divides(n, l - m)) return false;
  return discriminant_is_square(n, epsilon, l);
}

PrimeWitness find_prime_witness(const Int& m, const Int& n, const Int& bound) {
  if (n < 1) throw InvalidArgument("find_prime_witness: n must be positive, got " + n.get_str());
  if (!coprime(m, n)) {
    throw InvalidArgument("find_prime_witness: gcd(" + m.get_str() + ", " + n.get_str() + ") != 1");
  }
  if (n == 5 && mod_floor(m, 5) == 2) {
    throw NoSolutionClass("no odd prime l = 2 (mod 5) makes 5x(x+1) = +-1 (mod l) solvable");
  }

  // First candidate l = m + k n >= 3.
  Int l = mod_floor(m, n);
  if (l < 3) {
    Int k;
    mpz_cdiv_q(k.get_mpz_t(), Int(3 - l).get_mpz_t(), n.get_mpz_t());
    l += k * n;
  }
  // For odd n, every other candidate is even; stepping by 2n skips them.
  Int step = n;
  if (mpz_even_p(l.get_mpz_t())) {
    if (mpz_even_p(n.get_mpz_t())) {
      // m odd when n even and gcd(m, n) = 1, so this cannot happen.
      throw Error("find_prime_witness: even candidate in odd class");
    }
    l += n;
  }
  if (mpz_odd_p(n.get_mpz_t())) step = 2 * n;

  for (; l <= bound; l += step) {
    if (!is_prime(l)) continue;
    for (int epsilon : {1, -1}) {
      if (!discriminant_is_square(n, epsilon, l)) continue;
      // (2 n x + n)^2 = n^2 + 4 epsilon n, so x = (z - n) / (2 n)
      Int z = sqrt_mod_prime(n * (n + 4 * epsilon), l);
      Int x0 = mod_floor((z - n) * inverse_mod(2 * n, l), l);
      if (mod_floor(n * x0 * (x0 + 1) - epsilon, l) != 0) {
        throw Error("find_prime_witness: root extraction produced a non-solution");
      }
      return {epsilon, l, x0};
    }
  }
  throw SearchExhausted("no prime witness l = " + m.get_str() + " (mod " + n.get_str() + ") up to " +
                        bound.get_str());
}

}  // namespace hfk
