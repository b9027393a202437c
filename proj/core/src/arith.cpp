#include "hfk/arith.hpp"

#include <array>
#include <cctype>
#include <utility>

#include "hfk/errors.hpp"

namespace hfk {

Int parse_int(const std::string& text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw InvalidArgument("not an integer: '" + text + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw InvalidArgument("not an integer: '" + text + "'");
    }
  }
  // gmp rejects a leading '+'
  return Int(text[0] == '+' ? text.substr(1) : text, 10);
}

ExtGcd ext_gcd(const Int& a, const Int& b) {
  if (a == 0 && b == 0) throw InvalidArgument("ext_gcd: (0, 0) has no gcd");
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int quot;
    mpz_fdiv_q(quot.get_mpz_t(), old_r.get_mpz_t(), r.get_mpz_t());
    old_r = std::exchange(r, Int(old_r - quot * r));
    old_s = std::exchange(s, Int(old_s - quot * s));
    old_t = std::exchange(t, Int(old_t - quot * t));
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

Int inverse_mod(const Int& a, const Int& m) {
  if (m < 2) throw InvalidArgument("inverse_mod: modulus must be >= 2");
  auto [g, x, y] = ext_gcd(mod_floor(a, m), m);
  if (g != 1) throw InvalidArgument("inverse_mod: " + a.get_str() + " is not invertible mod " + m.get_str());
  return mod_floor(x, m);
}

int jacobi(const Int& a, const Int& m) {
  if (m < 1 || mpz_even_p(m.get_mpz_t())) {
    throw InvalidArgument("jacobi: modulus must be odd and positive, got " + m.get_str());
  }
  Int x = mod_floor(a, m);
  Int y = m;
  int result = 1;
  while (x != 0) {
    unsigned long twos = mpz_scan1(x.get_mpz_t(), 0);
    x >>= twos;
    unsigned long y8 = mpz_fdiv_ui(y.get_mpz_t(), 8);
    if ((twos & 1) && (y8 == 3 || y8 == 5)) result = -result;
    // reciprocity
    if (mpz_fdiv_ui(x.get_mpz_t(), 4) == 3 && y8 % 4 == 3) result = -result;
    std::swap(x, y);
    x = mod_floor(x, y);
  }
  return y == 1 ? result : 0;
}

namespace {

constexpr std::array<unsigned, 13> kWitnessBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
constexpr int kExtraRounds = 32;

// n odd, n > 3; d * 2^s = n - 1 with d odd.
bool strong_probable_prime(const Int& n, const Int& base, const Int& d, unsigned long s) {
  const Int n_minus_1 = n - 1;
  Int x;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned long i = 1; i < s; ++i) {
    x = x * x % n;
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

}  // namespace

const Int& deterministic_prime_bound() {
  static const Int bound("3317044064679887385961981");
  return bound;
}

bool is_prime(const Int& value) {
  Int n = abs(value);
  if (n < 2) return false;
  for (unsigned p : kWitnessBases) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  if (n < 43 * 43) return true;

  Int d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  d >>= s;

  for (unsigned b : kWitnessBases) {
    if (!strong_probable_prime(n, Int(b), d, s)) return false;
  }
  if (n < deterministic_prime_bound()) return true;

  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(0x6866'6b31UL);
  const Int span = n - 3;
  for (int round = 0; round < kExtraRounds; ++round) {
    Int base = rng.get_z_range(span) + 2;  // [2, n-2]
    if (!strong_probable_prime(n, base, d, s)) return false;
  }
  return true;
}

Int sqrt_mod_prime(const Int& a, const Int& l) {
  if (l < 3 || mpz_even_p(l.get_mpz_t())) {
    throw InvalidArgument("sqrt_mod_prime: modulus must be an odd prime, got " + l.get_str());
  }
  Int r = mod_floor(a, l);
  if (r == 0) return 0;
  if (jacobi(r, l) != 1) {
    throw NonResidue(a.get_str() + " is not a quadratic residue mod " + l.get_str());
  }

  Int z;
  if (mpz_fdiv_ui(l.get_mpz_t(), 4) == 3) {
    Int e = (l + 1) / 4;
    mpz_powm(z.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), l.get_mpz_t());
  } else {
    // Tonelli-Shanks
    Int q = l - 1;
    unsigned long s = mpz_scan1(q.get_mpz_t(), 0);
    q >>= s;
    Int nonresidue = 2;
    while (jacobi(nonresidue, l) != -1) ++nonresidue;

    Int c, t, e;
    mpz_powm(c.get_mpz_t(), nonresidue.get_mpz_t(), q.get_mpz_t(), l.get_mpz_t());
    mpz_powm(t.get_mpz_t(), r.get_mpz_t(), q.get_mpz_t(), l.get_mpz_t());
    e = (q + 1) / 2;
    mpz_powm(z.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), l.get_mpz_t());
    unsigned long m = s;
    while (t != 1) {
      unsigned long i = 0;
      Int t2 = t;
      while (t2 != 1) {
        t2 = t2 * t2 % l;
        ++i;
      }
      Int b = c;
      for (unsigned long j = 0; j + i + 1 < m; ++j) b = b * b % l;
      m = i;
      c = b * b % l;
      t = t * c % l;
      z = z * b % l;
    }
  }
  Int other = l - z;
  if (z * z % l != r) throw Error("sqrt_mod_prime: internal root check failed");
  return other < z ? other : z;
}

namespace {

Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// Root of a unit a modulo 2^e.
std::optional<Int> sqrt_unit_mod_pow2(const Int& a, unsigned e) {
  const Int m = pow_int(2, e);
  Int r = mod_floor(a, m);
  if (e == 1) return Int(1);
  if (e == 2) return mod_floor(r, 4) == 1 ? std::optional<Int>(1) : std::nullopt;
  if (mod_floor(r, 8) != 1) return std::nullopt;
  // Invariant: z^2 = a mod 2^k.
  Int z = 1;
  for (unsigned k = 3; k < e; ++k) {
    Int mk1 = pow_int(2, k + 1);
    if (mod_floor(z * z - r, mk1) != 0) z += pow_int(2, k - 1);
  }
  return mod_floor(z, m);
}

// Root of a unit a modulo p^e for odd prime p, by Hensel lifting.
std::optional<Int> sqrt_unit_mod_odd_prime_power(const Int& a, const Int& p, unsigned e) {
  if (jacobi(a, p) != 1) return std::nullopt;
  Int z = sqrt_mod_prime(a, p);
  Int pk = p;
  for (unsigned k = 1; k < e; ++k) {
    pk *= p;
    // z <- z - (z^2 - a) / (2z)
    Int inv = inverse_mod(2 * z, pk);
    z = mod_floor(z - (z * z - a) * inv, pk);
  }
  return z;
}

std::optional<Int> sqrt_mod_prime_power(const Int& a, const Int& p, unsigned e) {
  const Int modulus = pow_int(p, e);
  Int r = mod_floor(a, modulus);
  if (r == 0) return Int(0);
  unsigned long v = mpz_remove(r.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
  if (v % 2 != 0) return std::nullopt;
  const unsigned rest = e - static_cast<unsigned>(v);
  std::optional<Int> unit_root = (p == 2) ? sqrt_unit_mod_pow2(r, rest)
                                          : sqrt_unit_mod_odd_prime_power(r, p, rest);
  if (!unit_root) return std::nullopt;
  return mod_floor(*unit_root * pow_int(p, v / 2), modulus);
}

}  // namespace

std::optional<Int> sqrt_mod(const Int& a, const Int& m, const Int& cap) {
  if (m < 2) throw InvalidArgument("sqrt_mod: modulus must be >= 2, got " + m.get_str());
  Factorization f = factorize(m, cap);
  Int root = 0;
  Int modulus = 1;
  for (const auto& [p, e] : f.factors) {
    auto local = sqrt_mod_prime_power(a, p, e);
    if (!local) return std::nullopt;
    Int pe = pow_int(p, e);
    // CRT: root' = root + modulus * t with root' = local (mod pe)
    Int t = mod_floor((*local - root) * inverse_mod(modulus, pe), pe);
    root += modulus * t;
    modulus *= pe;
  }
  return mod_floor(root, m);
}

Int Factorization::value() const {
  Int v = sign;
  for (const auto& [p, e] : factors) v *= pow_int(p, e);
  return v;
}

Factorization factorize(const Int& n, const Int& cap) {
  if (n == 0) throw InvalidArgument("factorize: zero has no factorization");
  if (abs(n) > cap) {
    throw ModulusTooLarge("factorize: |" + n.get_str() + "| exceeds the factorization cap " + cap.get_str());
  }
  Factorization f;
  f.sign = n < 0 ? -1 : 1;
  Int rest = abs(n);
  auto strip = [&](const Int& d) {
    unsigned e = 0;
    while (divides(d, rest)) {
      rest /= d;
      ++e;
    }
    if (e > 0) f.factors.push_back({d, e});
  };
  strip(2);
  strip(3);
  if (mpz_fits_ulong_p(rest.get_mpz_t())) {
    unsigned long r = rest.get_ui();
    auto strip_word = [&](unsigned long d) {
      unsigned e = 0;
      while (r % d == 0) {
        r /= d;
        ++e;
      }
      if (e > 0) f.factors.push_back({Int(d), e});
    };
    // 6k +- 1 wheel
    for (unsigned long d = 5; d <= r / d; d += 6) {
      strip_word(d);
      strip_word(d + 2);
    }
    if (r > 1) f.factors.push_back({Int(r), 1});
    return f;
  }
  for (Int d = 5; d * d <= rest; d += 6) {
    strip(d);
    strip(d + 2);
  }
  if (rest > 1) f.factors.push_back({rest, 1});
  return f;
}

Int squarefree_part(const Int& n, const Int& cap) {
  Factorization f = factorize(n, cap);
  Int s = f.sign;
  for (const auto& [p, e] : f.factors) {
    if (e % 2 == 1) s *= p;
  }
  return s;
}

unsigned valuation2(const Int& n) {
  if (n == 0) throw InvalidArgument("valuation2: zero has infinite valuation");
  return static_cast<unsigned>(mpz_scan1(n.get_mpz_t(), 0));
}

}  // namespace hfk
