#include "hfk/hc.hpp"

#include <utility>

#include "hfk/arith.hpp"
#include "hfk/errors.hpp"

namespace hfk {

std::string to_string(HcReason reason) {
  switch (reason) {
    case HcReason::trivial_homology:
      return "trivial homology";
    case HcReason::free_abelian:
      return "free abelian homology";
    case HcReason::lens_witness:
      return "genus-one homologically fibered knot";
    case HcReason::cyclic_torsion_bound:
      return "bounded by the number of generators of H_1";
    case HcReason::connsum_obstruction:
      return "neither q1q2 nor -q1q2 is a square mod p1";
    case HcReason::connsum_witness:
      return "genus-one surface found by search";
    case HcReason::connsum_inconclusive:
      return "inconclusive: no obstruction and no genus-one surface in the search box";
    case HcReason::linking_form_square:
      return "q or -q is a square mod p";
    case HcReason::linking_form_nonsquare:
      return "neither q nor -q is a square mod p";
  }
  return "unknown";
}

std::string HcResult::render() const {
  if (is_exact()) return lo.get_str();
  return "[" + lo.get_str() + ", " + hi.get_str() + "]";
}

bool qr_mod(const Int& a, const Int& m) { return sqrt_mod(a, m).has_value(); }

HcResult hc_trivial() { return {0, 0, HcReason::trivial_homology, std::nullopt, std::nullopt}; }

HcResult hc_free_abelian(const Int& rank) {
  if (rank < 1) throw InvalidArgument("hc_free_abelian: rank must be >= 1");
  Int g = (rank + 1) / 2;
  return {g, g, HcReason::free_abelian, std::nullopt, std::nullopt};
}

HcResult hc_lens(const LensSpace& space, const WitnessOptions& options) {
  return {1, 1, HcReason::lens_witness, construct_witness(space, options), std::nullopt};
}

HcResult hc_qhs_bound(const std::vector<Int>& invariant_factors) {
  int even = 0;
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
    const Int& f = invariant_factors[i];
    if (f < 2) throw InvalidArgument("hc_qhs_bound: invariant factors must be >= 2, got " + f.get_str());
    if (i > 0 && !divides(invariant_factors[i - 1], f)) {
      throw InvalidArgument("hc_qhs_bound: " + invariant_factors[i - 1].get_str() + " does not divide " + f.get_str());
    }
    if (mpz_even_p(f.get_mpz_t())) ++even;
  }
  if (even >= 2) throw HypothesisViolated("hc_qhs_bound: 2-torsion of H_1 is not cyclic");
  if (invariant_factors.empty()) return hc_trivial();
  const Int s = static_cast<unsigned long>(invariant_factors.size());
  return {(s + 1) / 2, s, HcReason::cyclic_torsion_bound, std::nullopt, std::nullopt};
}

namespace {

__extension__ typedef __int128 i128;

bool lens_less(const LensSpace& x, const LensSpace& y) {
  if (x.p() != y.p()) return x.p() < y.p();
  return x.q() < y.q();
}

// p1 p2 |det S| = 1 with everything scaled by P = p1 p2: det(P S) = +-P.
constexpr long kWordBoxLimit = 64;

std::optional<ConnSumSurfaceParams> connsum_search_words(std::int64_t p1, std::int64_t q1, std::int64_t p2,
                                                         std::int64_t q2, long box) {
  const i128 P = i128(p1) * p2;
  const i128 w1 = i128(q1) * p2;  // P * q1/p1
  const i128 w2 = i128(q2) * p1;
  for (long a = -box; a <= box; ++a)
    for (long b = -box; b <= box; ++b)
      for (long c = -box; c <= box; ++c)
        for (long u1 = -box; u1 <= box; ++u1)
          for (long u2 = -box; u2 <= box; ++u2)
            for (long v1 = -box; v1 <= box; ++v1)
              for (long v2 = -box; v2 <= box; ++v2) {
                const i128 cross = w1 * u1 * v1 + w2 * u2 * v2;
                const i128 s11 = P * a + w1 * u1 * u1 + w2 * u2 * u2;
                const i128 s22 = P * b + w1 * v1 * v1 + w2 * v2 * v2;
                const i128 s12 = P * c - cross;
                const i128 s21 = P * (c + 1) - cross;
                const i128 det = s11 * s22 - s12 * s21;
                if (det == P || det == -P) {
                  return ConnSumSurfaceParams{to_int(a),  to_int(b),  to_int(c), to_int(u1),
                                              to_int(u2), to_int(v1), to_int(v2)};
                }
              }
  return std::nullopt;
}

std::optional<ConnSumSurfaceParams> connsum_search_exact(const LensSpace& first, const LensSpace& second, long box) {
  const Int h1 = first.p() * second.p();
  ConnSumSurfaceParams s;
  for (long a = -box; a <= box; ++a)
    for (long b = -box; b <= box; ++b)
      for (long c = -box; c <= box; ++c)
        for (long u1 = -box; u1 <= box; ++u1)
          for (long u2 = -box; u2 <= box; ++u2)
            for (long v1 = -box; v1 <= box; ++v1)
              for (long v2 = -box; v2 <= box; ++v2) {
                s = {to_int(a), to_int(b), to_int(c), to_int(u1), to_int(u2), to_int(v1), to_int(v2)};
                if (is_homology_cobordism(seifert_matrix_connsum(first, second, s), h1)) return s;
              }
  return std::nullopt;
}

}  // namespace

std::optional<ConnSumSurfaceParams> connsum_search(const LensSpace& first, const LensSpace& second, long box) {
  if (box < 0) throw InvalidArgument("connsum_search: box must be nonnegative");
  const Int limit = Int(1) << 20;
  const bool small = abs(first.p()) < limit && abs(first.q()) < limit && abs(second.p()) < limit &&
                     abs(second.q()) < limit && box <= kWordBoxLimit;
  auto hit = small ? connsum_search_words(to_i64(first.p()), to_i64(first.q()), to_i64(second.p()),
                                          to_i64(second.q()), box)
                   : connsum_search_exact(first, second, box);
  if (hit && !is_homology_cobordism(seifert_matrix_connsum(first, second, *hit), first.p() * second.p())) {
    throw Error("connsum_search: fast path accepted parameters the exact check rejects");
  }
  return hit;
}

HcResult hc_connsum(const LensSpace& first, const LensSpace& second, long search_box) {
  const LensSpace& x = lens_less(second, first) ? second : first;
  const LensSpace& y = lens_less(second, first) ? first : second;

  if (divides(x.p(), y.p())) {
    const Int product = x.q() * y.q();
    if (!qr_mod(product, x.p()) && !qr_mod(-product, x.p())) {
      return {2, 2, HcReason::connsum_obstruction, std::nullopt, std::nullopt};
    }
  }
  if (auto params = connsum_search(x, y, search_box)) {
    return {1, 1, HcReason::connsum_witness, std::nullopt, *params};
  }
  return {1, 2, HcReason::connsum_inconclusive, std::nullopt, std::nullopt};
}

HcResult hc_z_plus_zp(const Int& p, const Int& q) {
  if (p < 2) throw InvalidArgument("hc_z_plus_zp: p must be >= 2");
  Int g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  if (g != 1) throw InvalidArgument("hc_z_plus_zp: gcd(p, q) must be 1");
  if (qr_mod(q, p) || qr_mod(-q, p)) return {1, 1, HcReason::linking_form_square, std::nullopt, std::nullopt};
  return {2, 2, HcReason::linking_form_nonsquare, std::nullopt, std::nullopt};
}

bool sqrt_in_cyclotomic(const Int& a, const Int& n) {
  if (a == 0) throw InvalidArgument("sqrt_in_cyclotomic: a must be nonzero");
  if (n < 1) throw InvalidArgument("sqrt_in_cyclotomic: n must be positive");
  const Factorization f = factorize(squarefree_part(a));
  Int rest = f.sign;
  for (const auto& [prime, e] : f.factors) {
    if (prime == 2) {
      rest *= 2;
      continue;
    }
    if (!divides(prime, n)) return false;
    // prime / prime* = (-1)^((prime-1)/2)
    if (mpz_fdiv_ui(prime.get_mpz_t(), 4) == 3) rest = -rest;
  }
  const unsigned v2 = valuation2(n);
  if (v2 < 2) return rest == 1;
  if (v2 == 2) return rest == 1 || rest == -1;
  return rest == 1 || rest == -1 || rest == 2 || rest == -2;
}

std::vector<Int> cyclotomic_exception_scan(const Int& n_max) {
  if (n_max < 1) throw InvalidArgument("scan bound must be >= 1");
  // sqrt(0) = 0 lies in every field.
  auto contains = [](const Int& a, const Int& n) { return a == 0 || sqrt_in_cyclotomic(a, n); };
  std::vector<Int> hits;
  for (Int n = 1; n <= n_max; ++n) {
    if (contains(n * (n + 4), n) && contains(n * (n - 4), n)) hits.push_back(n);
  }
  return hits;
}

}  // namespace hfk
