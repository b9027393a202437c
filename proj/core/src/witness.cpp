#include "hfk/witness.hpp"

#include "hfk/arith.hpp"
#include "hfk/errors.hpp"
#include "hfk/quadform.hpp"

namespace hfk {

LensSpace::LensSpace(Int p, Int q) : p_(std::move(p)), q_(std::move(q)) {
  if (p_ < 2) throw InvalidArgument("lens space needs p >= 2, got p = " + p_.get_str());
  Int g;
  mpz_gcd(g.get_mpz_t(), p_.get_mpz_t(), q_.get_mpz_t());
  if (g != 1) throw InvalidArgument("lens space needs gcd(p, q) = 1, got " + name());
}

LensSpace LensSpace::normalized() const { return LensSpace(p_, mod_floor(q_, p_)); }

std::string_view to_string(WitnessMethod m) {
  switch (m) {
    case WitnessMethod::constructed:
      return "constructed";
    case WitnessMethod::brute_force:
      return "brute_force";
    case WitnessMethod::supplied:
      return "supplied";
  }
  return "unknown";
}

WitnessMethod parse_witness_method(std::string_view name) {
  if (name == "constructed") return WitnessMethod::constructed;
  if (name == "brute_force") return WitnessMethod::brute_force;
  if (name == "supplied") return WitnessMethod::supplied;
  throw InvalidArgument("unknown witness method '" + std::string(name) + "'");
}

namespace {

Int band_form(const SurfaceParams& s) { return s.b * s.u * s.u + (2 * s.c + 1) * s.u * s.v + s.a * s.v * s.v; }
Int clasp_form(const SurfaceParams& s) { return s.c * s.c + s.c - s.a * s.b; }

}  // namespace

Int signed_identity(const LensSpace& space, const SurfaceParams& s) {
  return space.p() * clasp_form(s) - space.q() * band_form(s);
}

BezoutPair solve_bezout(const LensSpace& space) {
  // p s0 - q r0 = 1  <=>  r0 = -q^{-1} (mod p)
  const Int& p = space.p();
  Int r0 = mod_floor(-inverse_mod(space.q(), p), p);
  Int s0;
  Int num = 1 + space.q() * r0;
  mpz_divexact(s0.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
  return {r0, s0};
}

std::optional<WitnessCertificate> verify_witness(const LensSpace& space, const SurfaceParams& s,
                                                 WitnessMethod method) {
  const Int value = signed_identity(space, s);
  if (value != 1 && value != -1) return std::nullopt;

  // p (eps A) - q (eps B) = 1, so (eps B, eps A) is a Bezout solution.
  const int epsilon = value == 1 ? 1 : -1;
  const BezoutPair base = solve_bezout(space);
  WitnessCertificate cert{space, s, epsilon, 0, epsilon * band_form(s), epsilon * clasp_form(s), method, 1};
  Int shift = cert.r_k - base.r0;
  mpz_divexact(cert.k.get_mpz_t(), shift.get_mpz_t(), space.p().get_mpz_t());
  if (!certificate_is_sound(cert)) throw Error("verify_witness: recovered certificate is inconsistent");
  return cert;
}

bool certificate_is_sound(const WitnessCertificate& cert) {
  if (cert.epsilon != 1 && cert.epsilon != -1) return false;
  const BezoutPair base = solve_bezout(cert.space);
  if (cert.r_k != base.r(cert.k, cert.space) || cert.s_k != base.s(cert.k, cert.space)) return false;
  if (band_form(cert.params) != cert.epsilon * cert.r_k) return false;
  if (clasp_form(cert.params) != cert.epsilon * cert.s_k) return false;
  const Int value = abs(signed_identity(cert.space, cert.params));
  return value == 1 && cert.identity_value == 1;
}

namespace {

__extension__ typedef __int128 i128;

// Hot loop in 128-bit words. With |p|, |q| < 2^62 and box <= 2^16 no term
// exceeds 2^127.
constexpr long kWordBoxLimit = 1L << 16;

std::optional<SurfaceParams> brute_search_words(std::int64_t p, std::int64_t q, long box) {
  for (long a = -box; a <= box; ++a) {
    for (long b = -box; b <= box; ++b) {
      for (long c = -box; c <= box; ++c) {
        const i128 clasp = i128(c) * c + c - i128(a) * b;
        const i128 pa = i128(p) * clasp;
        for (long u = -box; u <= box; ++u) {
          for (long v = -box; v <= box; ++v) {
            const i128 band = i128(b) * u * u + i128(2 * c + 1) * u * v + i128(a) * v * v;
            const i128 value = pa - i128(q) * band;
            if (value == 1 || value == -1) {
              return SurfaceParams{to_int(a), to_int(b), to_int(c), to_int(u), to_int(v)};
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<SurfaceParams> brute_search_exact(const LensSpace& space, long box) {
  SurfaceParams s;
  for (long a = -box; a <= box; ++a) {
    s.a = to_int(a);
    for (long b = -box; b <= box; ++b) {
      s.b = to_int(b);
      for (long c = -box; c <= box; ++c) {
        s.c = to_int(c);
        for (long u = -box; u <= box; ++u) {
          s.u = to_int(u);
          for (long v = -box; v <= box; ++v) {
            s.v = to_int(v);
            Int value = signed_identity(space, s);
            if (value == 1 || value == -1) return s;
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<WitnessCertificate> brute_search(const LensSpace& space, long box) {
  if (box < 0) throw InvalidArgument("brute_search: box must be nonnegative");
  const Int word_limit = Int(1) << 62;
  std::optional<SurfaceParams> hit;
  if (box <= kWordBoxLimit && abs(space.p()) < word_limit && abs(space.q()) < word_limit) {
    hit = brute_search_words(to_i64(space.p()), to_i64(space.q()), box);
  } else {
    hit = brute_search_exact(space, box);
  }
  if (!hit) return std::nullopt;
  auto cert = verify_witness(space, *hit, WitnessMethod::brute_force);
  if (!cert) throw Error("brute_search: fast path accepted parameters the exact check rejects");
  return cert;
}

std::optional<WitnessCertificate> brute_search_growing(const LensSpace& space, long max_box) {
  if (max_box < 0) throw InvalidArgument("brute_search: box must be nonnegative");
  for (long box = 0; box <= max_box; ++box) {
    if (auto cert = brute_search(space, box)) return cert;
  }
  return std::nullopt;
}

WitnessCertificate construct_witness(const LensSpace& space, const WitnessOptions& options) {
  const BezoutPair base = solve_bezout(space);
  std::string pipeline_failure;
  try {
    const PrimeWitness pw = find_prime_witness(base.r0, space.p(), options.prime_bound);
    const int eps = pw.epsilon;
    Int k;
    Int shift = pw.l - base.r0;
    mpz_divexact(k.get_mpz_t(), shift.get_mpz_t(), space.p().get_mpz_t());
    const Int r_k = base.r(k, space);
    const Int s_k = base.s(k, space);

    const Int z0 = 1 + 2 * pw.root_x0;
    const Int disc = 1 + 4 * eps * s_k;
    const FormRepresentation rep = form_from_sqrt(z0, eps * r_k, disc);

    Int c = rep.form.b - 1;
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), 2);
    const SurfaceParams params{rep.form.c, rep.form.a, c, rep.x, rep.y};
    auto cert = verify_witness(space, params, WitnessMethod::constructed);
    if (!cert) throw Error("construct_witness: pipeline produced an unverified surface for " + space.name());
    return *cert;
  } catch (const NoSolutionClass& e) {
    pipeline_failure = e.what();
  } catch (const SearchExhausted& e) {
    pipeline_failure = e.what();
  }

  if (auto cert = brute_search_growing(space, options.fallback_box)) return *cert;
  throw SearchExhausted("no witness for " + space.name() + ": " + pipeline_failure +
                        "; brute search exhausted box " + std::to_string(options.fallback_box));
}

}  // namespace hfk
