#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "hfk/int.hpp"
#include "hfk/primes.hpp"

namespace hfk {

/// L(p, q): p >= 2 and gcd(p, q) = 1. q is kept exactly as given; L(p, q)
/// and L(p, q + p) are homeomorphic but produce different certificate
/// arithmetic, so reduction is opt-in via normalized().
class LensSpace {
 public:
  /// Throws InvalidArgument for p < 2 or gcd(p, q) != 1.
  LensSpace(Int p, Int q);

  const Int& p() const { return p_; }
  const Int& q() const { return q_; }

  /// Same space with q reduced into [1, p - 1].
  LensSpace normalized() const;

  std::string name() const { return "L(" + p_.get_str() + "," + q_.get_str() + ")"; }

  friend bool operator==(const LensSpace&, const LensSpace&) = default;

 private:
  Int p_;
  Int q_;
};

/// Parameters of the genus-one surface Sigma_{a,b,c,u,v}: a, b, c count the
/// twists in the two bands and their clasp, (u, v) how the bands wind
/// around the surgery circle.
struct SurfaceParams {
  Int a, b, c, u, v;

  friend bool operator==(const SurfaceParams&, const SurfaceParams&) = default;
};

/// Solution (r0, s0) of p y - q x = 1 with 1 <= r0 <= p - 1. The general
/// solution is (r_k, s_k) = (r0 + k p, s0 + k q).
struct BezoutPair {
  Int r0;
  Int s0;

  Int r(const Int& k, const LensSpace& space) const { return r0 + k * space.p(); }
  Int s(const Int& k, const LensSpace& space) const { return s0 + k * space.q(); }
};

enum class WitnessMethod {
  constructed,  // prime witness + quadratic form pipeline
  brute_force,  // exhaustive box search
  supplied,     // parameters given by the caller and verified
};

std::string_view to_string(WitnessMethod m);
/// Throws InvalidArgument on unknown names.
WitnessMethod parse_witness_method(std::string_view name);

/// A surface Sigma_{a,b,c,u,v} in L(p, q) whose complement is a homology
/// cobordism, with the data of the defining identity:
///
///   b u^2 + (2c + 1) u v + a v^2 = epsilon r_k
///   c^2 + c - a b                = epsilon s_k
///
/// equivalently |p (c^2 + c - ab) - q (b u^2 + (2c+1) u v + a v^2)| = 1.
struct WitnessCertificate {
  LensSpace space;
  SurfaceParams params;
  int epsilon = 1;
  Int k;
  Int r_k;
  Int s_k;
  WitnessMethod method = WitnessMethod::supplied;
  Int identity_value;
};

/// The quantity whose absolute value must be 1:
/// p (c^2 + c - ab) - q (b u^2 + (2c + 1) u v + a v^2).
Int signed_identity(const LensSpace& space, const SurfaceParams& s);

BezoutPair solve_bezout(const LensSpace& space);

/// Certificate iff |signed_identity| = 1; epsilon and k are recovered
/// relative to the canonical Bezout pair.
std::optional<WitnessCertificate> verify_witness(const LensSpace& space, const SurfaceParams& s,
                                                 WitnessMethod method = WitnessMethod::supplied);

/// Re-checks both defining equations of an existing certificate from
/// scratch. Used for read-back of serialized certificates.
bool certificate_is_sound(const WitnessCertificate& cert);

/// Lexicographically smallest (a, b, c, u, v) in [-box, box]^5 that passes
/// verify_witness. Throws InvalidArgument for box < 0.
std::optional<WitnessCertificate> brute_search(const LensSpace& space, long box);

/// brute_search with box = 0, 1, ..., max_box; first hit wins.
std::optional<WitnessCertificate> brute_search_growing(const LensSpace& space, long max_box);

struct WitnessOptions {
  Int prime_bound = default_prime_bound();
  long fallback_box = 6;
};

/// Explicit genus-one witness for L(p, q).
///
/// With (r0, s0) from solve_bezout, a prime witness (epsilon, l, x0) for
/// m = r0, n = p fixes k = (l - r0) / p. Then z0 = 1 + 2 x0 squares to
/// 1 + 4 epsilon s_k modulo 4 epsilon r_k, and form_from_sqrt gives
/// (a', b', c') representing epsilon r_k at (1, 0). The surface is
/// (a, b, c, u, v) = (c', a', (b' - 1) / 2, 1, 0).
///
/// The class p = 5, r0 = 2 (mod 5) has no prime witness and goes straight
/// to brute_search_growing, as does an exhausted prime search. Every result
/// passes verify_witness before it is returned. Throws SearchExhausted when
/// both routes fail.
WitnessCertificate construct_witness(const LensSpace& space, const WitnessOptions& options = {});

}  // namespace hfk
