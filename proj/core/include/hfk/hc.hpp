#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hfk/int.hpp"
#include "hfk/seifert.hpp"
#include "hfk/witness.hpp"

namespace hfk {

/// Why an hc value or bound holds.
enum class HcReason {
  trivial_homology,      // H_1 = 0
  free_abelian,          // H_1 = Z^{2g-1} or Z^{2g}
  lens_witness,          // explicit genus-one witness in L(p, q)
  cyclic_torsion_bound,  // d(H_1) <= 2 hc <= 2 d(H_1)
  connsum_obstruction,   // p1 | p2 and neither +-q1 q2 is a square mod p1
  connsum_witness,       // genus-one surface found by search
  connsum_inconclusive,  // neither of the above
  linking_form_square,   // Z + Z/p with +-q a square mod p
  linking_form_nonsquare,
};

std::string to_string(HcReason reason);

/// Value of hc, or an interval [lo, hi] containing it.
struct HcResult {
  Int lo;
  Int hi;
  HcReason reason;
  std::optional<WitnessCertificate> lens_certificate;
  std::optional<ConnSumSurfaceParams> connsum_params;

  bool is_exact() const { return lo == hi; }
  /// "2" for exact values, "[1, 2]" for intervals.
  std::string render() const;
};

/// x^2 = a (mod m) is solvable. Inherits ModulusTooLarge from sqrt_mod.
bool qr_mod(const Int& a, const Int& m);

HcResult hc_trivial();
/// H_1 = Z^rank, rank >= 1: hc = ceil(rank / 2).
HcResult hc_free_abelian(const Int& rank);
/// Always 1, with the witness attached.
HcResult hc_lens(const LensSpace& space, const WitnessOptions& options = {});

/// Rational homology sphere with H_1 = Z/f1 + ... + Z/fs, f1 | f2 | ... and
/// cyclic 2-torsion. Returns [ceil(s/2), s]. Throws InvalidArgument when a
/// factor is < 2 or the chain does not divide, HypothesisViolated when two
/// or more factors are even.
HcResult hc_qhs_bound(const std::vector<Int>& invariant_factors);

/// hc of L(p1, q1) # L(p2, q2). The summands are ordered by (p, q) first,
/// so the result is symmetric. Returns 2 under the quadratic-residue
/// obstruction, 1 when a genus-one surface with parameters in
/// [-search_box, search_box]^7 has p1 p2 |det S| = 1, else [1, 2].
HcResult hc_connsum(const LensSpace& first, const LensSpace& second, long search_box = 2);

/// Search used by hc_connsum, exposed for testing: lexicographically first
/// (a, b, c, u1, u2, v1, v2) in the box whose Seifert matrix passes
/// is_homology_cobordism(S, p1 p2).
std::optional<ConnSumSurfaceParams> connsum_search(const LensSpace& first, const LensSpace& second, long box);

/// H_1 = Z + Z/p with linking form (q/p): 1 if q or -q is a square mod p,
/// else 2. Throws InvalidArgument unless p >= 2 and gcd(p, q) = 1.
HcResult hc_z_plus_zp(const Int& p, const Int& q);

/// sqrt(a) lies in the n-th cyclotomic field. a must be nonzero.
///
/// With s the squarefree part of a, every odd prime l | s must divide n, and
/// s divided by the product of l* = (-1)^((l-1)/2) l over those primes must
/// be 1 (v2(n) < 2), in {+-1} (v2(n) = 2) or in {+-1, +-2} (v2(n) > 2).
bool sqrt_in_cyclotomic(const Int& a, const Int& n);

/// All n in [1, n_max] for which both sqrt(n(n+4)) and sqrt(n(n-4)) lie in
/// Q(zeta_n). Throws InvalidArgument for n_max < 1.
std::vector<Int> cyclotomic_exception_scan(const Int& n_max);

}  // namespace hfk
