#include "hfk/quadform.hpp"

#include "hfk/errors.hpp"

namespace hfk {

FormRepresentation form_from_sqrt(const Int& z0, const Int& n, const Int& disc) {
  if (n == 0) throw InvalidArgument("form_from_sqrt: represented value must be nonzero");
  const Int four_n = 4 * n;
  const Int gap = z0 * z0 - disc;
  if (!divides(four_n, gap)) {
    throw CongruenceViolated(z0.get_str() + "^2 != " + disc.get_str() + " (mod " + four_n.get_str() + ")");
  }
  Int c;
  mpz_divexact(c.get_mpz_t(), gap.get_mpz_t(), four_n.get_mpz_t());
  return {{n, z0, c}, 1, 0};
}

}  // namespace hfk
