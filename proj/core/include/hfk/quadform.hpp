#pragma once

#include "hfk/int.hpp"

namespace hfk {

/// f(x, y) = a x^2 + b x y + c y^2
struct BinaryQuadraticForm {
  Int a;
  Int b;
  Int c;

  Int discriminant() const { return b * b - 4 * a * c; }
  Int operator()(const Int& x, const Int& y) const { return a * x * x + b * x * y + c * y * y; }

  friend bool operator==(const BinaryQuadraticForm&, const BinaryQuadraticForm&) = default;
};

inline Int discriminant(const BinaryQuadraticForm& f) { return f.discriminant(); }
inline Int evaluate(const BinaryQuadraticForm& f, const Int& x, const Int& y) { return f(x, y); }

struct FormRepresentation {
  BinaryQuadraticForm form;
  Int x;
  Int y;
};

/// Builds the form (n, z0, (z0^2 - disc) / (4n)), which has discriminant
/// `disc` and represents n primitively at (x, y) = (1, 0).
///
/// Requires z0^2 = disc (mod 4n), sign of n ignored; throws
/// CongruenceViolated otherwise and InvalidArgument for n = 0.
FormRepresentation form_from_sqrt(const Int& z0, const Int& n, const Int& disc);

}  // namespace hfk
