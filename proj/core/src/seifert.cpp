#include "hfk/seifert.hpp"

#include <sstream>

#include "hfk/errors.hpp"

namespace hfk {

namespace {

// Polynomial in t with rational coefficients, ascending powers, no trailing
// zeros.
struct RatPoly {
  std::vector<Rational> c;

  RatPoly trimmed() && {
    while (!c.empty() && c.back() == 0) c.pop_back();
    return std::move(*this);
  }

  friend RatPoly operator+(const RatPoly& x, const RatPoly& y) {
    RatPoly r{std::vector<Rational>(std::max(x.c.size(), y.c.size()))};
    for (std::size_t i = 0; i < x.c.size(); ++i) r.c[i] += x.c[i];
    for (std::size_t i = 0; i < y.c.size(); ++i) r.c[i] += y.c[i];
    return std::move(r).trimmed();
  }
  friend RatPoly operator-(const RatPoly& x) {
    RatPoly r = x;
    for (auto& v : r.c) v = -v;
    return r;
  }
  friend RatPoly operator-(const RatPoly& x, const RatPoly& y) { return x + (-y); }
  friend RatPoly operator*(const RatPoly& x, const RatPoly& y) {
    if (x.c.empty() || y.c.empty()) return {};
    RatPoly r{std::vector<Rational>(x.c.size() + y.c.size() - 1)};
    for (std::size_t i = 0; i < x.c.size(); ++i) {
      for (std::size_t j = 0; j < y.c.size(); ++j) r.c[i + j] += x.c[i] * y.c[j];
    }
    return std::move(r).trimmed();
  }
};

// Cofactor expansion along the first row. Exact; matrices here are at most
// 4x4 in practice, so the n! cost is irrelevant.
template <class T>
T laplace_determinant(const std::vector<std::vector<T>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  if (n == 2) return T(m[0][0] * m[1][1]) - T(m[0][1] * m[1][0]);
  T det{};
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<std::vector<T>> minor(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (j != col) minor[i - 1].push_back(m[i][j]);
      }
    }
    T term = m[0][col] * laplace_determinant(minor);
    det = (col % 2 == 0) ? T(det + term) : T(det - term);
  }
  return det;
}

}  // namespace

RationalMatrix::RationalMatrix(std::size_t n, std::vector<Rational> entries) : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != n_ * n_) throw InvalidArgument("RationalMatrix: expected n*n entries");
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Rational RationalMatrix::determinant() const {
  std::vector<std::vector<Rational>> rows(n_, std::vector<Rational>(n_));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) rows[i][j] = (*this)(i, j);
  }
  return laplace_determinant(rows);
}

SeifertMatrix::SeifertMatrix(RationalMatrix entries) : m_(std::move(entries)) {
  const std::size_t n = m_.size();
  if (n == 0 || n % 2 != 0) throw InvalidArgument("Seifert matrix must be 2g x 2g with g >= 1");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      int expected = 0;
      if (i / 2 == j / 2 && i != j) expected = (i < j) ? -1 : 1;
      if (m_(i, j) - m_(j, i) != expected) {
        throw InvalidArgument("Seifert matrix violates S - S^T = J at (" + std::to_string(i) + ", " +
                              std::to_string(j) + ")");
      }
    }
  }
}

LaurentPoly::LaurentPoly(const std::map<long, Int>& coefficients) {
  for (const auto& [e, c] : coefficients) add_term(e, c);
}

Int LaurentPoly::coefficient(long e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly::add_term(long exponent, const Int& coefficient) {
  if (coefficient == 0) return;
  Int& slot = terms_[exponent];
  slot += coefficient;
  if (slot == 0) terms_.erase(exponent);
}

long LaurentPoly::min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
long LaurentPoly::max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
long LaurentPoly::breadth() const { return max_exponent() - min_exponent(); }
Int LaurentPoly::leading_coefficient() const { return terms_.empty() ? Int(0) : terms_.rbegin()->second; }

Int LaurentPoly::evaluate_at_one() const {
  Int sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

LaurentPoly LaurentPoly::mirrored() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
  return r;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    const Int magnitude = abs(c);
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << magnitude.get_str();
      continue;
    }
    if (magnitude != 1) out << magnitude.get_str();
    out << 't';
    if (e != 1) out << '^' << e;
  }
  return out.str();
}

std::string LaurentPoly::to_json() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out << ',';
    first = false;
    out << '"' << e << "\":";
    if (fits_i64(c)) {
      out << c.get_str();
    } else {
      out << '"' << c.get_str() << '"';
    }
  }
  out << '}';
  return out.str();
}

SeifertMatrix seifert_matrix_lens(const LensSpace& space, const SurfaceParams& s) {
  const Rational ratio(space.q(), space.p());
  RationalMatrix m(2);
  m(0, 0) = s.a + ratio * s.u * s.u;
  m(0, 1) = s.c - ratio * s.u * s.v;
  m(1, 0) = s.c + 1 - ratio * s.u * s.v;
  m(1, 1) = s.b + ratio * s.v * s.v;
  for (std::size_t i = 0; i < 4; ++i) m(i / 2, i % 2).canonicalize();
  return SeifertMatrix(std::move(m));
}

SeifertMatrix seifert_matrix_connsum(const LensSpace& first, const LensSpace& second, const ConnSumSurfaceParams& s) {
  const Rational r1(first.q(), first.p());
  const Rational r2(second.q(), second.p());
  const Rational cross = r1 * s.u1 * s.v1 + r2 * s.u2 * s.v2;
  RationalMatrix m(2);
  m(0, 0) = s.a + r1 * s.u1 * s.u1 + r2 * s.u2 * s.u2;
  m(0, 1) = s.c - cross;
  m(1, 0) = s.c + 1 - cross;
  m(1, 1) = s.b + r1 * s.v1 * s.v1 + r2 * s.v2 * s.v2;
  for (std::size_t i = 0; i < 4; ++i) m(i / 2, i % 2).canonicalize();
  return SeifertMatrix(std::move(m));
}

bool is_homology_cobordism(const SeifertMatrix& s, const Int& h1_order) {
  return abs(Rational(s.determinant() * h1_order)) == 1;
}

LaurentPoly alexander(const SeifertMatrix& s, const Int& h1_order) {
  if (h1_order < 1) throw InvalidArgument("alexander: |H_1| must be positive");
  const std::size_t n = s.matrix().size();
  // entry (i, j) of t S - S^T is s_ij t - s_ji
  std::vector<std::vector<RatPoly>> m(n, std::vector<RatPoly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = RatPoly{{Rational(-s(j, i)), s(i, j)}}.trimmed();
    }
  }
  const RatPoly det = laplace_determinant(m);
  const long g = static_cast<long>(s.genus());
  LaurentPoly result;
  for (std::size_t i = 0; i < det.c.size(); ++i) {
    Rational coeff = det.c[i] * h1_order;
    if (coeff.get_den() != 1) {
      throw NonIntegralResult("alexander: coefficient " + coeff.get_str() + " of t^" +
                              std::to_string(static_cast<long>(i) - g) + " is not an integer");
    }
    result.add_term(static_cast<long>(i) - g, coeff.get_num());
  }
  return result;
}

bool is_homologically_fibered(const LaurentPoly& poly, long genus) {
  if (poly.is_zero()) return false;
  const Int lead = poly.leading_coefficient();
  return (lead == 1 || lead == -1) && poly.breadth() == 2 * genus;
}

}  // namespace hfk
