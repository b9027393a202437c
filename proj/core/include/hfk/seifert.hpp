#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hfk/int.hpp"
#include "hfk/witness.hpp"

namespace hfk {

/// Square rational matrix, row-major.
class RationalMatrix {
 public:
  explicit RationalMatrix(std::size_t n) : n_(n), entries_(n * n) {}
  RationalMatrix(std::size_t n, std::vector<Rational> entries);

  std::size_t size() const { return n_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

  RationalMatrix transposed() const;
  Rational determinant() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<Rational> entries_;
};

/// 2g x 2g Seifert matrix S of a genus-g surface, with S - S^T = J where J is
/// the block sum of g copies of [[0, -1], [1, 0]].
class SeifertMatrix {
 public:
  /// Throws InvalidArgument if the matrix is not 2g x 2g with g >= 1 or if
  /// S - S^T != J.
  explicit SeifertMatrix(RationalMatrix entries);

  unsigned genus() const { return static_cast<unsigned>(m_.size() / 2); }
  const RationalMatrix& matrix() const { return m_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  Rational determinant() const { return m_.determinant(); }

  friend bool operator==(const SeifertMatrix&, const SeifertMatrix&) = default;

 private:
  RationalMatrix m_;
};

/// Integer Laurent polynomial in t. Zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(const std::map<long, Int>& coefficients);

  /// Coefficient of t^e (zero if absent).
  Int coefficient(long e) const;
  void add_term(long exponent, const Int& coefficient);

  const std::map<long, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long min_exponent() const;
  long max_exponent() const;
  /// max_exponent - min_exponent; 0 for the zero polynomial.
  long breadth() const;
  /// Coefficient of the highest power; 0 for the zero polynomial.
  Int leading_coefficient() const;
  Int evaluate_at_one() const;
  /// p(t^-1)
  LaurentPoly mirrored() const;
  bool is_palindromic() const { return mirrored() == *this; }

  /// Ascending exponents: "t^-1 + 3 + t", "-t^-1 + 7 - t", "2t^-2 - 5", "0".
  std::string to_string() const;
  /// {"-1":1,"0":3,"1":1}; coefficients outside the signed 64-bit range are
  /// written as decimal strings.
  std::string to_json() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  std::map<long, Int> terms_;
};

/// Parameters of the genus-one surface in L(p1, q1) # L(p2, q2) whose bands
/// wind (u1, v1) times around the first surgery circle and (u2, v2) around
/// the second.
struct ConnSumSurfaceParams {
  Int a, b, c, u1, u2, v1, v2;

  friend bool operator==(const ConnSumSurfaceParams&, const ConnSumSurfaceParams&) = default;
};

/// [[a + (q/p) u^2,          c - (q/p) u v],
///  [c + 1 - (q/p) u v,      b + (q/p) v^2]]
SeifertMatrix seifert_matrix_lens(const LensSpace& space, const SurfaceParams& s);

/// As seifert_matrix_lens with one (q_i/p_i) correction per summand.
SeifertMatrix seifert_matrix_connsum(const LensSpace& first, const LensSpace& second, const ConnSumSurfaceParams& s);

/// |H_1(Y)| * |det S| == 1, exactly.
bool is_homology_cobordism(const SeifertMatrix& s, const Int& h1_order);

/// |H_1(Y)| det(t^{1/2} S - t^{-1/2} S^T), computed as
/// h1_order * t^-g * det(t S - S^T). Throws NonIntegralResult if a
/// coefficient is not an integer, InvalidArgument if h1_order < 1.
LaurentPoly alexander(const SeifertMatrix& s, const Int& h1_order);

/// Leading coefficient is +-1 and breadth equals 2g.
bool is_homologically_fibered(const LaurentPoly& poly, long genus);

}  // namespace hfk
