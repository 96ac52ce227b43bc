#ifndef HENON_HENON_MAP_HPP
#define HENON_HENON_MAP_HPP

#include <algorithm>
#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "henon/rational.hpp"
#include "henon/unipoly.hpp"

namespace henon {

using Complex = std::complex<double>;

/// Magnitude beyond which a numeric orbit is declared escaped.
inline constexpr double kEscapeMagnitude = 1e300;

/// The elementary factor (x, y) -> (y, p(y) - delta * x), deg p >= 2, delta != 0.
class ElementaryHenon {
 public:
  ElementaryHenon(UniPoly poly, Rational delta);

  const UniPoly& poly() const { return poly_; }
  const Rational& delta() const { return delta_; }
  int degree() const { return poly_.degree(); }

  friend bool operator==(const ElementaryHenon&, const ElementaryHenon&) = default;

 private:
  UniPoly poly_;
  Rational delta_;
};

struct ExactPoint {
  Rational x;
  Rational y;
  friend bool operator==(const ExactPoint&, const ExactPoint&) = default;
};

/// Lexicographic order on (x, y).
bool operator<(const ExactPoint& a, const ExactPoint& b);

struct NumericPoint {
  Complex x;
  Complex y;

  static NumericPoint infinity();
  /// True for the escape sentinel (or anything past kEscapeMagnitude).
  bool escaped() const;
  /// Max norm max(|x|, |y|).
  double norm() const { return std::max(std::abs(x), std::abs(y)); }
};

using Point2 = std::variant<ExactPoint, NumericPoint>;

NumericPoint to_numeric(const ExactPoint& q);
ExactPoint swap(const ExactPoint& q);
NumericPoint swap(const NumericPoint& q);
double distance(const NumericPoint& a, const NumericPoint& b);

using Matrix2 = std::array<std::array<Complex, 2>, 2>;

/// One elementary factor with complex coefficients; degree >= 2 and delta != 0.
struct NumericFactor {
  std::vector<Complex> poly;
  Complex delta;
  int degree() const { return static_cast<int>(poly.size()) - 1; }
};

/// Floating-point image of a Henon composition. Built from an exact map or from
/// a family specialized at a complex parameter.
class NumericHenon {
 public:
  explicit NumericHenon(std::vector<NumericFactor> factors);

  const std::vector<NumericFactor>& factors() const { return factors_; }
  long dynamical_degree() const { return lambda_; }
  Complex jacobian() const { return jac_; }

  /// Normal form of the inverse conjugated by the coordinate swap
  /// s(x, y) = (y, x):  inverse = s o result o s.
  NumericHenon swapped_inverse() const;
  NumericHenon power(int n) const;

 private:
  std::vector<NumericFactor> factors_;
  long lambda_ = 1;
  Complex jac_ = 1.0;
};

/// A composition of elementary factors, applied in list order (factors[0] first).
/// Its extension to P^2 has indeterminacy points [0:1:0] (forward) and
/// [1:0:0] (backward), so it is regular by construction.
class HenonMap {
 public:
  explicit HenonMap(std::vector<ElementaryHenon> factors);
  static HenonMap single(UniPoly poly, Rational delta);

  const std::vector<ElementaryHenon>& factors() const { return factors_; }
  long dynamical_degree() const { return lambda_; }
  const Rational& jacobian() const { return jac_; }

  /// n-fold composition (n >= 1) by factor-list concatenation.
  HenonMap power(int n) const;
  NumericHenon numeric() const;
  /// Stable textual form used for hashing and cache keys.
  std::string canonical_string() const;
  /// 64-bit FNV-1a of canonical_string(), as 16 hex digits.
  std::string hash() const;

  /// Identical factor lists (stronger than equal_symbolic).
  friend bool operator==(const HenonMap& a, const HenonMap& b) { return a.factors_ == b.factors_; }

 private:
  std::vector<ElementaryHenon> factors_;
  long lambda_ = 1;
  Rational jac_ = 1;
};

/// outer o inner.
HenonMap compose(const HenonMap& outer, const HenonMap& inner);

/// Inverse of a Henon composition: elementary inverses (x, y) -> ((p(x) - y)/delta, x)
/// applied in reversed factor order.
class HenonInverse {
 public:
  explicit HenonInverse(HenonMap forward) : forward_(std::move(forward)) {}

  const HenonMap& forward() const { return forward_; }
  Rational jacobian() const { return Rational(1) / forward_.jacobian(); }
  long dynamical_degree() const { return forward_.dynamical_degree(); }
  /// s o inverse o s written as a HenonMap (s swaps coordinates).
  HenonMap swapped_normal_form() const;

 private:
  HenonMap forward_;
};

HenonInverse inverse(const HenonMap& f);
inline const HenonMap& inverse(const HenonInverse& g) { return g.forward(); }

ExactPoint evaluate(const ElementaryHenon& h, const ExactPoint& q);
ExactPoint evaluate(const HenonMap& f, const ExactPoint& q);
NumericPoint evaluate(const HenonMap& f, const NumericPoint& q);
NumericPoint evaluate(const NumericHenon& f, const NumericPoint& q);
Point2 evaluate(const HenonMap& f, const Point2& q);
ExactPoint evaluate(const HenonInverse& g, const ExactPoint& q);
NumericPoint evaluate(const HenonInverse& g, const NumericPoint& q);
Point2 evaluate(const HenonInverse& g, const Point2& q);

ExactPoint iterate(const HenonMap& f, ExactPoint q, int n);
NumericPoint iterate(const NumericHenon& f, NumericPoint q, int n);

/// Differential of f at q (chain rule over the factors); the image f(q) is
/// written to image when non-null.
Matrix2 differential(const NumericHenon& f, const NumericPoint& q, NumericPoint* image = nullptr);

Rational jacobian(const HenonMap& f);
long dynamical_degree(const HenonMap& f);

std::string to_string(const ExactPoint& q);

}  // namespace henon

#endif  // HENON_HENON_MAP_HPP
