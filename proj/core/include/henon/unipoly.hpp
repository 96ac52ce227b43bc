#ifndef HENON_UNIPOLY_HPP
#define HENON_UNIPOLY_HPP

#include <complex>
#include <string>
#include <vector>

#include "henon/rational.hpp"

namespace henon {

/// Univariate polynomial c_0 + c_1 t + ... + c_d t^d over Q.
/// Trailing zero coefficients are dropped on construction, so the leading
/// coefficient of a nonzero polynomial is never zero.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, int degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of t^k; zero beyond the degree.
  Rational coeff(int k) const;
  const Rational& leading() const { return coeffs_.back(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational operator()(const Rational& t) const;
  std::complex<double> operator()(std::complex<double> t) const;

  UniPoly derivative() const;
  std::vector<std::complex<double>> to_complex() const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rational& s, const UniPoly& a);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division over Q; divisor must be nonzero.
  static void divmod(const UniPoly& a, const UniPoly& b, UniPoly& quot, UniPoly& rem);
  /// Monic gcd (zero if both are zero).
  static UniPoly gcd(UniPoly a, UniPoly b);

  std::string to_string(const std::string& var = "t") const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

}  // namespace henon

#endif  // HENON_UNIPOLY_HPP
