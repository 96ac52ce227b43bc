#ifndef HENON_SYMBOLIC_HPP
#define HENON_SYMBOLIC_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "henon/henon_map.hpp"

namespace henon {

/// Raised when an exact computation would exceed a configured size cap.
class ComputationRefused : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sparse bivariate polynomial over Q; keys are exponent pairs (i, j) of x^i y^j.
/// Zero coefficients are never stored, so equality of the maps is equality of
/// polynomials.
class BiPoly {
 public:
  using Monomial = std::pair<int, int>;

  BiPoly() = default;
  static BiPoly x();
  static BiPoly y();
  static BiPoly constant(const Rational& c);

  int total_degree() const;
  int degree_in_x() const;
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  Rational coeff(int i, int j) const;
  bool is_zero() const { return terms_.empty(); }

  Rational operator()(const Rational& x, const Rational& y) const;

  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const Rational& s, const BiPoly& a);
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

  /// Substitutes y = value, giving a polynomial in x.
  UniPoly specialize_y(const Rational& value) const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

/// A polynomial self-map of the plane written as coordinate polynomials.
struct PolyMap {
  BiPoly x;
  BiPoly y;
  friend bool operator==(const PolyMap&, const PolyMap&) = default;
  int total_degree() const;
};

struct ExpansionLimits {
  /// Largest total degree an expansion may reach before refusing.
  int max_total_degree = 512;
};

/// Expands f into coordinate polynomials. Throws ComputationRefused if the
/// expanded degree would exceed the cap.
PolyMap expand(const HenonMap& f, const ExpansionLimits& limits = {});
/// (h o ... ) : applies the factors of f after an existing expansion.
PolyMap apply_after(const HenonMap& f, const PolyMap& inner, const ExpansionLimits& limits = {});

/// True iff f and g are the same polynomial map of the plane.
bool equal_symbolic(const HenonMap& f, const HenonMap& g, const ExpansionLimits& limits = {});

struct IteratePair {
  int n;
  int m;
  friend bool operator==(const IteratePair&, const IteratePair&) = default;
};

/// Smallest lexicographic (N, M) in [1, n_max] x [1, m_max] with f^N = g^M, or
/// nullopt. Pairs with lambda(f)^N != lambda(g)^M or Jac(f)^N != Jac(g)^M are
/// pruned before expansion. Expansions are capped at total degree
/// 2 * lambda(f)^n_max (and by limits.max_total_degree).
std::optional<IteratePair> common_iterate_detect(const HenonMap& f, const HenonMap& g, int n_max,
                                                 int m_max, const ExpansionLimits& limits = {});

}  // namespace henon

#endif  // HENON_SYMBOLIC_HPP
