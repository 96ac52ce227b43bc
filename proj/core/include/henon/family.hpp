#ifndef HENON_FAMILY_HPP
#define HENON_FAMILY_HPP

#include <string>
#include <vector>

#include "henon/henon_map.hpp"
#include "henon/unipoly.hpp"

namespace henon {

/// One elementary factor whose coefficients are polynomials in the parameter t.
struct FamilyFactor {
  std::vector<UniPoly> poly;  ///< poly[k] is the coefficient of y^k
  UniPoly delta;
};

/// Raised when a family is specialized at a parameter where a fiber stops
/// being a Henon map.
class ExcludedParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Family of Henon compositions over the affine t-line with rational coefficients.
class HenonFamily {
 public:
  explicit HenonFamily(std::vector<FamilyFactor> factors);
  /// Constant family.
  static HenonFamily constant(const HenonMap& f);

  const std::vector<FamilyFactor>& factors() const { return factors_; }

  /// Polynomials in t whose zeros are excluded, with a description of each
  /// ("delta of factor 0", "leading coefficient of factor 1").
  const std::vector<std::pair<UniPoly, std::string>>& vanishing() const { return vanishing_; }
  /// Rational excluded parameters, ascending.
  std::vector<Rational> excluded_params() const;
  /// Empty when b is admissible, else a message naming the vanishing quantity.
  std::string exclusion_reason(const Rational& b) const;
  std::string exclusion_reason(Complex b, double tol = 1e-12) const;

  HenonMap specialize(const Rational& b) const;
  NumericHenon specialize(Complex b) const;

  /// Product of the deltas, exactly.
  UniPoly jacobian_map() const;

  std::string canonical_string() const;
  std::string hash() const;

 private:
  std::vector<FamilyFactor> factors_;
  std::vector<std::pair<UniPoly, std::string>> vanishing_;
};

HenonMap specialize(const HenonFamily& family, const Rational& b);
NumericHenon specialize(const HenonFamily& family, Complex b);
UniPoly jacobian_map(const HenonFamily& family);

enum class DissipativeVerdict { dissipative, conservative, expanding };

struct SampleVerdict {
  Complex parameter;
  double jacobian_modulus;
  DissipativeVerdict verdict;
};

struct DissipativityReport {
  std::vector<SampleVerdict> samples;
  /// True iff every sample is dissipative. A sampling statement, not a proof.
  bool dissipative_on_samples = false;
};

/// Compares |Jac(F)(b)| with 1 at each sample; |Jac| within tol of 1 counts as conservative.
DissipativityReport classify_dissipative(const HenonFamily& family, const std::vector<Complex>& samples,
                                         double tol = 1e-12);

std::string to_string(DissipativeVerdict v);

struct ComplexBox {
  double re_lo, re_hi, im_lo, im_hi;
};

struct LocusCluster {
  Complex centroid;
  int cells;
};

struct UnitLocusLevel {
  int resolution;
  int flagged_cells;
};

struct UnitLocusResult {
  /// Connected clusters (8-neighbour) of flagged cells at the base resolution.
  std::vector<LocusCluster> clusters;
  /// Flagged-cell counts at the base resolution and after each doubling.
  std::vector<UnitLocusLevel> levels;
  bool likely_discrete = true;
  bool empty() const { return clusters.empty(); }
};

/// Grid approximation of {|Jac F| = 1} and {|Jac G| = 1}: a cell is flagged when
/// both |Jac| - 1 change sign (or vanish) on its corners. The resolution is
/// doubled twice; growth of the flagged-cell count beyond 2x reports a likely
/// non-discrete intersection.
UnitLocusResult unit_locus_grid(const HenonFamily& f, const HenonFamily& g, const ComplexBox& box,
                                int resolution);

/// Iterates the fibered map (x, y, t) -> (f_t(x, y), t) evaluating the
/// t-polynomial coefficients at each step.
NumericPoint fibered_evaluate(const HenonFamily& family, const NumericPoint& q, Complex t);

}  // namespace henon

#endif  // HENON_FAMILY_HPP
