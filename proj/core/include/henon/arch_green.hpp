#ifndef HENON_ARCH_GREEN_HPP
#define HENON_ARCH_GREEN_HPP

#include <functional>
#include <optional>
#include <vector>

#include "henon/henon_map.hpp"

namespace henon {

enum class Direction { plus, minus };

inline Direction flip(Direction d) { return d == Direction::plus ? Direction::minus : Direction::plus; }
const char* to_string(Direction d);

/// Value of G+ or G- at a point.
struct GreenValue {
  double value = 0.0;
  /// Rigorous radius of the truncation and tail error (floating-point rounding
  /// is covered by a relative allowance, not by interval arithmetic).
  double error = 0.0;
  /// False when the orbit stayed outside the escape region for max_iterates
  /// iterates; value is then 0 and means "bounded up to max_iterates".
  bool escaped = false;
  std::optional<int> escape_iterate;
};

/// Escape region V+ = {|y| >= max(|x|, radius)} of the forward map.
/// Every factor maps V+ into itself with |p(y) - delta x| >= max(2|y|, |c_d| |y|^d / 2),
/// and on V+ |log||f(q)|| - lambda log||q||| <= tail_constant.
struct EscapeData {
  double radius = 2.0;
  double tail_constant = 0.0;
};

struct GreenOptions {
  int max_iterates = 2048;
};

EscapeData escape_data(const NumericHenon& f);
EscapeData escape_data(const HenonMap& f);

/// Green functions of one map in both directions, with the escape data of f
/// and of the swapped inverse precomputed. Immutable once built.
class GreenFunction {
 public:
  explicit GreenFunction(const NumericHenon& f, GreenOptions options = {});
  explicit GreenFunction(const HenonMap& f, GreenOptions options = {});

  GreenValue operator()(Direction dir, const NumericPoint& q) const;
  GreenValue plus(const NumericPoint& q) const { return (*this)(Direction::plus, q); }
  GreenValue minus(const NumericPoint& q) const { return (*this)(Direction::minus, q); }
  GreenValue total(const NumericPoint& q) const;

  /// Green value along an orbit produced by an external step function (used by
  /// the fibered evaluation over a family). The step function must agree with
  /// the map this object was built from.
  GreenValue with_stepper(Direction dir, const NumericPoint& q,
                          const std::function<NumericPoint(const NumericPoint&)>& step) const;

  const EscapeData& escape(Direction dir) const { return dir == Direction::plus ? fwd_.escape : bwd_.escape; }
  const NumericHenon& map() const { return map_; }

 private:
  struct Side {
    NumericHenon map;
    EscapeData escape;
    double log_offset = 0.0;    // sum_i log|c_{d,i}| prod_{j>i} d_j
    double switch_log = 69.0;   // log|y| at which the closed-form tail takes over
    double overflow_log = 690.0;
    explicit Side(NumericHenon m);
    GreenValue evaluate(const NumericPoint& q, int max_iterates,
                        const std::function<NumericPoint(const NumericPoint&)>* step) const;
  };

  NumericHenon map_;
  Side fwd_;
  Side bwd_;
  GreenOptions options_;
};

/// tol is the requested error radius; the returned error is the achieved one.
GreenValue green(const NumericHenon& f, Direction dir, const NumericPoint& q, double tol,
                 const GreenOptions& options = {});
GreenValue green(const HenonMap& f, Direction dir, const NumericPoint& q, double tol,
                 const GreenOptions& options = {});
/// G+ of the inverse is G- of the map.
GreenValue green(const HenonInverse& g, Direction dir, const NumericPoint& q, double tol,
                 const GreenOptions& options = {});
GreenValue green_total(const HenonMap& f, const NumericPoint& q, double tol, const GreenOptions& options = {});
GreenValue green_total(const NumericHenon& f, const NumericPoint& q, double tol,
                       const GreenOptions& options = {});

/// Curve t -> (x(t), y(t)) with complex polynomial coordinates (lowest degree first).
struct PolyCurve {
  std::vector<Complex> x;
  std::vector<Complex> y;
  NumericPoint operator()(Complex t) const;
};

struct CurveMassOptions {
  int radii = 8;
  int quad_points = 512;
  double max_relative_spread = 0.1;
};

struct CurveMass {
  /// Least-squares slope of the circle average of G+ against log r.
  double mass = 0.0;
  /// (max - min) / |mean| of the slopes between consecutive radii.
  double relative_spread = 0.0;
  /// False when the spread exceeds the threshold (growth of G+ along the curve is
  /// irregular, e.g. the curve meets infinity near the backward indeterminacy point).
  bool regular = true;
  std::vector<double> radii;
  std::vector<double> averages;
};

CurveMass curve_green_mass(const GreenFunction& green, const PolyCurve& curve, double r_lo, double r_hi,
                           const CurveMassOptions& options = {});
CurveMass curve_green_mass(const HenonMap& f, const PolyCurve& curve, double r_lo, double r_hi,
                           const CurveMassOptions& options = {});

/// Trapezoid average of h over the circle |t - center| = radius.
double circle_average(const std::function<double(Complex)>& h, Complex center, double radius, int points);

struct GreenGridRow {
  double re, im, g_plus, g_minus, error;
};

/// Evaluates G+ and G- on the complex line {x = x0}, y = re + i im over a grid
/// with nre x nim nodes; rows are ordered by im, then re.
std::vector<GreenGridRow> green_grid(const GreenFunction& green, Complex x0, double re_lo, double re_hi,
                                     double im_lo, double im_hi, int nre, int nim);

}  // namespace henon

#endif  // HENON_ARCH_GREEN_HPP
