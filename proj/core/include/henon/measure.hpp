#ifndef HENON_MEASURE_HPP
#define HENON_MEASURE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "henon/arch_green.hpp"
#include "henon/periodic.hpp"

namespace henon {

/// Uniform measure on the saddle periodic points of period dividing n: a
/// sampling stand-in for the equilibrium measure.
struct MeasureSample {
  std::vector<NumericPoint> points;
  std::vector<double> weights;
  int period = 0;
  std::uint64_t seed = 0;
  /// Fewer than 4 points.
  bool low_quality = true;
  int attracting_excluded = 0;
  int other_excluded = 0;

  bool empty() const { return points.empty(); }
};

MeasureSample measure_from_periodic(const NumericHenon& f, int n, double tol, int n_starts, std::uint64_t seed,
                                    const NumericOptions& options = {});
MeasureSample measure_from_periodic(const HenonMap& f, int n, double tol, int n_starts, std::uint64_t seed,
                                    const NumericOptions& options = {});

/// Equal-weight sample from an explicit point list.
MeasureSample sample_from_points(std::vector<NumericPoint> points, int period = 0, std::uint64_t seed = 0);

struct SupportCheck {
  double max_green = 0.0;
  bool pass = true;
  bool vacuous = false;
};

/// max of G+ + G- over the sample; pass iff <= tol.
SupportCheck support_check(const GreenFunction& green, const MeasureSample& sample, double tol);

/// Square root of the energy distance between the two weighted clouds in C^2 = R^4:
///   sqrt(2 E|X - Y| - E|X - X'| - E|Y - Y'|).
/// The square root makes it a metric on distributions.
double measure_discrepancy(const MeasureSample& a, const MeasureSample& b);

struct MeasureComparison {
  double discrepancy = 0.0;
  bool below_threshold = false;
  /// Set only when the symbolic follow-up confirms f^N = g^M.
  std::optional<IteratePair> shared_iterate;
};

/// Discrepancy test followed, when it is small, by common_iterate_detect(f, g).
MeasureComparison compare_measures(const HenonMap& f, const HenonMap& g, const MeasureSample& a,
                                   const MeasureSample& b, double threshold, int iterate_bound = 4);

/// A disk in the parameter of a curve.
struct Disk {
  Complex center;
  double radius;
};

/// max over the disks of |circle average of h - h(center)| for
/// h = G+ - alpha G- pulled back along the curve.
double harmonicity_probe(const GreenFunction& green, double alpha, const PolyCurve& curve,
                         const std::vector<Disk>& disks, int quad_points = 256);

/// CSV "x_re,x_im,y_re,y_im,weight" with a header line.
std::string to_csv(const MeasureSample& s);
MeasureSample sample_from_csv(const std::string& text);

}  // namespace henon

#endif  // HENON_MEASURE_HPP
