#include "henon/measure.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "henon/symbolic.hpp"

namespace henon {

MeasureSample measure_from_periodic(const NumericHenon& f, int n, double tol, int n_starts, std::uint64_t seed,
                                    const NumericOptions& options) {
  NumericPeriodicReport rep = periodic_numeric(f, n, tol, n_starts, seed, options);
  MeasureSample s;
  s.period = n;
  s.seed = seed;
  for (const auto& c : rep.cycles) {
    if (c.kind == CycleKind::saddle) {
      s.points.insert(s.points.end(), c.points.begin(), c.points.end());
    } else if (c.kind == CycleKind::attracting) {
      s.attracting_excluded += c.period;
    } else {
      s.other_excluded += c.period;
    }
  }
  s.weights.assign(s.points.size(), s.points.empty() ? 0.0 : 1.0 / static_cast<double>(s.points.size()));
  s.low_quality = s.points.size() < 4;
  return s;
}

MeasureSample measure_from_periodic(const HenonMap& f, int n, double tol, int n_starts, std::uint64_t seed,
                                    const NumericOptions& options) {
  return measure_from_periodic(f.numeric(), n, tol, n_starts, seed, options);
}

MeasureSample sample_from_points(std::vector<NumericPoint> points, int period, std::uint64_t seed) {
  MeasureSample s;
  s.points = std::move(points);
  s.period = period;
  s.seed = seed;
  s.weights.assign(s.points.size(), s.points.empty() ? 0.0 : 1.0 / static_cast<double>(s.points.size()));
  s.low_quality = s.points.size() < 4;
  return s;
}

SupportCheck support_check(const GreenFunction& green, const MeasureSample& sample, double tol) {
  SupportCheck out;
  out.vacuous = sample.empty();
  for (const auto& z : sample.points) {
    GreenValue g = green.total(z);
    out.max_green = std::max(out.max_green, g.value);
  }
  out.pass = out.max_green <= tol;
  return out;
}

namespace {

double dist4(const NumericPoint& a, const NumericPoint& b) {
  const double d[4] = {a.x.real() - b.x.real(), a.x.imag() - b.x.imag(), a.y.real() - b.y.real(),
                       a.y.imag() - b.y.imag()};
  return std::sqrt(d[0] * d[0] + d[1] * d[1] + d[2] * d[2] + d[3] * d[3]);
}

double mean_distance(const MeasureSample& a, const MeasureSample& b) {
  double acc = 0.0;
  for (size_t i = 0; i < a.points.size(); ++i) {
    double row = 0.0;
    for (size_t j = 0; j < b.points.size(); ++j) row += b.weights[j] * dist4(a.points[i], b.points[j]);
    acc += a.weights[i] * row;
  }
  return acc;
}

}  // namespace

double measure_discrepancy(const MeasureSample& first, const MeasureSample& second) {
  if (first.empty() || second.empty()) throw std::invalid_argument("measure_discrepancy: empty sample");
  // Fixed argument order keeps the floating-point sums, and so the result, symmetric.
  auto key = [](const MeasureSample& s) {
    std::vector<double> k{static_cast<double>(s.points.size())};
    for (size_t i = 0; i < s.points.size(); ++i)
      k.insert(k.end(), {s.points[i].x.real(), s.points[i].x.imag(), s.points[i].y.real(), s.points[i].y.imag(), s.weights[i]});
    return k;
  };
  const bool swap = key(second) < key(first);
  const MeasureSample& a = swap ? second : first;
  const MeasureSample& b = swap ? first : second;
  const double e = 2 * mean_distance(a, b) - mean_distance(a, a) - mean_distance(b, b);
  return std::sqrt(std::max(e, 0.0));
}

MeasureComparison compare_measures(const HenonMap& f, const HenonMap& g, const MeasureSample& a,
                                   const MeasureSample& b, double threshold, int iterate_bound) {
  MeasureComparison out;
  out.discrepancy = measure_discrepancy(a, b);
  out.below_threshold = out.discrepancy <= threshold;
  if (out.below_threshold) out.shared_iterate = common_iterate_detect(f, g, iterate_bound, iterate_bound);
  return out;
}

double harmonicity_probe(const GreenFunction& green, double alpha, const PolyCurve& curve,
                         const std::vector<Disk>& disks, int quad_points) {
  if (!(alpha > 0)) throw std::invalid_argument("harmonicity_probe: alpha must be positive");
  auto h = [&](Complex t) {
    const NumericPoint z = curve(t);
    return green.plus(z).value - alpha * green.minus(z).value;
  };
  double worst = 0.0;
  for (const auto& d : disks) {
    const double defect = std::abs(circle_average(h, d.center, d.radius, quad_points) - h(d.center));
    worst = std::max(worst, defect);
  }
  return worst;
}

std::string to_csv(const MeasureSample& s) {
  std::ostringstream out;
  out << "x_re,x_im,y_re,y_im,weight\n";
  char buf[160];
  for (size_t i = 0; i < s.points.size(); ++i) {
    const auto& z = s.points[i];
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g\n", z.x.real(), z.x.imag(), z.y.real(),
                  z.y.imag(), s.weights[i]);
    out << buf;
  }
  return out.str();
}

MeasureSample sample_from_csv(const std::string& text) {
  MeasureSample s;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#' || line.rfind("x_re", 0) == 0) continue;
    double v[5];
    if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf,%lf", &v[0], &v[1], &v[2], &v[3], &v[4]) != 5)
      throw std::invalid_argument("line " + std::to_string(lineno) + ": expected 5 comma-separated numbers");
    s.points.push_back({Complex(v[0], v[1]), Complex(v[2], v[3])});
    s.weights.push_back(v[4]);
  }
  double total = 0.0;
  for (double w : s.weights) total += w;
  if (!s.weights.empty() && std::abs(total - 1.0) > 1e-9)
    for (double& w : s.weights) w /= total;
  s.low_quality = s.points.size() < 4;
  return s;
}

}  // namespace henon
