#include "henon/arch_green.hpp"

#include <cfloat>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace henon {

const char* to_string(Direction d) { return d == Direction::plus ? "plus" : "minus"; }

namespace {

struct FactorBounds {
  double lead;                 // |c_d|
  std::vector<double> lower;   // |c_k|, k < d
  double delta;                // |delta|
  int degree;

  explicit FactorBounds(const NumericFactor& h)
      : lead(std::abs(h.poly.back())), delta(std::abs(h.delta)), degree(h.degree()) {
    for (int k = 0; k < degree; ++k) lower.push_back(std::abs(h.poly[static_cast<size_t>(k)]));
  }

  // S(r) / r^d with S(r) = sum_{k<d} |c_k| r^k + |delta| r.
  double scaled_tail(double r) const {
    double acc = 0.0;
    for (int k = 0; k < degree; ++k) acc += lower[static_cast<size_t>(k)] * std::pow(r, k - degree);
    return acc + delta * std::pow(r, 1 - degree);
  }

  bool admissible(double r) const {
    const double t = scaled_tail(r);
    return lead - t - 2.0 * std::pow(r, 1 - degree) >= 0.0 && 0.5 * lead >= t;
  }
};

std::vector<FactorBounds> bounds_of(const NumericHenon& f) {
  std::vector<FactorBounds> out;
  for (const auto& h : f.factors()) out.emplace_back(h);
  return out;
}

// weights[i] = prod_{j > i} d_j
std::vector<double> tail_weights(const std::vector<FactorBounds>& b) {
  std::vector<double> w(b.size(), 1.0);
  for (size_t i = b.size(); i-- > 1;) w[i - 1] = w[i] * b[i].degree;
  return w;
}

}  // namespace

EscapeData escape_data(const NumericHenon& f) {
  const auto bounds = bounds_of(f);
  double radius = 2.0;
  for (const auto& b : bounds) {
    double r = 2.0;
    while (!b.admissible(r)) {
      r *= 2.0;
      if (r > 1e150) throw std::domain_error("escape_data: no escape radius below 1e150");
    }
    radius = std::max(radius, r);
  }
  const auto w = tail_weights(bounds);
  double c = 0.0;
  for (size_t i = 0; i < bounds.size(); ++i) {
    const double s = bounds[i].scaled_tail(radius) / bounds[i].lead;
    c += w[i] * (std::abs(std::log(bounds[i].lead)) - std::log1p(-s));
  }
  return {radius, std::max(c, DBL_EPSILON)};
}

EscapeData escape_data(const HenonMap& f) { return escape_data(f.numeric()); }

GreenFunction::Side::Side(NumericHenon m) : map(std::move(m)), escape(escape_data(map)) {
  const auto bounds = bounds_of(map);
  const auto w = tail_weights(bounds);
  for (size_t i = 0; i < bounds.size(); ++i) log_offset += w[i] * std::log(bounds[i].lead);
  const double lambda = static_cast<double>(map.dynamical_degree());
  switch_log = std::min(69.0, (690.0 - std::abs(log_offset)) / lambda - 1.0);
  overflow_log = 690.0;
}

GreenValue GreenFunction::Side::evaluate(const NumericPoint& q, int max_iterates,
                                         const std::function<NumericPoint(const NumericPoint&)>* step) const {
  const double lambda = static_cast<double>(map.dynamical_degree());
  const double radius = escape.radius;
  NumericPoint z = q;
  std::optional<int> entry;
  for (int n = 0;; ++n) {
    if (z.escaped()) {
      const double inf = std::numeric_limits<double>::infinity();
      return {inf, inf, true, entry.value_or(n)};
    }
    const double ax = std::abs(z.x), ay = std::abs(z.y);
    if (ay >= ax && ay >= radius) {
      if (!entry) entry = n;
      const double log_y = std::log(ay);
      if (log_y >= switch_log) {
        const auto bounds = bounds_of(map);
        const auto w = tail_weights(bounds);
        double eps_now = 0.0;
        for (size_t i = 0; i < bounds.size(); ++i)
          eps_now += w[i] * -std::log1p(-bounds[i].scaled_tail(ay) / bounds[i].lead);
        const double scale = std::pow(lambda, -n);
        const double core = log_y + log_offset / (lambda - 1.0);
        const double rounding = scale * (std::abs(log_y) + std::abs(log_offset) / (lambda - 1.0)) * (n + 4) * 4.0 *
                                DBL_EPSILON;
        return {scale * core, scale * eps_now / (lambda - 1.0) + rounding, true, entry};
      }
    }
    if (n >= max_iterates) return {0.0, 0.0, false, std::nullopt};
    z = step ? (*step)(z) : henon::evaluate(map, z);
  }
}

GreenFunction::GreenFunction(const NumericHenon& f, GreenOptions options)
    : map_(f), fwd_(f), bwd_(f.swapped_inverse()), options_(options) {}

GreenFunction::GreenFunction(const HenonMap& f, GreenOptions options) : GreenFunction(f.numeric(), options) {}

GreenValue GreenFunction::operator()(Direction dir, const NumericPoint& q) const {
  if (dir == Direction::plus) return fwd_.evaluate(q, options_.max_iterates, nullptr);
  return bwd_.evaluate(swap(q), options_.max_iterates, nullptr);
}

GreenValue GreenFunction::with_stepper(Direction dir, const NumericPoint& q,
                                       const std::function<NumericPoint(const NumericPoint&)>& step) const {
  if (dir == Direction::plus) return fwd_.evaluate(q, options_.max_iterates, &step);
  // The backward side iterates swapped coordinates.
  std::function<NumericPoint(const NumericPoint&)> swapped = [&](const NumericPoint& z) {
    return swap(step(swap(z)));
  };
  return bwd_.evaluate(swap(q), options_.max_iterates, &swapped);
}

GreenValue GreenFunction::total(const NumericPoint& q) const {
  GreenValue p = plus(q), m = minus(q);
  GreenValue out;
  out.value = p.value + m.value;
  out.error = p.error + m.error;
  out.escaped = p.escaped || m.escaped;
  if (p.escape_iterate && m.escape_iterate) out.escape_iterate = std::min(*p.escape_iterate, *m.escape_iterate);
  else out.escape_iterate = p.escape_iterate ? p.escape_iterate : m.escape_iterate;
  return out;
}

GreenValue green(const NumericHenon& f, Direction dir, const NumericPoint& q, double tol,
                 const GreenOptions& options) {
  if (!(tol > 0)) throw std::invalid_argument("green: tol must be positive");
  return GreenFunction(f, options)(dir, q);
}

GreenValue green(const HenonMap& f, Direction dir, const NumericPoint& q, double tol, const GreenOptions& options) {
  return green(f.numeric(), dir, q, tol, options);
}

GreenValue green(const HenonInverse& g, Direction dir, const NumericPoint& q, double tol,
                 const GreenOptions& options) {
  return green(g.forward(), flip(dir), q, tol, options);
}

GreenValue green_total(const NumericHenon& f, const NumericPoint& q, double tol, const GreenOptions& options) {
  if (!(tol > 0)) throw std::invalid_argument("green_total: tol must be positive");
  return GreenFunction(f, options).total(q);
}

GreenValue green_total(const HenonMap& f, const NumericPoint& q, double tol, const GreenOptions& options) {
  return green_total(f.numeric(), q, tol, options);
}

NumericPoint PolyCurve::operator()(Complex t) const {
  auto h = [t](const std::vector<Complex>& c) {
    Complex acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
    return acc;
  };
  return {h(x), h(y)};
}

double circle_average(const std::function<double(Complex)>& h, Complex center, double radius, int points) {
  double acc = 0.0;
  for (int k = 0; k < points; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / points;
    acc += h(center + std::polar(radius, theta));
  }
  return acc / points;
}

CurveMass curve_green_mass(const GreenFunction& green, const PolyCurve& curve, double r_lo, double r_hi,
                           const CurveMassOptions& options) {
  if (!(r_hi > r_lo) || !(r_lo > 0)) throw std::invalid_argument("curve_green_mass: need 0 < r_lo < r_hi");
  if (options.radii < 2) throw std::invalid_argument("curve_green_mass: need at least two radii");
  CurveMass out;
  const int m = options.radii;
  std::vector<double> logs;
  for (int j = 0; j < m; ++j) {
    const double lr = std::log(r_lo) + (std::log(r_hi) - std::log(r_lo)) * j / (m - 1);
    const double r = std::exp(lr);
    const double avg = circle_average([&](Complex t) { return green.plus(curve(t)).value; }, 0.0, r,
                                      options.quad_points);
    logs.push_back(lr);
    out.radii.push_back(r);
    out.averages.push_back(avg);
  }
  double mx = 0, my = 0;
  for (int j = 0; j < m; ++j) {
    mx += logs[static_cast<size_t>(j)];
    my += out.averages[static_cast<size_t>(j)];
  }
  mx /= m;
  my /= m;
  double sxy = 0, sxx = 0;
  for (int j = 0; j < m; ++j) {
    const double dx = logs[static_cast<size_t>(j)] - mx;
    sxy += dx * (out.averages[static_cast<size_t>(j)] - my);
    sxx += dx * dx;
  }
  out.mass = sxy / sxx;
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (int j = 0; j + 1 < m; ++j) {
    const double s = (out.averages[static_cast<size_t>(j + 1)] - out.averages[static_cast<size_t>(j)]) /
                     (logs[static_cast<size_t>(j + 1)] - logs[static_cast<size_t>(j)]);
    lo = std::min(lo, s);
    hi = std::max(hi, s);
  }
  out.relative_spread = std::abs(out.mass) > 0 ? (hi - lo) / std::abs(out.mass) : std::numeric_limits<double>::infinity();
  out.regular = out.relative_spread <= options.max_relative_spread;
  return out;
}

CurveMass curve_green_mass(const HenonMap& f, const PolyCurve& curve, double r_lo, double r_hi,
                           const CurveMassOptions& options) {
  return curve_green_mass(GreenFunction(f), curve, r_lo, r_hi, options);
}

std::vector<GreenGridRow> green_grid(const GreenFunction& green, Complex x0, double re_lo, double re_hi,
                                     double im_lo, double im_hi, int nre, int nim) {
  if (nre < 1 || nim < 1) throw std::invalid_argument("green_grid: need at least one node per axis");
  std::vector<GreenGridRow> rows;
  rows.reserve(static_cast<size_t>(nre) * nim);
  for (int j = 0; j < nim; ++j) {
    const double im = nim == 1 ? im_lo : im_lo + (im_hi - im_lo) * j / (nim - 1);
    for (int i = 0; i < nre; ++i) {
      const double re = nre == 1 ? re_lo : re_lo + (re_hi - re_lo) * i / (nre - 1);
      NumericPoint q{x0, Complex(re, im)};
      GreenValue p = green.plus(q), m = green.minus(q);
      rows.push_back({re, im, p.value, m.value, p.error + m.error});
    }
  }
  return rows;
}

}  // namespace henon
