// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "henon/arch_green.hpp"
#include "henon/heights.hpp"
#include "henon/measure.hpp"
#include "henon/nonarch_green.hpp"
#include "henon/parallel.hpp"
#include "henon/periodic.hpp"
#include "henon/report.hpp"
#include "henon/sweep.hpp"
#include "support.hpp"

using namespace henon;
using namespace henon::testing;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& name, double time_limit, const std::function<Outcome()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool in_time = time_limit <= 0 || secs <= time_limit;
  bool pass = o.pass && in_time;
  if (!pass) ++failures;
  std::printf("C%-2d %s  %s  (%s; %.2fs%s)\n", id, pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(), secs,
              in_time ? "" : " over time limit");
  std::fflush(stdout);
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// Durand-Kerner roots of a polynomial with rational coefficients.
std::vector<std::complex<long double>> complex_roots(const UniPoly& p) {
  const int d = p.degree();
  std::vector<std::complex<long double>> c(static_cast<size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) c[static_cast<size_t>(k)] = static_cast<long double>(to_double(p.coeff(k) / p.leading()));
  std::vector<std::complex<long double>> z(static_cast<size_t>(d));
  for (int k = 0; k < d; ++k) z[static_cast<size_t>(k)] = std::pow(std::complex<long double>(0.4L, 0.9L), k);
  for (int it = 0; it < 2000; ++it)
    for (int i = 0; i < d; ++i) {
      std::complex<long double> num = 0;
      for (int k = d; k >= 0; --k) num = num * z[static_cast<size_t>(i)] + c[static_cast<size_t>(k)];
      std::complex<long double> den = 1;
      for (int j = 0; j < d; ++j)
        if (j != i) den *= z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)];
      z[static_cast<size_t>(i)] -= num / den;
    }
  return z;
}

std::vector<Rational> box_rationals(long bound) {
  std::set<Rational> s;
  for (long b = 1; b <= bound; ++b)
    for (long a = -bound; a <= bound; ++a) s.insert(frac(a, b));
  return {s.begin(), s.end()};
}

std::string determinism_snapshot() {
  report::Json doc;
  doc["sweep"] = report::sweep(
      sweep_common_periodic(intro_f(), intro_g(), parse_params("-3:3:1/4"), 2, 1e-6, 2024));
  doc["numeric"] = report::numeric_periodic(periodic_numeric(dissipative_map(), 5, 1e-10, 200, 2024));
  doc["rational"] = report::rational_periodic(rational_periodic_points(half_map(), 4));
  doc["measure"] = report::measure_summary(measure_from_periodic(dissipative_map(), 6, 1e-10, 400, 2024));
  doc["height"] = report::height(canonical_height(conservative_map(), ExactPoint{0, frac(1, 3)}, 1e-10));
  doc["common"] = report::common(common_periodic(intro_f().specialize(frac(-5, 2)),
                                                 intro_g().specialize(frac(-5, 2)), 2));
  return doc.dump();
}

}  // namespace

int main() {
  auto suite_start = std::chrono::steady_clock::now();

  criterion(1, "functional equation G+(f q) = 2 G+(q), G-(f^-1 q) = 2 G-(q)", 5.0, [] {
    std::mt19937_64 rng(20240601);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    double worst = 0;
    for (const HenonMap& f : {half_map(), dissipative_map()}) {
      GreenFunction G(f);
      HenonInverse inv = inverse(f);
      const double lambda = static_cast<double>(f.dynamical_degree());
      for (int i = 0; i < 100; ++i) {
        NumericPoint q{{u(rng), 0}, {u(rng), 0}};
        double gp = G.plus(q).value, gm = G.minus(q).value;
        worst = std::max(worst, std::abs(G.plus(evaluate(f, q)).value - lambda * gp) / std::max(1.0, gp));
        worst = std::max(worst, std::abs(G.minus(evaluate(inv, q)).value - lambda * gm) / std::max(1.0, gm));
      }
    }
    return Outcome{worst <= 1e-6, "worst relative defect " + fmt(worst) + ", 2 maps x 100 points"};
  });

  criterion(2, "fixed points of (y, y^2+1/2-x/2) have height 0", 1.0, [] {
    double worst = 0;
    bool exact_zero = true;
    for (const ExactPoint& q : {ExactPoint{1, 1}, ExactPoint{frac(1, 2), frac(1, 2)}}) {
      HeightValue h = canonical_height(half_map(), q, 1e-10);
      worst = std::max(worst, h.total());
      exact_zero = exact_zero && h.finite_places_exact;
      for (const auto& c : h.per_place)
        if (!c.place.archimedean())
          exact_zero = exact_zero && c.exact && c.plus_coefficient == 0 && c.minus_coefficient == 0;
    }
    return Outcome{worst <= 1e-8 && exact_zero, "max height " + fmt(worst) + (exact_zero ? ", finite places exactly 0" : ", nonzero finite place")};
  });

  criterion(3, "h+(f q) = 2 h+(q)", 0, [] {
    HenonMap f = half_map();
    double worst = 0;
    for (const ExactPoint& q : {ExactPoint{0, 2}, ExactPoint{1, 3}, ExactPoint{0, frac(1, 3)}}) {
      double a = canonical_height(f, q, 1e-10).h_plus, b = canonical_height(f, evaluate(f, q), 1e-10).h_plus;
      worst = std::max(worst, std::abs(b - 2 * a));
    }
    return Outcome{worst <= 1e-6, "max |h+(f q) - 2 h+(q)| = " + fmt(worst)};
  });

  criterion(4, "Northcott box: {h <= 1e-4} equals certified periodic set", 120.0, [] {
    std::vector<Rational> vals = box_rationals(20);
    const size_t m = vals.size();
    std::set<Rational> in_box(vals.begin(), vals.end());
    bool ok = true;
    std::string detail = std::to_string(m * m) + " points per map";
    for (const auto& [name, f] : {std::pair{"(y,y^2-1-3x/10)", dissipative_map()}, std::pair{"(y,y^2+1/2-x/2)", half_map()}}) {
      std::vector<char> small(m * m, 0);
      parallel_for(m * m, 0, [&](size_t k) {
        small[k] = canonical_height(f, ExactPoint{vals[k / m], vals[k % m]}, 1e-6).total() <= 1e-4;
      });
      std::set<ExactPoint> by_height, by_pipeline;
      for (size_t k = 0; k < m * m; ++k)
        if (small[k]) by_height.insert(ExactPoint{vals[k / m], vals[k % m]});
      for (const auto& p : rational_periodic_points(f, 12).points)
        if (in_box.count(p.point.x) && in_box.count(p.point.y)) by_pipeline.insert(p.point);
      ok = ok && by_height == by_pipeline;
      detail += std::string("; ") + name + ": " + std::to_string(by_height.size()) + " small, " +
                std::to_string(by_pipeline.size()) + " certified periodic (period <= 12)";
    }
    return Outcome{ok, detail};
  });

  criterion(5, "mod-p cycle lengths sum to p^2; fixed points mod 5", 0, [] {
    std::vector<HenonMap> maps{half_map(), dissipative_map(), load_map(data_path("maps/composite.json"))};
    bool ok = true;
    int checked = 0;
    for (const auto& f : maps)
      for (unsigned long p : {5ul, 7ul, 11ul}) {
        ModPCycleSet s = periodic_modp(f, p);
        if (!s.good_reduction) continue;
        ++checked;
        ok = ok && s.total_length() == static_cast<long>(p * p);
      }
    std::set<std::pair<unsigned, unsigned>> fixed;
    for (const auto& c : periodic_modp(half_map(), 5).cycles)
      if (c.length() == 1) fixed.insert({c.points[0].x, c.points[0].y});
    bool fp = fixed == std::set<std::pair<unsigned, unsigned>>{{1, 1}, {3, 3}};
    return Outcome{ok && fp && checked >= 8, std::to_string(checked) + " (map, prime) pairs with good reduction" +
                                                 (fp ? ", Fix mod 5 = {(1,1),(3,3)}" : ", wrong fixed points mod 5")};
  });

  criterion(6, "resultant counts 2, 4; Newton recovers all roots", 0, [] {
    HenonMap f = quad("-7/5", "3/10", "1/7");
    bool ok = true;
    double worst = 0;
    std::string counts;
    for (int n = 1; n <= 2; ++n) {
      ResultantFixedPoints res = fixed_points_exact_resultant(f, n);
      counts += (n > 1 ? "," : "") + std::to_string(res.count);
      ok = ok && res.count == (1 << n);
      std::vector<std::complex<long double>> roots = complex_roots(res.eliminant);
      NumericPeriodicReport num = periodic_numeric(f, n, 1e-12, 64, 6);
      std::vector<Complex> ys;
      for (const auto& c : num.cycles)
        for (const auto& z : c.points) ys.push_back(z.y);
      ok = ok && ys.size() == roots.size();
      for (const auto& r : roots) {
        double best = 1e300;
        for (const auto& y : ys) best = std::min(best, std::abs(std::complex<double>(r) - y));
        worst = std::max(worst, best);
      }
    }
    return Outcome{ok && worst <= 1e-8, "counts " + counts + ", max root distance " + fmt(worst)};
  });

  criterion(7, "intro sweep b in k/4, |k| <= 12, max_period 2", 120.0, [] {
    SweepReport r = sweep_common_periodic(intro_f(), intro_g(), parse_params("-3:3:1/4"), 2, 1e-6, 7);
    bool ok = r.d_observed == 1 && r.entries.size() == 25;
    std::vector<std::string> shared;
    for (const auto& e : r.entries) {
      if (e.shared_iterate) shared.push_back(to_string(e.parameter));
      if (e.parameter == frac(-1, 2)) {
        ok = ok && e.status == SweepStatus::excluded;
      } else if (e.parameter == frac(-5, 2)) {
        ok = ok && e.count == 1 && e.points.size() == 1 && e.points[0].common.exact &&
             *e.points[0].common.exact == ExactPoint{-1, -1};
      } else if (e.parameter != 0) {
        ok = ok && e.status == SweepStatus::ok && e.count == 0;
      }
    }
    ok = ok && shared == std::vector<std::string>{"0"};
    return Outcome{ok, "D_observed " + std::to_string(r.d_observed) + ", shared at b=" +
                           (shared.empty() ? std::string("none") : shared.front()) +
                           ", b=-1/2 excluded (g degenerates)"};
  });

  criterion(8, "unit locus: intro pair empty, (t, t) non-discrete", 0, [] {
    ComplexBox box{-2, 2, -2, 2};
    UnitLocusResult a = unit_locus_grid(intro_f(), intro_g(), box, 64);
    UnitLocusResult b = unit_locus_grid(load_family(data_path("families/jac_t.json")),
                                        load_family(data_path("families/jac_t.json")), box, 64);
    return Outcome{a.empty() && !b.likely_discrete,
                   "intro clusters " + std::to_string(a.clusters.size()) + ", (t,t) " +
                       (b.likely_discrete ? "discrete" : "likely non-discrete")};
  });

  criterion(9, "curve mass: vertical 1, horizontal 1/2", 0, [] {
    HenonMap f = half_map();
    PolyCurve vertical{{{0.3, 0}}, {{0, 0}, {1, 0}}};
    PolyCurve horizontal{{{0, 0}, {1, 0}}, {{0.3, 0}}};
    double v = curve_green_mass(f, vertical, 1e3, 1e6).mass, h = curve_green_mass(f, horizontal, 1e3, 1e6).mass;
    return Outcome{std::abs(v - 1.0) <= 0.05 && std::abs(h - 0.5) <= 0.05, "vertical " + fmt(v) + ", horizontal " + fmt(h)};
  });

  criterion(10, "support containment on a saddle sample", 0, [] {
    HenonMap f = dissipative_map();
    MeasureSample s = measure_from_periodic(f, 6, 1e-10, 400, 10);
    SupportCheck c = support_check(GreenFunction(f), s, 1e-4);
    return Outcome{c.pass && s.points.size() >= 32,
                   std::to_string(s.points.size()) + " saddle points of period | 6, max G " + fmt(c.max_green)};
  });

  criterion(11, "measure rigidity heuristic f vs f^2 vs g", 0, [] {
    HenonMap f1 = intro_f().specialize(Rational(1)), g1 = intro_g().specialize(Rational(1)), f2 = f1.power(2);
    MeasureSample a = measure_from_periodic(f1, 6, 1e-10, 600, 11), b = measure_from_periodic(f2, 3, 1e-10, 600, 11);
    MeasureSample c = measure_from_periodic(g1, 6, 1e-10, 600, 11);
    double same = measure_discrepancy(a, b), other = measure_discrepancy(a, c);
    MeasureComparison yes = compare_measures(f1, f2, a, b, 1e-2), no = compare_measures(f1, g1, a, c, 1e-2);
    bool ok = same <= 1e-2 && other >= 5 * same && yes.shared_iterate.has_value() && !no.shared_iterate;
    return Outcome{ok, "d(f,f^2) " + fmt(same) + ", d(f,g) " + fmt(other) +
                           (yes.shared_iterate ? ", f^2 = (f)^2 confirmed symbolically" : ", no symbolic confirmation")};
  });

  criterion(12, "3-adic Green exactness and good reduction elsewhere", 0, [] {
    HenonMap f = conservative_map();
    ExactPoint q{0, frac(1, 3)};
    PadicGreenValue g = padic_green(f, Direction::plus, q, 3);
    bool ok = g.exact && g.coefficient == 1;
    std::vector<PlaceId> places = relevant_places(f, q);
    PadicOptions brute;
    brute.use_shortcut = false;
    int extra = 0;
    for (unsigned long p = 2; extra < 20; ++p) {
      if (!is_prime(Integer(p)) || std::find(places.begin(), places.end(), PlaceId::finite(p)) != places.end()) continue;
      ++extra;
      for (Direction d : {Direction::plus, Direction::minus}) {
        PadicGreenValue v = padic_green(f, d, q, p, brute);
        ok = ok && v.exact && v.coefficient == 0;
      }
    }
    return Outcome{ok, "G+_3 = " + to_string(g.coefficient) + " log 3" + (g.exact ? " (exact)" : " (inexact)") +
                           ", 20 primes outside relevant places give exactly 0"};
  });

  criterion(13, "determinism: identical seeds give byte-identical JSON", 0, [] {
    std::string a = determinism_snapshot(), b = determinism_snapshot();
    return Outcome{a == b, std::to_string(a.size()) + " bytes compared"};
  });

  double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - suite_start).count();
  bool in_time = total <= 600.0;
  if (!in_time) ++failures;
  std::printf("suite %s  total runtime %.1fs (limit 600s); %d failing\n", in_time ? "PASS" : "FAIL", total, failures);
  return failures == 0 ? 0 : 1;
}
