#include "henon/report.hpp"

#include <cmath>

namespace henon::report {

namespace {

// JSON has no infinity; overflowed values are written as strings.
Json number(double v) {
  if (std::isfinite(v)) return v;
  return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
}

Json pair(const std::optional<IteratePair>& p) {
  if (!p) return nullptr;
  return Json{{"N", p->n}, {"M", p->m}};
}

}  // namespace

Json complex(Complex z) { return Json::array({number(z.real()), number(z.imag())}); }

Json point(const NumericPoint& q) { return Json{{"x", complex(q.x)}, {"y", complex(q.y)}}; }

Json point(const ExactPoint& q) { return Json{{"x", to_string(q.x)}, {"y", to_string(q.y)}}; }

Json green(const GreenValue& g) {
  Json j{{"value", number(g.value)}, {"error", number(g.error)}, {"escaped", g.escaped}};
  j["escape_iterate"] = g.escape_iterate ? Json(*g.escape_iterate) : Json(nullptr);
  return j;
}

Json height(const HeightValue& h) {
  Json places = Json::array();
  for (const auto& c : h.per_place) {
    Json e{{"place", c.place.to_string()},
           {"plus", number(c.plus)},
           {"minus", number(c.minus)},
           {"error", number(c.error)},
           {"exact", c.exact}};
    if (!c.place.archimedean()) {
      e["plus_log_p_multiple"] = to_string(c.plus_coefficient);
      e["minus_log_p_multiple"] = to_string(c.minus_coefficient);
    }
    places.push_back(std::move(e));
  }
  return Json{{"h_plus", number(h.h_plus)},
              {"h_minus", number(h.h_minus)},
              {"total", number(h.total())},
              {"error", number(h.error)},
              {"finite_places_exact", h.finite_places_exact},
              {"per_place", std::move(places)}};
}

Json modp(const ModPCycleSet& s, int max_period) {
  Json hist = Json::object();
  auto h = s.histogram();
  for (size_t len = 1; len < h.size(); ++len)
    if (h[len]) hist[std::to_string(len)] = h[len];
  Json cycles = Json::array();
  for (const ModPCycle* c : s.with_max_length(max_period)) {
    Json pts = Json::array();
    for (const auto& p : c->points) pts.push_back(Json::array({p.x, p.y}));
    cycles.push_back(Json{{"length", c->length()}, {"points", std::move(pts)}});
  }
  return Json{{"prime", s.prime},
              {"good_reduction", s.good_reduction},
              {"note", s.note},
              {"total_length", s.total_length()},
              {"cycle_length_histogram", std::move(hist)},
              {"cycles", std::move(cycles)}};
}

Json rational_periodic(const RationalPeriodicReport& r) {
  Json pts = Json::array();
  for (const auto& p : r.points) {
    Json j = point(p.point);
    j["period"] = p.period;
    j["primes"] = p.primes;
    pts.push_back(std::move(j));
  }
  return Json{{"points", std::move(pts)},
              {"primes_used", r.primes_used},
              {"primes_skipped", r.primes_skipped},
              {"singular_cycles", r.singular},
              {"not_reconstructed", r.not_reconstructed}};
}

Json cycle(const Cycle& c) {
  Json pts = Json::array();
  for (const auto& p : c.points) pts.push_back(point(p));
  Json j{{"period", c.period},
         {"kind", to_string(c.kind)},
         {"multipliers", Json::array({number(c.multiplier_small), number(c.multiplier_large)})},
         {"residual", number(c.residual)},
         {"points", std::move(pts)}};
  if (c.exact) j["exact"] = point(*c.exact);
  return j;
}

Json numeric_periodic(const NumericPeriodicReport& r) {
  Json cycles = Json::array();
  for (const auto& c : r.cycles) cycles.push_back(cycle(c));
  return Json{{"seed", r.seed},
              {"starts", r.starts},
              {"expected_points", r.expected},
              {"coverage", number(r.coverage)},
              {"cycles", std::move(cycles)}};
}

Json resultant(const ResultantFixedPoints& r) {
  Json pts = Json::array();
  for (const auto& q : r.rational) pts.push_back(point(q));
  return Json{{"n", r.n}, {"count", r.count}, {"eliminant", r.eliminant.to_string("y")}, {"rational", std::move(pts)}};
}

Json common(const CommonPeriodicReport& r) {
  Json pts = Json::array();
  for (const auto& c : r.points) {
    Json j{{"point", point(c.point)}, {"period_f", c.period_f}, {"period_g", c.period_g}, {"method", c.method}};
    if (c.exact) j["exact"] = point(*c.exact);
    pts.push_back(std::move(j));
  }
  return Json{{"shared_iterate", pair(r.shared_iterate)}, {"count", r.points.size()}, {"seed", r.seed},
              {"points", std::move(pts)}};
}

Json sweep(const SweepReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json pts = Json::array();
    for (const auto& p : e.points) {
      Json j{{"point", point(p.common.point)},
             {"method", p.common.method},
             {"period_f", p.common.period_f},
             {"period_g", p.common.period_g},
             {"pair_height", number(p.pair_height)},
             {"pair_error", number(p.pair_error)},
             {"archimedean_only", p.archimedean_only},
             {"small", p.small}};
      if (p.common.exact) j["exact"] = point(*p.common.exact);
      pts.push_back(std::move(j));
    }
    entries.push_back(Json{{"b", to_string(e.parameter)},
                           {"status", to_string(e.status)},
                           {"message", e.message},
                           {"shared_iterate", pair(e.shared_iterate)},
                           {"count", e.count},
                           {"max_pair_height", number(e.max_pair_height)},
                           {"points", std::move(pts)}});
  }
  Json exceptional = Json::array();
  for (const auto& b : r.exceptional) exceptional.push_back(to_string(b));
  return Json{{"D_observed", r.d_observed},
              {"D_observed_note", "empirical lower bound for the uniform bound D over the sampled parameters"},
              {"max_period", r.max_period},
              {"eps", number(r.eps)},
              {"seed", r.seed},
              {"exceptional", std::move(exceptional)},
              {"entries", std::move(entries)}};
}

Json unit_locus(const UnitLocusResult& r) {
  Json clusters = Json::array();
  for (const auto& c : r.clusters) clusters.push_back(Json{{"centroid", complex(c.centroid)}, {"cells", c.cells}});
  Json levels = Json::array();
  for (const auto& l : r.levels) levels.push_back(Json{{"resolution", l.resolution}, {"flagged_cells", l.flagged_cells}});
  return Json{{"empty", r.empty()},
              {"likely_discrete", r.likely_discrete},
              {"clusters", std::move(clusters)},
              {"levels", std::move(levels)}};
}

Json curve_mass(const CurveMass& m) {
  Json rows = Json::array();
  for (size_t i = 0; i < m.radii.size(); ++i) rows.push_back(Json::array({number(m.radii[i]), number(m.averages[i])}));
  return Json{{"mass", number(m.mass)},
              {"relative_spread", number(m.relative_spread)},
              {"regular", m.regular},
              {"radius_average", std::move(rows)}};
}

Json dissipativity(const DissipativityReport& r) {
  Json samples = Json::array();
  for (const auto& s : r.samples)
    samples.push_back(Json{{"parameter", complex(s.parameter)},
                           {"jacobian_modulus", number(s.jacobian_modulus)},
                           {"verdict", to_string(s.verdict)}});
  return Json{{"dissipative_on_samples", r.dissipative_on_samples}, {"samples", std::move(samples)}};
}

Json measure_summary(const MeasureSample& s) {
  return Json{{"period", s.period},
              {"seed", s.seed},
              {"points", s.points.size()},
              {"low_quality", s.low_quality},
              {"attracting_excluded", s.attracting_excluded},
              {"other_excluded", s.other_excluded}};
}

Json comparison(const MeasureComparison& c) {
  return Json{{"discrepancy", number(c.discrepancy)},
              {"below_threshold", c.below_threshold},
              {"shared_iterate", pair(c.shared_iterate)}};
}

}  // namespace henon::report
