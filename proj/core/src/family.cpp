#include "henon/family.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>

#include "henon/exact_roots.hpp"

namespace henon {

namespace {

int family_degree(const FamilyFactor& f) {
  int d = static_cast<int>(f.poly.size()) - 1;
  while (d >= 0 && f.poly[static_cast<size_t>(d)].is_zero()) --d;
  return d;
}

Complex eval_complex(const UniPoly& p, Complex t) { return p(t); }

}  // namespace

HenonFamily::HenonFamily(std::vector<FamilyFactor> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("Henon family needs at least one factor");
  for (size_t i = 0; i < factors_.size(); ++i) {
    auto& f = factors_[i];
    int d = family_degree(f);
    if (d < 2) throw std::invalid_argument("family factor " + std::to_string(i) + " has degree < 2 in y");
    f.poly.resize(static_cast<size_t>(d) + 1);
    if (f.delta.is_zero()) throw std::invalid_argument("family factor " + std::to_string(i) + " has delta = 0");
    vanishing_.emplace_back(f.delta, "delta of factor " + std::to_string(i) + " (" + f.delta.to_string() + ")");
    const UniPoly& lead = f.poly.back();
    if (lead.degree() >= 1)
      vanishing_.emplace_back(lead, "leading coefficient of factor " + std::to_string(i) + " (" +
                                        lead.to_string() + ")");
  }
}

HenonFamily HenonFamily::constant(const HenonMap& f) {
  std::vector<FamilyFactor> out;
  for (const auto& h : f.factors()) {
    FamilyFactor ff;
    for (const auto& c : h.poly().coeffs()) ff.poly.push_back(UniPoly::constant(c));
    ff.delta = UniPoly::constant(h.delta());
    out.push_back(std::move(ff));
  }
  return HenonFamily(std::move(out));
}

std::vector<Rational> HenonFamily::excluded_params() const {
  std::vector<Rational> out;
  for (const auto& [poly, what] : vanishing_) {
    if (poly.degree() < 1) continue;
    auto roots = rational_roots(poly);
    out.insert(out.end(), roots.begin(), roots.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string HenonFamily::exclusion_reason(const Rational& b) const {
  for (const auto& [poly, what] : vanishing_)
    if (poly(b) == 0) return what + " vanishes at t = " + to_string(b);
  return {};
}

std::string HenonFamily::exclusion_reason(Complex b, double tol) const {
  for (const auto& [poly, what] : vanishing_) {
    double scale = 0.0;
    for (const auto& c : poly.coeffs()) scale = std::max(scale, std::abs(c.get_d()));
    if (std::abs(eval_complex(poly, b)) <= tol * std::max(scale, 1.0) * std::max(1.0, std::pow(std::abs(b), poly.degree())))
      return what + " vanishes numerically at the given parameter";
  }
  return {};
}

HenonMap HenonFamily::specialize(const Rational& b) const {
  if (auto why = exclusion_reason(b); !why.empty()) throw ExcludedParameter(why);
  std::vector<ElementaryHenon> out;
  for (const auto& f : factors_) {
    std::vector<Rational> coeffs;
    for (const auto& c : f.poly) coeffs.push_back(c(b));
    out.emplace_back(UniPoly(std::move(coeffs)), f.delta(b));
  }
  return HenonMap(std::move(out));
}

NumericHenon HenonFamily::specialize(Complex b) const {
  if (auto why = exclusion_reason(b); !why.empty()) throw ExcludedParameter(why);
  std::vector<NumericFactor> out;
  for (const auto& f : factors_) {
    NumericFactor nf;
    for (const auto& c : f.poly) nf.poly.push_back(eval_complex(c, b));
    nf.delta = eval_complex(f.delta, b);
    out.push_back(std::move(nf));
  }
  return NumericHenon(std::move(out));
}

UniPoly HenonFamily::jacobian_map() const {
  UniPoly acc = UniPoly::constant(1);
  for (const auto& f : factors_) acc = acc * f.delta;
  return acc;
}

std::string HenonFamily::canonical_string() const {
  std::string s = "family:";
  for (const auto& f : factors_) {
    s += "[";
    for (size_t k = 0; k < f.poly.size(); ++k) {
      s += k ? "," : "";
      s += "{";
      for (int j = 0; j <= f.poly[k].degree(); ++j) s += (j ? "," : "") + to_string(f.poly[k].coeff(j));
      s += "}";
    }
    s += ";{";
    for (int j = 0; j <= f.delta.degree(); ++j) s += (j ? "," : "") + to_string(f.delta.coeff(j));
    s += "}]";
  }
  return s;
}

std::string HenonFamily::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : canonical_string()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

HenonMap specialize(const HenonFamily& family, const Rational& b) { return family.specialize(b); }
NumericHenon specialize(const HenonFamily& family, Complex b) { return family.specialize(b); }
UniPoly jacobian_map(const HenonFamily& family) { return family.jacobian_map(); }

DissipativityReport classify_dissipative(const HenonFamily& family, const std::vector<Complex>& samples,
                                         double tol) {
  DissipativityReport report;
  const UniPoly jac = family.jacobian_map();
  report.dissipative_on_samples = !samples.empty();
  for (Complex b : samples) {
    double m = std::abs(jac(b));
    DissipativeVerdict v = std::abs(m - 1.0) <= tol ? DissipativeVerdict::conservative
                           : m < 1.0               ? DissipativeVerdict::dissipative
                                                   : DissipativeVerdict::expanding;
    if (v != DissipativeVerdict::dissipative) report.dissipative_on_samples = false;
    report.samples.push_back({b, m, v});
  }
  return report;
}

std::string to_string(DissipativeVerdict v) {
  switch (v) {
    case DissipativeVerdict::dissipative: return "dissipative";
    case DissipativeVerdict::conservative: return "conservative";
    case DissipativeVerdict::expanding: return "expanding";
  }
  return "?";
}

namespace {

struct LevelScan {
  int flagged = 0;
  std::vector<char> mask;  // resolution x resolution, row-major in (im, re)
};

LevelScan scan_level(const UniPoly& jf, const UniPoly& jg, const ComplexBox& box, int n) {
  const int m = n + 1;
  std::vector<double> sf(static_cast<size_t>(m) * m), sg(static_cast<size_t>(m) * m);
  for (int j = 0; j < m; ++j) {
    double im = box.im_lo + (box.im_hi - box.im_lo) * j / n;
    for (int i = 0; i < m; ++i) {
      double re = box.re_lo + (box.re_hi - box.re_lo) * i / n;
      Complex t(re, im);
      sf[static_cast<size_t>(j) * m + i] = std::abs(jf(t)) - 1.0;
      sg[static_cast<size_t>(j) * m + i] = std::abs(jg(t)) - 1.0;
    }
  }
  auto crosses = [&](const std::vector<double>& s, int i, int j) {
    double c[4] = {s[static_cast<size_t>(j) * m + i], s[static_cast<size_t>(j) * m + i + 1],
                   s[static_cast<size_t>(j + 1) * m + i], s[static_cast<size_t>(j + 1) * m + i + 1]};
    bool pos = false, neg = false;
    for (double v : c) {
      if (v >= 0) pos = true;
      if (v <= 0) neg = true;
    }
    return pos && neg;
  };
  LevelScan out;
  out.mask.assign(static_cast<size_t>(n) * n, 0);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      if (crosses(sf, i, j) && crosses(sg, i, j)) {
        out.mask[static_cast<size_t>(j) * n + i] = 1;
        ++out.flagged;
      }
  return out;
}

}  // namespace

UnitLocusResult unit_locus_grid(const HenonFamily& f, const HenonFamily& g, const ComplexBox& box,
                                int resolution) {
  if (resolution < 16) throw std::invalid_argument("unit_locus_grid needs resolution >= 16");
  const UniPoly jf = f.jacobian_map(), jg = g.jacobian_map();
  UnitLocusResult result;
  LevelScan base = scan_level(jf, jg, box, resolution);
  result.levels.push_back({resolution, base.flagged});
  for (int k = 1; k <= 2; ++k) {
    int n = resolution << k;
    result.levels.push_back({n, scan_level(jf, jg, box, n).flagged});
  }
  const int first = result.levels.front().flagged_cells, last = result.levels.back().flagged_cells;
  result.likely_discrete = last <= 2 * std::max(first, 1);

  // 8-connected components at the base resolution.
  const int n = resolution;
  std::vector<int> label(static_cast<size_t>(n) * n, -1);
  for (int j0 = 0; j0 < n; ++j0)
    for (int i0 = 0; i0 < n; ++i0) {
      size_t idx0 = static_cast<size_t>(j0) * n + i0;
      if (!base.mask[idx0] || label[idx0] >= 0) continue;
      int id = static_cast<int>(result.clusters.size());
      std::vector<std::pair<int, int>> stack{{i0, j0}};
      label[idx0] = id;
      Complex sum = 0;
      int count = 0;
      while (!stack.empty()) {
        auto [i, j] = stack.back();
        stack.pop_back();
        sum += Complex(box.re_lo + (box.re_hi - box.re_lo) * (i + 0.5) / n,
                       box.im_lo + (box.im_hi - box.im_lo) * (j + 0.5) / n);
        ++count;
        for (int dj = -1; dj <= 1; ++dj)
          for (int di = -1; di <= 1; ++di) {
            int a = i + di, b = j + dj;
            if (a < 0 || b < 0 || a >= n || b >= n) continue;
            size_t idx = static_cast<size_t>(b) * n + a;
            if (base.mask[idx] && label[idx] < 0) {
              label[idx] = id;
              stack.emplace_back(a, b);
            }
          }
      }
      result.clusters.push_back({sum / static_cast<double>(count), count});
    }
  return result;
}

NumericPoint fibered_evaluate(const HenonFamily& family, const NumericPoint& q, Complex t) {
  if (q.escaped()) return NumericPoint::infinity();
  NumericPoint z = q;
  for (const auto& f : family.factors()) {
    Complex acc = 0;
    for (size_t k = f.poly.size(); k-- > 0;) acc = acc * z.y + f.poly[k](t);
    Complex y = acc - f.delta(t) * z.x;
    z = {z.y, y};
    if (!std::isfinite(std::abs(y)) || std::abs(y) > kEscapeMagnitude) return NumericPoint::infinity();
  }
  return z;
}

}  // namespace henon
