#include "henon/sweep.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "henon/arch_green.hpp"
#include "henon/heights.hpp"
#include "henon/parallel.hpp"

namespace henon {

std::string to_string(SweepStatus s) {
  switch (s) {
    case SweepStatus::ok: return "ok";
    case SweepStatus::excluded: return "excluded";
    case SweepStatus::failed: break;
  }
  return "failed";
}

std::vector<Rational> parse_params(const std::string& text) {
  std::vector<Rational> out;
  if (text.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string s; std::getline(ss, s, ':');) parts.push_back(s);
    if (parts.size() != 3) throw std::invalid_argument("params: expected a:b:step, got '" + text + "'");
    const Rational a = parse_rational(parts[0]), b = parse_rational(parts[1]), step = parse_rational(parts[2]);
    if (step <= 0) throw std::invalid_argument("params: step must be positive");
    for (Rational t = a; t <= b; t += step) out.push_back(t);
  } else {
    std::stringstream ss(text);
    for (std::string s; std::getline(ss, s, ',');)
      if (!s.empty()) out.push_back(parse_rational(s));
  }
  return out;
}

namespace {

std::uint64_t parameter_salt(const Rational& b) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : to_string(b)) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

SweepEntry run_parameter(const HenonFamily& F, const HenonFamily& G, const Rational& b, int max_period, double eps,
                         std::uint64_t seed, const SweepOptions& options) {
  SweepEntry e;
  e.parameter = b;
  std::string reason = F.exclusion_reason(b);
  if (reason.empty()) reason = G.exclusion_reason(b);
  if (!reason.empty()) {
    e.status = SweepStatus::excluded;
    e.message = reason;
    return e;
  }
  try {
    const HenonMap f = F.specialize(b), g = G.specialize(b);
    CommonOptions co = options.common;
    co.seed = mix_seed(seed, parameter_salt(b));
    co.numeric.threads = 1;
    CommonPeriodicReport r = common_periodic(f, g, max_period, co);
    e.shared_iterate = r.shared_iterate;
    if (r.shared_iterate) return e;
    const GreenFunction gf(f), gg(g);
    for (auto& c : r.points) {
      SweepPoint sp;
      sp.common = c;
      if (c.exact) {
        HeightValue hf = canonical_height(f, *c.exact, options.height_tol);
        HeightValue hg = canonical_height(g, *c.exact, options.height_tol);
        sp.pair_height = hf.total() + hg.total();
        sp.pair_error = hf.error + hg.error;
      } else {
        GreenValue a = gf.total(c.point), bb = gg.total(c.point);
        sp.pair_height = a.value + bb.value;
        sp.pair_error = a.error + bb.error;
        sp.archimedean_only = true;
      }
      if (!(eps > sp.pair_error))
        throw std::domain_error("eps " + std::to_string(eps) + " does not exceed the height error " +
                                std::to_string(sp.pair_error));
      sp.small = sp.pair_height <= eps;
      if (sp.small) ++e.count;
      e.max_pair_height = std::max(e.max_pair_height, sp.pair_height);
      e.points.push_back(std::move(sp));
    }
  } catch (const std::exception& ex) {
    e.status = SweepStatus::failed;
    e.message = ex.what();
    e.points.clear();
    e.count = 0;
  }
  return e;
}

}  // namespace

SweepReport sweep_common_periodic(const HenonFamily& F, const HenonFamily& G, std::vector<Rational> params,
                                  int max_period, double eps, std::uint64_t seed, const SweepOptions& options) {
  if (max_period < 1) throw std::invalid_argument("sweep: max_period must be >= 1");
  if (!(eps > 0)) throw std::invalid_argument("sweep: eps must be positive");
  std::sort(params.begin(), params.end());
  params.erase(std::unique(params.begin(), params.end()), params.end());
  SweepReport report;
  report.max_period = max_period;
  report.eps = eps;
  report.seed = seed;
  report.entries.resize(params.size());
  parallel_for(params.size(), options.threads, [&](std::size_t i) {
    report.entries[i] = run_parameter(F, G, params[i], max_period, eps, seed, options);
  });
  for (const auto& e : report.entries) {
    if (e.status == SweepStatus::excluded || e.shared_iterate) report.exceptional.push_back(e.parameter);
    else if (e.status == SweepStatus::ok) report.d_observed = std::max(report.d_observed, e.count);
  }
  return report;
}

std::string sweep_csv(const SweepReport& report) {
  std::ostringstream out;
  out << "b,status,count,shared_iterate,max_pair_height\n";
  for (const auto& e : report.entries) {
    out << to_string(e.parameter) << ',' << to_string(e.status) << ',' << e.count << ',';
    if (e.shared_iterate) out << e.shared_iterate->n << '/' << e.shared_iterate->m;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", e.max_pair_height);
    out << ',' << buf << '\n';
  }
  return out.str();
}

}  // namespace henon
