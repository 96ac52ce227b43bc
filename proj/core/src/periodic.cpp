#include "henon/periodic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

#include <Eigen/Dense>

#include "henon/arch_green.hpp"
#include "henon/exact_roots.hpp"
#include "henon/parallel.hpp"

namespace henon {

// ---------------------------------------------------------------- mod p

long ModPCycleSet::total_length() const {
  long s = 0;
  for (const auto& c : cycles) s += c.length();
  return s;
}

std::vector<long> ModPCycleSet::histogram() const {
  std::vector<long> h;
  for (const auto& c : cycles) {
    if (static_cast<int>(h.size()) <= c.length()) h.resize(static_cast<size_t>(c.length()) + 1, 0);
    ++h[static_cast<size_t>(c.length())];
  }
  return h;
}

std::vector<const ModPCycle*> ModPCycleSet::with_max_length(int max_period) const {
  std::vector<const ModPCycle*> out;
  for (const auto& c : cycles)
    if (c.length() <= max_period) out.push_back(&c);
  return out;
}

ReducedMap::ReducedMap(const HenonMap& f, unsigned long p) : p_(p) {
  if (p < 2 || p >= (1ul << 31)) throw std::invalid_argument("ReducedMap: prime out of range");
  const Integer m = p;
  for (const auto& h : f.factors()) {
    std::vector<std::uint64_t> poly;
    for (const auto& c : h.poly().coeffs()) {
      auto r = reduce_mod(c, m);
      if (!r) {
        defined_ = false;
        return;
      }
      poly.push_back(r->get_ui());
    }
    auto d = reduce_mod(h.delta(), m);
    if (!d) {
      defined_ = false;
      return;
    }
    if (*d == 0) invertible_ = false;
    polys_.push_back(std::move(poly));
    deltas_.push_back(d->get_ui());
  }
}

ModPPoint ReducedMap::operator()(ModPPoint q) const {
  std::uint64_t x = q.x, y = q.y;
  for (size_t i = 0; i < polys_.size(); ++i) {
    const auto& poly = polys_[i];
    std::uint64_t acc = 0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = (acc * y + *it) % p_;
    const std::uint64_t nx = y;
    y = (acc + p_ - (deltas_[i] * x) % p_) % p_;
    x = nx;
  }
  return {static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y)};
}

ModPCycleSet periodic_modp(const HenonMap& f, unsigned long p) {
  ModPCycleSet out;
  out.prime = p;
  if (!is_prime(Integer(p))) throw std::invalid_argument("periodic_modp: " + std::to_string(p) + " is not prime");
  ReducedMap g(f, p);
  if (!g.defined()) {
    out.defined = false;
    out.good_reduction = false;
    out.note = "a coefficient is not " + std::to_string(p) + "-integral";
    return out;
  }
  if (!g.invertible()) {
    out.good_reduction = false;
    out.note = "a delta vanishes mod " + std::to_string(p) + "; reduced map is not a permutation";
  }
  const std::size_t n = static_cast<std::size_t>(p) * p;
  auto index = [p](ModPPoint q) { return static_cast<std::size_t>(q.x) * p + q.y; };
  auto point = [p](std::size_t i) {
    return ModPPoint{static_cast<std::uint32_t>(i / p), static_cast<std::uint32_t>(i % p)};
  };
  // state: 0 unseen, 1 on the current walk, 2 finished.
  std::vector<std::uint8_t> state(n, 0);
  std::vector<std::size_t> path;
  for (std::size_t s = 0; s < n; ++s) {
    if (state[s]) continue;
    path.clear();
    std::size_t cur = s;
    while (state[cur] == 0) {
      state[cur] = 1;
      path.push_back(cur);
      cur = index(g(point(cur)));
    }
    if (state[cur] == 1) {
      auto start = std::find(path.begin(), path.end(), cur);
      ModPCycle c;
      for (auto it = start; it != path.end(); ++it) c.points.push_back(point(*it));
      std::rotate(c.points.begin(), std::min_element(c.points.begin(), c.points.end()), c.points.end());
      out.cycles.push_back(std::move(c));
    }
    for (std::size_t i : path) state[i] = 2;
  }
  std::sort(out.cycles.begin(), out.cycles.end(), [](const ModPCycle& a, const ModPCycle& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.points.front() < b.points.front();
  });
  return out;
}

// ---------------------------------------------------------------- lifting

namespace {

Integer mod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

struct ModMap {
  Integer m;
  std::vector<std::vector<Integer>> polys;
  std::vector<Integer> deltas;

  ModMap(const HenonMap& f, const Integer& modulus) : m(modulus) {
    for (const auto& h : f.factors()) {
      std::vector<Integer> poly;
      for (const auto& c : h.poly().coeffs()) poly.push_back(*reduce_mod(c, m));
      polys.push_back(std::move(poly));
      deltas.push_back(*reduce_mod(h.delta(), m));
    }
  }

  // Applies f n times to (x, y) and accumulates the differential.
  void iterate(int n, Integer& x, Integer& y, Integer jac[2][2]) const {
    Integer a = 1, b = 0, c = 0, d = 1;
    for (int k = 0; k < n; ++k) {
      for (size_t i = 0; i < polys.size(); ++i) {
        const auto& poly = polys[i];
        Integer val = 0, der = 0;
        for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
          der = mod(der * y + val, m);
          val = mod(val * y + *it, m);
        }
        // [[0, 1], [-delta, p'(y)]] * [[a, b], [c, d]]
        Integer na = c, nb = d;
        Integer nc = mod(-deltas[i] * a + der * c, m), nd = mod(-deltas[i] * b + der * d, m);
        a = na, b = nb, c = nc, d = nd;
        Integer nx = y;
        y = mod(val - deltas[i] * x, m);
        x = nx;
      }
    }
    jac[0][0] = a, jac[0][1] = b, jac[1][0] = c, jac[1][1] = d;
  }
};

}  // namespace

std::optional<int> exact_period(const HenonMap& f, const ExactPoint& q, int max_period) {
  ExactPoint z = q;
  for (int n = 1; n <= max_period; ++n) {
    z = evaluate(f, z);
    if (z == q) return n;
  }
  return std::nullopt;
}

LiftReport hensel_lift(const HenonMap& f, unsigned long p, const ModPCycle& cycle, const LiftOptions& options) {
  LiftReport report;
  const int n = cycle.length();
  const Integer H = options.height_bound;
  const Integer P = p;
  Integer M = P;
  int k = 1;
  const Integer need = 2 * H * H;
  while (M <= need || static_cast<int>(mpz_sizeinbase(M.get_mpz_t(), 2)) < options.precision_bits) {
    M *= P;
    ++k;
  }
  // Linearization of f^n - id at the cycle point, modulo p.
  ModMap fp(f, P);
  Integer x = cycle.points.front().x, y = cycle.points.front().y;
  Integer J[2][2];
  {
    Integer xx = x, yy = y;
    fp.iterate(n, xx, yy, J);
    Integer det = mod((J[0][0] - 1) * (J[1][1] - 1) - J[0][1] * J[1][0], P);
    if (det == 0) {
      report.singular = 1;
      return report;
    }
  }
  ModMap fm(f, M);
  int steps = 2;
  for (int bits = 1; bits < k; bits *= 2) ++steps;
  for (int s = 0; s < steps; ++s) {
    Integer fx = x, fy = y;
    fm.iterate(n, fx, fy, J);
    Integer a = J[0][0] - 1, b = J[0][1], c = J[1][0], d = J[1][1] - 1;
    Integer det = mod(a * d - b * c, M), inv;
    if (mpz_invert(inv.get_mpz_t(), det.get_mpz_t(), M.get_mpz_t()) == 0) {
      report.singular = 1;
      return report;
    }
    Integer rx = fx - x, ry = fy - y;
    // z -= (Df^n - I)^{-1} (f^n(z) - z)
    x = mod(x - inv * (d * rx - b * ry), M);
    y = mod(y - inv * (-c * rx + a * ry), M);
  }
  auto qx = rational_reconstruct(x, M, H, H);
  auto qy = rational_reconstruct(y, M, H, H);
  if (!qx || !qy) {
    report.not_reconstructed = 1;
    return report;
  }
  ExactPoint q{*qx, *qy};
  if (iterate(f, q, n) != q) {
    report.rejected = 1;
    return report;
  }
  ExactPoint z = q;
  for (int i = 0; i < n; ++i) {
    report.points.push_back(z);
    z = evaluate(f, z);
  }
  std::sort(report.points.begin(), report.points.end());
  report.points.erase(std::unique(report.points.begin(), report.points.end()), report.points.end());
  return report;
}

RationalPeriodicReport rational_periodic_points(const HenonMap& f, int max_period,
                                                const std::vector<unsigned long>& primes,
                                                const LiftOptions& options) {
  if (max_period < 1) throw std::invalid_argument("rational_periodic_points: max_period must be >= 1");
  RationalPeriodicReport report;
  std::map<ExactPoint, RationalPeriodicPoint> found;
  std::vector<unsigned long> queue = primes;
  unsigned long spare = queue.empty() ? 100 : *std::max_element(queue.begin(), queue.end());
  for (size_t i = 0; i < queue.size(); ++i) {
    const unsigned long p = queue[i];
    ReducedMap g(f, p);
    if (!g.defined() || !g.invertible()) {
      report.primes_skipped.push_back(p);
      Integer next;
      do {
        Integer cur = spare;
        mpz_nextprime(next.get_mpz_t(), cur.get_mpz_t());
        spare = next.get_ui();
      } while (std::find(queue.begin(), queue.end(), spare) != queue.end());
      queue.push_back(spare);
      if (report.primes_skipped.size() > 16) break;
      continue;
    }
    report.primes_used.push_back(p);
    ModPCycleSet cycles = periodic_modp(f, p);
    for (const ModPCycle* c : cycles.with_max_length(max_period)) {
      LiftReport lift = hensel_lift(f, p, *c, options);
      report.singular += lift.singular;
      report.not_reconstructed += lift.not_reconstructed;
      for (const auto& q : lift.points) {
        auto [it, inserted] = found.try_emplace(q, RationalPeriodicPoint{q, c->length(), {}});
        if (it->second.primes.empty() || it->second.primes.back() != p) it->second.primes.push_back(p);
      }
    }
  }
  for (auto& [q, r] : found) report.points.push_back(std::move(r));
  std::sort(report.points.begin(), report.points.end(), [](const auto& a, const auto& b) {
    if (a.period != b.period) return a.period < b.period;
    return a.point < b.point;
  });
  return report;
}

// ---------------------------------------------------------------- numeric

std::string to_string(CycleKind k) {
  switch (k) {
    case CycleKind::saddle: return "saddle";
    case CycleKind::attracting: return "attracting";
    case CycleKind::repelling: return "repelling";
    case CycleKind::undetermined: break;
  }
  return "undetermined";
}

namespace {

bool point_less(const NumericPoint& a, const NumericPoint& b) {
  const double ka[4] = {a.x.real(), a.x.imag(), a.y.real(), a.y.imag()};
  const double kb[4] = {b.x.real(), b.x.imag(), b.y.real(), b.y.imag()};
  return std::lexicographical_compare(ka, ka + 4, kb, kb + 4);
}

}  // namespace

void classify(const NumericHenon& f, Cycle& c, double margin) {
  const NumericHenon fm = f.power(c.period);
  NumericPoint image;
  Matrix2 D = differential(fm, c.points.front(), &image);
  c.residual = distance(image, c.points.front());
  const Complex tr = D[0][0] + D[1][1], det = D[0][0] * D[1][1] - D[0][1] * D[1][0];
  const Complex disc = std::sqrt(tr * tr - 4.0 * det);
  // Pick the sign that avoids cancellation, then recover the other root from the determinant.
  Complex mu1 = std::abs(tr + disc) >= std::abs(tr - disc) ? (tr + disc) / 2.0 : (tr - disc) / 2.0;
  Complex mu2 = std::abs(mu1) > 0 ? det / mu1 : Complex(0.0);
  double a = std::abs(mu1), b = std::abs(mu2);
  c.multiplier_small = std::min(a, b);
  c.multiplier_large = std::max(a, b);
  const bool big = c.multiplier_large > 1 + margin, small = c.multiplier_small < 1 - margin;
  if (big && small) c.kind = CycleKind::saddle;
  else if (c.multiplier_large < 1 - margin) c.kind = CycleKind::attracting;
  else if (c.multiplier_small > 1 + margin) c.kind = CycleKind::repelling;
  else c.kind = CycleKind::undetermined;
}

Cycle exact_cycle(const HenonMap& f, const ExactPoint& q, int period, double margin) {
  Cycle c;
  c.period = period;
  c.exact = q;
  ExactPoint z = q;
  for (int i = 0; i < period; ++i) {
    c.points.push_back(to_numeric(z));
    z = evaluate(f, z);
  }
  classify(f.numeric(), c, margin);
  return c;
}

namespace {

// Multiple-shooting Newton from one start; returns the converged orbit or nothing.
std::optional<std::vector<NumericPoint>> shoot(const NumericHenon& f, int n, std::vector<NumericPoint> z,
                                               double radius, int max_newton) {
  const int N = 2 * n;
  Eigen::MatrixXcd J(N, N);
  Eigen::VectorXcd r(N);
  for (int it = 0; it < max_newton; ++it) {
    J.setZero();
    double res = 0.0, scale = 1.0;
    for (int i = 0; i < n; ++i) {
      NumericPoint img;
      Matrix2 D = differential(f, z[static_cast<size_t>(i)], &img);
      if (img.escaped()) return std::nullopt;
      const NumericPoint& nxt = z[static_cast<size_t>((i + 1) % n)];
      r(2 * i) = img.x - nxt.x;
      r(2 * i + 1) = img.y - nxt.y;
      res = std::max({res, std::abs(r(2 * i)), std::abs(r(2 * i + 1))});
      scale = std::max(scale, nxt.norm());
      const int j = 2 * ((i + 1) % n);
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) J(2 * i + a, 2 * i + b) += D[a][b];
      J(2 * i, j) -= 1.0;
      J(2 * i + 1, j + 1) -= 1.0;
    }
    if (res <= 1e-14 * scale) return z;
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(J);
    Eigen::VectorXcd step = lu.solve(r);
    if (!step.allFinite()) return std::nullopt;
    double step_norm = step.cwiseAbs().maxCoeff();
    // Damp very long steps: they leave the region where periodic points live.
    double damp = step_norm > radius ? radius / step_norm : 1.0;
    for (int i = 0; i < n; ++i) {
      z[static_cast<size_t>(i)].x -= damp * step(2 * i);
      z[static_cast<size_t>(i)].y -= damp * step(2 * i + 1);
      if (z[static_cast<size_t>(i)].norm() > 4 * radius) return std::nullopt;
    }
    if (damp == 1.0 && step_norm <= 1e-15 * scale) return z;
  }
  return std::nullopt;
}

}  // namespace

NumericPeriodicReport periodic_numeric(const NumericHenon& f, int n, double tol, int n_starts, std::uint64_t seed,
                                       const NumericOptions& options) {
  if (n < 1) throw std::invalid_argument("periodic_numeric: n must be >= 1");
  if (!(tol > 0)) throw std::invalid_argument("periodic_numeric: tol must be positive");
  NumericPeriodicReport report;
  report.seed = seed;
  report.starts = n_starts;
  report.expected = 1;
  for (int i = 0; i < n; ++i) report.expected *= f.dynamical_degree();
  const double radius = escape_data(f).radius;

  std::vector<std::optional<std::vector<NumericPoint>>> results(static_cast<size_t>(std::max(n_starts, 0)));
  parallel_for(results.size(), options.threads, [&](std::size_t s) {
    std::mt19937_64 rng(mix_seed(seed, s));
    std::uniform_real_distribution<double> u(-radius, radius);
    std::vector<NumericPoint> z(static_cast<size_t>(n));
    for (auto& p : z) p = {Complex(u(rng), u(rng)), Complex(u(rng), u(rng))};
    results[s] = shoot(f, n, std::move(z), radius, options.max_newton);
  });

  const double dedup = 10 * tol;
  for (const auto& orbit : results) {
    if (!orbit) continue;
    const NumericPoint z0 = orbit->front();
    // Minimal period among the divisors of n.
    int period = n;
    for (int m = 1; m < n; ++m) {
      if (n % m) continue;
      if (distance(iterate(f, z0, m), z0) <= dedup * std::max(1.0, z0.norm())) {
        period = m;
        break;
      }
    }
    Cycle c;
    c.period = period;
    c.points.assign(orbit->begin(), orbit->begin() + period);
    classify(f, c, options.classify_margin);
    if (!(c.residual <= tol)) continue;
    bool seen = false;
    for (const auto& other : report.cycles) {
      if (other.period != c.period) continue;
      for (const auto& p : other.points)
        if (distance(p, z0) <= dedup) seen = true;
      if (seen) break;
    }
    if (seen) continue;
    auto first = std::min_element(c.points.begin(), c.points.end(), point_less);
    std::rotate(c.points.begin(), first, c.points.end());
    classify(f, c, options.classify_margin);
    report.cycles.push_back(std::move(c));
  }
  std::sort(report.cycles.begin(), report.cycles.end(), [](const Cycle& a, const Cycle& b) {
    if (a.period != b.period) return a.period < b.period;
    return point_less(a.points.front(), b.points.front());
  });
  long points = 0;
  for (const auto& c : report.cycles) points += c.period;
  report.coverage = static_cast<double>(points) / static_cast<double>(report.expected);
  return report;
}

NumericPeriodicReport periodic_numeric(const HenonMap& f, int n, double tol, int n_starts, std::uint64_t seed,
                                       const NumericOptions& options) {
  return periodic_numeric(f.numeric(), n, tol, n_starts, seed, options);
}

// ---------------------------------------------------------------- resultant

UniPoly resultant_x(const std::vector<UniPoly>& a_in, const std::vector<UniPoly>& b_in) {
  auto trim = [](std::vector<UniPoly> v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
    return v;
  };
  const std::vector<UniPoly> a = trim(a_in), b = trim(b_in);
  if (a.empty() || b.empty()) return {};
  const int m = static_cast<int>(a.size()) - 1, n = static_cast<int>(b.size()) - 1;
  if (m == 0 && n == 0) return UniPoly::constant(1);
  auto power = [](const UniPoly& p, int e) {
    UniPoly r = UniPoly::constant(1);
    for (int i = 0; i < e; ++i) r = r * p;
    return r;
  };
  if (m == 0) return power(a[0], n);
  if (n == 0) return power(b[0], m);
  const int N = m + n;
  std::vector<std::vector<UniPoly>> S(static_cast<size_t>(N), std::vector<UniPoly>(static_cast<size_t>(N)));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) S[static_cast<size_t>(i)][static_cast<size_t>(i + k)] = a[static_cast<size_t>(m - k)];
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k)
      S[static_cast<size_t>(n + i)][static_cast<size_t>(i + k)] = b[static_cast<size_t>(n - k)];
  // Bareiss: every division below is exact in Q[y].
  UniPoly prev = UniPoly::constant(1);
  bool negate = false;
  for (int k = 0; k < N - 1; ++k) {
    auto& Sk = S[static_cast<size_t>(k)];
    if (Sk[static_cast<size_t>(k)].is_zero()) {
      int swap_row = -1;
      for (int i = k + 1; i < N; ++i)
        if (!S[static_cast<size_t>(i)][static_cast<size_t>(k)].is_zero()) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return {};
      std::swap(S[static_cast<size_t>(k)], S[static_cast<size_t>(swap_row)]);
      negate = !negate;
    }
    const UniPoly& pivot = S[static_cast<size_t>(k)][static_cast<size_t>(k)];
    for (int i = k + 1; i < N; ++i) {
      auto& Si = S[static_cast<size_t>(i)];
      for (int j = k + 1; j < N; ++j) {
        UniPoly num = Si[static_cast<size_t>(j)] * pivot -
                      Si[static_cast<size_t>(k)] * S[static_cast<size_t>(k)][static_cast<size_t>(j)];
        UniPoly q, r;
        UniPoly::divmod(num, prev, q, r);
        Si[static_cast<size_t>(j)] = std::move(q);
      }
      Si[static_cast<size_t>(k)] = UniPoly();
    }
    prev = pivot;
  }
  UniPoly det = S[static_cast<size_t>(N - 1)][static_cast<size_t>(N - 1)];
  return negate ? Rational(-1) * det : det;
}

namespace {

std::vector<UniPoly> by_power_of_x(const BiPoly& p) {
  std::vector<std::vector<Rational>> rows(static_cast<size_t>(std::max(p.degree_in_x(), 0)) + 1);
  for (const auto& [mono, c] : p.terms()) {
    auto& row = rows[static_cast<size_t>(mono.first)];
    if (static_cast<int>(row.size()) <= mono.second) row.resize(static_cast<size_t>(mono.second) + 1, Rational(0));
    row[static_cast<size_t>(mono.second)] = c;
  }
  std::vector<UniPoly> out;
  for (auto& r : rows) out.emplace_back(std::move(r));
  return out;
}

}  // namespace

ResultantFixedPoints fixed_points_exact_resultant(const HenonMap& f, int n, const ExpansionLimits& limits) {
  if (n < 1) throw std::invalid_argument("fixed_points_exact_resultant: n must be >= 1");
  if (n > 3) throw ComputationRefused("fixed_points_exact_resultant: n = " + std::to_string(n) + " exceeds 3");
  long lambda_n = 1;
  for (int i = 0; i < n; ++i) lambda_n *= f.dynamical_degree();
  if (lambda_n > limits.max_total_degree)
    throw ComputationRefused("fixed_points_exact_resultant: degree " + std::to_string(lambda_n) +
                             " exceeds the cap " + std::to_string(limits.max_total_degree));
  PolyMap fn = expand(f.power(n), limits);
  const BiPoly A = fn.x - BiPoly::x(), B = fn.y - BiPoly::y();
  ResultantFixedPoints out;
  out.n = n;
  out.eliminant = resultant_x(by_power_of_x(A), by_power_of_x(B));
  if (out.eliminant.is_zero()) throw ComputationRefused("fixed_points_exact_resultant: eliminant vanishes identically");
  out.count = out.eliminant.degree();
  for (const Rational& y0 : rational_roots(out.eliminant)) {
    UniPoly g = UniPoly::gcd(A.specialize_y(y0), B.specialize_y(y0));
    if (g.is_zero()) continue;
    for (const Rational& x0 : rational_roots(g)) {
      ExactPoint q{x0, y0};
      if (iterate(f, q, n) == q) out.rational.push_back(q);
    }
  }
  std::sort(out.rational.begin(), out.rational.end());
  out.rational.erase(std::unique(out.rational.begin(), out.rational.end()), out.rational.end());
  return out;
}

// ---------------------------------------------------------------- common

CommonPeriodicReport common_periodic(const HenonMap& f, const HenonMap& g, int max_period,
                                     const CommonOptions& options) {
  if (max_period < 1) throw std::invalid_argument("common_periodic: max_period must be >= 1");
  CommonPeriodicReport report;
  report.seed = options.seed;
  if (f == g || equal_symbolic(f, g, options.limits)) {
    report.shared_iterate = IteratePair{1, 1};
    return report;
  }
  if (auto pair = common_iterate_detect(f, g, options.iterate_bound, options.iterate_bound, options.limits)) {
    report.shared_iterate = pair;
    return report;
  }

  // Exact pipeline: certified rational periodic points of either map, kept
  // when exact iteration closes the orbit under both.
  std::vector<ExactPoint> candidates;
  for (const HenonMap* h : {&f, &g})
    for (const auto& r : rational_periodic_points(*h, max_period, options.primes, options.lift).points)
      candidates.push_back(r.point);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (const auto& q : candidates) {
    auto pf = exact_period(f, q, max_period), pg = exact_period(g, q, max_period);
    if (pf && pg) report.points.push_back({to_numeric(q), q, *pf, *pg, "exact"});
  }

  if (options.numeric_pipeline) {
    const double match = 10 * options.tol;
    auto collect = [&](const HenonMap& h, std::uint64_t salt) {
      std::vector<std::pair<NumericPoint, int>> pts;
      const NumericHenon hn = h.numeric();
      for (int n = 1; n <= max_period; ++n) {
        auto rep = periodic_numeric(hn, n, options.tol, options.n_starts, mix_seed(options.seed, 2 * n + salt),
                                    options.numeric);
        for (const auto& c : rep.cycles) {
          if (c.period != n) continue;
          for (const auto& p : c.points) pts.emplace_back(p, n);
        }
      }
      return pts;
    };
    const auto pf = collect(f, 0), pg = collect(g, 1);
    std::vector<CommonPoint> numeric;
    for (const auto& [p, nf] : pf) {
      for (const auto& [q, ng] : pg) {
        if (distance(p, q) > match) continue;
        bool dup = false;
        for (const auto& c : numeric) dup = dup || distance(c.point, p) <= match;
        if (!dup) numeric.push_back({p, std::nullopt, nf, ng, "numeric"});
        break;
      }
    }
    for (auto& c : numeric) {
      bool merged = false;
      for (auto& e : report.points) {
        if (distance(e.point, c.point) <= match) {
          e.method = "exact+numeric";
          merged = true;
        }
      }
      if (!merged) report.points.push_back(std::move(c));
    }
  }
  std::sort(report.points.begin(), report.points.end(),
            [](const CommonPoint& a, const CommonPoint& b) { return point_less(a.point, b.point); });
  return report;
}

}  // namespace henon
