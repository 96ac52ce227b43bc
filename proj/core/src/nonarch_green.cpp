#include "henon/nonarch_green.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <set>
#include <stdexcept>

namespace henon {

double PadicGreenValue::value() const { return coefficient.get_d() * std::log(static_cast<double>(prime)); }
double PadicGreenValue::error() const { return radius.get_d() * std::log(static_cast<double>(prime)); }

namespace {

Rational frac(long a, long b) {
  Rational r{Integer(a), Integer(b)};
  r.canonicalize();
  return r;
}

std::size_t bits_of(const Rational& q) {
  return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

std::size_t bits_of(const ExactPoint& z) { return bits_of(z.x) + bits_of(z.y); }

struct LocalData {
  bool integral_map = true;   // every coefficient and delta p-integral
  Rational threshold;         // dominance threshold on v(y)
  Integer growth_offset = 0;  // B = sum_i -v(c_{d,i}) prod_{j>i} d_j
  Integer bound_offset = 0;   // C = sum_i max(0, -min v(coeffs, delta)) prod_{j>i} d_j
  std::vector<long> lead_val;
  std::vector<int> degrees;
  // Every factor maps {v(x), v(y) >= -k} into itself for box_lo <= k <= box_hi.
  long box_lo = 0;
  long box_hi = LONG_MAX;
};

LocalData local_data(const HenonMap& f, unsigned long p) {
  LocalData out;
  const auto& fs = f.factors();
  std::vector<long> weights(fs.size(), 1);
  for (size_t i = fs.size(); i-- > 1;) weights[i - 1] = weights[i] * fs[i].degree();
  bool first = true;
  for (size_t i = 0; i < fs.size(); ++i) {
    const auto& h = fs[i];
    const int d = h.degree();
    const long vlead = valuation(h.poly().leading(), p);
    const long vdelta = valuation(h.delta(), p);
    long vmin = std::min(0L, vdelta);
    Rational t = frac(-vlead, d - 1);
    t = std::min(t, frac(vdelta - vlead, d - 1));
    for (int k = 0; k < d; ++k) {
      const Rational& c = h.poly().coeff(k);
      if (c == 0) continue;
      const long vc = valuation(c, p);
      vmin = std::min(vmin, vc);
      t = std::min(t, frac(vc - vlead, d - k));
    }
    vmin = std::min(vmin, vlead);
    if (vmin < 0) out.integral_map = false;
    // v(c_k) - k K >= -K for every k, and v(delta) >= 0.
    if (vdelta < 0) out.box_hi = -1;
    for (int k = 0; k <= d; ++k) {
      const Rational& c = h.poly().coeff(k);
      if (c == 0) continue;
      const long vc = valuation(c, p);
      if (k == 0) out.box_lo = std::max(out.box_lo, -vc);
      else if (k == 1 && vc < 0) out.box_hi = -1;
      else if (k >= 2) out.box_hi = std::min(out.box_hi, vc >= 0 ? vc / (k - 1) : -1L);
    }
    out.threshold = first ? t : std::min(out.threshold, t);
    first = false;
    out.growth_offset += Integer(-vlead) * weights[i];
    out.bound_offset += Integer(-vmin) * weights[i];
    out.lead_val.push_back(vlead);
    out.degrees.push_back(d);
  }
  out.threshold.canonicalize();
  return out;
}

bool p_integral(const ExactPoint& z, unsigned long p) { return is_p_integral(z.x, p) && is_p_integral(z.y, p); }

// The orbit of z stays in an invariant box, so it is p-adically bounded.
bool in_invariant_box(const ExactPoint& z, const LocalData& data, unsigned long p) {
  const long k = std::max({0L, -valuation(z.x, p), -valuation(z.y, p), data.box_lo});
  return k <= data.box_hi;
}

Rational pow_inverse(long lambda, int n) {
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(lambda), static_cast<unsigned long>(n));
  return Rational(Integer(1), den);
}

// Applies the full map while checking v(y') = v(c_d) + d v(y) at each factor.
bool confirm_growth(const HenonMap& f, const LocalData& data, ExactPoint& z, unsigned long p) {
  const auto& fs = f.factors();
  for (size_t i = 0; i < fs.size(); ++i) {
    const long vy = valuation(z.y, p);
    z = evaluate(fs[i], z);
    if (valuation(z.y, p) != data.lead_val[i] + data.degrees[i] * vy) return false;
  }
  return true;
}

PadicGreenValue forward_green(const HenonMap& f, const ExactPoint& q, unsigned long p,
                              const PadicOptions& options) {
  PadicGreenValue out;
  out.prime = p;
  const LocalData data = local_data(f, p);
  const long lambda = f.dynamical_degree();
  if (options.use_shortcut && data.integral_map && p_integral(q, p)) return out;

  std::vector<ExactPoint> history;
  ExactPoint z = q;
  int n = 0;
  for (;; ++n) {
    out.iterates = n;
    const long vx = valuation(z.x, p), vy = valuation(z.y, p);
    if (z.y != 0 && vy <= vx && Rational(vy) < data.threshold) {
      bool confirmed = true;
      ExactPoint probe = z;
      for (int k = 0; k < options.confirm_iterates && confirmed; ++k) {
        if (bits_of(probe) > options.max_bits) break;
        confirmed = confirm_growth(f, data, probe, p);
      }
      if (!confirmed) throw std::logic_error("padic_green: valuation growth contradicts the dominance threshold");
      Rational limit = Rational(Integer(-vy)) + Rational(data.growth_offset, Integer(lambda - 1));
      out.coefficient = limit * pow_inverse(lambda, n);
      out.coefficient.canonicalize();
      return out;
    }
    if (options.use_shortcut) {
      if (in_invariant_box(z, data, p)) return out;
      if (std::find(history.begin(), history.end(), z) != history.end()) return out;
    }
    if (n >= options.max_iterates || bits_of(z) > options.max_bits) break;
    history.push_back(z);
    z = evaluate(f, z);
  }
  // Bracket [0, lambda^-n (log+||z_n|| / log p + C / (lambda - 1))].
  const long vmin = std::min(valuation(z.x, p), valuation(z.y, p));
  Rational upper = Rational(Integer(std::max(0L, -vmin))) + Rational(data.bound_offset, Integer(lambda - 1));
  upper *= pow_inverse(lambda, n);
  upper.canonicalize();
  out.coefficient = upper / 2;
  out.radius = upper / 2;
  out.exact = upper == 0;
  return out;
}

void add_primes(const Integer& n, std::set<unsigned long>& out) {
  if (n == 0 || abs(n) == 1) return;
  for (const auto& p : prime_divisors(n)) {
    if (!p.fits_ulong_p()) throw std::domain_error("prime divisor exceeds machine word: " + p.get_str());
    out.insert(p.get_ui());
  }
}

}  // namespace

PadicGreenValue padic_green(const HenonMap& f, Direction dir, const ExactPoint& q, unsigned long p,
                            const PadicOptions& options) {
  if (!is_prime(Integer(p))) throw std::invalid_argument("padic_green: " + std::to_string(p) + " is not prime");
  if (dir == Direction::plus) return forward_green(f, q, p, options);
  return forward_green(inverse(f).swapped_normal_form(), swap(q), p, options);
}

std::vector<PlaceId> relevant_places(const HenonMap& f, const ExactPoint& q) {
  std::set<unsigned long> primes;
  add_primes(q.x.get_den(), primes);
  add_primes(q.y.get_den(), primes);
  for (const auto& h : f.factors()) {
    for (const auto& c : h.poly().coeffs()) add_primes(c.get_den(), primes);
    add_primes(h.delta().get_den(), primes);
    add_primes(h.delta().get_num(), primes);
  }
  std::vector<PlaceId> out{PlaceId::infinity()};
  for (unsigned long p : primes) out.push_back(PlaceId::finite(p));
  return out;
}

}  // namespace henon
