#include "henon/symbolic.hpp"

#include <algorithm>
#include <vector>

namespace henon {

BiPoly BiPoly::x() {
  BiPoly p;
  p.terms_[{1, 0}] = 1;
  return p;
}

BiPoly BiPoly::y() {
  BiPoly p;
  p.terms_[{0, 1}] = 1;
  return p;
}

BiPoly BiPoly::constant(const Rational& c) {
  BiPoly p;
  if (c != 0) p.terms_[{0, 0}] = c;
  return p;
}

int BiPoly::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.first + m.second);
  return d;
}

int BiPoly::degree_in_x() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.first);
  return d;
}

Rational BiPoly::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Rational(0) : it->second;
}

void BiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational BiPoly::operator()(const Rational& x, const Rational& y) const {
  Rational acc = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    Rational xp, yp;
    mpz_pow_ui(xp.get_num_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(m.first));
    mpz_pow_ui(xp.get_den_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(m.first));
    mpz_pow_ui(yp.get_num_mpz_t(), y.get_num_mpz_t(), static_cast<unsigned long>(m.second));
    mpz_pow_ui(yp.get_den_mpz_t(), y.get_den_mpz_t(), static_cast<unsigned long>(m.second));
    acc += t * xp * yp;
  }
  return acc;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  BiPoly out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, c);
  return out;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
  BiPoly out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, -c);
  return out;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_)
      out.add_term({ma.first + mb.first, ma.second + mb.second}, ca * cb);
  return out;
}

BiPoly operator*(const Rational& s, const BiPoly& a) {
  BiPoly out;
  if (s == 0) return out;
  for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, s * c);
  return out;
}

UniPoly BiPoly::specialize_y(const Rational& value) const {
  std::vector<Rational> coeffs(static_cast<size_t>(std::max(degree_in_x(), 0)) + 1, Rational(0));
  for (const auto& [m, c] : terms_) {
    Rational yp;
    mpz_pow_ui(yp.get_num_mpz_t(), value.get_num_mpz_t(), static_cast<unsigned long>(m.second));
    mpz_pow_ui(yp.get_den_mpz_t(), value.get_den_mpz_t(), static_cast<unsigned long>(m.second));
    coeffs[static_cast<size_t>(m.first)] += c * yp;
  }
  return UniPoly(std::move(coeffs));
}

int PolyMap::total_degree() const { return std::max(x.total_degree(), y.total_degree()); }

namespace {

BiPoly apply_poly(const UniPoly& p, const BiPoly& arg) {
  BiPoly acc;
  for (int k = p.degree(); k >= 0; --k) acc = acc * arg + BiPoly::constant(p.coeff(k));
  return acc;
}

}  // namespace

PolyMap apply_after(const HenonMap& f, const PolyMap& inner, const ExpansionLimits& limits) {
  const long projected = static_cast<long>(std::max(inner.total_degree(), 1)) * f.dynamical_degree();
  if (projected > limits.max_total_degree)
    throw ComputationRefused("symbolic expansion would reach total degree " + std::to_string(projected) +
                             " (cap " + std::to_string(limits.max_total_degree) + ")");
  PolyMap z = inner;
  for (const auto& h : f.factors()) {
    BiPoly y = apply_poly(h.poly(), z.y) - h.delta() * z.x;
    z = {std::move(z.y), std::move(y)};
  }
  return z;
}

PolyMap expand(const HenonMap& f, const ExpansionLimits& limits) {
  return apply_after(f, PolyMap{BiPoly::x(), BiPoly::y()}, limits);
}

bool equal_symbolic(const HenonMap& f, const HenonMap& g, const ExpansionLimits& limits) {
  if (f == g) return true;
  if (f.dynamical_degree() != g.dynamical_degree() || f.jacobian() != g.jacobian()) return false;
  return expand(f, limits) == expand(g, limits);
}

std::optional<IteratePair> common_iterate_detect(const HenonMap& f, const HenonMap& g, int n_max,
                                                 int m_max, const ExpansionLimits& limits) {
  if (n_max < 1 || m_max < 1) throw std::invalid_argument("common_iterate_detect needs bounds >= 1");
  Integer lam_f = f.dynamical_degree(), lam_g = g.dynamical_degree();
  Integer cap_big;
  mpz_pow_ui(cap_big.get_mpz_t(), lam_f.get_mpz_t(), static_cast<unsigned long>(n_max));
  cap_big *= 2;
  ExpansionLimits capped = limits;
  if (cap_big < capped.max_total_degree) capped.max_total_degree = static_cast<int>(cap_big.get_si());

  std::vector<PolyMap> f_iter, g_iter;  // f_iter[k] = expansion of f^(k+1)
  auto f_power = [&](int n) -> const PolyMap& {
    while (static_cast<int>(f_iter.size()) < n)
      f_iter.push_back(f_iter.empty() ? expand(f, capped) : apply_after(f, f_iter.back(), capped));
    return f_iter[static_cast<size_t>(n - 1)];
  };
  auto g_power = [&](int m) -> const PolyMap& {
    while (static_cast<int>(g_iter.size()) < m)
      g_iter.push_back(g_iter.empty() ? expand(g, capped) : apply_after(g, g_iter.back(), capped));
    return g_iter[static_cast<size_t>(m - 1)];
  };

  for (int n = 1; n <= n_max; ++n) {
    Integer deg_f;
    mpz_pow_ui(deg_f.get_mpz_t(), lam_f.get_mpz_t(), static_cast<unsigned long>(n));
    Rational jac_f;
    mpz_pow_ui(jac_f.get_num_mpz_t(), f.jacobian().get_num_mpz_t(), static_cast<unsigned long>(n));
    mpz_pow_ui(jac_f.get_den_mpz_t(), f.jacobian().get_den_mpz_t(), static_cast<unsigned long>(n));
    jac_f.canonicalize();
    for (int m = 1; m <= m_max; ++m) {
      Integer deg_g;
      mpz_pow_ui(deg_g.get_mpz_t(), lam_g.get_mpz_t(), static_cast<unsigned long>(m));
      if (deg_f != deg_g) continue;
      Rational jac_g;
      mpz_pow_ui(jac_g.get_num_mpz_t(), g.jacobian().get_num_mpz_t(), static_cast<unsigned long>(m));
      mpz_pow_ui(jac_g.get_den_mpz_t(), g.jacobian().get_den_mpz_t(), static_cast<unsigned long>(m));
      jac_g.canonicalize();
      if (jac_f != jac_g) continue;
      if (f.power(n) == g.power(m)) return IteratePair{n, m};
      if (f_power(n) == g_power(m)) return IteratePair{n, m};
    }
  }
  return std::nullopt;
}

}  // namespace henon
