#include "henon/henon_map.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace henon {

namespace {

long checked_product(long a, long b) {
  long out = 0;
  if (__builtin_mul_overflow(a, b, &out))
    throw std::overflow_error("dynamical degree exceeds 64-bit range");
  return out;
}

Complex horner(const std::vector<Complex>& c, Complex t) {
  Complex acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Complex horner_derivative(const std::vector<Complex>& c, Complex t) {
  Complex acc = 0;
  for (size_t k = c.size(); k-- > 1;) acc = acc * t + c[k] * static_cast<double>(k);
  return acc;
}

bool finite_below(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag()) && std::abs(z) <= kEscapeMagnitude;
}

Matrix2 multiply(const Matrix2& a, const Matrix2& b) {
  Matrix2 out{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return out;
}

}  // namespace

ElementaryHenon::ElementaryHenon(UniPoly poly, Rational delta)
    : poly_(std::move(poly)), delta_(std::move(delta)) {
  if (poly_.degree() < 2)
    throw std::invalid_argument("elementary Henon factor needs deg p >= 2, got " +
                                std::to_string(poly_.degree()));
  if (delta_ == 0) throw std::invalid_argument("elementary Henon factor needs delta != 0");
}

bool operator<(const ExactPoint& a, const ExactPoint& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

NumericPoint NumericPoint::infinity() {
  const double inf = std::numeric_limits<double>::infinity();
  return {Complex(inf, 0.0), Complex(inf, 0.0)};
}

bool NumericPoint::escaped() const { return !finite_below(x) || !finite_below(y); }

NumericPoint to_numeric(const ExactPoint& q) { return {Complex(q.x.get_d(), 0.0), Complex(q.y.get_d(), 0.0)}; }
ExactPoint swap(const ExactPoint& q) { return {q.y, q.x}; }
NumericPoint swap(const NumericPoint& q) { return {q.y, q.x}; }

double distance(const NumericPoint& a, const NumericPoint& b) {
  return std::max(std::abs(a.x - b.x), std::abs(a.y - b.y));
}

NumericHenon::NumericHenon(std::vector<NumericFactor> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("Henon map needs at least one factor");
  for (const auto& h : factors_) {
    if (h.degree() < 2 || h.poly.back() == Complex(0.0))
      throw std::invalid_argument("numeric Henon factor needs deg p >= 2");
    if (h.delta == Complex(0.0)) throw std::invalid_argument("numeric Henon factor needs delta != 0");
    lambda_ = checked_product(lambda_, h.degree());
    jac_ *= h.delta;
  }
}

NumericHenon NumericHenon::swapped_inverse() const {
  std::vector<NumericFactor> out;
  out.reserve(factors_.size());
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) {
    NumericFactor g{it->poly, 1.0 / it->delta};
    for (auto& c : g.poly) c /= it->delta;
    out.push_back(std::move(g));
  }
  return NumericHenon(std::move(out));
}

NumericHenon NumericHenon::power(int n) const {
  if (n < 1) throw std::invalid_argument("power needs n >= 1");
  std::vector<NumericFactor> out;
  for (int k = 0; k < n; ++k) out.insert(out.end(), factors_.begin(), factors_.end());
  return NumericHenon(std::move(out));
}

HenonMap::HenonMap(std::vector<ElementaryHenon> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("Henon map needs at least one factor");
  for (const auto& h : factors_) {
    lambda_ = checked_product(lambda_, h.degree());
    jac_ *= h.delta();
  }
}

HenonMap HenonMap::single(UniPoly poly, Rational delta) {
  return HenonMap({ElementaryHenon(std::move(poly), std::move(delta))});
}

HenonMap HenonMap::power(int n) const {
  if (n < 1) throw std::invalid_argument("power needs n >= 1");
  std::vector<ElementaryHenon> out;
  out.reserve(factors_.size() * static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) out.insert(out.end(), factors_.begin(), factors_.end());
  return HenonMap(std::move(out));
}

NumericHenon HenonMap::numeric() const {
  std::vector<NumericFactor> out;
  out.reserve(factors_.size());
  for (const auto& h : factors_) out.push_back({h.poly().to_complex(), Complex(h.delta().get_d(), 0.0)});
  return NumericHenon(std::move(out));
}

std::string HenonMap::canonical_string() const {
  std::string s = "henon:";
  for (const auto& h : factors_) {
    s += "[";
    for (int k = 0; k <= h.degree(); ++k) s += (k ? "," : "") + henon::to_string(h.poly().coeff(k));
    s += ";" + henon::to_string(h.delta()) + "]";
  }
  return s;
}

std::string HenonMap::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : canonical_string()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

HenonMap compose(const HenonMap& outer, const HenonMap& inner) {
  std::vector<ElementaryHenon> out = inner.factors();
  out.insert(out.end(), outer.factors().begin(), outer.factors().end());
  return HenonMap(std::move(out));
}

HenonMap HenonInverse::swapped_normal_form() const {
  // s o h^{-1} o s (x, y) = (y, (p(y) - x) / delta).
  std::vector<ElementaryHenon> out;
  const auto& fs = forward_.factors();
  out.reserve(fs.size());
  for (auto it = fs.rbegin(); it != fs.rend(); ++it) {
    Rational inv = Rational(1) / it->delta();
    out.emplace_back(inv * it->poly(), inv);
  }
  return HenonMap(std::move(out));
}

HenonInverse inverse(const HenonMap& f) { return HenonInverse(f); }

ExactPoint evaluate(const ElementaryHenon& h, const ExactPoint& q) {
  Rational y = h.poly()(q.y) - h.delta() * q.x;
  return {q.y, std::move(y)};
}

ExactPoint evaluate(const HenonMap& f, const ExactPoint& q) {
  ExactPoint z = q;
  for (const auto& h : f.factors()) z = evaluate(h, z);
  return z;
}

NumericPoint evaluate(const NumericHenon& f, const NumericPoint& q) {
  if (q.escaped()) return NumericPoint::infinity();
  NumericPoint z = q;
  for (const auto& h : f.factors()) {
    Complex y = horner(h.poly, z.y) - h.delta * z.x;
    z = {z.y, y};
    if (!finite_below(y)) return NumericPoint::infinity();
  }
  return z;
}

NumericPoint evaluate(const HenonMap& f, const NumericPoint& q) { return evaluate(f.numeric(), q); }

Point2 evaluate(const HenonMap& f, const Point2& q) {
  return std::visit([&](const auto& p) -> Point2 { return evaluate(f, p); }, q);
}

ExactPoint evaluate(const HenonInverse& g, const ExactPoint& q) {
  ExactPoint z = q;
  const auto& fs = g.forward().factors();
  for (auto it = fs.rbegin(); it != fs.rend(); ++it) {
    Rational x = (it->poly()(z.x) - z.y) / it->delta();
    z = {std::move(x), z.x};
  }
  return z;
}

NumericPoint evaluate(const HenonInverse& g, const NumericPoint& q) {
  return swap(evaluate(g.swapped_normal_form().numeric(), swap(q)));
}

Point2 evaluate(const HenonInverse& g, const Point2& q) {
  return std::visit([&](const auto& p) -> Point2 { return evaluate(g, p); }, q);
}

ExactPoint iterate(const HenonMap& f, ExactPoint q, int n) {
  for (int k = 0; k < n; ++k) q = evaluate(f, q);
  return q;
}

NumericPoint iterate(const NumericHenon& f, NumericPoint q, int n) {
  for (int k = 0; k < n && !q.escaped(); ++k) q = evaluate(f, q);
  return q;
}

Matrix2 differential(const NumericHenon& f, const NumericPoint& q, NumericPoint* image) {
  Matrix2 acc{{{Complex(1.0), Complex(0.0)}, {Complex(0.0), Complex(1.0)}}};
  NumericPoint z = q;
  for (const auto& h : f.factors()) {
    Matrix2 d{{{Complex(0.0), Complex(1.0)}, {-h.delta, horner_derivative(h.poly, z.y)}}};
    acc = multiply(d, acc);
    z = {z.y, horner(h.poly, z.y) - h.delta * z.x};
  }
  if (image) *image = z;
  return acc;
}

Rational jacobian(const HenonMap& f) { return f.jacobian(); }
long dynamical_degree(const HenonMap& f) { return f.dynamical_degree(); }

std::string to_string(const ExactPoint& q) { return "(" + to_string(q.x) + ", " + to_string(q.y) + ")"; }

}  // namespace henon
