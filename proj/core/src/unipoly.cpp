#include "henon/unipoly.hpp"

#include <stdexcept>

namespace henon {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly({c}); }

UniPoly UniPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<size_t>(degree) + 1, Rational(0));
  v.back() = c;
  return UniPoly(std::move(v));
}

void UniPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UniPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<size_t>(k)];
}

Rational UniPoly::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::complex<double> UniPoly::operator()(std::complex<double> t) const {
  std::complex<double> acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + it->get_d();
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (degree() <= 0) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return UniPoly(std::move(d));
}

std::vector<std::complex<double>> UniPoly::to_complex() const {
  std::vector<std::complex<double>> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.emplace_back(c.get_d(), 0.0);
  return out;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (size_t k = 0; k < a.coeffs_.size(); ++k) out[k] += a.coeffs_[k];
  for (size_t k = 0; k < b.coeffs_.size(); ++k) out[k] += b.coeffs_[k];
  return UniPoly(std::move(out));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + Rational(-1) * b; }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UniPoly(std::move(out));
}

UniPoly operator*(const Rational& s, const UniPoly& a) {
  std::vector<Rational> out = a.coeffs_;
  for (auto& c : out) c *= s;
  return UniPoly(std::move(out));
}

void UniPoly::divmod(const UniPoly& a, const UniPoly& b, UniPoly& quot, UniPoly& rem) {
  if (b.is_zero()) throw std::domain_error("UniPoly::divmod by zero polynomial");
  std::vector<Rational> r = a.coeffs_;
  const int db = b.degree();
  std::vector<Rational> q(a.degree() >= db ? static_cast<size_t>(a.degree() - db + 1) : 0,
                          Rational(0));
  for (int k = a.degree(); k >= db; --k) {
    Rational c = r[static_cast<size_t>(k)] / b.leading();
    q[static_cast<size_t>(k - db)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) r[static_cast<size_t>(k - db + j)] -= c * b.coeffs_[static_cast<size_t>(j)];
  }
  quot = UniPoly(std::move(q));
  rem = UniPoly(std::move(r));
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return Rational(Rational(1) / a.leading()) * a;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<size_t>(k)];
    if (c == 0) continue;
    std::string term = henon::to_string(c);
    if (k >= 1) term += "*" + var + (k > 1 ? "^" + std::to_string(k) : "");
    if (!out.empty()) out += term.front() == '-' ? " - " + term.substr(1) : " + " + term;
    else out = term;
  }
  return out;
}

}  // namespace henon
