#include "henon/exact_roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace henon {

namespace {

// Integer coefficients of c * p with the smallest positive c making them integral and coprime.
std::vector<Integer> primitive_integer_coeffs(const UniPoly& p) {
  Integer lcm_den = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(p.coeffs().size());
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    Integer v = c.get_num() * (lcm_den / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    out.push_back(v);
  }
  if (g != 0 && g != 1)
    for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return out;
}

using ModPoly = std::vector<long>;  // ascending, entries in [0, p)

long mod_of(const Integer& v, long p) {
  return static_cast<long>(mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p)));
}

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long inv_mod(long a, long p) {
  long t = 0, nt = 1, r = p, nr = a % p;
  while (nr) {
    long q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  return (t % p + p) % p;
}

ModPoly mod_rem(ModPoly a, const ModPoly& b, long p) {
  trim(a);
  const long inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    long c = a.back() * inv % p;
    size_t shift = a.size() - b.size();
    for (size_t j = 0; j < b.size(); ++j) a[shift + j] = ((a[shift + j] - c * b[j]) % p + p) % p;
    trim(a);
  }
  return a;
}

bool coprime_mod(ModPoly a, ModPoly b, long p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    ModPoly r = mod_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a.size() == 1;
}

}  // namespace

UniPoly squarefree_part(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree_part of zero polynomial");
  if (p.degree() == 0) return UniPoly::constant(1);
  UniPoly g = UniPoly::gcd(p, p.derivative());
  UniPoly q, r;
  UniPoly::divmod(p, g, q, r);
  return Rational(Rational(1) / q.leading()) * q;
}

std::vector<Rational> rational_roots(const UniPoly& poly) {
  if (poly.is_zero()) throw std::invalid_argument("rational_roots of zero polynomial");
  std::vector<Rational> roots;
  UniPoly p = squarefree_part(poly);
  if (p.degree() <= 0) return roots;
  if (p.coeff(0) == 0) {
    roots.emplace_back(0);
    std::vector<Rational> c(p.coeffs().begin() + 1, p.coeffs().end());
    p = UniPoly(std::move(c));
  }
  if (p.degree() >= 1) {
    std::vector<Integer> ic = primitive_integer_coeffs(p);
    const Integer& lead = ic.back();
    const Integer& tail = ic.front();
    // Pick a prime not dividing the leading coefficient with p squarefree mod it.
    Integer prime = 3;
    ModPoly red, dred;
    for (;; mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t())) {
      if (mpz_divisible_p(lead.get_mpz_t(), prime.get_mpz_t())) continue;
      if (prime.get_si() > 1000000) throw std::runtime_error("rational_roots: no good prime found");
      long pr = prime.get_si();
      red.assign(ic.size(), 0);
      for (size_t k = 0; k < ic.size(); ++k) red[k] = mod_of(ic[k], pr);
      dred.assign(ic.size() - 1, 0);
      for (size_t k = 1; k < ic.size(); ++k) dred[k - 1] = red[k] * static_cast<long>(k % pr) % pr;
      if (coprime_mod(red, dred, pr)) break;
    }
    const long pr = prime.get_si();
    // Roots a/b satisfy |a| <= |tail| and 0 < b <= |lead|.
    Integer bound_num = abs(tail), bound_den = abs(lead);
    Integer need = 2 * bound_num * bound_den;
    for (long r0 = 0; r0 < pr; ++r0) {
      long acc = 0;
      for (size_t k = red.size(); k-- > 0;) acc = (acc * r0 + red[k]) % pr;
      if (acc != 0) continue;
      // Newton lift r0 to a root modulo pr^e with pr^e > need.
      Integer modulus = pr, root = r0;
      while (modulus <= need) {
        modulus *= modulus;
        Integer fv = 0, dv = 0;
        for (size_t k = ic.size(); k-- > 0;) fv = (fv * root + ic[k]) % modulus;
        for (size_t k = ic.size(); k-- > 1;) dv = (dv * root + ic[k] * static_cast<long>(k)) % modulus;
        Integer dinv;
        if (mpz_invert(dinv.get_mpz_t(), dv.get_mpz_t(), modulus.get_mpz_t()) == 0)
          throw std::logic_error("rational_roots: lost simplicity while lifting");
        root = (root - fv * dinv) % modulus;
        if (root < 0) root += modulus;
      }
      auto cand = rational_reconstruct(root, modulus, bound_num, bound_den);
      if (cand && poly(*cand) == 0) roots.push_back(*cand);
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

int root_multiplicity(const UniPoly& p, const Rational& r) {
  int m = 0;
  UniPoly cur = p;
  while (!cur.is_zero() && cur(r) == 0) {
    ++m;
    cur = cur.derivative();
  }
  return m;
}

}  // namespace henon
