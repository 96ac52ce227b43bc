#include "henon/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace henon {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

Integer parse_integer(std::string_view s) {
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (!all_digits(digits)) throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
  Integer out;
  std::string buf(s.front() == '+' ? s.substr(1) : s);
  out.set_str(buf, 10);
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer pollard_brent(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, g = 1, q = 1, ys;
    unsigned long r = 1;
    const unsigned long m = 128;
    auto step = [&](const Integer& v) {
      Integer w = v * v + c;
      mpz_mod(w.get_mpz_t(), w.get_mpz_t(), n.get_mpz_t());
      return w;
    };
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = step(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = step(y);
          Integer diff = abs(x - y);
          q = (q * diff) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = step(ys);
        Integer diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const Integer& n, std::vector<Integer>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  Integer d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  Rational q;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(trim(s.substr(0, slash)));
    Integer den = parse_integer(trim(s.substr(slash + 1)));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(s) + "'");
    q = Rational(num, den);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    bool neg = s.front() == '-';
    std::string_view body = (s.front() == '-' || s.front() == '+') ? s.substr(1) : s;
    dot = body.find('.');
    std::string_view ip = body.substr(0, dot), fp = body.substr(dot + 1);
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) ||
        (ip.empty() && fp.empty()))
      throw std::invalid_argument("malformed decimal '" + std::string(s) + "'");
    Integer num;
    std::string digits = std::string(ip) + std::string(fp);
    num.set_str(digits.empty() ? "0" : digits, 10);
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, fp.size());
    q = Rational(neg ? Integer(-num) : num, den);
  } else {
    q = Rational(parse_integer(s));
  }
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

long valuation(const Integer& n, unsigned long p) {
  if (n == 0) return kInfiniteValuation;
  Integer rest;
  Integer prime = p;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t()));
}

long valuation(const Rational& q, unsigned long p) {
  if (q == 0) return kInfiniteValuation;
  return valuation(q.get_num(), p) - valuation(q.get_den(), p);
}

bool is_p_integral(const Rational& q, unsigned long p) {
  return mpz_divisible_ui_p(q.get_den_mpz_t(), p) == 0;
}

Integer naive_height(const Rational& q) {
  Integer a = abs(q.get_num());
  return a > q.get_den() ? a : Integer(q.get_den());
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::vector<Integer> prime_divisors(const Integer& n) {
  if (n == 0) throw std::invalid_argument("prime_divisors of zero");
  Integer m = abs(n);
  std::vector<Integer> out;
  for (unsigned long p = 2; p < 10000 && m > 1; ++p) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      out.emplace_back(p);
      while (mpz_divisible_ui_p(m.get_mpz_t(), p)) mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
    }
  }
  factor_into(m, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<Integer> reduce_mod(const Rational& q, const Integer& m) {
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), q.get_den_mpz_t(), m.get_mpz_t()) == 0) return std::nullopt;
  Integer r = (q.get_num() * inv) % m;
  if (r < 0) r += m;
  return r;
}

std::optional<Rational> rational_reconstruct(const Integer& u, const Integer& m,
                                             const Integer& bound_num,
                                             const Integer& bound_den) {
  // Extended Euclid on (m, u) stopped at the first remainder <= bound_num.
  Integer r0 = m, r1 = u % m;
  if (r1 < 0) r1 += m;
  Integer t0 = 0, t1 = 1;
  while (r1 > bound_num) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    Integer t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0 || abs(t1) > bound_den) return std::nullopt;
  Integer g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return std::nullopt;
  Rational out(r1, t1);
  out.canonicalize();
  return out;
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace henon
