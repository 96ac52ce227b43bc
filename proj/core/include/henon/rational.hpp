#ifndef HENON_RATIONAL_HPP
#define HENON_RATIONAL_HPP

#include <gmpxx.h>

#include <climits>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace henon {

/// Exact rational number. GMP keeps every mpq_class in lowest terms with a
/// positive denominator after each arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// Valuation reported for zero.
inline constexpr long kInfiniteValuation = LONG_MAX / 4;

/// Parses "num/den", "num" or a plain decimal such as "-0.3" into a reduced
/// rational. Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// "num/den", or "num" when the denominator is 1.
std::string to_string(const Rational& q);

/// p-adic valuation; kInfiniteValuation for zero.
long valuation(const Integer& n, unsigned long p);
long valuation(const Rational& q, unsigned long p);

/// True when q has no p in its denominator.
bool is_p_integral(const Rational& q, unsigned long p);

/// max(|num|, den): the naive height of a rational.
Integer naive_height(const Rational& q);

/// Distinct prime divisors of |n| (n != 0), ascending. Trial division followed
/// by Pollard-Brent rho for the cofactor.
std::vector<Integer> prime_divisors(const Integer& n);

bool is_prime(const Integer& n);

/// Reduces q modulo m (gcd(den, m) must be 1). Returns std::nullopt otherwise.
std::optional<Integer> reduce_mod(const Rational& q, const Integer& m);

/// Finds a/b with |a| <= bound_num, 0 < b <= bound_den and a = u*b (mod m).
/// The answer is unique when 2*bound_num*bound_den < m.
std::optional<Rational> rational_reconstruct(const Integer& u, const Integer& m,
                                             const Integer& bound_num,
                                             const Integer& bound_den);

double to_double(const Rational& q);

}  // namespace henon

#endif  // HENON_RATIONAL_HPP
