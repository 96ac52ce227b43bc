#ifndef HENON_NONARCH_GREEN_HPP
#define HENON_NONARCH_GREEN_HPP

#include <compare>
#include <string>
#include <vector>

#include "henon/arch_green.hpp"
#include "henon/henon_map.hpp"

namespace henon {

/// A place of Q: prime == 0 stands for the archimedean place.
struct PlaceId {
  unsigned long prime = 0;

  static PlaceId infinity() { return {0}; }
  static PlaceId finite(unsigned long p) { return {p}; }
  bool archimedean() const { return prime == 0; }
  std::string to_string() const { return archimedean() ? "inf" : std::to_string(prime); }
  friend auto operator<=>(const PlaceId&, const PlaceId&) = default;
};

/// G at a finite place, as coefficient * log p.
struct PadicGreenValue {
  unsigned long prime = 0;
  /// Exact when `exact`; otherwise the midpoint of a bracket.
  Rational coefficient = 0;
  /// Half-width of the bracket in units of log p (zero when exact).
  Rational radius = 0;
  bool exact = true;
  int iterates = 0;

  double value() const;
  double error() const;
};

struct PadicOptions {
  int max_iterates = 64;
  /// Total bit size of an iterate beyond which exact iteration stops.
  std::size_t max_bits = 1u << 16;
  /// Extra iterates used to confirm the valuation growth after the threshold is crossed.
  int confirm_iterates = 2;
  /// Allows the good-reduction shortcut (tests switch it off to brute-force).
  bool use_shortcut = true;
};

/// Local Green function at the prime p.
///  - Good reduction (every coefficient and delta p-integral for the direction's
///    normal form, q p-integral): exactly 0.
///  - Orbit returns to an earlier point, or enters a box {v(x), v(y) >= -k} that
///    every factor maps into itself (k = 0 is Z_p^2 for a p-integral normal
///    form): exactly 0.
///  - Once v(y) drops below the dominance threshold (and y dominates x), every
///    later step satisfies v(y') = v(c_d) + d v(y); the limit is then the
///    closed form lambda^-n (w_n + B / (lambda - 1)) with w_n = -v(y_n).
///  - Otherwise an inexact bracket [0, lambda^-n (log+||q_n|| + C / (lambda - 1))].
PadicGreenValue padic_green(const HenonMap& f, Direction dir, const ExactPoint& q, unsigned long p,
                            const PadicOptions& options = {});

/// The archimedean place followed by every prime dividing a denominator of q,
/// of a coefficient or of a delta, or the numerator of a delta. Outside this
/// set both directions have good reduction, so the local Green functions vanish.
std::vector<PlaceId> relevant_places(const HenonMap& f, const ExactPoint& q);

}  // namespace henon

#endif  // HENON_NONARCH_GREEN_HPP
