#ifndef HENON_PERIODIC_HPP
#define HENON_PERIODIC_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "henon/henon_map.hpp"
#include "henon/symbolic.hpp"

namespace henon {

// ---------------------------------------------------------------- mod p

struct ModPPoint {
  std::uint32_t x;
  std::uint32_t y;
  friend auto operator<=>(const ModPPoint&, const ModPPoint&) = default;
};

struct ModPCycle {
  /// Starts at the smallest point of the cycle; points[i+1] = f(points[i]).
  std::vector<ModPPoint> points;
  int length() const { return static_cast<int>(points.size()); }
};

struct ModPCycleSet {
  unsigned long prime = 0;
  /// False when some coefficient is not p-integral (nothing is enumerated) or
  /// some delta vanishes mod p (the reduced map is not a permutation).
  bool good_reduction = true;
  /// False when the map could not be reduced at all.
  bool defined = true;
  std::string note;
  /// Every cycle of the reduced map, sorted by (length, first point).
  std::vector<ModPCycle> cycles;

  /// Sum of all cycle lengths; p^2 under good reduction.
  long total_length() const;
  /// Number of cycles of each length (index = length).
  std::vector<long> histogram() const;
  std::vector<const ModPCycle*> with_max_length(int max_period) const;
};

/// Reduction of f modulo p evaluated with machine integers.
class ReducedMap {
 public:
  ReducedMap(const HenonMap& f, unsigned long p);
  bool defined() const { return defined_; }
  bool invertible() const { return invertible_; }
  ModPPoint operator()(ModPPoint q) const;
  unsigned long prime() const { return p_; }

 private:
  unsigned long p_;
  bool defined_ = true;
  bool invertible_ = true;
  std::vector<std::vector<std::uint64_t>> polys_;
  std::vector<std::uint64_t> deltas_;
};

/// All cycles of the reduced map by a visited-marking walk over the p^2 points.
/// Every cycle is kept so that the permutation invariant can be checked; use
/// with_max_length to restrict.
ModPCycleSet periodic_modp(const HenonMap& f, unsigned long p);

// ---------------------------------------------------------------- lifting

struct LiftOptions {
  /// Rationals with |num|, den <= height_bound are reconstructed.
  long height_bound = 10000;
  /// Lower bound on log2 of the p-adic modulus (raised when 2 H^2 needs more).
  int precision_bits = 0;
};

struct LiftReport {
  /// Exactly verified periodic points (whole orbits), sorted.
  std::vector<ExactPoint> points;
  int singular = 0;          ///< cycles skipped because f^n - id is singular mod p
  int not_reconstructed = 0; ///< no rational of the allowed height matches
  int rejected = 0;          ///< reconstructed but not exactly periodic
};

/// Newton-lifts one mod-p cycle to Z/p^k and reconstructs a rational point.
/// The returned points are certified by exact orbit closure.
LiftReport hensel_lift(const HenonMap& f, unsigned long p, const ModPCycle& cycle,
                       const LiftOptions& options = {});

/// Smallest n in [1, max_period] with f^n(q) = q exactly, or nullopt.
std::optional<int> exact_period(const HenonMap& f, const ExactPoint& q, int max_period);

struct RationalPeriodicPoint {
  ExactPoint point;
  int period;
  std::vector<unsigned long> primes;  ///< primes whose lift produced the point
};

struct RationalPeriodicReport {
  std::vector<RationalPeriodicPoint> points;  ///< sorted by (period, point)
  std::vector<unsigned long> primes_used;
  std::vector<unsigned long> primes_skipped;  ///< bad reduction
  int singular = 0;
  int not_reconstructed = 0;
};

/// Rational periodic points of period <= max_period and height <= bound: the
/// union of certified lifts from each good prime in `primes` (bad primes are
/// skipped and replaced by the next good prime).
RationalPeriodicReport rational_periodic_points(const HenonMap& f, int max_period,
                                                const std::vector<unsigned long>& primes = {101, 103},
                                                const LiftOptions& options = {});

// ---------------------------------------------------------------- numeric

enum class CycleKind { saddle, attracting, repelling, undetermined };
std::string to_string(CycleKind k);

struct Cycle {
  std::vector<NumericPoint> points;  ///< points[i+1] = f(points[i])
  int period = 0;                    ///< minimal period
  double multiplier_small = 0.0;     ///< eigenvalue moduli of Df^period
  double multiplier_large = 0.0;
  CycleKind kind = CycleKind::undetermined;
  double residual = 0.0;             ///< |f^period(z) - z| at points[0]
  std::optional<ExactPoint> exact;   ///< set when the cycle comes from a rational point
};

struct NumericOptions {
  int max_newton = 80;
  double classify_margin = 1e-6;
  /// 0 = default_threads().
  unsigned threads = 0;
};

struct NumericPeriodicReport {
  /// Cycles with minimal period dividing n, sorted by (period, first point).
  std::vector<Cycle> cycles;
  std::uint64_t seed = 0;
  int starts = 0;
  /// Points found (sum of periods) over lambda^n.
  double coverage = 0.0;
  long expected = 0;
};

/// Multiple-shooting Newton on z_{i+1} = f(z_i) (indices mod n) from n_starts
/// random complex starts in the bidisk of radius escape_data(f).radius.
NumericPeriodicReport periodic_numeric(const NumericHenon& f, int n, double tol, int n_starts,
                                       std::uint64_t seed, const NumericOptions& options = {});
NumericPeriodicReport periodic_numeric(const HenonMap& f, int n, double tol, int n_starts,
                                       std::uint64_t seed, const NumericOptions& options = {});

/// Numeric cycle through a known exact periodic point.
Cycle exact_cycle(const HenonMap& f, const ExactPoint& q, int period, double margin = 1e-6);

/// Multiplier moduli and classification of the cycle through z of the given period.
void classify(const NumericHenon& f, Cycle& c, double margin = 1e-6);

// ---------------------------------------------------------------- resultant

struct ResultantFixedPoints {
  int n = 0;
  /// Degree of the eliminant in y: the number of solutions of f^n(q) = q with multiplicity.
  int count = 0;
  UniPoly eliminant;
  /// Rational solutions (points with f^n(q) = q, any period dividing n), sorted.
  std::vector<ExactPoint> rational;
};

/// Eliminates x from f^n(x, y) = (x, y) with a Sylvester resultant over Q[y].
/// Refuses (ComputationRefused) when n > 3 or lambda^n exceeds the limit.
ResultantFixedPoints fixed_points_exact_resultant(const HenonMap& f, int n,
                                                  const ExpansionLimits& limits = {});

/// Resultant in x of two polynomials whose coefficients (index = power of x)
/// are polynomials in y. Fraction-free Bareiss elimination.
UniPoly resultant_x(const std::vector<UniPoly>& a, const std::vector<UniPoly>& b);

// ---------------------------------------------------------------- common

struct CommonPoint {
  NumericPoint point;
  std::optional<ExactPoint> exact;
  int period_f = 0;
  int period_g = 0;
  /// "exact", "numeric" or "exact+numeric".
  std::string method;
};

struct CommonOptions {
  double tol = 1e-8;
  int n_starts = 64;
  std::uint64_t seed = 1;
  /// Bounds for the shared-iterate search.
  int iterate_bound = 4;
  std::vector<unsigned long> primes{101, 103};
  LiftOptions lift;
  NumericOptions numeric;
  ExpansionLimits limits;
  bool numeric_pipeline = true;
};

struct CommonPeriodicReport {
  /// Set when f^N = g^M was confirmed symbolically; points is then empty.
  std::optional<IteratePair> shared_iterate;
  std::vector<CommonPoint> points;
  std::uint64_t seed = 0;
};

CommonPeriodicReport common_periodic(const HenonMap& f, const HenonMap& g, int max_period,
                                     const CommonOptions& options = {});

}  // namespace henon

#endif  // HENON_PERIODIC_HPP
