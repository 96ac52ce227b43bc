#ifndef HENON_HEIGHTS_HPP
#define HENON_HEIGHTS_HPP

#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "henon/arch_green.hpp"
#include "henon/nonarch_green.hpp"

namespace henon {

struct PlaceContribution {
  PlaceId place;
  double plus = 0.0;
  double minus = 0.0;
  double error = 0.0;
  bool exact = true;
  /// Finite places: G+ and G- as multiples of log p (bracket midpoints when inexact).
  Rational plus_coefficient = 0;
  Rational minus_coefficient = 0;
};

/// Canonical height over Q split as h+ + h-, with one entry per relevant place
/// (archimedean first, then primes ascending).
struct HeightValue {
  double h_plus = 0.0;
  double h_minus = 0.0;
  std::vector<PlaceContribution> per_place;
  double error = 0.0;
  /// True when every finite-place contribution is exact.
  bool finite_places_exact = true;
  /// False when the archimedean orbit stayed bounded (verdict relative to max_iterates).
  bool archimedean_escaped = false;

  double total() const { return h_plus + h_minus; }
};

struct HeightOptions {
  GreenOptions green;
  PadicOptions padic;
};

/// Reusable height evaluator for one map (keeps the archimedean escape data).
class HeightCalculator {
 public:
  explicit HeightCalculator(HenonMap f, HeightOptions options = {});
  HeightValue operator()(const ExactPoint& q) const;
  const HenonMap& map() const { return map_; }

 private:
  HenonMap map_;
  GreenFunction green_;
  HeightOptions options_;
};

/// Sum over the relevant places of G+_v + G-_v (all weights are 1 over Q).
HeightValue canonical_height(const HenonMap& f, const ExactPoint& q, double tol,
                             const HeightOptions& options = {});

/// Numeric surrogate for "periodic iff height zero": true iff the height is <= eps.
/// Throws std::domain_error if eps does not exceed the height error.
bool is_periodic_by_height(const HenonMap& f, const ExactPoint& q, double eps, double tol = 1e-8,
                           const HeightOptions& options = {});
bool is_periodic_by_height(const HeightValue& h, double eps);

struct PairHeight {
  bool member = false;
  double value = 0.0;
  double error = 0.0;
};

/// Membership of (q, q) in the small-height set: h_f(q) + h_g(q) <= eps.
PairHeight pair_small_height(const HenonMap& f, const HenonMap& g, const ExactPoint& q, double eps,
                             double tol = 1e-8, const HeightOptions& options = {});

nlohmann::json to_json(const HeightValue& h);
HeightValue height_from_json(const nlohmann::json& j);

/// Append-only on-disk cache of height values keyed by (map hash, point).
/// Doubles are stored as hex floats so that hits are bit-identical to the
/// computation that produced them. Safe for concurrent use; concurrent
/// requests for the same key share one computation.
class HeightCache {
 public:
  /// An empty path keeps the cache in memory only.
  explicit HeightCache(std::string path = {});

  HeightValue get_or_compute(const HeightCalculator& calc, const ExactPoint& q);
  std::size_t size() const;
  std::size_t hits() const { return hits_; }
  static std::string key(const HenonMap& f, const ExactPoint& q);

 private:
  void append(const std::string& key, const HeightValue& value);

  std::string path_;
  mutable std::mutex mutex_;
  std::map<std::string, HeightValue> entries_;
  std::map<std::string, std::shared_future<HeightValue>> in_flight_;
  std::size_t hits_ = 0;
};

}  // namespace henon

#endif  // HENON_HEIGHTS_HPP
