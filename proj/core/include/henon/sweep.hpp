#ifndef HENON_SWEEP_HPP
#define HENON_SWEEP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "henon/family.hpp"
#include "henon/periodic.hpp"

namespace henon {

enum class SweepStatus { ok, excluded, failed };
std::string to_string(SweepStatus s);

struct SweepPoint {
  CommonPoint common;
  /// h_{f_b}(q) + h_{g_b}(q) for rational points; for non-rational points only
  /// the archimedean term G_{f_b} + G_{g_b} is available.
  double pair_height = 0.0;
  double pair_error = 0.0;
  bool archimedean_only = false;
  bool small = true;  ///< pair_height <= eps
};

struct SweepEntry {
  Rational parameter;
  SweepStatus status = SweepStatus::ok;
  std::string message;
  std::optional<IteratePair> shared_iterate;
  /// Common points that passed the small-height screen.
  int count = 0;
  std::vector<SweepPoint> points;
  double max_pair_height = 0.0;
};

struct SweepReport {
  /// Sorted by parameter.
  std::vector<SweepEntry> entries;
  /// Largest count among ok, unflagged parameters: an empirical lower bound for D.
  int d_observed = 0;
  /// Parameters flagged shared-iterate, plus excluded ones.
  std::vector<Rational> exceptional;
  int max_period = 0;
  double eps = 0.0;
  std::uint64_t seed = 0;
};

struct SweepOptions {
  CommonOptions common;
  /// Archimedean Green tolerance used in the height screen.
  double height_tol = 1e-8;
  /// Workers across parameters (0 = default_threads()).
  unsigned threads = 0;
};

/// "a:b:step" (rationals; inclusive of b when it lies on the grid) or a comma list.
std::vector<Rational> parse_params(const std::string& text);

/// For each parameter b: common periodic points of f_b and g_b up to max_period,
/// screened by h_{f_b} + h_{g_b} <= eps, and the shared-iterate flag. Failures at
/// one parameter are recorded and never abort the sweep. The per-parameter seed
/// depends on the parameter value only, so the report does not depend on the
/// order of params.
SweepReport sweep_common_periodic(const HenonFamily& f, const HenonFamily& g, std::vector<Rational> params,
                                  int max_period, double eps, std::uint64_t seed, const SweepOptions& options = {});

std::string sweep_csv(const SweepReport& report);

}  // namespace henon

#endif  // HENON_SWEEP_HPP
