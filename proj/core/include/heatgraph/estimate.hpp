#pragma once

#include <limits>
#include <string>
#include <vector>

namespace heatgraph {

enum class Direction { increasing, decreasing };
enum class Convergence { converged, diverging, inconclusive };

const char* to_string(Direction d);
const char* to_string(Convergence c);

/// A sequence of one-sided bounds over an exhaustion. Finite computation never
/// proves a limit; the verdict records how the increments behaved.
struct MonotoneEstimate {
  Direction direction = Direction::increasing;
  std::vector<int> radii;
  std::vector<double> values;
  double last_increment = std::numeric_limits<double>::quiet_NaN();
  Convergence verdict = Convergence::inconclusive;
  /// Last value plus a geometric-tail extrapolation of the remaining increments
  /// (equals the last value when no tail fit is possible).
  double limit_estimate = std::numeric_limits<double>::quiet_NaN();
  bool monotone_ok = true;   // monotonicity held up to slack
  double monotone_slack = 1e-12;

  double last_value() const;
  bool empty() const { return values.empty(); }
};

/// Default exhaustion radii: start, start+step, ..., <= rmax, with rmax itself
/// appended when the arithmetic ladder misses it.
std::vector<int> radius_schedule(int rmax, int start = 4, int step = 4);

/// Assemble an estimate from raw values: fills increments, monotonicity check,
/// convergence verdict (last two increments below tol) and the extrapolated
/// limit.
MonotoneEstimate make_estimate(Direction dir, std::vector<int> radii,
                               std::vector<double> values, double tol,
                               double slack = 1e-12);

/// Power-law classifier for positive sequences a_r ~ c * r^{-p}: fits p by
/// log-log regression over the tail. Exponential behavior short-circuits the
/// fit (returns +/- infinity for decay/growth).
struct PowerFit {
  double exponent = 0;  // p in a_r ~ c r^{-p}
  bool exponential_decay = false;
  bool exponential_growth = false;
  bool valid = false;
};
PowerFit fit_power_law(const std::vector<double>& radii, const std::vector<double>& values);

}  // namespace heatgraph
