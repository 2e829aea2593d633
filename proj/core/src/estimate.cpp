#include "heatgraph/estimate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace heatgraph {

const char* to_string(Direction d) {
  return d == Direction::increasing ? "increasing" : "decreasing";
}

const char* to_string(Convergence c) {
  switch (c) {
    case Convergence::converged: return "converged";
    case Convergence::diverging: return "diverging";
    case Convergence::inconclusive: return "inconclusive";
  }
  return "?";
}

double MonotoneEstimate::last_value() const {
  if (values.empty()) throw std::logic_error("MonotoneEstimate: empty");
  return values.back();
}

std::vector<int> radius_schedule(int rmax, int start, int step) {
  if (rmax < 1) throw std::invalid_argument("radius_schedule: rmax must be >= 1");
  if (step < 1) throw std::invalid_argument("radius_schedule: step must be >= 1");
  std::vector<int> out;
  for (int r = std::min(start, rmax); r <= rmax; r += step) out.push_back(r);
  if (out.empty() || out.back() != rmax) out.push_back(rmax);
  return out;
}

MonotoneEstimate make_estimate(Direction dir, std::vector<int> radii,
                               std::vector<double> values, double tol, double slack) {
  if (radii.size() != values.size()) {
    throw std::invalid_argument("make_estimate: radii/values size mismatch");
  }
  MonotoneEstimate est;
  est.direction = dir;
  est.radii = std::move(radii);
  est.values = std::move(values);
  est.monotone_slack = slack;
  const auto n = est.values.size();
  if (n == 0) return est;

  const double sign = dir == Direction::increasing ? 1.0 : -1.0;
  std::vector<double> inc;  // signed progress, >= 0 when monotone
  for (std::size_t i = 1; i < n; ++i) {
    const double d = sign * (est.values[i] - est.values[i - 1]);
    inc.push_back(d);
    if (d < -slack) est.monotone_ok = false;
  }
  est.last_increment = inc.empty() ? 0.0 : std::abs(inc.back());
  est.limit_estimate = est.values.back();

  if (inc.size() >= 2 && inc[inc.size() - 1] < tol && inc[inc.size() - 2] < tol) {
    est.verdict = Convergence::converged;
  } else if (inc.size() >= 2) {
    const double a = std::abs(inc[inc.size() - 2]);
    const double b = std::abs(inc[inc.size() - 1]);
    if (a > 0 && b >= 0.95 * a && b > tol) est.verdict = Convergence::diverging;
  }

  // geometric tail: fit the ratio of the last increments and sum the tail
  if (inc.size() >= 3) {
    const double d1 = inc[inc.size() - 3];
    const double d2 = inc[inc.size() - 2];
    const double d3 = inc[inc.size() - 1];
    if (d1 > 0 && d2 > 0 && d3 >= 0) {
      const double q = 0.5 * (d2 / d1 + (d2 > 0 ? d3 / d2 : 0.0));
      if (q > 0 && q < 0.95) {
        est.limit_estimate = est.values.back() + sign * d3 * q / (1 - q);
      }
    }
  }
  return est;
}

PowerFit fit_power_law(const std::vector<double>& radii, const std::vector<double>& values) {
  PowerFit fit;
  if (radii.size() != values.size() || radii.size() < 3) return fit;
  // use the tail half (at least 3 points)
  const std::size_t n = radii.size();
  const std::size_t start = std::min(n - 3, n / 2);
  std::vector<double> lx, ly;
  for (std::size_t i = start; i < n; ++i) {
    if (!(values[i] > 0) || !(radii[i] > 0)) return fit;
    lx.push_back(std::log(radii[i]));
    ly.push_back(std::log(values[i]));
  }
  // exponential shortcut: ratio of consecutive terms roughly constant and far
  // from 1 at the largest radii
  {
    const std::size_t k = values.size();
    const double q1 = values[k - 1] / values[k - 2];
    const double q2 = values[k - 2] / values[k - 3];
    if (q1 < 0.6 && q2 < 0.6) {
      fit.exponential_decay = true;
      fit.valid = true;
      fit.exponent = std::numeric_limits<double>::infinity();
      return fit;
    }
    if (q1 > 1.7 && q2 > 1.7) {
      fit.exponential_growth = true;
      fit.valid = true;
      fit.exponent = -std::numeric_limits<double>::infinity();
      return fit;
    }
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const auto k = static_cast<double>(lx.size());
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sx += lx[i];
    sy += ly[i];
    sxx += lx[i] * lx[i];
    sxy += lx[i] * ly[i];
  }
  const double denom = k * sxx - sx * sx;
  if (std::abs(denom) < 1e-14) return fit;
  const double slope = (k * sxy - sx * sy) / denom;
  fit.exponent = -slope;
  fit.valid = true;
  return fit;
}

}  // namespace heatgraph
