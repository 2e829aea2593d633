#pragma once

#include <functional>

#include "heatgraph/heat.hpp"

namespace heatgraph {

/// Edge lengths sigma > 0 on edges; distances are shortest weighted paths.
/// The adaptedness condition sum_y b(x,y) rho^2(x,y) <= m(x) is what makes the
/// Gaussian-type kernel bound applicable.
struct IntrinsicMetric {
  std::function<double(VertexId, VertexId)> edge_length;
};

/// sigma(x,y) = max(Deg(x), Deg(y))^{-1/2}, the standard adapted metric.
IntrinsicMetric degree_metric(const GraphOracle& g);

/// Shortest-path distance with edge lengths sigma, restricted to the
/// combinatorial ball B_{radius_cap}(x). Truncation can only overestimate.
double path_distance(const GraphOracle& g, const IntrinsicMetric& metric, VertexId x,
                     VertexId y, int radius_cap);

/// All sigma-distances from x within the ball, indexed like ball.verts
/// (infinity where unreachable inside the ball).
std::vector<double> path_distances_in_ball(const Ball& ball, const IntrinsicMetric& metric,
                                           VertexId x);

/// max over x in the region of sum_y b(x,y) sigma^2(x,y) - m(x);
/// nonpositive iff the metric is intrinsic there. Edge lengths bound the path
/// metric from above, so this is the conservative check.
double verify_intrinsic(const GraphOracle& g, const IntrinsicMetric& metric,
                        const Ball& region);

/// Maximal edge length over the region.
double jump_size(const GraphOracle& g, const IntrinsicMetric& metric, const Ball& region);

/// zeta_j(t,r) = (1/j^2) (jr arsinh(jr/t) - sqrt(t^2 + (jr)^2) + t), the decay
/// exponent of the Gaussian-type off-diagonal bound.
double zeta(double j, double t, double r);

/// p_t(x,y) - exp(-zeta_j(t, rho(x,y))) / sqrt(m(x) m(y)); nonpositive when
/// the bound holds. The kernel value is a converged exhaustion estimate.
double davies_bound_residual(const GraphOracle& g, const IntrinsicMetric& metric, double j,
                             VertexId x, VertexId y, double t, const HeatOptions& opt = {});

struct Feller2Row {
  VertexId y;
  double rho = 0;
  double lhs = 0;   // -log m(y)
  double rhs = 0;   // (2 rho / j)(log rho + C)
  bool pass = false;
  bool skipped = false;  // rho <= 1, log nonpositive
};

/// Checks -log m(y) <= (2 rho(x0,y)/j)(log rho(x0,y) + C) for y in B_R \ B_1.
std::vector<Feller2Row> feller2_check(const GraphOracle& g, const IntrinsicMetric& metric,
                                      double j, VertexId x0, double C, int R);

}  // namespace heatgraph
