#include "heatgraph/metric.hpp"

#include <cmath>
#include <queue>
#include <stdexcept>

namespace heatgraph {

IntrinsicMetric degree_metric(const GraphOracle& g) {
  auto gp = std::make_shared<GraphOracle>(g);
  return IntrinsicMetric{[gp](VertexId x, VertexId y) {
    return 1.0 / std::sqrt(std::max(weighted_degree(*gp, x), weighted_degree(*gp, y)));
  }};
}

std::vector<double> path_distances_in_ball(const Ball& ball, const IntrinsicMetric& metric,
                                           VertexId x) {
  const int src = ball.index_of(x);
  if (src < 0) throw std::invalid_argument("path_distances_in_ball: x outside region");
  const auto n = ball.verts.size();
  std::vector<double> dist(n, std::numeric_limits<double>::infinity());
  dist[static_cast<std::size_t>(src)] = 0;
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  heap.push({0.0, src});
  while (!heap.empty()) {
    const auto [d, i] = heap.top();
    heap.pop();
    if (d > dist[static_cast<std::size_t>(i)]) continue;
    for (const auto& [j, w] : ball.adj[static_cast<std::size_t>(i)]) {
      (void)w;
      const double len =
          metric.edge_length(ball.verts[static_cast<std::size_t>(i)],
                             ball.verts[static_cast<std::size_t>(j)]);
      if (!(len > 0)) throw std::domain_error("path_distance: nonpositive edge length");
      const double nd = d + len;
      if (nd < dist[static_cast<std::size_t>(j)]) {
        dist[static_cast<std::size_t>(j)] = nd;
        heap.push({nd, j});
      }
    }
  }
  return dist;
}

double path_distance(const GraphOracle& g, const IntrinsicMetric& metric, VertexId x,
                     VertexId y, int radius_cap) {
  const Ball ball = explore_ball(g, x, radius_cap);
  const int iy = ball.index_of(y);
  if (iy < 0) throw std::invalid_argument("path_distance: y outside the exploration cap");
  return path_distances_in_ball(ball, metric, x)[static_cast<std::size_t>(iy)];
}

double verify_intrinsic(const GraphOracle& g, const IntrinsicMetric& metric,
                        const Ball& region) {
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < region.verts.size(); ++i) {
    const VertexId x = region.verts[i];
    double acc = 0;
    for (const auto& n : g.neighbors(x)) {
      const double s = metric.edge_length(x, n.to);
      acc += n.weight * s * s;
    }
    worst = std::max(worst, acc - g.measure(x));
  }
  return worst;
}

double jump_size(const GraphOracle& g, const IntrinsicMetric& metric, const Ball& region) {
  double j = 0;
  for (std::size_t i = 0; i < region.verts.size(); ++i) {
    for (const auto& [k, w] : region.adj[i]) {
      (void)w;
      j = std::max(j, metric.edge_length(region.verts[i],
                                         region.verts[static_cast<std::size_t>(k)]));
    }
  }
  return j;
}

double zeta(double j, double t, double r) {
  if (!(j > 0)) throw std::invalid_argument("zeta: j must be > 0");
  if (!(t > 0)) throw std::invalid_argument("zeta: t must be > 0");
  if (r < 0) throw std::invalid_argument("zeta: r must be >= 0");
  const double jr = j * r;
  return (jr * std::asinh(jr / t) - std::sqrt(t * t + jr * jr) + t) / (j * j);
}

double davies_bound_residual(const GraphOracle& g, const IntrinsicMetric& metric, double j,
                             VertexId x, VertexId y, double t, const HeatOptions& opt) {
  // rho on a slightly larger ball than the combinatorial distance needs;
  // path metrics on truncations only overestimate
  const auto dxy = graph_distance(g, x, y, opt.rmax + 2);
  if (!dxy) throw std::invalid_argument("davies_bound_residual: y unreachable");
  const double rho = path_distance(g, metric, x, y, *dxy + 2);
  const double p = (x == y && t == 0)
                       ? 1.0 / g.measure(x)
                       : heat_kernel(g, x, y, t, opt).estimate.last_value();
  const double bound = std::exp(-zeta(j, t, rho)) / std::sqrt(g.measure(x) * g.measure(y));
  return p - bound;
}

std::vector<Feller2Row> feller2_check(const GraphOracle& g, const IntrinsicMetric& metric,
                                      double j, VertexId x0, double C, int R) {
  if (!(j > 0)) throw std::invalid_argument("feller2_check: j must be > 0");
  const Ball ball = explore_ball(g, x0, R + 2);
  const std::vector<double> rho = path_distances_in_ball(ball, metric, x0);
  std::vector<Feller2Row> rows;
  for (std::size_t i = 0; i < ball.verts.size(); ++i) {
    if (ball.dist[i] < 2 || ball.dist[i] > R) continue;  // B_R \ B_1
    Feller2Row row;
    row.y = ball.verts[i];
    row.rho = rho[i];
    row.lhs = -std::log(g.measure(row.y));
    if (!(row.rho > 1)) {
      row.skipped = true;  // log rho <= 0, the bound is not informative here
      rows.push_back(row);
      continue;
    }
    row.rhs = (2 * row.rho / j) * (std::log(row.rho) + C);
    row.pass = row.lhs <= row.rhs;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace heatgraph
