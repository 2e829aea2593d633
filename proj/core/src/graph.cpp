#include "heatgraph/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace heatgraph {

GraphOracle::GraphOracle(std::string name, VertexId root, NeighborFn neighbors,
                         MeasureFn measure)
    : name_(std::move(name)),
      root_(root),
      neighbors_(std::move(neighbors)),
      measure_(std::move(measure)) {}

std::vector<Neighbor> GraphOracle::neighbors(VertexId x) const {
  auto ns = neighbors_(x);
  std::sort(ns.begin(), ns.end(),
            [](const Neighbor& a, const Neighbor& b) { return a.to < b.to; });
  return ns;
}

double GraphOracle::measure(VertexId x) const { return measure_(x); }

// ---------------------------------------------------------------------------

void FiniteGraph::add_vertex(VertexId v, double m) {
  if (!measure_.contains(v.value)) order_.push_back(v);
  measure_[v.value] = m;
  adj_.try_emplace(v.value);
}

void FiniteGraph::add_half_edge(VertexId x, VertexId y, double b) {
  auto& row = adj_[x.value];
  for (auto& n : row) {
    if (n.to == y) {
      n.weight = b;
      return;
    }
  }
  row.push_back({y, b});
}

void FiniteGraph::add_edge(VertexId x, VertexId y, double b) {
  add_half_edge(x, y, b);
  add_half_edge(y, x, b);
}

bool FiniteGraph::has_vertex(VertexId v) const { return measure_.contains(v.value); }

double FiniteGraph::measure(VertexId v) const {
  auto it = measure_.find(v.value);
  if (it == measure_.end()) throw std::out_of_range("FiniteGraph: unknown vertex");
  return it->second;
}

double FiniteGraph::weight(VertexId x, VertexId y) const {
  auto it = adj_.find(x.value);
  if (it == adj_.end()) return 0.0;
  for (const auto& n : it->second) {
    if (n.to == y) return n.weight;
  }
  return 0.0;
}

std::vector<Neighbor> FiniteGraph::neighbors(VertexId x) const {
  auto it = adj_.find(x.value);
  if (it == adj_.end()) throw std::out_of_range("FiniteGraph: unknown vertex");
  auto ns = it->second;
  std::sort(ns.begin(), ns.end(),
            [](const Neighbor& a, const Neighbor& b) { return a.to < b.to; });
  return ns;
}

GraphOracle FiniteGraph::oracle() const {
  if (order_.empty()) throw std::invalid_argument("FiniteGraph: empty graph");
  return oracle(order_.front());
}

GraphOracle FiniteGraph::oracle(VertexId root) const {
  auto self = std::make_shared<FiniteGraph>(*this);
  return GraphOracle(
      "finite", root,
      [self](VertexId x) { return self->neighbors(x); },
      [self](VertexId x) { return self->measure(x); });
}

// ---------------------------------------------------------------------------

int Ball::index_of(VertexId v) const {
  auto it = index.find(v.value);
  return it == index.end() ? -1 : it->second;
}

Ball explore_ball(const GraphOracle& g, VertexId x0, int radius) {
  Ball b;
  b.center = x0;
  b.radius = radius;
  b.verts.push_back(x0);
  b.dist.push_back(0);
  b.index[x0.value] = 0;
  std::size_t head = 0;
  while (head < b.verts.size()) {
    const VertexId x = b.verts[head];
    const int d = b.dist[head];
    ++head;
    if (d == radius) continue;
    for (const auto& n : g.neighbors(x)) {
      if (!b.index.contains(n.to.value)) {
        b.index[n.to.value] = static_cast<int>(b.verts.size());
        b.verts.push_back(n.to);
        b.dist.push_back(d + 1);
      }
    }
  }
  const std::size_t n = b.verts.size();
  b.measure.resize(n);
  b.full_degree.resize(n);
  b.adj.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    b.measure[i] = g.measure(b.verts[i]);
    double wsum = 0;
    for (const auto& nb : g.neighbors(b.verts[i])) {
      wsum += nb.weight;
      const int j = b.index_of(nb.to);
      if (j >= 0) b.adj[i].push_back({j, nb.weight});
    }
    b.full_degree[i] = wsum / b.measure[i];
  }
  return b;
}

// ---------------------------------------------------------------------------

double weighted_degree(const GraphOracle& g, VertexId x) {
  double sum = 0;
  for (const auto& n : g.neighbors(x)) sum += n.weight;
  return sum / g.measure(x);
}

double weighted_degree(const FiniteGraph& g, VertexId x) {
  double sum = 0;
  for (const auto& n : g.neighbors(x)) sum += n.weight;
  return sum / g.measure(x);
}

SphereProfile sphere_profile_in_ball(const Ball& ball, int r) {
  if (r < 1) throw std::invalid_argument("sphere_profile: r must be >= 1");
  if (ball.radius < r + 1) throw std::invalid_argument("sphere_profile: ball too small");
  SphereProfile p;
  p.r = r;
  bool any = false;
  for (std::size_t i = 0; i < ball.verts.size(); ++i) {
    if (ball.dist[i] != r) continue;
    double inner = 0, outer = 0, total = 0;
    for (const auto& [j, w] : ball.adj[i]) {
      total += w;
      if (ball.dist[j] == r - 1) inner += w;
      else if (ball.dist[j] == r + 1) outer += w;
    }
    const double m = ball.measure[i];
    const double deg_minus = inner / m;
    const double deg_plus = outer / m;
    const double deg = total / m;
    if (!any) {
      p.Dminus = p.dminus = deg_minus;
      p.Dplus = p.dplus = deg_plus;
      p.D = deg;
      any = true;
    } else {
      p.Dminus = std::max(p.Dminus, deg_minus);
      p.dminus = std::min(p.dminus, deg_minus);
      p.Dplus = std::max(p.Dplus, deg_plus);
      p.dplus = std::min(p.dplus, deg_plus);
      p.D = std::max(p.D, deg);
    }
  }
  if (!any) {
    p.empty = true;
    return p;
  }
  // every sphere vertex of a connected graph has an inward edge
  if (!(p.dminus > 0)) throw std::logic_error("sphere_profile: vertex with no inward edge");
  return p;
}

SphereProfile sphere_profile(const GraphOracle& g, VertexId x0, int r) {
  return sphere_profile_in_ball(explore_ball(g, x0, r + 1), r);
}

std::optional<int> graph_distance(const GraphOracle& g, VertexId x, VertexId y,
                                  int max_radius) {
  if (x == y) return 0;
  std::unordered_map<std::uint64_t, int> dist;
  std::deque<VertexId> queue;
  dist[x.value] = 0;
  queue.push_back(x);
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    const int d = dist[v.value];
    if (d >= max_radius) continue;
    for (const auto& n : g.neighbors(v)) {
      if (n.to == y) return d + 1;
      if (dist.emplace(n.to.value, d + 1).second) queue.push_back(n.to);
    }
  }
  return std::nullopt;
}

double apply_laplacian(const GraphOracle& g,
                       const std::unordered_map<std::uint64_t, double>& f, VertexId x) {
  auto fx = f.find(x.value);
  if (fx == f.end()) throw std::invalid_argument("apply_laplacian: f undefined at x");
  double sum = 0;
  for (const auto& n : g.neighbors(x)) {
    auto fy = f.find(n.to.value);
    if (fy == f.end()) {
      throw std::invalid_argument("apply_laplacian: f undefined on a neighbor of x");
    }
    sum += n.weight * (fx->second - fy->second);
  }
  return sum / g.measure(x);
}

// ---------------------------------------------------------------------------

namespace {

std::string vid(VertexId v) { return std::to_string(v.value); }

}  // namespace

ValidationReport validate_graph(const FiniteGraph& g) {
  ValidationReport rep;
  for (VertexId v : g.vertices()) {
    const double m = g.measure(v);
    if (!(m > 0) || !std::isfinite(m)) {
      rep.violations.push_back("measure not positive at vertex " + vid(v) +
                               " (m=" + std::to_string(m) + ")");
    }
    for (const auto& n : g.neighbors(v)) {
      if (n.to == v) {
        rep.violations.push_back("self-loop at vertex " + vid(v));
        continue;
      }
      if (!(n.weight > 0) || !std::isfinite(n.weight)) {
        rep.violations.push_back("edge weight not positive on (" + vid(v) + "," +
                                 vid(n.to) + ")");
      }
      if (!g.has_vertex(n.to)) {
        rep.violations.push_back("edge to undeclared vertex " + vid(n.to));
        continue;
      }
      const double back = g.weight(n.to, v);
      if (back != n.weight) {
        rep.violations.push_back("asymmetric weight: b(" + vid(v) + "," + vid(n.to) +
                                 ")=" + std::to_string(n.weight) + " but b(" + vid(n.to) +
                                 "," + vid(v) + ")=" + std::to_string(back));
      }
    }
  }
  // connectivity
  if (!g.vertices().empty()) {
    std::set<std::uint64_t> seen;
    std::deque<VertexId> queue{g.vertices().front()};
    seen.insert(queue.front().value);
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      if (!g.has_vertex(v)) continue;
      for (const auto& n : g.neighbors(v)) {
        if (g.has_vertex(n.to) && seen.insert(n.to.value).second) queue.push_back(n.to);
      }
    }
    if (seen.size() != g.vertices().size()) {
      rep.violations.push_back("graph not connected (" + std::to_string(seen.size()) +
                               " of " + std::to_string(g.vertices().size()) +
                               " vertices reachable)");
    }
  }
  return rep;
}

ValidationReport validate_graph(const GraphOracle& g, int radius) {
  ValidationReport rep;
  const Ball ball = explore_ball(g, g.root(), radius);
  for (std::size_t i = 0; i < ball.verts.size(); ++i) {
    const VertexId x = ball.verts[i];
    if (!(ball.measure[i] > 0) || !std::isfinite(ball.measure[i])) {
      rep.violations.push_back("measure not positive at vertex " + vid(x));
    }
    for (const auto& n : g.neighbors(x)) {
      if (n.to == x) {
        rep.violations.push_back("self-loop at vertex " + vid(x));
        continue;
      }
      if (!(n.weight > 0) || !std::isfinite(n.weight)) {
        rep.violations.push_back("edge weight not positive on (" + vid(x) + "," +
                                 vid(n.to) + ")");
      }
      bool found = false;
      for (const auto& back : g.neighbors(n.to)) {
        if (back.to == x) {
          found = true;
          if (back.weight != n.weight) {
            rep.violations.push_back("asymmetric weight on (" + vid(x) + "," + vid(n.to) +
                                     "): " + std::to_string(n.weight) + " vs " +
                                     std::to_string(back.weight));
          }
          break;
        }
      }
      if (!found) {
        rep.violations.push_back("missing reverse edge (" + vid(n.to) + "," + vid(x) + ")");
      }
    }
  }
  return rep;
}

}  // namespace heatgraph
