#pragma once

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "heatgraph/vertex.hpp"

namespace heatgraph {

struct Neighbor {
  VertexId to;
  double weight = 0.0;
};

/// A locally finite weighted graph given by a neighbor function and a vertex
/// measure, rooted for exploration. Oracles are immutable, deterministic pure
/// functions of the vertex id; all operations on them are safe for concurrent
/// shared reads.
class GraphOracle {
 public:
  using NeighborFn = std::function<std::vector<Neighbor>(VertexId)>;
  using MeasureFn = std::function<double(VertexId)>;

  GraphOracle(std::string name, VertexId root, NeighborFn neighbors, MeasureFn measure);

  const std::string& name() const { return name_; }
  VertexId root() const { return root_; }

  /// Neighbor list of x, sorted by vertex id.
  std::vector<Neighbor> neighbors(VertexId x) const;
  double measure(VertexId x) const;

 private:
  std::string name_;
  VertexId root_;
  NeighborFn neighbors_;
  MeasureFn measure_;
};

/// Explicit weighted graph. Construction is permissive (asymmetric or
/// degenerate data is representable) so that validate_graph can report on it.
class FiniteGraph {
 public:
  FiniteGraph() = default;

  void add_vertex(VertexId v, double m);
  /// Symmetric edge: inserts both directions (overwrites existing entries).
  void add_edge(VertexId x, VertexId y, double b);
  /// One direction only; used to represent possibly-asymmetric input.
  void add_half_edge(VertexId x, VertexId y, double b);

  bool has_vertex(VertexId v) const;
  const std::vector<VertexId>& vertices() const { return order_; }
  double measure(VertexId v) const;
  /// Weight of the stored half-edge x->y (0 when absent).
  double weight(VertexId x, VertexId y) const;
  std::vector<Neighbor> neighbors(VertexId x) const;
  std::size_t size() const { return order_.size(); }

  /// View this graph as an oracle rooted at its first vertex (or a given root).
  GraphOracle oracle() const;
  GraphOracle oracle(VertexId root) const;

 private:
  std::vector<VertexId> order_;
  std::unordered_map<std::uint64_t, double> measure_;
  std::unordered_map<std::uint64_t, std::vector<Neighbor>> adj_;
};

/// Breadth-first exploration of a combinatorial ball, the substrate for
/// truncations, spheres and distance queries.
struct Ball {
  VertexId center;
  int radius = 0;
  std::vector<VertexId> verts;  // BFS order, ties broken by vertex id
  std::vector<int> dist;
  std::vector<double> measure;
  std::vector<double> full_degree;                     // ambient weighted degree
  std::vector<std::vector<std::pair<int, double>>> adj;  // edges within the ball
  std::unordered_map<std::uint64_t, int> index;

  int index_of(VertexId v) const;            // -1 when absent
  bool contains(VertexId v) const { return index_of(v) >= 0; }
};

Ball explore_ball(const GraphOracle& g, VertexId x0, int radius);

/// Degrees split by the sphere structure around a fixed center:
/// D = max degree on S_r, D_-/D_+ the max inner/outer degrees, d_-/d_+ the min.
struct SphereProfile {
  int r = 0;
  bool empty = false;  // sphere exhausted (finite graph)
  double D = 0, Dminus = 0, Dplus = 0, dminus = 0, dplus = 0;
};

double weighted_degree(const GraphOracle& g, VertexId x);
double weighted_degree(const FiniteGraph& g, VertexId x);

SphereProfile sphere_profile(const GraphOracle& g, VertexId x0, int r);
SphereProfile sphere_profile_in_ball(const Ball& ball, int r);

/// Combinatorial distance; nullopt when y is not reachable from x within
/// max_radius.
std::optional<int> graph_distance(const GraphOracle& g, VertexId x, VertexId y,
                                  int max_radius = 1024);

double apply_laplacian(const GraphOracle& g,
                       const std::unordered_map<std::uint64_t, double>& f, VertexId x);

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Full check of an explicit graph: symmetry of b, positivity of b and m,
/// no self-loops, connectivity.
ValidationReport validate_graph(const FiniteGraph& g);
/// Sampled check of an oracle on the ball B_R(root): symmetry and positivity
/// on every explored edge.
ValidationReport validate_graph(const GraphOracle& g, int radius);

}  // namespace heatgraph
