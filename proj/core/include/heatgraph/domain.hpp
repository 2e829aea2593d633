#pragma once

#include <Eigen/SparseCore>

#include "heatgraph/graph.hpp"

namespace heatgraph {

/// A finite truncation with an interior/boundary split. The associated
/// operator is the ambient Laplacian acting on functions that vanish on the
/// boundary: every neighbor of an interior vertex lies in the domain, so the
/// interior block uses full weighted degrees and edges leaving the interior
/// contribute killing only.
class DirichletDomain {
 public:
  /// D = B_R(x0); interior = vertices all of whose neighbors lie in B_R.
  static DirichletDomain ball_truncation(const GraphOracle& g, VertexId x0, int R);

  /// Functions supported in B_R(x0): D = B_{R+1}, interior = B_R, boundary =
  /// the outer shell. Matches the equilibrium problems (Green, capacity,
  /// bottom of spectrum) where the killing happens just outside the ball.
  static DirichletDomain supported_ball(const GraphOracle& g, VertexId x0, int R);

  /// A finite graph as a boundaryless domain.
  static DirichletDomain whole_graph(const FiniteGraph& g);

  int size() const { return static_cast<int>(ball_.verts.size()); }
  int interior_size() const { return static_cast<int>(interior_.size()); }
  bool has_boundary() const { return interior_size() < size(); }
  int radius() const { return ball_.radius; }

  const Ball& ball() const { return ball_; }
  const std::vector<VertexId>& vertices() const { return ball_.verts; }
  VertexId vertex(int i) const { return ball_.verts[static_cast<std::size_t>(i)]; }
  int index_of(VertexId v) const { return ball_.index_of(v); }
  bool is_interior(int i) const { return interior_index_[static_cast<std::size_t>(i)] >= 0; }
  double measure(int i) const { return ball_.measure[static_cast<std::size_t>(i)]; }

  /// Interior vertex indices (into vertices()), and the inverse map
  /// (-1 for boundary vertices).
  const std::vector<int>& interior() const { return interior_; }
  int interior_index(int i) const { return interior_index_[static_cast<std::size_t>(i)]; }

  /// Symmetrized Dirichlet operator over the interior:
  /// A[x][x] = Deg(x), A[x][y] = -b(x,y)/sqrt(m(x)m(y)).
  const Eigen::SparseMatrix<double>& symmetric_operator() const;

  /// Stiffness form over the interior: K[x][x] = sum_y b(x,y),
  /// K[x][y] = -b(x,y); the quadratic form of the energy.
  const Eigen::SparseMatrix<double>& stiffness() const;

 private:
  DirichletDomain() = default;
  void finish();  // derive interior data and matrices from ball_ + interior mask

  Ball ball_;
  std::vector<int> interior_;
  std::vector<int> interior_index_;
  Eigen::SparseMatrix<double> sym_op_;
  Eigen::SparseMatrix<double> stiffness_;
};

}  // namespace heatgraph
