#include "heatgraph/domain.hpp"

#include <vector>

namespace heatgraph {

DirichletDomain DirichletDomain::ball_truncation(const GraphOracle& g, VertexId x0, int R) {
  DirichletDomain d;
  d.ball_ = explore_ball(g, x0, R);
  const auto n = d.ball_.verts.size();
  d.interior_index_.assign(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    // interior iff every ambient neighbor got explored into the ball
    const auto ambient = g.neighbors(d.ball_.verts[i]);
    if (ambient.size() == d.ball_.adj[i].size()) d.interior_index_[i] = 0;
  }
  d.finish();
  return d;
}

DirichletDomain DirichletDomain::supported_ball(const GraphOracle& g, VertexId x0, int R) {
  DirichletDomain d;
  d.ball_ = explore_ball(g, x0, R + 1);
  const auto n = d.ball_.verts.size();
  d.interior_index_.assign(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    if (d.ball_.dist[i] <= R) d.interior_index_[i] = 0;
  }
  d.finish();
  return d;
}

DirichletDomain DirichletDomain::whole_graph(const FiniteGraph& g) {
  DirichletDomain d;
  d.ball_ = explore_ball(g.oracle(), g.vertices().front(),
                         static_cast<int>(g.size()));
  d.interior_index_.assign(d.ball_.verts.size(), 0);
  d.finish();
  return d;
}

void DirichletDomain::finish() {
  const auto n = ball_.verts.size();
  interior_.clear();
  for (std::size_t i = 0; i < n; ++i) {
    if (interior_index_[i] >= 0) {
      interior_index_[i] = static_cast<int>(interior_.size());
      interior_.push_back(static_cast<int>(i));
    }
  }
  const int ni = static_cast<int>(interior_.size());

  std::vector<Eigen::Triplet<double>> sym, stiff;
  for (int a = 0; a < ni; ++a) {
    const auto i = static_cast<std::size_t>(interior_[static_cast<std::size_t>(a)]);
    double wsum = 0;
    for (const auto& [j, w] : ball_.adj[i]) {
      wsum += w;
      const int bidx = interior_index_[static_cast<std::size_t>(j)];
      if (bidx >= 0) {
        sym.emplace_back(a, bidx,
                         -w / std::sqrt(ball_.measure[i] *
                                        ball_.measure[static_cast<std::size_t>(j)]));
        stiff.emplace_back(a, bidx, -w);
      }
    }
    // interior vertices carry their full ambient degree; for boundary-adjacent
    // interior vertices the missing neighbors act as killing
    sym.emplace_back(a, a, ball_.full_degree[i]);
    stiff.emplace_back(a, a, ball_.full_degree[i] * ball_.measure[i]);
  }
  sym_op_.resize(ni, ni);
  sym_op_.setFromTriplets(sym.begin(), sym.end());
  stiffness_.resize(ni, ni);
  stiffness_.setFromTriplets(stiff.begin(), stiff.end());
}

const Eigen::SparseMatrix<double>& DirichletDomain::symmetric_operator() const {
  return sym_op_;
}

const Eigen::SparseMatrix<double>& DirichletDomain::stiffness() const { return stiffness_; }

}  // namespace heatgraph
