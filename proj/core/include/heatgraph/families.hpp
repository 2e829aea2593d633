#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "heatgraph/exprlang.hpp"
#include "heatgraph/graph.hpp"

namespace heatgraph {

// Built-in infinite families. Every oracle is a deterministic pure function of
// the vertex id so that test cases are reproducible and hashable.

/// Birth-death chain on {0,1,2,...}: id r is the vertex, b(r,r+1) and m(r)
/// given by functions of r.
GraphOracle birth_death(std::function<double(int)> b_edge, std::function<double(int)> m,
                        std::string name = "birth_death");
GraphOracle birth_death(const exprlang::Expr& b_edge, const exprlang::Expr& m);

/// Cycle C_n, ids 0..n-1. Optional periodic weights: b_edge(i) is the weight
/// of edge (i, i+1 mod n), m(i) the measure; both default to 1.
GraphOracle cycle(int n);
GraphOracle cycle(int n, std::function<double(int)> b_edge, std::function<double(int)> m);

/// Two-sided line on Z, ids by zigzag. Unit edges; m depends on |position|
/// (default 1, the standard line).
GraphOracle line();
GraphOracle line(std::function<double(int)> m_radial, std::string name = "line_m");
/// Line with periodically repeating edge weights/measures of period k,
/// matching the cycle(k, ...) data: the universal-cover weighting.
GraphOracle line_periodic(int k, std::function<double(int)> b_edge,
                          std::function<double(int)> m);

/// Standard lattice Z^d with unit weights and measure, ids by zigzag+tuple
/// encoding; dims >= 1.
GraphOracle lattice(int dims);

/// Cartesian product with b((x,u),(y,v)) = b1(x,y) m2(u) [u=v] + m1(x) b2(u,v) [x=y]
/// and m = m1*m2, so the product Laplacian is the sum of the factor
/// Laplacians. Ids are tuple-encoded factor ids (left fold).
GraphOracle product(std::vector<GraphOracle> factors, std::string name = "product");

/// Decode a product/lattice vertex back into factor ids.
std::vector<std::uint64_t> product_coordinates(VertexId v, std::size_t arity);

/// Homogeneous tree of degree d with standard weights, ids by path encoding.
GraphOracle regular_tree(int degree);

/// Explicit chain data; the substrate of the curvature constructions.
/// b[r] is the weight of edge (r, r+1); vertices 0..m.size()-1.
struct BirthDeathChain {
  std::vector<double> b;  // size n-1
  std::vector<double> m;  // size n

  int max_vertex() const { return static_cast<int>(m.size()) - 1; }
  double deg_plus(int r) const;   // b(r,r+1)/m(r), 0 at the right edge
  double deg_minus(int r) const;  // b(r-1,r)/m(r), 0 at r=0
  GraphOracle oracle() const;     // finite truncation, fails outside the stored range
};

}  // namespace heatgraph
