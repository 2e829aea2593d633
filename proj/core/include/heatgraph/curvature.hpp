#pragma once

#include <functional>

#include "heatgraph/families.hpp"
#include "heatgraph/feller.hpp"

namespace heatgraph {

/// Nearest-neighbor curvature of a birth-death chain between vertices r-1 and
/// r, in closed form:
///   kappa(r) = [b(r-1,r) - b(r-1,r-2)]/m(r-1) - [b(r,r+1) - b(r,r-1)]/m(r)
/// with b(0,-1) = 0. b_edge(i) is the weight of edge (i, i+1).
double ollivier_bd(std::function<double(int)> b_edge, std::function<double(int)> m, int r);
double ollivier_bd(const BirthDeathChain& chain, int r);

/// Gamma calculus at x: Gamma_0(f,g) = f g and
///   Gamma_k(f,g) = -L Gamma_{k-1}(f,g) + Gamma_{k-1}(Lf, g) + Gamma_{k-1}(f, Lg),
/// evaluated literally (no normalizing factors; Gamma_1 here is twice the
/// conventional carre du champ). k = 1 reads f on B_1(x), k = 2 on B_2(x);
/// vertices absent from the map count as 0.
double gamma_form(const GraphOracle& g, int k,
                  const std::unordered_map<std::uint64_t, double>& f, VertexId x);
double gamma_bilinear(const GraphOracle& g, int k,
                      const std::unordered_map<std::uint64_t, double>& f,
                      const std::unordered_map<std::uint64_t, double>& h, VertexId x);

/// Largest K with Gamma_2(f,f)(x) >= K Gamma_1(f,f)(x) for all f. Computed on
/// the f(x)=0 slice of functions on B_2(x): the Gamma_2 form is reduced by the
/// Schur complement over the Gamma_1 null space (f constant near x), then the
/// smallest generalized eigenvalue against Gamma_1 is taken. When Gamma_2 is
/// negative somewhere on that null space (or couples into a flat direction)
/// there is no finite K and the minus-infinity flag is set.
struct BakryEmeryBound {
  double value = 0;
  bool finite = true;
};

BakryEmeryBound bakry_emery_bound(const GraphOracle& g, VertexId x);

/// Closed-form test for K_BE(r) >= k_r on birth-death chains:
///   W-(r) = -d-(r-1) + 3 d+(r-1) + d-(r) - d+(r) - 2 k_r
///   W+(r) = -d+(r+1) + 3 d-(r+1) + d+(r) - d-(r) - 2 k_r
/// ok iff W- >= 0, W+ >= 0 and W- W+ >= 4 d-(r) d+(r).
struct PathW {
  double w_minus = 0;
  double w_plus = 0;
  bool ok = false;
};

PathW path_w(std::function<double(int)> dminus, std::function<double(int)> dplus,
             double k_r, int r);

struct CurvatureProfile {
  int r = 0;
  double kappa = 0;
  double K_BE = 0;
  bool K_BE_finite = true;
  double target = 0;  // k_r
};

/// Birth-death chain with curvature at least k_r everywhere yet heat that does
/// not vanish along the chain: d+ = 1, d- increasing fast enough that
/// sum 1/d- converges. Default increments give d-(r) = r^3. The result carries
/// the verification table (kappa and K_BE against k_r for every checkable r)
/// and the series evidence.
struct FellerCounterexample {
  BirthDeathChain chain;
  std::vector<CurvatureProfile> table;  // r = 1 .. N-2
  SeriesReport inner_degree_series;     // 1/d-(r), expected convergent
  SeriesReport nonfeller_series;        // (D - d- + 1)/d-, expected convergent
  bool curvature_ok = false;            // kappa(r) >= k_r and K_BE(r) >= k_r throughout
};

FellerCounterexample build_feller_counterexample(std::function<double(int)> k, int N);

/// Chain with kappa(r) = k_r exactly: m(0)=1, b(0,1)=2, C_r = Deg(0) - sum k_j,
/// m(r) = 2^{-r}/(1+|C_r|), b(r,r+1) = b(r,r-1) + C_r m(r). Weights stay in
/// [1,3] and successive weights differ by at most 2^{-r}; the measure tails are
/// summable while sum 1/b diverges.
struct ExactKappa {
  BirthDeathChain chain;
  std::vector<CurvatureProfile> table;  // r = 1 .. N
  double max_kappa_error = 0;
  bool weights_in_range = false;        // b(r,r+1) in [1,3]
  bool increments_bounded = false;      // |b(r,r+1)-b(r-1,r)| <= 2^{-r}
  double measure_tail_sum = 0;          // sum_r m({r,...}), finite evidence
  SeriesReport reciprocal_b;            // 1/b(r,r+1), expected divergent
};

ExactKappa build_exact_kappa(std::function<double(int)> k, int N);

}  // namespace heatgraph
