#pragma once

#include <functional>

#include "heatgraph/estimate.hpp"
#include "heatgraph/exprlang.hpp"
#include "heatgraph/heat.hpp"

namespace heatgraph {

enum class SeriesVerdict { diverges_suspected, converges_suspected, inconclusive };
const char* to_string(SeriesVerdict v);

/// Finite window of a positive series plus a heuristic tail classification:
/// terms fitted to c*r^{-p}; p <= 1.05 reads as divergent, p >= 1.2 as
/// convergent (exponential behavior short-circuits the fit).
struct SeriesReport {
  std::vector<double> terms;         // a_1 .. a_Rmax (index = radius)
  std::vector<double> partial_sums;
  double tail_exponent = 0;          // fitted p
  SeriesVerdict verdict = SeriesVerdict::inconclusive;
  std::string note;
};

SeriesReport classify_series(std::vector<double> terms, std::string note = "");

/// Terms 1/D_-(r) for r = 1..Rmax around x0. A divergent series certifies that
/// heat vanishes along every escaping sequence.
SeriesReport series_inner_degree(const GraphOracle& g, VertexId x0, int rmax);

/// Terms (D(r) - d_-(r) + 1)/d_-(r); a convergent series rules the vanishing out.
SeriesReport series_nonfeller(const GraphOracle& g, VertexId x0, int rmax);

/// Radial degree data for the certificate constructions. deg_plus may be
/// absent when only the product values are needed.
struct RadialProfile {
  std::function<double(int)> deg_minus;          // r >= 1
  std::function<double(int)> deg_plus = nullptr;  // r >= 0
};

/// v(0)=1, v(r) = prod_{i<=r} D_-(i)/(D_-(i)-lambda): positive, decreasing,
/// and a lambda-subsolution on spherically symmetric graphs. The report checks
/// the recursion, the pointwise inequality L v >= lambda v (when deg_plus is
/// supplied) and whether v has dropped below the vanish threshold.
struct CertificateV {
  std::vector<double> values;  // v(0) .. v(rmax)
  double min_inequality_residual = 0;  // min over radii of Lv - lambda*v
  bool inequality_checked = false;
  bool vanishing = false;  // v(rmax) under vanish_fraction * v(0), monotonically
};

CertificateV certificate_v(const RadialProfile& profile, double lambda, int rmax,
                           double vanish_fraction = 0.01);
CertificateV certificate_v(const GraphOracle& g, VertexId x0, double lambda, int rmax,
                           double vanish_fraction = 0.01);

/// w(0)=v0, w(r) = prod_{i<=r} d_-(i)/(D(i)-lambda) * v0, the comparison
/// minorant: any positive lambda-supersolution dominates it, so a w bounded
/// away from zero is non-vanishing evidence.
struct ComparisonW {
  std::vector<double> values;      // w(0) .. w(rmax)
  double fitted_epsilon = 0;       // min w(r)/v0 over the window
  bool bounded_below = false;      // tail flattened and epsilon positive
};

ComparisonW comparison_w(std::function<double(int)> deg_max,
                         std::function<double(int)> deg_minus_min, double lambda,
                         double v0, int rmax);

/// Birth-death test: sum 1/b(r,r+1) must diverge and
/// sum_r m({r,r+1,...})/b(r,r-1) must converge (tails extrapolated past rmax).
struct BirthDeathNonFeller {
  SeriesReport reciprocal_b;
  SeriesReport measure_tails;
  bool tails_finite = false;
  bool non_feller_suspected = false;
};

BirthDeathNonFeller birth_death_nonfeller(std::function<double(int)> b_edge,
                                          std::function<double(int)> m, int rmax);
BirthDeathNonFeller birth_death_nonfeller(const exprlang::Expr& b_edge,
                                          const exprlang::Expr& m, int rmax);

/// Decay of max_{t in [0,T]} p_t(x, y_r) along a geodesic ray from x, with the
/// time-comparison check p_t(x,y) <= e^{T Deg(x)} p_T(x,y) on the grid.
struct UniformFellerRow {
  int r = 0;
  VertexId y;
  double max_kernel = 0;
  double comparison_residual = 0;  // max_t [p_t - e^{T Deg(x)} p_T], <= 0 expected
};

std::vector<UniformFellerRow> uniform_feller_probe(const GraphOracle& g, VertexId x,
                                                   double T, int n_times, int rmax,
                                                   const HeatOptions& opt = {});

}  // namespace heatgraph
