#pragma once

#include <unordered_map>

#include "heatgraph/estimate.hpp"
#include "heatgraph/linalg.hpp"

namespace heatgraph {

struct HeatOptions {
  double tol = 1e-8;
  int rmax = 24;
  int schedule_start = 4;
  int schedule_step = 4;
  int dense_limit = 2000;

  std::vector<int> schedule() const { return radius_schedule(rmax, schedule_start, schedule_step); }
};

/// Lower bounds for the minimal heat kernel p_t(x,y) along a ball exhaustion
/// centered at x. The truncated kernels increase monotonically; the estimate
/// stops once the increment drops below tol twice, or at rmax.
struct HeatKernelValue {
  VertexId x, y;
  double t = 0;
  MonotoneEstimate estimate;
};

HeatKernelValue heat_kernel(const GraphOracle& g, VertexId x, VertexId y, double t,
                            const HeatOptions& opt = {});

/// Heat content of the truncations: sum_{y in B_R} p_t^R(x,y) m(y), increasing
/// in R and bounded by 1. The verdict extrapolates the geometric tail of the
/// increments: a limit visibly below 1 is evidence of mass lost to infinity.
enum class MassVerdict { complete_suspected, si_suspected, inconclusive };

struct HeatMassResult {
  MonotoneEstimate estimate;
  MassVerdict verdict = MassVerdict::inconclusive;
  double deficit = 0;  // 1 - extrapolated limit
};

HeatMassResult heat_mass(const GraphOracle& g, VertexId x, double t,
                         const HeatOptions& opt = {});

/// Max over domain pairs of |p_{s+t}(x,y) - sum_z p_s(x,z) p_t(z,y) m(z)|.
double semigroup_residual(const DirichletDomain& dom, double s, double t);

/// Bottom of the Dirichlet spectrum over an exhaustion (decreasing in R).
MonotoneEstimate lambda0(const GraphOracle& g, VertexId x0, const HeatOptions& opt = {});

/// Green function bounds g^R(x,y) over an exhaustion (increasing), with a
/// transience verdict from the growth of the increments.
enum class TransienceVerdict { transient_suspected, recurrent_suspected, inconclusive };

struct GreenResult {
  MonotoneEstimate estimate;
  TransienceVerdict verdict = TransienceVerdict::inconclusive;
};

GreenResult green(const GraphOracle& g, VertexId x, VertexId y, const HeatOptions& opt = {});

/// Energy (1/2) sum_{x,y} b(x,y) (phi(x)-phi(y))^2 of a finitely supported phi
/// (vertices absent from the map count as 0).
double energy(const FiniteGraph& g, const std::unordered_map<std::uint64_t, double>& phi);

/// Capacity bounds cap_R(x) = min{ Q(phi) : phi supported in B_R, phi(x)=1 },
/// decreasing in R, plus a uniform-transience probe: the minimum of the
/// stabilized capacities over a small vertex sample around x.
enum class CapacityVerdict { positive, zero_suspected, inconclusive };

struct CapacityResult {
  MonotoneEstimate estimate;
  CapacityVerdict verdict = CapacityVerdict::inconclusive;
};

struct UTProbe {
  std::vector<std::pair<VertexId, double>> sample_caps;  // converged estimates
  double min_cap = 0;
  CapacityVerdict verdict = CapacityVerdict::inconclusive;
};

CapacityResult capacity(const GraphOracle& g, VertexId x, const HeatOptions& opt = {});
UTProbe ut_probe(const GraphOracle& g, VertexId x0, const HeatOptions& opt = {});

}  // namespace heatgraph
