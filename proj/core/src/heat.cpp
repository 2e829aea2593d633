#include "heatgraph/heat.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace heatgraph {

namespace {

// Convergence slack for monotonicity bookkeeping: spectral kernels of stiff
// domains (huge weighted degrees) are exact only to ||A|| * eps.
double monotone_slack(const DirichletDomain& dom) {
  double dmax = 0;
  for (int i = 0; i < dom.size(); ++i) {
    dmax = std::max(dmax, dom.ball().full_degree[static_cast<std::size_t>(i)]);
  }
  return std::max(1e-12, dmax * 1e-14);
}

}  // namespace

HeatKernelValue heat_kernel(const GraphOracle& g, VertexId x, VertexId y, double t,
                            const HeatOptions& opt) {
  if (t < 0) throw std::invalid_argument("heat_kernel: t must be >= 0");
  if (!(opt.tol > 0)) throw std::invalid_argument("heat_kernel: tol must be > 0");
  HeatKernelValue out{x, y, t, {}};
  std::vector<int> radii;
  std::vector<double> values;
  double slack = 1e-12;
  bool found_y = false;
  bool exhausted = false;
  for (const int R : opt.schedule()) {
    DirichletDomain dom = DirichletDomain::ball_truncation(g, x, R);
    const int ix = dom.index_of(x);
    const int iy = dom.index_of(y);
    slack = std::max(slack, monotone_slack(dom));
    double v = 0;
    if (iy >= 0) {
      found_y = true;
      v = HeatSolver(dom, opt.dense_limit).kernel(ix, iy, t);
    }
    radii.push_back(R);
    values.push_back(v);
    if (!dom.has_boundary()) {
      exhausted = true;  // finite graph fully enclosed, value is exact
      break;
    }
    if (values.size() >= 3) {
      const auto n = values.size();
      if (std::abs(values[n - 1] - values[n - 2]) < opt.tol &&
          std::abs(values[n - 2] - values[n - 3]) < opt.tol && found_y) {
        break;
      }
    }
  }
  if (!found_y) {
    throw std::invalid_argument("heat_kernel: y not within B_rmax(x)");
  }
  out.estimate = make_estimate(Direction::increasing, std::move(radii), std::move(values),
                               opt.tol, slack);
  if (exhausted) out.estimate.verdict = Convergence::converged;
  return out;
}

HeatMassResult heat_mass(const GraphOracle& g, VertexId x, double t, const HeatOptions& opt) {
  if (!(t > 0)) throw std::invalid_argument("heat_mass: t must be > 0");
  HeatMassResult out;
  std::vector<int> radii;
  std::vector<double> values;
  double slack = 1e-12;
  bool exhausted = false;
  for (const int R : opt.schedule()) {
    DirichletDomain dom = DirichletDomain::ball_truncation(g, x, R);
    slack = std::max(slack, monotone_slack(dom));
    radii.push_back(R);
    values.push_back(HeatSolver(dom, opt.dense_limit).mass(dom.index_of(x), t));
    if (!dom.has_boundary()) {
      exhausted = true;
      break;
    }
    if (values.size() >= 3) {
      const auto n = values.size();
      if (std::abs(values[n - 1] - values[n - 2]) < opt.tol &&
          std::abs(values[n - 2] - values[n - 3]) < opt.tol) {
        break;
      }
    }
  }
  out.estimate = make_estimate(Direction::increasing, std::move(radii), std::move(values),
                               opt.tol, slack);
  if (exhausted) out.estimate.verdict = Convergence::converged;
  const double limit = exhausted ? out.estimate.last_value() : out.estimate.limit_estimate;
  out.deficit = 1.0 - limit;
  // a finite graph holds its heat exactly; otherwise classify the
  // extrapolated limit against 1
  if (exhausted || limit >= 1.0 - opt.tol) {
    out.verdict = MassVerdict::complete_suspected;
  } else if (limit < 1.0 - 10 * opt.tol &&
             out.estimate.verdict != Convergence::diverging) {
    out.verdict = MassVerdict::si_suspected;
  }
  return out;
}

double semigroup_residual(const DirichletDomain& dom, double s, double t) {
  if (s < 0 || t < 0) throw std::invalid_argument("semigroup_residual: s,t must be >= 0");
  HeatSolver solver(dom);
  const Eigen::MatrixXd ps = solver.kernel_matrix(s);
  const Eigen::MatrixXd pt = solver.kernel_matrix(t);
  const Eigen::MatrixXd pst = solver.kernel_matrix(s + t);
  const int n = dom.size();
  Eigen::VectorXd m(n);
  for (int i = 0; i < n; ++i) m[i] = dom.measure(i);
  const Eigen::MatrixXd composed = ps * m.asDiagonal() * pt;
  return (pst - composed).cwiseAbs().maxCoeff();
}

MonotoneEstimate lambda0(const GraphOracle& g, VertexId x0, const HeatOptions& opt) {
  std::vector<int> radii;
  std::vector<double> values;
  bool exhausted = false;
  for (const int R : opt.schedule()) {
    DirichletDomain dom = DirichletDomain::supported_ball(g, x0, R);
    if (dom.interior_size() == 0) throw std::runtime_error("lambda0: empty interior");
    radii.push_back(R);
    values.push_back(HeatSolver(dom, opt.dense_limit).lambda_min());
    if (!dom.has_boundary()) {
      exhausted = true;  // whole finite graph: exactly 0
      break;
    }
    if (values.size() >= 3) {
      const auto n = values.size();
      if (std::abs(values[n - 1] - values[n - 2]) < opt.tol &&
          std::abs(values[n - 2] - values[n - 3]) < opt.tol) {
        break;
      }
    }
  }
  auto est = make_estimate(Direction::decreasing, std::move(radii), std::move(values), opt.tol);
  if (exhausted) est.verdict = Convergence::converged;
  return est;
}

namespace {

TransienceVerdict classify_green(const MonotoneEstimate& est, double tol) {
  if (est.values.size() < 3) return TransienceVerdict::inconclusive;
  std::vector<double> rads, incs;
  for (std::size_t i = 1; i < est.values.size(); ++i) {
    const double d = std::abs(est.values[i] - est.values[i - 1]);
    if (d <= 0) return TransienceVerdict::transient_suspected;  // fully stabilized
    rads.push_back(est.radii[i]);
    incs.push_back(d);
  }
  if (est.verdict == Convergence::converged ||
      est.last_increment < tol * std::max(1.0, std::abs(est.last_value()))) {
    return TransienceVerdict::transient_suspected;
  }
  const PowerFit fit = fit_power_law(rads, incs);
  if (fit.valid && (fit.exponential_decay || fit.exponent >= 1.5)) {
    return TransienceVerdict::transient_suspected;
  }
  if (fit.valid && !fit.exponential_growth && fit.exponent <= 0.3) {
    return TransienceVerdict::recurrent_suspected;  // increments not decaying
  }
  return TransienceVerdict::inconclusive;
}

}  // namespace

GreenResult green(const GraphOracle& g, VertexId x, VertexId y, const HeatOptions& opt) {
  GreenResult out;
  std::vector<int> radii;
  std::vector<double> values;
  for (const int R : opt.schedule()) {
    DirichletDomain dom = DirichletDomain::supported_ball(g, x, R);
    if (!dom.has_boundary()) {
      // finite graph fully enclosed: no equilibrium, mass never escapes
      out.verdict = TransienceVerdict::recurrent_suspected;
      break;
    }
    const int ix = dom.index_of(x);
    const int iy = dom.index_of(y);
    radii.push_back(R);
    if (iy < 0 || dom.interior_index(iy) < 0) {
      values.push_back(0);
      continue;
    }
    values.push_back(HeatSolver(dom, opt.dense_limit).green_column(ix)[iy]);
  }
  out.estimate =
      make_estimate(Direction::increasing, std::move(radii), std::move(values), opt.tol);
  if (out.verdict == TransienceVerdict::inconclusive && !out.estimate.empty()) {
    out.verdict = classify_green(out.estimate, opt.tol);
  }
  return out;
}

double energy(const FiniteGraph& g, const std::unordered_map<std::uint64_t, double>& phi) {
  const auto value = [&phi](VertexId v) {
    auto it = phi.find(v.value);
    return it == phi.end() ? 0.0 : it->second;
  };
  double acc = 0;
  for (VertexId x : g.vertices()) {
    const double fx = value(x);
    for (const auto& n : g.neighbors(x)) {
      const double d = fx - value(n.to);
      acc += n.weight * d * d;
    }
  }
  return acc / 2;
}

namespace {

// cap_R(x) via the equilibrium potential: solve the harmonic Dirichlet problem
// with phi(x)=1, zero outside B_R, then evaluate the energy sum explicitly.
double capacity_at_radius(const GraphOracle& g, VertexId x, int R, int dense_limit) {
  DirichletDomain dom = DirichletDomain::supported_ball(g, x, R);
  const int ix = dom.index_of(x);
  if (!dom.has_boundary()) {
    return 0.0;  // finite graph: constants are admissible, the infimum is 0
  }
  HeatSolver solver(dom, dense_limit);
  const Eigen::VectorXd gcol = solver.green_column(ix);
  const double gxx = gcol[ix];
  if (!(gxx > 0)) throw std::runtime_error("capacity: degenerate equilibrium solve");
  // energy of phi = g(x,.)/g(x,x), summed edge by edge (includes cut edges)
  double acc = 0;
  const auto& ball = dom.ball();
  for (std::size_t i = 0; i < ball.verts.size(); ++i) {
    const double fi = gcol[static_cast<int>(i)] / gxx;
    // edges within the explored ball
    for (const auto& [j, w] : ball.adj[i]) {
      const double d = fi - gcol[j] / gxx;
      acc += w * d * d;
    }
    // edges leaving the exploration entirely (outside B_{R+1}) see phi = 0
    double outside = ball.full_degree[i] * ball.measure[i];
    for (const auto& [j, w] : ball.adj[i]) outside -= w;
    acc += outside * fi * fi;
  }
  return acc / 2;
}

CapacityVerdict classify_capacity(const MonotoneEstimate& est, double tol) {
  if (est.values.empty()) return CapacityVerdict::inconclusive;
  if (est.limit_estimate > 100 * tol &&
      (est.verdict == Convergence::converged || est.last_increment < 0.05 * est.last_value())) {
    return CapacityVerdict::positive;
  }
  // decay-to-zero evidence: cap_R ~ c/R^p with p near 1 or more
  std::vector<double> rads(est.radii.begin(), est.radii.end());
  const PowerFit fit = fit_power_law(rads, est.values);
  if (fit.valid && (fit.exponential_decay || fit.exponent >= 0.5)) {
    return CapacityVerdict::zero_suspected;
  }
  if (est.limit_estimate > 100 * tol) return CapacityVerdict::positive;
  return CapacityVerdict::inconclusive;
}

}  // namespace

CapacityResult capacity(const GraphOracle& g, VertexId x, const HeatOptions& opt) {
  CapacityResult out;
  std::vector<int> radii;
  std::vector<double> values;
  for (const int R : opt.schedule()) {
    radii.push_back(R);
    values.push_back(capacity_at_radius(g, x, R, opt.dense_limit));
  }
  out.estimate =
      make_estimate(Direction::decreasing, std::move(radii), std::move(values), opt.tol);
  out.verdict = classify_capacity(out.estimate, opt.tol);
  return out;
}

UTProbe ut_probe(const GraphOracle& g, VertexId x0, const HeatOptions& opt) {
  UTProbe probe;
  // deterministic sample: x0 plus the nearest vertices by BFS order
  const Ball b2 = explore_ball(g, x0, 2);
  std::vector<VertexId> sample;
  for (const VertexId v : b2.verts) {
    sample.push_back(v);
    if (sample.size() >= 8) break;
  }
  bool all_positive = true;
  bool any_zero = false;
  double min_cap = std::numeric_limits<double>::infinity();
  for (const VertexId v : sample) {
    CapacityResult res = capacity(g, v, opt);
    probe.sample_caps.push_back({v, res.estimate.limit_estimate});
    min_cap = std::min(min_cap, res.estimate.limit_estimate);
    if (res.verdict != CapacityVerdict::positive) all_positive = false;
    if (res.verdict == CapacityVerdict::zero_suspected) any_zero = true;
  }
  probe.min_cap = min_cap;
  probe.verdict = any_zero          ? CapacityVerdict::zero_suspected
                  : all_positive    ? CapacityVerdict::positive
                                    : CapacityVerdict::inconclusive;
  return probe;
}

}  // namespace heatgraph
