#include "heatgraph/feller.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace heatgraph {

const char* to_string(SeriesVerdict v) {
  switch (v) {
    case SeriesVerdict::diverges_suspected: return "diverges-suspected";
    case SeriesVerdict::converges_suspected: return "converges-suspected";
    case SeriesVerdict::inconclusive: return "inconclusive";
  }
  return "?";
}

SeriesReport classify_series(std::vector<double> terms, std::string note) {
  SeriesReport rep;
  rep.terms = std::move(terms);
  rep.note = std::move(note);
  double acc = 0;
  bool finite = true;
  for (double a : rep.terms) {
    acc += a;
    rep.partial_sums.push_back(acc);
    if (!std::isfinite(a)) finite = false;
  }
  if (rep.terms.size() < 3) {
    rep.note += (rep.note.empty() ? "" : "; ") + std::string("window too short");
    return rep;
  }
  if (!finite) {
    rep.verdict = SeriesVerdict::diverges_suspected;
    rep.note += (rep.note.empty() ? "" : "; ") + std::string("non-finite terms");
    return rep;
  }
  std::vector<double> radii;
  for (std::size_t i = 0; i < rep.terms.size(); ++i) radii.push_back(double(i + 1));
  const PowerFit fit = fit_power_law(radii, rep.terms);
  if (!fit.valid) return rep;
  rep.tail_exponent = fit.exponent;
  if (fit.exponential_decay) {
    rep.verdict = SeriesVerdict::converges_suspected;
  } else if (fit.exponential_growth || fit.exponent <= 1.05) {
    rep.verdict = SeriesVerdict::diverges_suspected;
  } else if (fit.exponent >= 1.2) {
    rep.verdict = SeriesVerdict::converges_suspected;
  }
  return rep;
}

SeriesReport series_inner_degree(const GraphOracle& g, VertexId x0, int rmax) {
  if (rmax < 2) throw std::invalid_argument("series_inner_degree: rmax must be >= 2");
  const Ball ball = explore_ball(g, x0, rmax + 1);
  std::vector<double> terms;
  std::string note;
  for (int r = 1; r <= rmax; ++r) {
    const SphereProfile p = sphere_profile_in_ball(ball, r);
    if (p.empty) {
      note = "sphere empty at r=" + std::to_string(r) + " (graph exhausted)";
      break;
    }
    terms.push_back(1.0 / p.Dminus);
  }
  SeriesReport rep = classify_series(std::move(terms), note);
  if (!note.empty()) rep.verdict = SeriesVerdict::diverges_suspected;
  return rep;
}

SeriesReport series_nonfeller(const GraphOracle& g, VertexId x0, int rmax) {
  if (rmax < 2) throw std::invalid_argument("series_nonfeller: rmax must be >= 2");
  const Ball ball = explore_ball(g, x0, rmax + 1);
  std::vector<double> terms;
  std::string note;
  for (int r = 1; r <= rmax; ++r) {
    const SphereProfile p = sphere_profile_in_ball(ball, r);
    if (p.empty) {
      note = "sphere empty at r=" + std::to_string(r) + " (graph exhausted)";
      break;
    }
    terms.push_back((p.D - p.dminus + 1.0) / p.dminus);
  }
  SeriesReport rep = classify_series(std::move(terms), note);
  if (!note.empty()) rep.verdict = SeriesVerdict::diverges_suspected;
  return rep;
}

CertificateV certificate_v(const RadialProfile& profile, double lambda, int rmax,
                           double vanish_fraction) {
  if (!(lambda < 0)) throw std::invalid_argument("certificate_v: lambda must be < 0");
  CertificateV out;
  out.values.assign(static_cast<std::size_t>(rmax) + 1, 1.0);
  for (int r = 1; r <= rmax; ++r) {
    const double dm = profile.deg_minus(r);
    if (!(dm > 0)) throw std::domain_error("certificate_v: D_-(r) must be positive");
    out.values[static_cast<std::size_t>(r)] =
        out.values[static_cast<std::size_t>(r - 1)] * dm / (dm - lambda);
  }
  if (profile.deg_plus) {
    out.inequality_checked = true;
    double worst = std::numeric_limits<double>::infinity();
    for (int r = 0; r <= rmax - 1; ++r) {
      const auto v = [&](int i) { return out.values[static_cast<std::size_t>(i)]; };
      double lv;
      if (r == 0) {
        lv = profile.deg_plus(0) * (v(0) - v(1));
      } else {
        lv = profile.deg_plus(r) * (v(r) - v(r + 1)) +
             profile.deg_minus(r) * (v(r) - v(r - 1));
      }
      worst = std::min(worst, lv - lambda * v(r));
    }
    out.min_inequality_residual = worst;
  }
  bool monotone = true;
  for (int r = 1; r <= rmax; ++r) {
    if (out.values[static_cast<std::size_t>(r)] >
        out.values[static_cast<std::size_t>(r - 1)] + 1e-15) {
      monotone = false;
    }
  }
  // slack covers the exact-threshold case (e.g. v(99) == 0.01 up to rounding)
  out.vanishing =
      monotone && out.values.back() <= vanish_fraction * out.values.front() * (1 + 1e-9);
  return out;
}

CertificateV certificate_v(const GraphOracle& g, VertexId x0, double lambda, int rmax,
                           double vanish_fraction) {
  const Ball ball = explore_ball(g, x0, rmax + 1);
  auto profiles = std::make_shared<std::vector<SphereProfile>>();
  profiles->push_back({});  // r = 0 placeholder
  for (int r = 1; r <= rmax; ++r) {
    const SphereProfile p = sphere_profile_in_ball(ball, r);
    if (p.empty) throw std::domain_error("certificate_v: graph exhausted before rmax");
    // the radial computation needs spherically symmetric degrees
    if (p.Dminus - p.dminus > 1e-9 * p.Dminus || p.Dplus - p.dplus > 1e-9 * std::max(1.0, p.Dplus)) {
      throw std::domain_error("certificate_v: graph not spherically symmetric around x0");
    }
    profiles->push_back(p);
  }
  double deg_plus0 = weighted_degree(g, x0);
  RadialProfile prof{
      [profiles](int r) { return (*profiles)[static_cast<std::size_t>(r)].Dminus; },
      [profiles, deg_plus0](int r) {
        return r == 0 ? deg_plus0 : (*profiles)[static_cast<std::size_t>(r)].Dplus;
      }};
  return certificate_v(prof, lambda, rmax, vanish_fraction);
}

ComparisonW comparison_w(std::function<double(int)> deg_max,
                         std::function<double(int)> deg_minus_min, double lambda, double v0,
                         int rmax) {
  if (!(lambda < 0)) throw std::invalid_argument("comparison_w: lambda must be < 0");
  if (!(v0 > 0)) throw std::invalid_argument("comparison_w: v0 must be > 0");
  ComparisonW out;
  out.values.assign(static_cast<std::size_t>(rmax) + 1, v0);
  for (int r = 1; r <= rmax; ++r) {
    out.values[static_cast<std::size_t>(r)] = out.values[static_cast<std::size_t>(r - 1)] *
                                              deg_minus_min(r) / (deg_max(r) - lambda);
  }
  double lo = std::numeric_limits<double>::infinity();
  for (double w : out.values) lo = std::min(lo, w);
  out.fitted_epsilon = lo / v0;
  // flattening: the last two ratios w(r)/w(r-1) close to 1
  const auto n = out.values.size();
  if (n >= 3) {
    const double q1 = out.values[n - 1] / out.values[n - 2];
    const double q2 = out.values[n - 2] / out.values[n - 3];
    out.bounded_below = out.fitted_epsilon > 0 && q1 > 0.98 && q2 > 0.98;
  }
  return out;
}

BirthDeathNonFeller birth_death_nonfeller(std::function<double(int)> b_edge,
                                          std::function<double(int)> m, int rmax) {
  BirthDeathNonFeller out;
  // series 1: 1/b(r,r+1)
  std::vector<double> recip;
  for (int r = 0; r < rmax; ++r) recip.push_back(1.0 / b_edge(r));
  out.reciprocal_b = classify_series(std::move(recip), "1/b(r,r+1)");

  // series 2: m({r,...})/b(r,r-1); tails computed to a horizon past rmax with
  // a geometric extrapolation fitted to the last measure ratios
  const int horizon = 4 * rmax;
  std::vector<double> mv;
  for (int r = 0; r <= horizon; ++r) mv.push_back(m(r));
  double tail_extra = 0;
  const double q = mv[static_cast<std::size_t>(horizon)] /
                   mv[static_cast<std::size_t>(horizon - 1)];
  if (q > 0 && q < 0.999) {
    tail_extra = mv.back() * q / (1 - q);
  } else {
    tail_extra = std::numeric_limits<double>::infinity();  // tails do not close
  }
  std::vector<double> tails(static_cast<std::size_t>(rmax) + 1, 0.0);
  {
    double acc = tail_extra;
    std::vector<double> suffix(static_cast<std::size_t>(horizon) + 1, 0.0);
    for (int r = horizon; r >= 0; --r) {
      acc += mv[static_cast<std::size_t>(r)];
      suffix[static_cast<std::size_t>(r)] = acc;
    }
    for (int r = 0; r <= rmax; ++r) tails[static_cast<std::size_t>(r)] = suffix[static_cast<std::size_t>(r)];
  }
  std::vector<double> terms;
  for (int r = 1; r <= rmax; ++r) {
    terms.push_back(tails[static_cast<std::size_t>(r)] / b_edge(r - 1));
  }
  out.measure_tails = classify_series(std::move(terms), "m({r,...})/b(r,r-1)");
  out.tails_finite = std::isfinite(tail_extra);

  out.non_feller_suspected =
      out.tails_finite &&
      out.reciprocal_b.verdict == SeriesVerdict::diverges_suspected &&
      out.measure_tails.verdict == SeriesVerdict::converges_suspected;
  return out;
}

BirthDeathNonFeller birth_death_nonfeller(const exprlang::Expr& b_edge,
                                          const exprlang::Expr& m, int rmax) {
  return birth_death_nonfeller([b_edge](int r) { return b_edge.eval(r); },
                               [m](int r) { return m.eval(r); }, rmax);
}

std::vector<UniformFellerRow> uniform_feller_probe(const GraphOracle& g, VertexId x,
                                                   double T, int n_times, int rmax,
                                                   const HeatOptions& opt) {
  if (!(T > 0)) throw std::invalid_argument("uniform_feller_probe: T must be > 0");
  if (n_times < 2) throw std::invalid_argument("uniform_feller_probe: n_times must be >= 2");
  // geodesic ray from x: at each radius pick the smallest-id vertex adjacent
  // to the previous ray vertex (falling back to any sphere vertex)
  const Ball ball = explore_ball(g, x, rmax);
  std::vector<VertexId> ray{x};
  for (int r = 1; r <= rmax; ++r) {
    const VertexId prev = ray.back();
    VertexId pick{};
    bool found = false;
    for (const auto& n : g.neighbors(prev)) {
      const int j = ball.index_of(n.to);
      if (j >= 0 && ball.dist[static_cast<std::size_t>(j)] == r) {
        pick = n.to;
        found = true;
        break;  // neighbor lists are sorted by id
      }
    }
    if (!found) break;  // ray exhausted (finite graph)
    ray.push_back(pick);
  }

  const double degx = weighted_degree(g, x);
  std::vector<UniformFellerRow> rows;
  for (std::size_t r = 0; r < ray.size(); ++r) {
    UniformFellerRow row;
    row.r = static_cast<int>(r);
    row.y = ray[r];
    // one converged exhaustion per target; reuse the largest radius needed
    HeatOptions o = opt;
    o.rmax = std::max(opt.rmax, rmax + 4);
    std::vector<double> pt(static_cast<std::size_t>(n_times));
    for (int k = 0; k < n_times; ++k) {
      const double t = T * k / (n_times - 1);
      pt[static_cast<std::size_t>(k)] =
          (t == 0) ? (ray[r] == x ? 1.0 / g.measure(x) : 0.0)
                   : heat_kernel(g, x, ray[r], t, o).estimate.last_value();
    }
    row.max_kernel = *std::max_element(pt.begin(), pt.end());
    const double pT = pt.back();
    double worst = -std::numeric_limits<double>::infinity();
    for (double v : pt) worst = std::max(worst, v - std::exp(T * degx) * pT);
    row.comparison_residual = worst;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace heatgraph
