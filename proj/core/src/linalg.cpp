#include "heatgraph/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

namespace heatgraph {

HeatSolver::HeatSolver(const DirichletDomain& dom, int dense_limit)
    : dom_(std::make_shared<DirichletDomain>(dom)),
      dense_path_(dom.interior_size() <= dense_limit) {}

const HeatSolver::Dense& HeatSolver::dense_data() const {
  std::lock_guard lock(mu_);
  if (!dense_) {
    Eigen::MatrixXd a = Eigen::MatrixXd(dom_->symmetric_operator());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
    if (es.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
    dense_ = Dense{es.eigenvalues(), es.eigenvectors()};
  }
  return *dense_;
}

const Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>>& HeatSolver::stiffness_ldlt() const {
  std::lock_guard lock(mu_);
  if (!ldlt_) {
    ldlt_ = std::make_shared<Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>>>();
    ldlt_->compute(dom_->stiffness());
    if (ldlt_->info() != Eigen::Success) {
      throw std::runtime_error("stiffness factorization failed (singular system?)");
    }
  }
  return *ldlt_;
}

double HeatSolver::kernel(int x, int y, double t) const {
  if (t < 0) throw std::invalid_argument("kernel: t must be >= 0");
  const int ix = dom_->interior_index(x);
  const int iy = dom_->interior_index(y);
  if (ix < 0 || iy < 0) return 0.0;  // vanishes on the boundary
  if (t == 0) {
    return x == y ? 1.0 / dom_->measure(x) : 0.0;
  }
  const double norm =
      std::sqrt(dom_->measure(x) * dom_->measure(y));
  if (dense_path_) {
    const auto& d = dense_data();
    const auto& U = d.eigenvectors;
    double acc = 0;
    for (int k = 0; k < U.cols(); ++k) {
      acc += std::exp(-t * d.eigenvalues[k]) * U(ix, k) * U(iy, k);
    }
    return acc / norm;
  }
  Eigen::VectorXd e = Eigen::VectorXd::Zero(dom_->interior_size());
  e[ix] = 1.0;
  return expmv(e, t)[iy] / norm;
}

Eigen::VectorXd HeatSolver::kernel_column(int x, double t) const {
  if (t < 0) throw std::invalid_argument("kernel_column: t must be >= 0");
  const int n = dom_->size();
  Eigen::VectorXd out = Eigen::VectorXd::Zero(n);
  const int ix = dom_->interior_index(x);
  if (ix < 0) return out;
  if (t == 0) {
    out[x] = 1.0 / dom_->measure(x);
    return out;
  }
  Eigen::VectorXd col(dom_->interior_size());
  if (dense_path_) {
    const auto& d = dense_data();
    col = d.eigenvectors *
          (Eigen::ArrayXd::exp(-t * d.eigenvalues.array()).matrix().asDiagonal() *
           d.eigenvectors.row(ix).transpose());
  } else {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(dom_->interior_size());
    e[ix] = 1.0;
    col = expmv(e, t);
  }
  const double mx = std::sqrt(dom_->measure(x));
  for (int a = 0; a < dom_->interior_size(); ++a) {
    const int i = dom_->interior()[static_cast<std::size_t>(a)];
    out[i] = col[a] / (mx * std::sqrt(dom_->measure(i)));
  }
  return out;
}

Eigen::MatrixXd HeatSolver::kernel_matrix(double t) const {
  if (t < 0) throw std::invalid_argument("kernel_matrix: t must be >= 0");
  if (!dense_path_) {
    throw std::runtime_error("kernel_matrix: domain too large for the dense path");
  }
  const int n = dom_->size();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
  if (dom_->interior_size() == 0) return out;
  const auto& d = dense_data();
  Eigen::MatrixXd interior =
      d.eigenvectors *
      Eigen::ArrayXd::exp(-t * d.eigenvalues.array()).matrix().asDiagonal() *
      d.eigenvectors.transpose();
  for (int a = 0; a < dom_->interior_size(); ++a) {
    const int i = dom_->interior()[static_cast<std::size_t>(a)];
    for (int b = 0; b < dom_->interior_size(); ++b) {
      const int j = dom_->interior()[static_cast<std::size_t>(b)];
      out(i, j) = interior(a, b) / std::sqrt(dom_->measure(i) * dom_->measure(j));
    }
  }
  return out;
}

double HeatSolver::mass(int x, double t) const {
  if (t < 0) throw std::invalid_argument("mass: t must be >= 0");
  const int ix = dom_->interior_index(x);
  if (ix < 0) return 0.0;
  if (t == 0) return 1.0;
  // sum_y p_t(x,y) m(y) = [exp(-t A~) sqrt(m)]_x / sqrt(m(x))
  const int ni = dom_->interior_size();
  Eigen::VectorXd sqm(ni);
  for (int a = 0; a < ni; ++a) {
    sqm[a] = std::sqrt(dom_->measure(dom_->interior()[static_cast<std::size_t>(a)]));
  }
  Eigen::VectorXd res;
  if (dense_path_) {
    const auto& d = dense_data();
    res = d.eigenvectors *
          (Eigen::ArrayXd::exp(-t * d.eigenvalues.array()).matrix().asDiagonal() *
           (d.eigenvectors.transpose() * sqm));
  } else {
    res = expmv(sqm, t);
  }
  return res[ix] / sqm[ix];
}

double HeatSolver::lambda_min() const {
  if (dom_->interior_size() == 0) {
    throw std::runtime_error("lambda_min: empty interior");
  }
  if (!dom_->has_boundary()) return 0.0;  // constants are harmonic
  if (dense_path_) {
    return dense_data().eigenvalues[0];
  }
  // inverse power iteration on the symmetrized operator (positive definite
  // since the boundary is nonempty)
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver;
  solver.compute(dom_->symmetric_operator());
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("lambda_min: factorization failed");
  }
  const int n = dom_->interior_size();
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v[i] = 1.0 + 1e-3 * std::sin(0.7 * (i + 1));
  v.normalize();
  double lam = 0, prev = -1;
  for (int it = 0; it < 500; ++it) {
    Eigen::VectorXd w = solver.solve(v);
    const double nw = w.norm();
    if (!(nw > 0)) break;
    w /= nw;
    lam = w.dot(dom_->symmetric_operator() * w);
    if (std::abs(lam - prev) < 1e-13 * std::max(1.0, std::abs(lam))) {
      v = w;
      break;
    }
    prev = lam;
    v = w;
  }
  return lam;
}

Eigen::VectorXd HeatSolver::green_column(int x) const {
  const int ix = dom_->interior_index(x);
  if (ix < 0) throw std::invalid_argument("green_column: x not interior");
  if (!dom_->has_boundary()) {
    throw std::runtime_error("green_column: boundaryless domain, system is singular");
  }
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(dom_->interior_size());
  rhs[ix] = 1.0;
  Eigen::VectorXd sol = stiffness_ldlt().solve(rhs);
  Eigen::VectorXd out = Eigen::VectorXd::Zero(dom_->size());
  for (int a = 0; a < dom_->interior_size(); ++a) {
    out[dom_->interior()[static_cast<std::size_t>(a)]] = sol[a];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Lanczos exp(-tA)v with full reorthogonalization and adaptive time splitting.

Eigen::VectorXd HeatSolver::expmv_single(const Eigen::VectorXd& v, double t, double tol,
                                         bool& converged) const {
  const auto& A = dom_->symmetric_operator();
  const int n = static_cast<int>(A.rows());
  const double beta0 = v.norm();
  converged = true;
  if (beta0 == 0 || t == 0) return v;

  const int kmax = std::min(n, 140);
  Eigen::MatrixXd V(n, kmax);
  Eigen::VectorXd alpha(kmax), beta(kmax);
  V.col(0) = v / beta0;
  Eigen::VectorXd prev_approx;
  int k = 0;
  for (; k < kmax; ++k) {
    Eigen::VectorXd w = A * V.col(k);
    alpha[k] = V.col(k).dot(w);
    w -= alpha[k] * V.col(k);
    if (k > 0) w -= beta[k - 1] * V.col(k - 1);
    // full reorthogonalization keeps the small basis numerically orthogonal
    w -= V.leftCols(k + 1) * (V.leftCols(k + 1).transpose() * w);
    beta[k] = w.norm();

    const bool breakdown = beta[k] < 1e-14 * std::max(1.0, std::abs(alpha[k]));
    const bool check = breakdown || k + 1 == kmax || (k >= 8 && (k % 4 == 0));
    if (check) {
      const int m = k + 1;
      Eigen::MatrixXd T = Eigen::MatrixXd::Zero(m, m);
      for (int i = 0; i < m; ++i) {
        T(i, i) = alpha[i];
        if (i + 1 < m) T(i, i + 1) = T(i + 1, i) = beta[i];
      }
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
      Eigen::VectorXd small = es.eigenvectors() *
                              (Eigen::ArrayXd::exp(-t * es.eigenvalues().array()) *
                               es.eigenvectors().row(0).transpose().array())
                                  .matrix();
      Eigen::VectorXd approx = beta0 * (V.leftCols(m) * small);
      if (breakdown) return approx;
      if (prev_approx.size() == approx.size()) {
        const double diff = (approx - prev_approx).norm();
        if (diff <= tol * std::max(1e-300, approx.norm())) return approx;
      }
      prev_approx = approx;
    }
    if (breakdown) break;
    if (k + 1 < kmax) V.col(k + 1) = w / beta[k];
  }
  converged = false;
  return prev_approx;
}

Eigen::VectorXd HeatSolver::expmv(const Eigen::VectorXd& v, double t) const {
  constexpr double tol = 1e-11;
  int steps = 1;
  Eigen::VectorXd result;
  for (; steps <= 1024; steps *= 2) {
    bool ok = true;
    Eigen::VectorXd x = v;
    for (int s = 0; s < steps && ok; ++s) {
      x = expmv_single(x, t / steps, tol, ok);
    }
    if (ok) {
      result = x;
      break;
    }
  }
  if (result.size() == 0) throw std::runtime_error("expmv: no convergence");
  return result;
}

Eigen::MatrixXd dirichlet_heat_kernel(const DirichletDomain& dom, double t) {
  return HeatSolver(dom).kernel_matrix(t);
}

}  // namespace heatgraph
