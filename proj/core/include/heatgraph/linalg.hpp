#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCholesky>
#include <memory>
#include <mutex>
#include <optional>

#include "heatgraph/domain.hpp"

namespace heatgraph {

/// Heat semigroup, equilibrium solves and spectral bottom on one Dirichlet
/// domain. Dense symmetric eigendecomposition up to `dense_limit` interior
/// vertices, Lanczos with adaptive substepping beyond. Factorizations are
/// cached lazily; concurrent reads are serialized internally.
class HeatSolver {
 public:
  explicit HeatSolver(const DirichletDomain& dom, int dense_limit = 2000);

  const DirichletDomain& domain() const { return *dom_; }

  /// Kernel p_t(x, y) indexed by domain vertices (zero on the boundary).
  double kernel(int x, int y, double t) const;
  /// One kernel column p_t(x, .) over all domain vertices.
  Eigen::VectorXd kernel_column(int x, double t) const;
  /// Full kernel matrix over the domain (dense path only).
  Eigen::MatrixXd kernel_matrix(double t) const;

  /// Heat content sum_y p_t(x,y) m(y), the survival mass of the truncation.
  double mass(int x, double t) const;

  /// Smallest eigenvalue of the Dirichlet operator (0 for a boundaryless
  /// domain, where the constant function is harmonic).
  double lambda_min() const;

  /// Equilibrium solve K u = e_x of the stiffness form; the Green column of
  /// the domain in measure-free normalization.
  Eigen::VectorXd green_column(int x) const;

  bool dense() const { return dense_path_; }

 private:
  struct Dense {
    Eigen::VectorXd eigenvalues;
    Eigen::MatrixXd eigenvectors;
  };
  const Dense& dense_data() const;
  const Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>>& stiffness_ldlt() const;
  Eigen::VectorXd expmv(const Eigen::VectorXd& v, double t) const;
  Eigen::VectorXd expmv_single(const Eigen::VectorXd& v, double t, double tol,
                               bool& converged) const;

  std::shared_ptr<const DirichletDomain> dom_;
  bool dense_path_ = true;

  mutable std::mutex mu_;
  mutable std::optional<Dense> dense_;
  mutable std::shared_ptr<Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>>> ldlt_;
};

/// Kernel matrix of a domain at time t (boundary rows/columns zero), the
/// direct dense route.
Eigen::MatrixXd dirichlet_heat_kernel(const DirichletDomain& dom, double t);

}  // namespace heatgraph
