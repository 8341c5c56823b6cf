#pragma once

// Sparse linear algebra over a LatticeModel: Dirichlet and sign-twisted
// Laplacians, log-determinants, boundary-to-boundary excursion masses, and
// Gaussian free field sampling from a cached Cholesky factorization.

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

#include "gasketlab/lattice.hpp"
#include "gasketlab/rng.hpp"

namespace gasketlab::soup {

using SpMat = Eigen::SparseMatrix<double>;

// Graph Laplacian on interior sites; boundary rows eliminated into the
// diagonal. With twist = true, edges of odd defect parity flip the sign of
// their off-diagonal entries.
SpMat build_laplacian(const LatticeModel& model, const DefectConfig& defects, bool twisted);

// Mass of loops with odd total winding around the punctures:
// (1/2) log( det L_twisted / det L ).
double loop_mass_odd(const LatticeModel& model, const DefectConfig& defects);

// Mass of outer-boundary excursions with odd winding parity:
// (1/2)(s^T L^{-1} s - s_sigma^T L_twisted^{-1} s_sigma), where s collects
// boundary conductances and s_sigma their parity-decorated version.
// Requires an even puncture count.
double excursion_mass_odd(const LatticeModel& model, const DefectConfig& defects);

class GffSampler {
 public:
  explicit GffSampler(const LatticeModel& model);

  // field = v * h + L^{-1/2}-correlated Gaussian, h the harmonic extension
  // of 1 on the outer boundary (0 on hole boundaries).
  void sample(double v, CounterRng& rng, Eigen::VectorXd& field) const;

  const Eigen::VectorXd& harmonic() const { return h_; }
  double log_det() const { return log_det_; }
  double green_diagonal(int site) const;

 private:
  const LatticeModel& model_;
  Eigen::SimplicialLLT<SpMat> llt_;
  Eigen::VectorXd h_;
  double log_det_ = 0.0;
  mutable Eigen::VectorXd scratch_;
};

}  // namespace gasketlab::soup
