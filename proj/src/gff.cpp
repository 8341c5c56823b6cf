#include "gasketlab/gff.hpp"

#include <cmath>

namespace gasketlab::soup {

SpMat build_laplacian(const LatticeModel& model, const DefectConfig& defects, bool twisted) {
  const int n = model.n_sites();
  const double c = model.conductance;
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(model.edges.size() * 2 + static_cast<size_t>(n));
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  for (size_t eid = 0; eid < model.edges.size(); ++eid) {
    const auto& e = model.edges[eid];
    diag[e.u] += c;
    diag[e.v] += c;
    const bool flip = twisted && defects.edge_parity[eid];
    const double off = flip ? c : -c;
    trip.emplace_back(e.u, e.v, off);
    trip.emplace_back(e.v, e.u, off);
  }
  for (const auto& be : model.bedges) diag[be.u] += c;
  for (int i = 0; i < n; ++i) trip.emplace_back(i, i, diag[i]);
  SpMat L(n, n);
  L.setFromTriplets(trip.begin(), trip.end());
  return L;
}

namespace {

// 2 * sum log diag(F) from the materialized Cholesky factor. Lower
// triangular CSC: the first stored entry of each column is the diagonal.
double log_det_from_llt(const Eigen::SimplicialLLT<SpMat>& llt) {
  const SpMat F = llt.matrixL();
  double s = 0.0;
  for (int k = 0; k < F.outerSize(); ++k) {
    SpMat::InnerIterator it(F, k);
    if (!it || it.row() != k) throw std::runtime_error("log_det: unexpected factor layout");
    s += std::log(it.value());
  }
  return 2.0 * s;
}

double log_det_of(const SpMat& L, const char* what) {
  Eigen::SimplicialLLT<SpMat> llt(L);
  if (llt.info() != Eigen::Success)
    throw std::runtime_error(std::string(what) + ": factorization failed");
  return log_det_from_llt(llt);
}

// Parity-decorated boundary conductance vectors. plain: s_x = sum_b c(x,b);
// twisted: s_x = sum_b (-1)^{parity(x,b) + tau(b)} c(x,b); outer ghosts only.
Eigen::VectorXd boundary_vector(const LatticeModel& model, const DefectConfig& defects,
                                bool twisted) {
  Eigen::VectorXd s = Eigen::VectorXd::Zero(model.n_sites());
  for (size_t bid = 0; bid < model.bedges.size(); ++bid) {
    const auto& be = model.bedges[bid];
    if (!model.ghosts[static_cast<size_t>(be.ghost)].outer) continue;
    double w = model.conductance;
    if (twisted) {
      const int parity = defects.bedge_parity[bid] ^ defects.tau[static_cast<size_t>(be.ghost)];
      if (parity) w = -w;
    }
    s[be.u] += w;
  }
  return s;
}

}  // namespace

double loop_mass_odd(const LatticeModel& model, const DefectConfig& defects) {
  const double ld_plain = log_det_of(build_laplacian(model, defects, false), "loop_mass_odd");
  const double ld_twist = log_det_of(build_laplacian(model, defects, true), "loop_mass_odd");
  return 0.5 * (ld_twist - ld_plain);
}

double excursion_mass_odd(const LatticeModel& model, const DefectConfig& defects) {
  if (defects.n_punctures % 2 != 0)
    throw std::domain_error("excursion_mass_odd: puncture count must be even");
  const SpMat Lp = build_laplacian(model, defects, false);
  const SpMat Lt = build_laplacian(model, defects, true);
  Eigen::SimplicialLLT<SpMat> llt_p(Lp), llt_t(Lt);
  if (llt_p.info() != Eigen::Success || llt_t.info() != Eigen::Success)
    throw std::runtime_error("excursion_mass_odd: factorization failed");
  const Eigen::VectorXd s = boundary_vector(model, defects, false);
  const Eigen::VectorXd s_sigma = boundary_vector(model, defects, true);
  const double m_plain = s.dot(llt_p.solve(s));
  const double m_twist = s_sigma.dot(llt_t.solve(s_sigma));
  return 0.5 * (m_plain - m_twist);
}

GffSampler::GffSampler(const LatticeModel& model) : model_(model) {
  DefectConfig none;
  none.edge_parity.assign(model.edges.size(), 0);
  none.bedge_parity.assign(model.bedges.size(), 0);
  none.tau.assign(model.ghosts.size(), 0);
  const SpMat L = build_laplacian(model, none, false);
  llt_.compute(L);
  if (llt_.info() != Eigen::Success) throw std::runtime_error("GffSampler: factorization failed");
  log_det_ = log_det_from_llt(llt_);
  h_ = llt_.solve(boundary_vector(model, none, false));
  scratch_.resize(model.n_sites());
}

void GffSampler::sample(double v, CounterRng& rng, Eigen::VectorXd& field) const {
  const int n = model_.n_sites();
  Eigen::VectorXd z(n);
  for (int i = 0; i < n; ++i) z[i] = rng.next_gaussian();
  // cov(phi) = L^{-1}: with P L P^T = F F^T, phi = P^T F^{-T} z
  scratch_ = llt_.matrixU().solve(z);
  field = llt_.permutationPinv() * scratch_;
  if (v != 0.0) field += v * h_;
}

double GffSampler::green_diagonal(int site) const {
  Eigen::VectorXd e = Eigen::VectorXd::Zero(model_.n_sites());
  e[site] = 1.0;
  return llt_.solve(e)[site];
}

}  // namespace gasketlab::soup
