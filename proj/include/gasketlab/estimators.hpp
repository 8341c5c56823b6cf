#pragma once

// Monte Carlo estimators over the lattice GFF + edge-opening coupling, with
// exact twisted-determinant targets where the identity applies, plus the
// arm-exponent ladder and scaling fits. Sampling is embarrassingly parallel
// over disjoint sample-index ranges; per-sample RNG streams make every count
// independent of the worker partition.

#include <cstdint>
#include <optional>
#include <vector>

#include "gasketlab/lattice.hpp"

namespace gasketlab::soup {

struct EstimatorReport {
  double p_hat = 0.0;
  double std_err = 0.0;
  long n_samples = 0;
  std::optional<double> exact_target;
  std::optional<double> z_score;
  std::uint64_t seed = 0;
};

// P(no cluster winds oddly) estimated by MC against the exact target
// exp(-loop_mass_odd - v^2 excursion_mass_odd). v != 0 requires an even
// puncture count.
EstimatorReport verify_topological_identity(const LatticeModel& model,
                                            const DefectConfig& defects, double v,
                                            long n_samples, std::uint64_t seed,
                                            int n_threads = 1);

enum class EventKind { Disconnection, HolesDisconnection, OnePointSurround };

struct EventParams {
  double v = 0.0;
  // exclusion disks (domain units) for the full-domain variants; for
  // OnePointSurround a single disk centered on the puncture face
  std::vector<HoleSpec> exclusions;
};

// Estimates P(no qualifying odd cluster). HolesDisconnection runs on a model
// whose holes realize the punctures and carries the exact determinant
// target; the exclusion variants have no closed-form target.
EstimatorReport estimate_event(const LatticeModel& model, const DefectConfig& defects,
                               EventKind kind, const EventParams& params, long n_samples,
                               std::uint64_t seed, int n_threads = 1);

// One-point surround probabilities for several radii sharing the same field
// samples (the clusters do not depend on r, only the exclusion mask does).
std::vector<EstimatorReport> one_point_ladder(const LatticeModel& model,
                                              const DefectConfig& defects,
                                              const std::vector<double>& radii, long n_samples,
                                              std::uint64_t seed, int n_threads = 1);

struct LadderPoint {
  double scale = 0.0;  // r or eps
  double p_hat = 0.0;
  double std_err = 0.0;
};

enum class FitMode { Pure, LogCorrected };

struct ScalingFit {
  double exponent = 0.0;
  double intercept = 0.0;
  double exponent_stderr = 0.0;
};

// Least squares of log p against log scale; LogCorrected divides p by
// sqrt(log(1/scale)) first. Needs >= 3 points.
ScalingFit scaling_fit(const std::vector<LadderPoint>& points, FitMode mode);

}  // namespace gasketlab::soup
