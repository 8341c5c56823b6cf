#include "gasketlab/estimators.hpp"

#include <cmath>
#include <thread>

#include "gasketlab/cluster_state.hpp"
#include "gasketlab/gff.hpp"

namespace gasketlab::soup {

namespace {

EstimatorReport finish_report(long successes, long n_samples, std::uint64_t seed,
                              std::optional<double> target) {
  EstimatorReport rep;
  rep.n_samples = n_samples;
  rep.seed = seed;
  rep.p_hat = double(successes) / double(n_samples);
  rep.std_err = std::sqrt(std::max(rep.p_hat * (1.0 - rep.p_hat), 1e-300) / double(n_samples));
  rep.exact_target = target;
  if (target) rep.z_score = (rep.p_hat - *target) / rep.std_err;
  return rep;
}

// Parallel count of samples satisfying a per-sample predicate. Counts are
// integers, so the reduction is independent of the partition.
template <typename Predicate>
long parallel_count(const LatticeModel& model, const GffSampler& sampler,
                    const DefectConfig& defects, double v, long n_samples, std::uint64_t seed,
                    int n_threads, Predicate&& pred) {
  n_threads = std::max(1, n_threads);
  std::vector<long> partial(static_cast<size_t>(n_threads), 0);
  auto worker = [&](int tid) {
    ClusterState state(model.n_sites());
    Eigen::VectorXd field(model.n_sites());
    long local = 0;
    for (long i = tid; i < n_samples; i += n_threads) {
      CounterRng rng(seed, static_cast<uint64_t>(i));
      sampler.sample(v, rng, field);
      state.build(model, defects, field, v, rng);
      if (pred(state)) ++local;
    }
    partial[static_cast<size_t>(tid)] = local;
  };
  if (n_threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(n_threads));
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  long total = 0;
  for (long c : partial) total += c;
  return total;
}

}  // namespace

EstimatorReport verify_topological_identity(const LatticeModel& model,
                                            const DefectConfig& defects, double v,
                                            long n_samples, std::uint64_t seed, int n_threads) {
  if (v != 0.0 && defects.n_punctures % 2 != 0)
    throw std::domain_error("verify_topological_identity: v != 0 needs an even puncture count");
  double exponent = loop_mass_odd(model, defects);
  if (v != 0.0) exponent += v * v * excursion_mass_odd(model, defects);
  const double target = std::exp(-exponent);

  GffSampler sampler(model);
  const long ok = parallel_count(model, sampler, defects, v, n_samples, seed, n_threads,
                                 [](ClusterState& st) { return !st.has_odd_cluster(); });
  return finish_report(ok, n_samples, seed, target);
}

EstimatorReport estimate_event(const LatticeModel& model, const DefectConfig& defects,
                               EventKind kind, const EventParams& params, long n_samples,
                               std::uint64_t seed, int n_threads) {
  GffSampler sampler(model);
  std::optional<double> target;
  if (kind == EventKind::HolesDisconnection) {
    double exponent = loop_mass_odd(model, defects);
    if (params.v != 0.0) exponent += params.v * params.v * excursion_mass_odd(model, defects);
    target = std::exp(-exponent);
  }

  std::vector<uint8_t> excluded(static_cast<size_t>(model.n_sites()), 0);
  for (const HoleSpec& d : params.exclusions) {
    const auto mask = disk_site_mask(model, d.cx, d.cy, d.radius);
    for (size_t i = 0; i < mask.size(); ++i) excluded[i] |= mask[i];
  }
  const bool use_exclusion =
      kind != EventKind::HolesDisconnection && !params.exclusions.empty();

  const long ok = parallel_count(
      model, sampler, defects, params.v, n_samples, seed, n_threads,
      [&](ClusterState& st) {
        return use_exclusion ? !st.has_odd_cluster_excluding(excluded) : !st.has_odd_cluster();
      });
  return finish_report(ok, n_samples, seed, target);
}

std::vector<EstimatorReport> one_point_ladder(const LatticeModel& model,
                                              const DefectConfig& defects,
                                              const std::vector<double>& radii, long n_samples,
                                              std::uint64_t seed, int n_threads) {
  if (defects.punctures.empty()) throw std::domain_error("one_point_ladder: need a puncture");
  const double fx = (defects.punctures[0].fi + 0.5) / model.mesh_m;
  const double fy = (defects.punctures[0].fj + 0.5) / model.mesh_m;
  std::vector<std::vector<uint8_t>> masks;
  masks.reserve(radii.size());
  for (double r : radii) masks.push_back(disk_site_mask(model, fx, fy, r));

  GffSampler sampler(model);
  n_threads = std::max(1, n_threads);
  std::vector<std::vector<long>> partial(static_cast<size_t>(n_threads),
                                         std::vector<long>(radii.size(), 0));
  auto worker = [&](int tid) {
    ClusterState state(model.n_sites());
    Eigen::VectorXd field(model.n_sites());
    for (long i = tid; i < n_samples; i += n_threads) {
      CounterRng rng(seed, static_cast<uint64_t>(i));
      sampler.sample(0.0, rng, field);
      state.build(model, defects, field, 0.0, rng);
      for (size_t k = 0; k < radii.size(); ++k)
        if (!state.has_odd_cluster_excluding(masks[k])) ++partial[static_cast<size_t>(tid)][k];
    }
  };
  if (n_threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(n_threads));
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }

  std::vector<EstimatorReport> out;
  for (size_t k = 0; k < radii.size(); ++k) {
    long ok = 0;
    for (int t = 0; t < n_threads; ++t) ok += partial[static_cast<size_t>(t)][k];
    out.push_back(finish_report(ok, n_samples, seed, std::nullopt));
  }
  return out;
}

ScalingFit scaling_fit(const std::vector<LadderPoint>& points, FitMode mode) {
  if (points.size() < 3) throw std::domain_error("scaling_fit: need at least 3 ladder points");
  const size_t n = points.size();
  std::vector<double> xs(n), ys(n);
  for (size_t i = 0; i < n; ++i) {
    const LadderPoint& p = points[i];
    if (!(p.scale > 0.0) || !(p.p_hat > 0.0))
      throw std::domain_error("scaling_fit: scales and probabilities must be positive");
    xs[i] = std::log(p.scale);
    double y = p.p_hat;
    if (mode == FitMode::LogCorrected) y /= std::sqrt(std::log(1.0 / p.scale));
    ys[i] = std::log(y);
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < n; ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double nn = double(n);
  const double denom = nn * sxx - sx * sx;
  ScalingFit fit;
  fit.exponent = (nn * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.exponent * sx) / nn;
  double ss_res = 0.0;
  for (size_t i = 0; i < n; ++i) {
    const double r = ys[i] - (fit.intercept + fit.exponent * xs[i]);
    ss_res += r * r;
  }
  const double sigma2 = n > 2 ? ss_res / double(n - 2) : 0.0;
  fit.exponent_stderr = std::sqrt(sigma2 * nn / denom);
  return fit;
}

}  // namespace gasketlab::soup
