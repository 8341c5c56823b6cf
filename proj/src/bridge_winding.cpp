#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "gasketlab/kernel_checks.hpp"
#include "gasketlab/rng.hpp"

namespace gasketlab::kernels {

namespace {

constexpr double kHalfSpan = 4.0;   // grid covers [-4, 4]^2
constexpr int kCellsPerSide = 512;  // cell size 1/64

constexpr double cell_size() { return 2.0 * kHalfSpan / kCellsPerSide; }

inline int cell_of(double x) {
  return static_cast<int>(std::floor((x + kHalfSpan) / cell_size()));
}

inline double cell_center(int c) { return -kHalfSpan + (c + 0.5) * cell_size(); }

struct WindingGrid {
  // per-row difference array for winding increments, plus a path mask
  std::vector<int16_t> diff;
  std::vector<uint8_t> mask;

  WindingGrid()
      : diff(static_cast<size_t>(kCellsPerSide) * (kCellsPerSide + 1)),
        mask(static_cast<size_t>(kCellsPerSide) * kCellsPerSide) {}

  void reset() {
    std::fill(diff.begin(), diff.end(), int16_t{0});
    std::fill(mask.begin(), mask.end(), uint8_t{0});
  }
};

struct SampleAreas {
  double a_plus1 = 0.0;
  double a_minus1 = 0.0;
  double a_odd = 0.0;
};

// One bridge sample: exact Gaussian bridge increments on the grid times,
// winding number per cell via horizontal ray crossings (scanline difference
// arrays), cells within one step length of the polyline masked out.
SampleAreas run_sample(int n_steps, CounterRng& rng, WindingGrid& grid,
                       std::vector<double>& xs, std::vector<double>& ys) {
  const double dt = 1.0 / n_steps;
  const double sqdt = std::sqrt(dt);
  xs.assign(static_cast<size_t>(n_steps) + 1, 0.0);
  ys.assign(static_cast<size_t>(n_steps) + 1, 0.0);
  double wx = 0.0, wy = 0.0;
  for (int i = 1; i <= n_steps; ++i) {
    wx += sqdt * rng.next_gaussian();
    wy += sqdt * rng.next_gaussian();
    xs[static_cast<size_t>(i)] = wx;
    ys[static_cast<size_t>(i)] = wy;
  }
  for (int i = 1; i <= n_steps; ++i) {  // pin the endpoint: B_t = W_t - t W_1
    const double t = double(i) * dt;
    xs[static_cast<size_t>(i)] -= t * wx;
    ys[static_cast<size_t>(i)] -= t * wy;
  }

  grid.reset();
  const double a = cell_size();
  const double pad = sqdt;

  for (int i = 0; i < n_steps; ++i) {
    const double x1 = xs[static_cast<size_t>(i)], y1 = ys[static_cast<size_t>(i)];
    const double x2 = xs[static_cast<size_t>(i + 1)], y2 = ys[static_cast<size_t>(i + 1)];
    if (y1 != y2) {
      const int dir = y2 > y1 ? +1 : -1;
      const double ylo = std::min(y1, y2), yhi = std::max(y1, y2);
      int row_lo = static_cast<int>(std::ceil((ylo + kHalfSpan) / a - 0.5));
      int row_hi = static_cast<int>(std::floor((yhi + kHalfSpan) / a - 0.5));
      row_lo = std::max(row_lo, 0);
      row_hi = std::min(row_hi, kCellsPerSide - 1);
      for (int row = row_lo; row <= row_hi; ++row) {
        const double yc = cell_center(row);
        if (!((y1 <= yc && yc < y2) || (y2 <= yc && yc < y1))) continue;
        const double xc = x1 + (yc - y1) * (x2 - x1) / (y2 - y1);
        // the segment winds every cell whose center lies left of the crossing
        int cut = static_cast<int>(std::floor((xc + kHalfSpan) / a + 0.5));
        cut = std::clamp(cut, 0, kCellsPerSide);
        grid.diff[static_cast<size_t>(row) * (kCellsPerSide + 1)] += static_cast<int16_t>(dir);
        grid.diff[static_cast<size_t>(row) * (kCellsPerSide + 1) + static_cast<size_t>(cut)] -=
            static_cast<int16_t>(dir);
      }
    }
    const int cx0 = std::clamp(cell_of(std::min(x1, x2) - pad), 0, kCellsPerSide - 1);
    const int cx1 = std::clamp(cell_of(std::max(x1, x2) + pad), 0, kCellsPerSide - 1);
    const int cy0 = std::clamp(cell_of(std::min(y1, y2) - pad), 0, kCellsPerSide - 1);
    const int cy1 = std::clamp(cell_of(std::max(y1, y2) + pad), 0, kCellsPerSide - 1);
    for (int cy = cy0; cy <= cy1; ++cy) {
      const double py = cell_center(cy) - y1;
      for (int cx = cx0; cx <= cx1; ++cx) {
        uint8_t& m = grid.mask[static_cast<size_t>(cy) * kCellsPerSide + static_cast<size_t>(cx)];
        if (m) continue;
        const double px = cell_center(cx) - x1;
        const double vx = x2 - x1, vy = y2 - y1;
        const double vv = vx * vx + vy * vy;
        double t = vv > 0.0 ? (px * vx + py * vy) / vv : 0.0;
        t = std::clamp(t, 0.0, 1.0);
        const double ddx = px - t * vx, ddy = py - t * vy;
        if (ddx * ddx + ddy * ddy <= pad * pad) m = 1;
      }
    }
  }

  SampleAreas out;
  const double cell_area = a * a;
  for (int row = 0; row < kCellsPerSide; ++row) {
    int acc = 0;
    const size_t base = static_cast<size_t>(row) * (kCellsPerSide + 1);
    const size_t mbase = static_cast<size_t>(row) * kCellsPerSide;
    for (int col = 0; col < kCellsPerSide; ++col) {
      acc += grid.diff[base + static_cast<size_t>(col)];
      if (acc == 0 || grid.mask[mbase + static_cast<size_t>(col)]) continue;
      if (acc == 1) out.a_plus1 += cell_area;
      if (acc == -1) out.a_minus1 += cell_area;
      if (acc % 2 != 0) out.a_odd += cell_area;
    }
  }
  return out;
}

}  // namespace

BridgeWindingReport bridge_winding_areas(int n_samples, int n_steps, std::uint64_t seed,
                                         int n_threads) {
  if (n_steps < (1 << 10)) throw std::domain_error("bridge_winding_areas: n_steps must be >= 2^10");
  if (n_samples <= 1) throw std::domain_error("bridge_winding_areas: need at least 2 samples");
  n_threads = std::max(1, n_threads);

  // per-sample results, so the reduction is independent of the partition
  std::vector<SampleAreas> results(static_cast<size_t>(n_samples));

  auto worker = [&](int tid) {
    WindingGrid grid;
    std::vector<double> xs, ys;
    for (int i = tid; i < n_samples; i += n_threads) {
      CounterRng rng(seed, static_cast<uint64_t>(i));
      results[static_cast<size_t>(i)] = run_sample(n_steps, rng, grid, xs, ys);
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

  auto reduce = [&](auto field, double& mean, double& stderr_out) {
    double sum = 0.0, sumsq = 0.0;
    for (const SampleAreas& r : results) {
      const double v = r.*field;
      sum += v;
      sumsq += v * v;
    }
    mean = sum / n_samples;
    const double var = std::max(0.0, sumsq / n_samples - mean * mean);
    stderr_out = std::sqrt(var / n_samples);
  };

  BridgeWindingReport rep;
  rep.n_samples = n_samples;
  rep.n_steps = n_steps;
  rep.seed = seed;
  reduce(&SampleAreas::a_plus1, rep.area_index1_mean, rep.area_index1_stderr);
  reduce(&SampleAreas::a_minus1, rep.area_index_minus1_mean, rep.area_index_minus1_stderr);
  reduce(&SampleAreas::a_odd, rep.area_odd_mean, rep.area_odd_stderr);
  return rep;
}

}  // namespace gasketlab::kernels
