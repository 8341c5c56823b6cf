#include "oracles.hpp"

#include <algorithm>
#include <stdexcept>

namespace oracles {

double elliptic_K_quadrature(double k) {
  // composite Simpson on [0, pi/2] of 1/sqrt(1 - k^2 sin^2 t)
  const int n = 8192;  // even
  const double a = 0.0, b = 1.57079632679489661923;
  const double h = (b - a) / n;
  auto f = [&](double t) {
    const double s = std::sin(t);
    return 1.0 / std::sqrt(1.0 - k * k * s * s);
  };
  double sum = f(a) + f(b);
  for (int i = 1; i < n; ++i) sum += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  return sum * h / 3.0;
}

namespace {

struct Dense {
  int n;
  std::vector<double> a;  // row-major
  double& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  double at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
};

Dense matmul(const Dense& x, const Dense& y) {
  Dense z{x.n, std::vector<double>(static_cast<size_t>(x.n) * x.n, 0.0)};
  for (int i = 0; i < x.n; ++i)
    for (int l = 0; l < x.n; ++l) {
      const double v = x.at(i, l);
      if (v == 0.0) continue;
      for (int j = 0; j < x.n; ++j) z.at(i, j) += v * y.at(l, j);
    }
  return z;
}

std::vector<double> degrees(const TinyGraph& g) {
  std::vector<double> d(static_cast<size_t>(g.n), 0.0);
  for (const auto& e : g.edges) {
    d[static_cast<size_t>(e.u)] += e.c;
    d[static_cast<size_t>(e.v)] += e.c;
  }
  for (const auto& be : g.bedges) d[static_cast<size_t>(be.u)] += be.c;
  return d;
}

}  // namespace

double loop_mass_odd_enumeration(const TinyGraph& g, int k_max, double* tail_bound) {
  const auto d = degrees(g);
  Dense P{g.n, std::vector<double>(static_cast<size_t>(g.n) * g.n, 0.0)};
  Dense Ps = P;
  for (const auto& e : g.edges) {
    const double sgn = e.parity ? -1.0 : 1.0;
    P.at(e.u, e.v) += e.c / d[static_cast<size_t>(e.u)];
    P.at(e.v, e.u) += e.c / d[static_cast<size_t>(e.v)];
    Ps.at(e.u, e.v) += sgn * e.c / d[static_cast<size_t>(e.u)];
    Ps.at(e.v, e.u) += sgn * e.c / d[static_cast<size_t>(e.v)];
  }
  // rho estimate: largest row sum of |P| after a few squarings
  double rho = 0.0;
  {
    Dense Q = P;
    for (int it = 0; it < 6; ++it) Q = matmul(Q, Q);  // P^64
    double mx = 0.0;
    for (int i = 0; i < g.n; ++i) {
      double rs = 0.0;
      for (int j = 0; j < g.n; ++j) rs += std::abs(Q.at(i, j));
      mx = std::max(mx, rs);
    }
    rho = std::pow(std::max(mx, 1e-300), 1.0 / 64.0);
    rho = std::min(rho, 0.999999);
  }
  Dense Pk = P, Psk = Ps;
  double sum = 0.0;
  for (int k = 1; k <= k_max; ++k) {
    if (k > 1) {
      Pk = matmul(Pk, P);
      Psk = matmul(Psk, Ps);
    }
    double tr = 0.0, trs = 0.0;
    for (int i = 0; i < g.n; ++i) {
      tr += Pk.at(i, i);
      trs += Psk.at(i, i);
    }
    sum += 0.5 * (tr - trs) / k;
  }
  if (tail_bound) {
    *tail_bound = g.n * std::pow(rho, k_max + 1) / ((1.0 - rho) * (k_max + 1));
  }
  return sum;
}

double excursion_mass_odd_enumeration(const TinyGraph& g, int k_max, double* tail_bound) {
  const auto d = degrees(g);
  // mass entering each (vertex, parity) after the opening boundary edge
  std::vector<std::array<double, 2>> w(static_cast<size_t>(g.n), {0.0, 0.0});
  for (const auto& be : g.bedges) w[static_cast<size_t>(be.u)][be.parity & 1] += be.c;

  double odd_total = 0.0;
  double remaining = 0.0;
  for (int len = 1; len <= k_max; ++len) {
    // exits at this length
    for (const auto& be : g.bedges)
      for (int p = 0; p < 2; ++p) {
        const double exit_w =
            w[static_cast<size_t>(be.u)][p] * be.c / d[static_cast<size_t>(be.u)];
        if ((p ^ (be.parity & 1)) == 1) odd_total += exit_w;
      }
    // one more interior step
    std::vector<std::array<double, 2>> nxt(static_cast<size_t>(g.n), {0.0, 0.0});
    for (const auto& e : g.edges)
      for (int p = 0; p < 2; ++p) {
        const int q = p ^ (e.parity & 1);
        nxt[static_cast<size_t>(e.v)][q] +=
            w[static_cast<size_t>(e.u)][p] * e.c / d[static_cast<size_t>(e.u)];
        nxt[static_cast<size_t>(e.u)][q] +=
            w[static_cast<size_t>(e.v)][p] * e.c / d[static_cast<size_t>(e.v)];
      }
    w.swap(nxt);
    remaining = 0.0;
    for (const auto& a : w) remaining += a[0] + a[1];
  }
  if (tail_bound) *tail_bound = remaining;  // all future exits carry at most this mass
  return odd_total;
}

namespace {

void cycle_dfs(const SmallGraph& g, const std::vector<std::vector<std::pair<int, int>>>& adj,
               int start, int u, int parity, std::vector<uint8_t>& on_path, int depth,
               bool& found_odd) {
  if (found_odd) return;
  for (const auto& [v, p] : adj[static_cast<size_t>(u)]) {
    if (found_odd) return;
    if (v == start && depth >= 2) {
      if ((parity ^ p) & 1) found_odd = true;
      continue;
    }
    if (v <= start || on_path[static_cast<size_t>(v)]) continue;
    on_path[static_cast<size_t>(v)] = 1;
    cycle_dfs(g, adj, start, v, parity ^ p, on_path, depth + 1, found_odd);
    on_path[static_cast<size_t>(v)] = 0;
  }
}

}  // namespace

bool any_odd_simple_cycle(const SmallGraph& g) {
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(g.n));
  for (const auto& e : g.edges) {
    adj[static_cast<size_t>(e.u)].push_back({e.v, e.parity & 1});
    adj[static_cast<size_t>(e.v)].push_back({e.u, e.parity & 1});
  }
  bool found = false;
  std::vector<uint8_t> on_path(static_cast<size_t>(g.n), 0);
  for (int s = 0; s < g.n && !found; ++s) {
    on_path.assign(static_cast<size_t>(g.n), 0);
    on_path[static_cast<size_t>(s)] = 1;
    cycle_dfs(g, adj, s, s, 0, on_path, 0, found);
  }
  return found;
}

}  // namespace oracles
