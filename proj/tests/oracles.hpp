#pragma once

// Test-only oracles, kept independent of the library implementation paths
// they check: direct truncated theta series, Gauss-Legendre quadrature of
// the elliptic integral, length-limited loop/excursion sums on tiny graphs,
// and exhaustive simple-cycle parity enumeration.

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracles {

// theta series summed literally over n in [-terms, terms]
inline double theta2_series(double q, int terms = 40) {
  double s = 0.0;
  for (int n = -terms; n <= terms; ++n) s += std::pow(q, (n + 0.5) * (n + 0.5));
  return s;
}

inline double theta3_series(double q, int terms = 40) {
  double s = 0.0;
  for (int n = -terms; n <= terms; ++n) s += std::pow(q, double(n) * n);
  return s;
}

inline double theta4_series(double q, int terms = 40) {
  double s = 0.0;
  for (int n = -terms; n <= terms; ++n)
    s += ((n % 2 == 0) ? 1.0 : -1.0) * std::pow(q, double(n) * n);
  return s;
}

// K(k) = int_0^{pi/2} d t / sqrt(1 - k^2 sin^2 t), 256-point Gauss-Legendre
// assembled from Chebyshev-style Newton nodes.
double elliptic_K_quadrature(double k);

// Weighted graph with Dirichlet boundary for brute-force checks.
struct TinyGraph {
  int n = 0;  // interior vertices
  struct Edge {
    int u, v;       // v may be -1-g for ghost g
    double c;
    int parity;     // defect crossing parity
  };
  std::vector<Edge> edges;           // interior-interior
  struct BEdge {
    int u;
    double c;
    int parity;  // includes boundary transport
  };
  std::vector<BEdge> bedges;         // interior-to-wired-boundary
};

// sum over rooted closed walks of length <= k_max of (1/k) prod(c/d) with the
// odd-parity indicator, plus a geometric tail bound via the spectral radius.
// Returns the partial sum; *tail_bound receives the remainder estimate.
double loop_mass_odd_enumeration(const TinyGraph& g, int k_max, double* tail_bound);

// sum over boundary-to-boundary paths of length <= k_max of their excursion
// weight with odd-parity indicator (parity includes boundary transport).
double excursion_mass_odd_enumeration(const TinyGraph& g, int k_max, double* tail_bound);

// Exhaustive simple-cycle enumeration on a small undirected multigraph with
// edge parities: does any simple cycle have odd parity?
struct SmallGraph {
  int n = 0;
  struct Edge {
    int u, v;
    int parity;
  };
  std::vector<Edge> edges;
};
bool any_odd_simple_cycle(const SmallGraph& g);

}  // namespace oracles
