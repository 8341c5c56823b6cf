#pragma once

// Double-cover union-find over the open-edge subgraph of a sample. Site u's
// two lifts are 2u and 2u+1; the wired outer boundary contributes two
// supernodes, one per sheet. An open edge of defect parity p merges
// (u, s) with (v, s^p); a cluster winds oddly around the punctures iff the
// two lifts of one of its sites (or the two supernodes) meet.

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <vector>

#include "gasketlab/lattice.hpp"
#include "gasketlab/rng.hpp"

namespace gasketlab::soup {

class ClusterState {
 public:
  explicit ClusterState(int n_sites)
      : n_(n_sites),
        parent_(static_cast<size_t>(2 * n_sites + 2)),
        mark_(static_cast<size_t>(2 * n_sites + 2), 0) {}

  int b0() const { return 2 * n_; }
  int b1() const { return 2 * n_ + 1; }

  void reset() {
    for (int i = 0; i < 2 * n_ + 2; ++i) parent_[static_cast<size_t>(i)] = i;
  }

  int find(int x) {
    while (parent_[static_cast<size_t>(x)] != x) {
      parent_[static_cast<size_t>(x)] = parent_[static_cast<size_t>(parent_[static_cast<size_t>(x)])];
      x = parent_[static_cast<size_t>(x)];
    }
    return x;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[static_cast<size_t>(a < b ? b : a)] = (a < b ? a : b);
  }

  void open_interior_edge(int u, int v, int parity) {
    unite(2 * u, 2 * v + parity);
    unite(2 * u + 1, 2 * v + (parity ^ 1));
  }

  void open_boundary_edge(int u, int parity) {
    unite(2 * u, b0() + parity);
    unite(2 * u + 1, b0() + (parity ^ 1));
  }

  // Draws the open-edge coupling for a sampled field: a same-sign edge (x,y)
  // opens with probability 1 - exp(-2 field_x field_y c); opposite signs stay
  // closed. Outer-boundary edges carry the boundary value v.
  void build(const LatticeModel& model, const DefectConfig& defects,
             const Eigen::VectorXd& field, double v, CounterRng& rng) {
    reset();
    const double c = model.conductance;
    for (size_t eid = 0; eid < model.edges.size(); ++eid) {
      const auto& e = model.edges[eid];
      const double prod = field[e.u] * field[e.v];
      if (prod <= 0.0) continue;
      if (rng.next_double() < -std::expm1(-2.0 * c * prod))
        open_interior_edge(e.u, e.v, defects.edge_parity[eid]);
    }
    if (v != 0.0) {
      for (size_t bid = 0; bid < model.bedges.size(); ++bid) {
        const auto& be = model.bedges[bid];
        const auto& ghost = model.ghosts[static_cast<size_t>(be.ghost)];
        if (!ghost.outer) continue;  // hole boundaries sit at 0 and never open
        const double prod = field[be.u] * v;
        if (prod <= 0.0) continue;
        if (rng.next_double() < -std::expm1(-2.0 * c * prod))
          open_boundary_edge(be.u, defects.bedge_parity[bid] ^ defects.tau[static_cast<size_t>(be.ghost)]);
      }
    }
  }

  // Some cluster contains a closed path of odd total winding.
  bool has_odd_cluster() {
    if (find(b0()) == find(b1())) return true;
    for (int u = 0; u < n_; ++u)
      if (find(2 * u) == find(2 * u + 1)) return true;
    return false;
  }

  // Same, restricted to clusters disjoint from the masked sites.
  bool has_odd_cluster_excluding(const std::vector<uint8_t>& excluded) {
    ++epoch_;
    for (int u = 0; u < n_; ++u) {
      if (!excluded[static_cast<size_t>(u)]) continue;
      stamp(find(2 * u));
      stamp(find(2 * u + 1));
    }
    if (find(b0()) == find(b1()) && !stamped(find(b0()))) return true;
    for (int u = 0; u < n_; ++u) {
      const int r = find(2 * u);
      if (r == find(2 * u + 1) && !stamped(r)) return true;
    }
    return false;
  }

 private:
  void stamp(int r) { mark_[static_cast<size_t>(r)] = epoch_; }
  bool stamped(int r) const { return mark_[static_cast<size_t>(r)] == epoch_; }

  int n_;
  std::vector<int32_t> parent_;
  std::vector<uint64_t> mark_;
  uint64_t epoch_ = 1;
};

}  // namespace gasketlab::soup
