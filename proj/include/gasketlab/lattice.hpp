#pragma once

// Finite grid graph approximating the unit disk at mesh 1/m: interior sites
// i^2 + j^2 < m^2 (optionally minus hole disks), nearest-neighbor edges with
// unit conductance, and a Dirichlet ghost layer (outer ring / hole
// boundaries). Defect lines are straight dual rays from puncture faces; each
// graph edge they cross flips sign, and the same rays define the
// boundary-transport parity tau used when clusters close through the wired
// outer boundary.

#include <array>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <vector>

namespace gasketlab::soup {

struct HoleSpec {
  double cx = 0.0;
  double cy = 0.0;
  double radius = 0.0;  // domain units
};

struct LatticeModel {
  int mesh_m = 0;
  double conductance = 1.0;

  std::vector<std::array<int, 2>> sites;  // interior lattice coordinates

  struct Edge {
    int32_t u, v;
  };
  std::vector<Edge> edges;  // interior-interior, u < v

  struct Ghost {
    std::array<int, 2> xy;
    bool outer;  // false: hole boundary (Dirichlet 0)
  };
  std::vector<Ghost> ghosts;

  struct BoundaryEdge {
    int32_t u;      // interior site
    int32_t ghost;  // ghost index
  };
  std::vector<BoundaryEdge> bedges;

  // lookups on the coordinate grid, offset by m+1, side 2m+3; -1 if absent
  std::vector<int32_t> site_at_grid;
  std::vector<int32_t> ghost_at_grid;

  int grid_side() const { return 2 * mesh_m + 3; }
  int grid_index(int i, int j) const {
    const int o = mesh_m + 1;
    return (j + o) * grid_side() + (i + o);
  }
  int site_at(int i, int j) const {
    if (std::abs(i) > mesh_m + 1 || std::abs(j) > mesh_m + 1) return -1;
    return site_at_grid[static_cast<size_t>(grid_index(i, j))];
  }
  int ghost_at(int i, int j) const {
    if (std::abs(i) > mesh_m + 1 || std::abs(j) > mesh_m + 1) return -1;
    return ghost_at_grid[static_cast<size_t>(grid_index(i, j))];
  }
  int n_sites() const { return static_cast<int>(sites.size()); }
};

// mesh_m >= 8; holes must be strictly interior and pairwise disjoint.
LatticeModel build_disk_lattice(int mesh_m, const std::vector<HoleSpec>& holes = {});

enum class RayDir { PlusX, PlusY, MinusX, MinusY };

struct PunctureSpec {
  // face = unit lattice square with corners (fi,fj)..(fi+1,fj+1)
  int fi = 0;
  int fj = 0;
  RayDir dir = RayDir::PlusX;
};

// Builds the face containing the domain point (x, y).
PunctureSpec face_containing(const LatticeModel& model, double x, double y,
                             RayDir dir = RayDir::PlusX);

struct DefectConfig {
  int n_punctures = 0;
  std::vector<PunctureSpec> punctures;
  std::vector<uint8_t> edge_parity;   // aligned with model.edges
  std::vector<uint8_t> bedge_parity;  // aligned with model.bedges
  std::vector<uint8_t> tau;           // aligned with model.ghosts (outer only)
};

// Boundary routing: every puncture sends a straight dual ray out of the
// domain in its chosen direction.
DefectConfig build_defects(const LatticeModel& model, const std::vector<PunctureSpec>& punctures);

// Internal routing for an even pair: an L-shaped dual path joining the two
// faces; no boundary transport. Gauge-equivalent to boundary routing.
DefectConfig build_defects_paired(const LatticeModel& model, const PunctureSpec& a,
                                  const PunctureSpec& b);

// Sites within the given disk (domain units), e.g. exclusion disks.
std::vector<uint8_t> disk_site_mask(const LatticeModel& model, double cx, double cy, double radius);

}  // namespace gasketlab::soup
