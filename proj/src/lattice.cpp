#include "gasketlab/lattice.hpp"

#include <cmath>
#include <cstdlib>
#include <queue>

namespace gasketlab::soup {

namespace {

bool inside_disk(int i, int j, int m) { return i * i + j * j < m * m; }

bool inside_hole(int i, int j, int m, const std::vector<HoleSpec>& holes) {
  for (const HoleSpec& h : holes) {
    const double dx = double(i) / m - h.cx;
    const double dy = double(j) / m - h.cy;
    if (dx * dx + dy * dy < h.radius * h.radius) return true;
  }
  return false;
}

}  // namespace

LatticeModel build_disk_lattice(int mesh_m, const std::vector<HoleSpec>& holes) {
  if (mesh_m < 8) throw std::domain_error("build_disk_lattice: mesh_m must be >= 8");
  for (const HoleSpec& h : holes) {
    const double c = std::sqrt(h.cx * h.cx + h.cy * h.cy);
    if (!(h.radius > 0.0) || c + h.radius + 2.0 / mesh_m >= 1.0)
      throw std::domain_error("build_disk_lattice: hole touches the outer boundary");
  }
  for (size_t a = 0; a < holes.size(); ++a)
    for (size_t b = a + 1; b < holes.size(); ++b) {
      const double dx = holes[a].cx - holes[b].cx;
      const double dy = holes[a].cy - holes[b].cy;
      if (std::sqrt(dx * dx + dy * dy) <= holes[a].radius + holes[b].radius + 2.0 / mesh_m)
        throw std::domain_error("build_disk_lattice: holes overlap");
    }

  LatticeModel model;
  model.mesh_m = mesh_m;
  const int side = model.grid_side();
  model.site_at_grid.assign(static_cast<size_t>(side) * side, -1);
  model.ghost_at_grid.assign(static_cast<size_t>(side) * side, -1);

  for (int j = -mesh_m; j <= mesh_m; ++j)
    for (int i = -mesh_m; i <= mesh_m; ++i) {
      if (!inside_disk(i, j, mesh_m) || inside_hole(i, j, mesh_m, holes)) continue;
      model.site_at_grid[static_cast<size_t>(model.grid_index(i, j))] =
          static_cast<int32_t>(model.sites.size());
      model.sites.push_back({i, j});
    }
  if (model.sites.empty()) throw std::domain_error("build_disk_lattice: empty interior");

  auto ghost_id = [&](int i, int j) -> int32_t {
    int32_t& slot = model.ghost_at_grid[static_cast<size_t>(model.grid_index(i, j))];
    if (slot < 0) {
      slot = static_cast<int32_t>(model.ghosts.size());
      const bool outer = !inside_disk(i, j, mesh_m);
      model.ghosts.push_back({{i, j}, outer});
    }
    return slot;
  };

  const int di[2] = {1, 0};
  const int dj[2] = {0, 1};
  for (int32_t u = 0; u < model.n_sites(); ++u) {
    const auto [i, j] = model.sites[static_cast<size_t>(u)];
    for (int d = 0; d < 2; ++d) {
      const int ni = i + di[d], nj = j + dj[d];
      const int v = model.site_at(ni, nj);
      if (v >= 0) {
        model.edges.push_back({u, v});
      } else {
        model.bedges.push_back({u, ghost_id(ni, nj)});
      }
    }
    // -x / -y neighbors only contribute boundary edges (interior ones were
    // created from the other endpoint)
    for (int d = 0; d < 2; ++d) {
      const int ni = i - di[d], nj = j - dj[d];
      if (model.site_at(ni, nj) < 0) model.bedges.push_back({u, ghost_id(ni, nj)});
    }
  }

  // connectivity
  std::vector<uint8_t> seen(static_cast<size_t>(model.n_sites()), 0);
  std::queue<int32_t> bfs;
  bfs.push(0);
  seen[0] = 1;
  std::vector<std::vector<int32_t>> adj(static_cast<size_t>(model.n_sites()));
  for (const auto& e : model.edges) {
    adj[static_cast<size_t>(e.u)].push_back(e.v);
    adj[static_cast<size_t>(e.v)].push_back(e.u);
  }
  int reached = 1;
  while (!bfs.empty()) {
    const int32_t u = bfs.front();
    bfs.pop();
    for (int32_t v : adj[static_cast<size_t>(u)])
      if (!seen[static_cast<size_t>(v)]) {
        seen[static_cast<size_t>(v)] = 1;
        ++reached;
        bfs.push(v);
      }
  }
  if (reached != model.n_sites())
    throw std::domain_error("build_disk_lattice: interior graph is disconnected");
  return model;
}

PunctureSpec face_containing(const LatticeModel& model, double x, double y, RayDir dir) {
  PunctureSpec p;
  p.fi = static_cast<int>(std::floor(x * model.mesh_m));
  p.fj = static_cast<int>(std::floor(y * model.mesh_m));
  p.dir = dir;
  return p;
}

namespace {

struct Ray {
  // start at face center (sxteps/2, sy/2) in doubled coordinates; axis-aligned
  long long sx2, sy2;  // doubled start point (odd integers)
  RayDir dir;
};

Ray ray_of(const PunctureSpec& p) {
  return Ray{2LL * p.fi + 1, 2LL * p.fj + 1, p.dir};
}

// Does the segment [a, b] (doubled integer coordinates) cross the ray?
// Endpoints never lie on the ray's carrier line because ray coordinates are
// odd while segment endpoints are even.
bool segment_crosses_ray(long long ax2, long long ay2, long long bx2, long long by2,
                         const Ray& ray) {
  // reduce +-y rays to +-x by swapping coordinates
  long long px = ax2, py = ay2, qx = bx2, qy = by2, rx = ray.sx2, ry = ray.sy2;
  bool positive = (ray.dir == RayDir::PlusX || ray.dir == RayDir::PlusY);
  if (ray.dir == RayDir::PlusY || ray.dir == RayDir::MinusY) {
    std::swap(px, py);
    std::swap(qx, qy);
    std::swap(rx, ry);
  }
  if ((py < ry) == (qy < ry)) return false;  // no crossing of the carrier line
  // crossing abscissa x* = px + (ry-py)(qx-px)/(qy-py); compare with rx
  const __int128 lhs = static_cast<__int128>(px - rx) * (qy - py) +
                       static_cast<__int128>(ry - py) * (qx - px);
  const __int128 denom = qy - py;  // nonzero
  // x* >= rx  <=>  lhs/denom >= 0
  const bool ge = (denom > 0) ? (lhs >= 0) : (lhs <= 0);
  if (lhs == 0) throw std::logic_error("defect geometry: segment meets a puncture point");
  return positive ? ge : !ge;
}

// Flip the parity of the graph edge between lattice points a and b, if any.
// Returns false when neither an interior edge nor a boundary edge exists
// (the dual path has left the graph).
bool flip_edge(const LatticeModel& model, DefectConfig& cfg,
               std::array<int, 2> a, std::array<int, 2> b,
               std::vector<std::vector<std::pair<int32_t, int32_t>>>& incident) {
  const int u = model.site_at(a[0], a[1]);
  const int v = model.site_at(b[0], b[1]);
  if (u < 0 && v < 0) return false;
  if (u >= 0 && v >= 0) {
    for (const auto& [other, eid] : incident[static_cast<size_t>(std::min(u, v))])
      if (other == std::max(u, v)) {
        cfg.edge_parity[static_cast<size_t>(eid)] ^= 1;
        return true;
      }
    throw std::logic_error("defect geometry: missing interior edge");
  }
  const int site = u >= 0 ? u : v;
  const auto gxy = u >= 0 ? b : a;
  const int ghost = model.ghost_at(gxy[0], gxy[1]);
  if (ghost < 0) throw std::logic_error("defect geometry: missing ghost");
  for (size_t bid = 0; bid < model.bedges.size(); ++bid)
    if (model.bedges[bid].u == site && model.bedges[bid].ghost == ghost) {
      cfg.bedge_parity[bid] ^= 1;
      return true;
    }
  throw std::logic_error("defect geometry: missing boundary edge");
}

std::vector<std::vector<std::pair<int32_t, int32_t>>> incident_edges(const LatticeModel& model) {
  std::vector<std::vector<std::pair<int32_t, int32_t>>> incident(
      static_cast<size_t>(model.n_sites()));
  for (size_t eid = 0; eid < model.edges.size(); ++eid) {
    const auto& e = model.edges[eid];
    incident[static_cast<size_t>(std::min(e.u, e.v))].push_back(
        {std::max(e.u, e.v), static_cast<int32_t>(eid)});
  }
  return incident;
}

DefectConfig empty_config(const LatticeModel& model) {
  DefectConfig cfg;
  cfg.edge_parity.assign(model.edges.size(), 0);
  cfg.bedge_parity.assign(model.bedges.size(), 0);
  cfg.tau.assign(model.ghosts.size(), 0);
  return cfg;
}

// Walk the dual ray from the puncture face outward, flipping crossed edges.
void trace_ray(const LatticeModel& model, DefectConfig& cfg, const PunctureSpec& p,
               std::vector<std::vector<std::pair<int32_t, int32_t>>>& incident) {
  int fi = p.fi, fj = p.fj;
  const int limit = 4 * model.mesh_m + 8;
  for (int step = 0; step < limit; ++step) {
    std::array<int, 2> a{}, b{};
    switch (p.dir) {
      case RayDir::PlusX:  a = {fi + 1, fj}; b = {fi + 1, fj + 1}; ++fi; break;
      case RayDir::MinusX: a = {fi, fj};     b = {fi, fj + 1};     --fi; break;
      case RayDir::PlusY:  a = {fi, fj + 1}; b = {fi + 1, fj + 1}; ++fj; break;
      case RayDir::MinusY: a = {fi, fj};     b = {fi + 1, fj};     --fj; break;
    }
    if (!flip_edge(model, cfg, a, b, incident)) return;  // left the graph
  }
  throw std::logic_error("defect geometry: ray failed to exit the domain");
}

}  // namespace

DefectConfig build_defects(const LatticeModel& model, const std::vector<PunctureSpec>& punctures) {
  DefectConfig cfg = empty_config(model);
  cfg.punctures = punctures;
  cfg.n_punctures = static_cast<int>(punctures.size());
  auto incident = incident_edges(model);
  std::vector<Ray> rays;
  for (const PunctureSpec& p : punctures) {
    if (model.site_at(p.fi, p.fj) < 0 && model.site_at(p.fi + 1, p.fj + 1) < 0)
      throw std::domain_error("build_defects: puncture face is outside the domain");
    trace_ray(model, cfg, p, incident);
    rays.push_back(ray_of(p));
  }
  // boundary transport: tau(g) = crossing parity of the segment [P*, g]
  // against all defect rays; P* is a fixed base point far outside.
  const long long base_x2 = -2LL * (8 * model.mesh_m + 5);
  const long long base_y2 = -2LL * (8 * model.mesh_m + 7);
  for (size_t gi = 0; gi < model.ghosts.size(); ++gi) {
    if (!model.ghosts[gi].outer) continue;
    const auto [gx, gy] = model.ghosts[gi].xy;
    int parity = 0;
    for (const Ray& ray : rays)
      parity ^= segment_crosses_ray(base_x2, base_y2, 2LL * gx, 2LL * gy, ray) ? 1 : 0;
    cfg.tau[gi] = static_cast<uint8_t>(parity);
  }
  return cfg;
}

DefectConfig build_defects_paired(const LatticeModel& model, const PunctureSpec& a,
                                  const PunctureSpec& b) {
  DefectConfig cfg = empty_config(model);
  cfg.punctures = {a, b};
  cfg.n_punctures = 2;
  auto incident = incident_edges(model);
  // L-shaped dual path: along x from a to b's column, then along y
  int fi = a.fi, fj = a.fj;
  while (fi != b.fi) {
    const int s = b.fi > fi ? 1 : -1;
    const int wall = s > 0 ? fi + 1 : fi;
    if (!flip_edge(model, cfg, {wall, fj}, {wall, fj + 1}, incident))
      throw std::domain_error("build_defects_paired: path leaves the graph");
    fi += s;
  }
  while (fj != b.fj) {
    const int s = b.fj > fj ? 1 : -1;
    const int wall = s > 0 ? fj + 1 : fj;
    if (!flip_edge(model, cfg, {fi, wall}, {fi + 1, wall}, incident))
      throw std::domain_error("build_defects_paired: path leaves the graph");
    fj += s;
  }
  return cfg;
}

std::vector<uint8_t> disk_site_mask(const LatticeModel& model, double cx, double cy,
                                    double radius) {
  std::vector<uint8_t> mask(static_cast<size_t>(model.n_sites()), 0);
  const double r2 = radius * radius * model.mesh_m * model.mesh_m;
  const double mx = cx * model.mesh_m, my = cy * model.mesh_m;
  for (int32_t u = 0; u < model.n_sites(); ++u) {
    const auto [i, j] = model.sites[static_cast<size_t>(u)];
    const double dx = i - mx, dy = j - my;
    if (dx * dx + dy * dy <= r2) mask[static_cast<size_t>(u)] = 1;
  }
  return mask;
}

}  // namespace gasketlab::soup
