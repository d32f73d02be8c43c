#include "surfem/dof_map.hpp"

#include <algorithm>
#include <cmath>

#include "surfem/errors.hpp"

namespace surfem {

void mark_dirichlet(DofMap &dofs, const std::vector<Vec3> &vertices,
                    const std::function<std::optional<double>(const Vec3 &, int)> &predicate) {
  for (std::size_t v = 0; v < vertices.size(); ++v)
    for (int c = 0; c < 3; ++c) {
      const auto value = predicate(vertices[v], c);
      if (!value) continue;
      const std::size_t dof = DofMap::index(v, c);
      auto [it, inserted] = dofs.constraints.try_emplace(dof, *value);
      if (!inserted && it->second != *value)
        throw MeshError("conflicting Dirichlet values for dof " + std::to_string(dof));
    }
}

SurfaceToVolumeDofMap build_surface_to_volume_dof_map(const Triangulation &tri, const SurfaceTriangulation &surf,
                                                      const DofMap &volume_dofs, const DofMap &surface_dofs) {
  if (volume_dofs.vertex_count != tri.n_vertices() || surface_dofs.vertex_count != surf.n_vertices())
    throw MeshError("dof maps do not match the triangulations");

  const double tol = 1e-10 * std::max(tri.bounding_box_diagonal(), 1e-300);

  // Volume vertices sorted by x for a windowed nearest-point search.
  std::vector<std::size_t> order(tri.n_vertices());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return tri.vertices[a][0] < tri.vertices[b][0]; });
  std::vector<double> xs(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) xs[i] = tri.vertices[order[i]][0];

  SurfaceToVolumeDofMap map;
  map.to_volume.resize(surface_dofs.n_dofs());
  std::vector<char> hit(volume_dofs.vertex_count, 0);

  for (std::size_t sv = 0; sv < surf.n_vertices(); ++sv) {
    const Vec3 &p = surf.vertices[sv];
    const auto lo = std::lower_bound(xs.begin(), xs.end(), p[0] - tol);
    const auto hi = std::upper_bound(xs.begin(), xs.end(), p[0] + tol);
    std::size_t match = static_cast<std::size_t>(-1);
    for (auto it = lo; it != hi; ++it) {
      const std::size_t vv = order[static_cast<std::size_t>(it - xs.begin())];
      if (norm(tri.vertices[vv] - p) <= tol) {
        if (match != static_cast<std::size_t>(-1))
          throw MeshError("ambiguous vertex match for surface vertex " + std::to_string(sv) +
                          ": duplicate volume vertices within tolerance");
        match = vv;
      }
    }
    if (match == static_cast<std::size_t>(-1))
      throw MeshError("surface vertex " + std::to_string(sv) + " has no coincident volume vertex");
    if (hit[match])
      throw MeshError("volume vertex " + std::to_string(match) + " matched by two surface vertices");
    hit[match] = 1;
    for (int c = 0; c < 3; ++c) map.to_volume[DofMap::index(sv, c)] = DofMap::index(match, c);
  }
  return map;
}

}  // namespace surfem
