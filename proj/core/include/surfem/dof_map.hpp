#ifndef SURFEM_DOF_MAP_HPP
#define SURFEM_DOF_MAP_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "surfem/mesh.hpp"

namespace surfem {

// Global numbering of vector-valued displacement unknowns: vertex v carries
// dofs 3v, 3v+1, 3v+2 for the x/y/z components. Dirichlet constraints store
// the prescribed displacement at the end of the load program; the time
// stepper scales them to per-step increments.
struct DofMap {
  std::size_t vertex_count = 0;
  std::map<std::size_t, double> constraints;  // dof -> prescribed final value

  static std::size_t index(std::size_t vertex, int component) {
    return 3 * vertex + static_cast<std::size_t>(component);
  }

  std::size_t n_dofs() const { return 3 * vertex_count; }
  bool is_constrained(std::size_t dof) const { return constraints.count(dof) > 0; }
};

// Extends the constrained set with every (vertex, component) the predicate
// accepts; the returned value is the prescribed final displacement for that
// component. Conflicting prescriptions for one dof raise MeshError.
void mark_dirichlet(DofMap &dofs, const std::vector<Vec3> &vertices,
                    const std::function<std::optional<double>(const Vec3 &, int)> &predicate);

struct SurfaceToVolumeDofMap {
  std::vector<std::size_t> to_volume;  // surface dof -> volume dof

  std::size_t operator[](std::size_t surface_dof) const { return to_volume[surface_dof]; }
  std::size_t size() const { return to_volume.size(); }
};

// Links every surface dof to the volume dof of the geometrically coincident
// vertex (same component). Matching is by material coordinates with a
// tolerance of 1e-10 times the bounding-box diagonal; a missing or ambiguous
// match raises MeshError.
SurfaceToVolumeDofMap build_surface_to_volume_dof_map(const Triangulation &tri, const SurfaceTriangulation &surf,
                                                      const DofMap &volume_dofs, const DofMap &surface_dofs);

}  // namespace surfem

#endif
