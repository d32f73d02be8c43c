#ifndef SURFEM_MESH_HPP
#define SURFEM_MESH_HPP

#include <array>
#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "surfem/tensor.hpp"

namespace surfem {

// Local face numbering of the reference hex: -x, +x, -y, +y, -z, +z.
// Each row lists the cell-local vertices of the face in the bilinear quad
// order of shape_functions.hpp.
const std::array<std::array<int, 4>, 6> &hex_face_vertices();

struct BoundaryFace {
  std::size_t cell;
  int face;  // 0..5
  int boundary_id;
};

struct Triangulation {
  std::vector<Vec3> vertices;
  std::vector<std::array<std::size_t, 8>> cells;
  std::vector<BoundaryFace> boundary_faces;

  std::size_t n_vertices() const { return vertices.size(); }
  std::size_t n_cells() const { return cells.size(); }

  std::array<Vec3, 8> cell_coords(std::size_t c) const;
  Vec3 cell_centroid(std::size_t c) const;
  Vec3 face_centroid(std::size_t c, int face) const;
  double bounding_box_diagonal() const;

  // Checks vertex references, positive isoparametric Jacobians at the 2x2x2
  // points of every cell, and that the stored boundary faces are exactly the
  // faces shared by a single cell. Throws MeshError on violation.
  void validate() const;
};

// Faces shared by exactly one cell, in (cell, face) pairs.
std::vector<std::pair<std::size_t, int>> find_boundary_faces(const std::vector<std::array<std::size_t, 8>> &cells);

struct SurfaceTriangulation {
  std::vector<Vec3> vertices;  // compact re-indexed subset of the volume vertices
  std::vector<std::array<std::size_t, 4>> cells;
  std::vector<std::pair<std::size_t, int>> face_origin;  // (volume cell, local face)
  std::vector<double> orientation;                       // +1/-1 so the computed normal points outward

  std::size_t n_vertices() const { return vertices.size(); }
  std::size_t n_cells() const { return cells.size(); }

  std::array<Vec3, 4> cell_coords(std::size_t c) const;
};

// One surface cell per boundary face whose id is in `boundary_ids`. An empty
// selection yields an empty surface (a pure volume problem).
SurfaceTriangulation extract_boundary_mesh(const Triangulation &tri, const std::set<int> &boundary_ids);

// Material area of a bilinear quad by the given tensor-product Gauss order.
double quad_area(const std::array<Vec3, 4> &coords, int points_per_direction = 2);

}  // namespace surfem

#endif
