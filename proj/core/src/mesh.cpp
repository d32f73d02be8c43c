#include "surfem/mesh.hpp"

#include <algorithm>
#include <map>

#include "surfem/errors.hpp"
#include "surfem/quadrature.hpp"
#include "surfem/shape_functions.hpp"

namespace surfem {

const std::array<std::array<int, 4>, 6> &hex_face_vertices() {
  static const std::array<std::array<int, 4>, 6> table = {{
      {0, 2, 4, 6},  // -x, in-plane axes (y,z)
      {1, 3, 5, 7},  // +x
      {0, 1, 4, 5},  // -y, in-plane axes (x,z)
      {2, 3, 6, 7},  // +y
      {0, 1, 2, 3},  // -z, in-plane axes (x,y)
      {4, 5, 6, 7},  // +z
  }};
  return table;
}

std::array<Vec3, 8> Triangulation::cell_coords(std::size_t c) const {
  std::array<Vec3, 8> x;
  for (int k = 0; k < 8; ++k) x[k] = vertices[cells[c][k]];
  return x;
}

Vec3 Triangulation::cell_centroid(std::size_t c) const {
  Vec3 s;
  for (int k = 0; k < 8; ++k) s += vertices[cells[c][k]];
  return s / 8.0;
}

Vec3 Triangulation::face_centroid(std::size_t c, int face) const {
  const auto &fv = hex_face_vertices()[face];
  Vec3 s;
  for (int k = 0; k < 4; ++k) s += vertices[cells[c][fv[k]]];
  return s / 4.0;
}

double Triangulation::bounding_box_diagonal() const {
  if (vertices.empty()) return 0.0;
  Vec3 lo = vertices.front(), hi = vertices.front();
  for (const auto &v : vertices)
    for (int d = 0; d < 3; ++d) {
      lo[d] = std::min(lo[d], v[d]);
      hi[d] = std::max(hi[d], v[d]);
    }
  return norm(hi - lo);
}

std::vector<std::pair<std::size_t, int>> find_boundary_faces(
    const std::vector<std::array<std::size_t, 8>> &cells) {
  std::map<std::array<std::size_t, 4>, std::pair<std::size_t, int>> count;
  for (std::size_t c = 0; c < cells.size(); ++c)
    for (int f = 0; f < 6; ++f) {
      std::array<std::size_t, 4> key;
      for (int k = 0; k < 4; ++k) key[k] = cells[c][hex_face_vertices()[f][k]];
      std::sort(key.begin(), key.end());
      auto [it, inserted] = count.try_emplace(key, c, f);
      if (!inserted) it->second.first = static_cast<std::size_t>(-1);  // interior face
    }
  std::vector<std::pair<std::size_t, int>> result;
  for (const auto &[key, cf] : count)
    if (cf.first != static_cast<std::size_t>(-1)) result.push_back(cf);
  std::sort(result.begin(), result.end());
  return result;
}

void Triangulation::validate() const {
  for (std::size_t c = 0; c < cells.size(); ++c)
    for (const std::size_t v : cells[c])
      if (v >= vertices.size())
        throw MeshError("cell " + std::to_string(c) + " references invalid vertex " + std::to_string(v));

  const auto rule = gauss_rule<3>(2);
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const auto x = cell_coords(c);
    for (std::size_t q = 0; q < rule.size(); ++q) {
      const auto s = shape_trilinear(rule.points[q]);
      Tensor2 jac;  // J_ij = dX_i/dxi_j
      for (int k = 0; k < 8; ++k)
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) jac(i, j) += x[k][i] * s.gradients[k][j];
      if (det(jac) <= 0.0)
        throw MeshError("cell " + std::to_string(c) + " has nonpositive isoparametric Jacobian at quadrature point " +
                        std::to_string(q));
    }
  }

  const auto expected = find_boundary_faces(cells);
  std::vector<std::pair<std::size_t, int>> stored;
  stored.reserve(boundary_faces.size());
  for (const auto &bf : boundary_faces) stored.emplace_back(bf.cell, bf.face);
  std::sort(stored.begin(), stored.end());
  if (stored != expected)
    throw MeshError("stored boundary faces do not match the faces shared by exactly one cell");
}

std::array<Vec3, 4> SurfaceTriangulation::cell_coords(std::size_t c) const {
  std::array<Vec3, 4> x;
  for (int k = 0; k < 4; ++k) x[k] = vertices[cells[c][k]];
  return x;
}

SurfaceTriangulation extract_boundary_mesh(const Triangulation &tri, const std::set<int> &boundary_ids) {
  SurfaceTriangulation surf;
  std::map<std::size_t, std::size_t> vertex_map;  // volume vertex -> surface vertex

  for (const auto &bf : tri.boundary_faces) {
    if (!boundary_ids.count(bf.boundary_id)) continue;

    const auto &fv = hex_face_vertices()[bf.face];
    std::array<std::size_t, 4> cell;
    for (int k = 0; k < 4; ++k) {
      const std::size_t vol_vertex = tri.cells[bf.cell][fv[k]];
      auto [it, inserted] = vertex_map.try_emplace(vol_vertex, surf.vertices.size());
      if (inserted) surf.vertices.push_back(tri.vertices[vol_vertex]);
      cell[k] = it->second;
    }
    surf.cells.push_back(cell);
    surf.face_origin.emplace_back(bf.cell, bf.face);

    // Orient so the bilinear-parametrization normal points away from the cell.
    const auto coords = surf.cell_coords(surf.cells.size() - 1);
    const auto s = shape_bilinear({0.0, 0.0});
    Vec3 g1, g2;
    for (int k = 0; k < 4; ++k) {
      g1 += s.gradients[k][0] * coords[k];
      g2 += s.gradients[k][1] * coords[k];
    }
    const Vec3 n = cross(g1, g2);
    const Vec3 outward = tri.face_centroid(bf.cell, bf.face) - tri.cell_centroid(bf.cell);
    surf.orientation.push_back(dot(n, outward) >= 0.0 ? 1.0 : -1.0);
  }
  return surf;
}

double quad_area(const std::array<Vec3, 4> &coords, int points_per_direction) {
  const auto rule = gauss_rule<2>(points_per_direction);
  double area = 0.0;
  for (std::size_t q = 0; q < rule.size(); ++q) {
    const auto s = shape_bilinear(rule.points[q]);
    Vec3 g1, g2;
    for (int k = 0; k < 4; ++k) {
      g1 += s.gradients[k][0] * coords[k];
      g2 += s.gradients[k][1] * coords[k];
    }
    area += rule.weights[q] * norm(cross(g1, g2));
  }
  return area;
}

}  // namespace surfem
