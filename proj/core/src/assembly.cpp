#include "surfem/assembly.hpp"

#include <mutex>

#include "surfem/errors.hpp"
#include "surfem/fe_values.hpp"
#include "surfem/parallel.hpp"
#include "surfem/surface_geometry.hpp"

namespace surfem {

namespace {

std::array<Vec3, 8> gather_cell_displacement(std::span<const double> u, const std::array<std::size_t, 8> &cell) {
  std::array<Vec3, 8> v;
  for (int k = 0; k < 8; ++k)
    for (int c = 0; c < 3; ++c) v[k][c] = u[DofMap::index(cell[k], c)];
  return v;
}

std::array<Vec3, 4> gather_surface_displacement(std::span<const double> u, const SurfaceToVolumeDofMap &map,
                                                const std::array<std::size_t, 4> &cell) {
  std::array<Vec3, 4> v;
  for (int k = 0; k < 4; ++k)
    for (int c = 0; c < 3; ++c) v[k][c] = u[map[DofMap::index(cell[k], c)]];
  return v;
}

}  // namespace

SparsityPattern build_sparsity(const Triangulation &tri, const SurfaceTriangulation &surf,
                               const SurfaceToVolumeDofMap &map, std::size_t n_dofs) {
  std::vector<std::vector<std::size_t>> cliques;
  cliques.reserve(tri.n_cells() + surf.n_cells());
  for (const auto &cell : tri.cells) {
    std::vector<std::size_t> clique(24);
    for (int k = 0; k < 8; ++k)
      for (int c = 0; c < 3; ++c) clique[static_cast<std::size_t>(3 * k + c)] = DofMap::index(cell[k], c);
    cliques.push_back(std::move(clique));
  }
  for (const auto &cell : surf.cells) {
    std::vector<std::size_t> clique(12);
    for (int k = 0; k < 4; ++k)
      for (int c = 0; c < 3; ++c) clique[static_cast<std::size_t>(3 * k + c)] = map[DofMap::index(cell[k], c)];
    cliques.push_back(std::move(clique));
  }
  return SparsityPattern::from_cliques(n_dofs, cliques);
}

void update_volume_points(const Triangulation &tri, std::span<const double> u, const VolumeMaterial &mat,
                          const QuadratureRule<3> &rule, std::vector<ContinuumPoint> &points, unsigned threads) {
  const std::size_t nq = rule.size();
  points.resize(tri.n_cells() * nq);

  parallel_for(tri.n_cells(), threads, [&](std::size_t begin, std::size_t end) {
    CellValues cv;
    for (std::size_t c = begin; c < end; ++c) {
      const auto X = tri.cell_coords(c);
      const auto uc = gather_cell_displacement(u, tri.cells[c]);
      cv.reinit_material(X, uc, rule, c);
      std::array<Vec3, 8> x = X;
      for (int k = 0; k < 8; ++k) x[k] += uc[k];
      for (std::size_t q = 0; q < nq; ++q) {
        ContinuumPoint &cp = points[c * nq + q];
        cp.locus = PointLocus::volume;
        cp.material = mat;
        cp.F = cv.interpolate_F(q, x);
        cp.f = cv.interpolate_f(q, X);
        cp.J = cv.jacobian_determinants(q).first;
        cp.JxW0 = cv.JxW(q);
        cp.update_kinetics();
      }
    }
  });
}

void update_surface_points(const SurfaceTriangulation &surf, const SurfaceToVolumeDofMap &map,
                           std::span<const double> u, const SurfaceMaterial &mat, const QuadratureRule<2> &rule,
                           std::vector<ContinuumPoint> &points, unsigned threads) {
  const std::size_t nq = rule.size();
  points.resize(surf.n_cells() * nq);

  parallel_for(surf.n_cells(), threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t c = begin; c < end; ++c) {
      const auto X = surf.cell_coords(c);
      const auto uc = gather_surface_displacement(u, map, surf.cells[c]);
      std::array<Vec3, 4> x = X;
      for (int k = 0; k < 4; ++k) x[k] += uc[k];
      for (std::size_t q = 0; q < nq; ++q) {
        const auto material = build_frame(X, rule.points[q], surf.orientation[c], c, static_cast<int>(q));
        const auto spatial = build_frame(x, rule.points[q], surf.orientation[c], c, static_cast<int>(q));
        ContinuumPoint &cp = points[c * nq + q];
        cp.locus = PointLocus::surface;
        cp.material = mat;
        cp.F = surface_deformation_gradient(material, spatial);
        cp.f = surface_inverse(material, spatial);
        cp.J = surface_determinant(material, spatial);
        cp.N = material.normal;
        cp.n = spatial.normal;
        cp.JxW0 = rule.weights[q] * material.area_jacobian;
        cp.update_kinetics();
      }
    }
  });
}

void assemble_volume(const Triangulation &tri, std::span<const double> u, const std::vector<ContinuumPoint> &points,
                     const QuadratureRule<3> &rule, SparseMatrix *matrix, std::vector<double> *residual,
                     const Vec3 &body_force, unsigned threads) {
  const std::size_t nq = rule.size();
  if (points.size() != tri.n_cells() * nq)
    throw Error("assemble_volume: continuum point store does not match the mesh");
  const bool has_body_force = norm(body_force) > 0.0;
  std::mutex scatter_mutex;

  parallel_for(tri.n_cells(), threads, [&](std::size_t begin, std::size_t end) {
    CellValues cv;
    std::array<double, 24> r_e;
    std::array<std::array<double, 24>, 24> k_e;

    for (std::size_t c = begin; c < end; ++c) {
      const auto X = tri.cell_coords(c);
      const auto uc = gather_cell_displacement(u, tri.cells[c]);
      cv.reinit_material(X, uc, rule, c);

      r_e.fill(0.0);
      for (auto &row : k_e) row.fill(0.0);

      for (std::size_t q = 0; q < nq; ++q) {
        const ContinuumPoint &cp = points[c * nq + q];
        const double jxw = cv.JxW(q);

        if (residual) {
          for (int I = 0; I < 8; ++I) {
            const Vec3 &g = cv.grad_material(q, I);
            for (int i = 0; i < 3; ++i) {
              double s = cp.P(i, 0) * g[0] + cp.P(i, 1) * g[1] + cp.P(i, 2) * g[2];
              if (has_body_force) s -= cv.shape_value(q, I) * body_force[i];
              r_e[static_cast<std::size_t>(3 * I + i)] += jxw * s;
            }
          }
        }

        if (matrix) {
          for (int I = 0; I < 8; ++I) {
            const Vec3 &gI = cv.grad_material(q, I);
            for (int J = 0; J < 8; ++J) {
              const Vec3 &gJ = cv.grad_material(q, J);
              for (int i = 0; i < 3; ++i)
                for (int k = 0; k < 3; ++k) {
                  double s = 0.0;
                  for (int j = 0; j < 3; ++j)
                    for (int l = 0; l < 3; ++l) s += gI[j] * cp.A(i, j, k, l) * gJ[l];
                  k_e[static_cast<std::size_t>(3 * I + i)][static_cast<std::size_t>(3 * J + k)] += jxw * s;
                }
            }
          }
        }
      }

      std::array<std::size_t, 24> dofs;
      for (int k = 0; k < 8; ++k)
        for (int i = 0; i < 3; ++i) dofs[static_cast<std::size_t>(3 * k + i)] = DofMap::index(tri.cells[c][k], i);

      const std::scoped_lock lock(scatter_mutex);
      if (residual)
        for (int a = 0; a < 24; ++a) (*residual)[dofs[a]] += r_e[a];
      if (matrix)
        for (int a = 0; a < 24; ++a)
          for (int b = 0; b < 24; ++b) matrix->add(dofs[a], dofs[b], k_e[a][b]);
    }
  });
}

void assemble_surface(const SurfaceTriangulation &surf, const SurfaceToVolumeDofMap &map, std::span<const double> u,
                      const std::vector<ContinuumPoint> &points, const QuadratureRule<2> &rule, SparseMatrix *matrix,
                      std::vector<double> *residual, unsigned threads) {
  const std::size_t nq = rule.size();
  if (points.size() != surf.n_cells() * nq)
    throw Error("assemble_surface: continuum point store does not match the mesh");
  std::mutex scatter_mutex;

  parallel_for(surf.n_cells(), threads, [&](std::size_t begin, std::size_t end) {
    std::array<double, 12> r_e;
    std::array<std::array<double, 12>, 12> k_e;

    for (std::size_t c = begin; c < end; ++c) {
      const auto X = surf.cell_coords(c);
      r_e.fill(0.0);
      for (auto &row : k_e) row.fill(0.0);

      for (std::size_t q = 0; q < nq; ++q) {
        const ContinuumPoint &cp = points[c * nq + q];
        const auto shape = shape_bilinear(rule.points[q]);
        const auto frame = build_frame(X, rule.points[q], surf.orientation[c], c, static_cast<int>(q));
        const auto grads = surface_shape_gradients(frame, shape);
        const double jxw = rule.weights[q] * frame.area_jacobian;

        if (residual) {
          for (int I = 0; I < 4; ++I)
            for (int i = 0; i < 3; ++i) {
              const double s = cp.P(i, 0) * grads[I][0] + cp.P(i, 1) * grads[I][1] + cp.P(i, 2) * grads[I][2];
              r_e[static_cast<std::size_t>(3 * I + i)] += jxw * s;
            }
        }

        if (matrix) {
          for (int I = 0; I < 4; ++I)
            for (int J = 0; J < 4; ++J)
              for (int i = 0; i < 3; ++i)
                for (int k = 0; k < 3; ++k) {
                  double s = 0.0;
                  for (int j = 0; j < 3; ++j)
                    for (int l = 0; l < 3; ++l) s += grads[I][j] * cp.A(i, j, k, l) * grads[J][l];
                  k_e[static_cast<std::size_t>(3 * I + i)][static_cast<std::size_t>(3 * J + k)] += jxw * s;
                }
        }
      }

      std::array<std::size_t, 12> dofs;
      for (int k = 0; k < 4; ++k)
        for (int i = 0; i < 3; ++i)
          dofs[static_cast<std::size_t>(3 * k + i)] = map[DofMap::index(surf.cells[c][k], i)];

      const std::scoped_lock lock(scatter_mutex);
      if (residual)
        for (int a = 0; a < 12; ++a) (*residual)[dofs[a]] += r_e[a];
      if (matrix)
        for (int a = 0; a < 12; ++a)
          for (int b = 0; b < 12; ++b) matrix->add(dofs[a], dofs[b], k_e[a][b]);
    }
  });
}

void assemble_neumann(const Triangulation &tri, const std::map<int, Vec3> &tractions, double scale,
                      std::vector<double> &residual) {
  if (tractions.empty() || scale == 0.0) return;
  const auto rule = gauss_rule<2>(2);

  for (const auto &bf : tri.boundary_faces) {
    const auto it = tractions.find(bf.boundary_id);
    if (it == tractions.end()) continue;
    const Vec3 traction = scale * it->second;

    const auto &fv = hex_face_vertices()[bf.face];
    std::array<Vec3, 4> coords;
    std::array<std::size_t, 4> verts;
    for (int k = 0; k < 4; ++k) {
      verts[k] = tri.cells[bf.cell][fv[k]];
      coords[k] = tri.vertices[verts[k]];
    }

    for (std::size_t q = 0; q < rule.size(); ++q) {
      const auto s = shape_bilinear(rule.points[q]);
      Vec3 g1, g2;
      for (int k = 0; k < 4; ++k) {
        g1 += s.gradients[k][0] * coords[k];
        g2 += s.gradients[k][1] * coords[k];
      }
      const double jxw = rule.weights[q] * norm(cross(g1, g2));
      for (int k = 0; k < 4; ++k)
        for (int i = 0; i < 3; ++i) residual[DofMap::index(verts[k], i)] -= jxw * s.values[k] * traction[i];
    }
  }
}

void apply_constraints(SparseMatrix &matrix, std::vector<double> &rhs,
                       const std::map<std::size_t, double> &increments, ConstraintStage stage) {
  const std::size_t n = matrix.n_rows();
  std::vector<char> constrained(n, 0);
  std::vector<double> value(n, 0.0);
  for (const auto &[dof, inc] : increments) {
    constrained[dof] = 1;
    value[dof] = stage == ConstraintStage::predictor ? inc : 0.0;
  }

  const auto &pattern = matrix.pattern();
  auto values = matrix.values();
  for (std::size_t i = 0; i < n; ++i) {
    if (constrained[i]) {
      for (std::size_t k = pattern.row_start[i]; k < pattern.row_start[i + 1]; ++k)
        values[k] = pattern.cols[k] == i ? 1.0 : 0.0;
      rhs[i] = value[i];
    } else {
      for (std::size_t k = pattern.row_start[i]; k < pattern.row_start[i + 1]; ++k) {
        const std::uint32_t j = pattern.cols[k];
        if (constrained[j]) {
          rhs[i] -= values[k] * value[j];
          values[k] = 0.0;
        }
      }
    }
  }
}

std::pair<double, double> energy_norms(const std::vector<ContinuumPoint> &volume_points,
                                       const std::vector<ContinuumPoint> &surface_points) {
  double vol = 0.0, surf = 0.0;
  for (const auto &cp : volume_points) {
    const double fp = ddot2(cp.F, cp.P);
    vol += fp * fp * cp.JxW0;
  }
  for (const auto &cp : surface_points) {
    const double fp = ddot2(cp.F, cp.P);
    surf += fp * fp * cp.JxW0;
  }
  return {std::sqrt(vol), std::sqrt(surf)};
}

}  // namespace surfem
