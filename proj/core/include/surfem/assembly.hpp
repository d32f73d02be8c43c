#ifndef SURFEM_ASSEMBLY_HPP
#define SURFEM_ASSEMBLY_HPP

#include <map>
#include <span>
#include <vector>

#include "surfem/constitutive.hpp"
#include "surfem/dof_map.hpp"
#include "surfem/mesh.hpp"
#include "surfem/quadrature.hpp"
#include "surfem/sparse_matrix.hpp"

namespace surfem {

// Global residual and tangent of the linearized weak form. Volume cells
// contribute 24x24 blocks, surface cells 12x12 blocks injected through the
// surface-to-volume dof map into the same matrix. Cell integration runs
// cell-parallel with per-task scratch; scatter is lock-protected.

SparsityPattern build_sparsity(const Triangulation &tri, const SurfaceTriangulation &surf,
                               const SurfaceToVolumeDofMap &map, std::size_t n_dofs);

// Refreshes the kinematic and kinetic state of every volume quadrature point
// for the displacement vector u (dof layout 3*vertex + component).
void update_volume_points(const Triangulation &tri, std::span<const double> u, const VolumeMaterial &mat,
                          const QuadratureRule<3> &rule, std::vector<ContinuumPoint> &points, unsigned threads = 1);

// Surface counterpart; surface displacements are read from the volume vector
// through the dof map (the surface is material).
void update_surface_points(const SurfaceTriangulation &surf, const SurfaceToVolumeDofMap &map,
                           std::span<const double> u, const SurfaceMaterial &mat, const QuadratureRule<2> &rule,
                           std::vector<ContinuumPoint> &points, unsigned threads = 1);

// Adds the volume contributions Grad Phi : A : Grad Phi and Grad Phi : P to
// the global matrix/residual, plus the dead body-force term when nonzero.
// Either output may be null to skip it. Reads P and A from `points`.
void assemble_volume(const Triangulation &tri, std::span<const double> u, const std::vector<ContinuumPoint> &points,
                     const QuadratureRule<3> &rule, SparseMatrix *matrix, std::vector<double> *residual,
                     const Vec3 &body_force = {}, unsigned threads = 1);

// Adds the surface contributions, scattered to volume dofs through the map.
void assemble_surface(const SurfaceTriangulation &surf, const SurfaceToVolumeDofMap &map, std::span<const double> u,
                      const std::vector<ContinuumPoint> &points, const QuadratureRule<2> &rule, SparseMatrix *matrix,
                      std::vector<double> *residual, unsigned threads = 1);

// Dead-load Neumann tractions per unit reference area on the boundary faces
// with the given ids; contributes only to the residual.
void assemble_neumann(const Triangulation &tri, const std::map<int, Vec3> &tractions, double scale,
                      std::vector<double> &residual);

enum class ConstraintStage { predictor, corrector };

// Symmetric elimination of the Dirichlet dofs from A x = rhs: prescribed
// increments move to the right-hand side (nonzero only in the predictor
// stage), constrained rows and columns collapse to the identity.
void apply_constraints(SparseMatrix &matrix, std::vector<double> &rhs,
                       const std::map<std::size_t, double> &increments, ConstraintStage stage);

// (integral [F:P]^2 dV)^1/2 and (integral [F_hat:P_hat]^2 dA)^1/2.
std::pair<double, double> energy_norms(const std::vector<ContinuumPoint> &volume_points,
                                       const std::vector<ContinuumPoint> &surface_points);

}  // namespace surfem

#endif
