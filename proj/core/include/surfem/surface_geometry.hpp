#ifndef SURFEM_SURFACE_GEOMETRY_HPP
#define SURFEM_SURFACE_GEOMETRY_HPP

#include <array>
#include <cstddef>

#include "surfem/shape_functions.hpp"
#include "surfem/tensor.hpp"

namespace surfem {

// Differential geometry of the embedded surface at one quadrature point of a
// bilinear quad cell. The same structure describes the material frame (built
// from material coordinates) and the spatial frame (built from deformed
// coordinates); the deformation gradient couples one of each.
struct SurfacePointFrame {
  std::array<Vec3, 2> covariant;      // g_alpha = dr/dxi^alpha
  std::array<Vec3, 2> contravariant;  // g^alpha = g^{alpha beta} g_beta
  std::array<std::array<double, 2>, 2> metric;      // g_{alpha beta}
  std::array<std::array<double, 2>, 2> metric_inv;  // g^{alpha beta}
  Vec3 normal;           // unit, with the cell's outward orientation applied
  double area_jacobian;  // |g_1 x g_2|
};

// Frame from the nodal coordinates of a quad cell at isoparametric point xi.
// `orientation` is the outward flag stored with the surface cell (+1/-1).
// Throws DegenerateSurfaceCellError when |g_1 x g_2| < 1e-12 |g_1||g_2|.
SurfacePointFrame build_frame(const std::array<Vec3, 4> &nodes, const std::array<double, 2> &xi, double orientation,
                              std::size_t cell_id = 0, int qp = 0);

// F_hat = g_alpha (x) G^alpha: spatial covariant against material contravariant.
Tensor2 surface_deformation_gradient(const SurfacePointFrame &material, const SurfacePointFrame &spatial);

// f_hat = G_alpha (x) g^alpha, the inverse on the tangent planes; never
// requires inverting the rank-deficient F_hat.
Tensor2 surface_inverse(const SurfacePointFrame &material, const SurfacePointFrame &spatial);

// J_hat as the ratio of the spatial to the material area Jacobian.
double surface_determinant(const SurfacePointFrame &material, const SurfacePointFrame &spatial);

// J_hat by the cross-product rule |[A.G_1] x [A.G_2]| / |G_1 x G_2| applied
// to a superficial tensor A; agrees with the area-ratio form for A = F_hat.
double surface_determinant(const Tensor2 &a, const SurfacePointFrame &material);

// Material surface gradient sum_I v^I (x) (dPhi^I/dxi^alpha) G^alpha of a
// nodal vector field; the result annihilates the frame normal on the right.
Tensor2 surface_gradient(const std::array<Vec3, 4> &nodal_values, const SurfacePointFrame &frame,
                         const BilinearShape &shape);

// Surface gradient of a nodal scalar field.
Vec3 surface_gradient(const std::array<double, 4> &nodal_values, const SurfacePointFrame &frame,
                      const BilinearShape &shape);

// Per-node vectors (dPhi^I/dxi^alpha) g^alpha, the shape-function surface
// gradients used by assembly.
std::array<Vec3, 4> surface_shape_gradients(const SurfacePointFrame &frame, const BilinearShape &shape);

}  // namespace surfem

#endif
