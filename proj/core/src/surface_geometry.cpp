#include "surfem/surface_geometry.hpp"

#include <cmath>

#include "surfem/errors.hpp"

namespace surfem {

SurfacePointFrame build_frame(const std::array<Vec3, 4> &nodes, const std::array<double, 2> &xi, double orientation,
                              std::size_t cell_id, int qp) {
  const auto s = shape_bilinear(xi);
  SurfacePointFrame f;
  for (int k = 0; k < 4; ++k) {
    f.covariant[0] += s.gradients[k][0] * nodes[k];
    f.covariant[1] += s.gradients[k][1] * nodes[k];
  }

  const Vec3 n = cross(f.covariant[0], f.covariant[1]);
  f.area_jacobian = norm(n);
  if (f.area_jacobian < 1e-12 * norm(f.covariant[0]) * norm(f.covariant[1]))
    throw DegenerateSurfaceCellError(cell_id, qp);
  f.normal = (orientation / f.area_jacobian) * n;

  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) f.metric[a][b] = dot(f.covariant[a], f.covariant[b]);
  const double d = f.metric[0][0] * f.metric[1][1] - f.metric[0][1] * f.metric[1][0];
  f.metric_inv[0][0] = f.metric[1][1] / d;
  f.metric_inv[1][1] = f.metric[0][0] / d;
  f.metric_inv[0][1] = -f.metric[0][1] / d;
  f.metric_inv[1][0] = -f.metric[1][0] / d;

  for (int a = 0; a < 2; ++a)
    f.contravariant[a] = f.metric_inv[a][0] * f.covariant[0] + f.metric_inv[a][1] * f.covariant[1];
  return f;
}

Tensor2 surface_deformation_gradient(const SurfacePointFrame &material, const SurfacePointFrame &spatial) {
  return outer(spatial.covariant[0], material.contravariant[0]) +
         outer(spatial.covariant[1], material.contravariant[1]);
}

Tensor2 surface_inverse(const SurfacePointFrame &material, const SurfacePointFrame &spatial) {
  return outer(material.covariant[0], spatial.contravariant[0]) +
         outer(material.covariant[1], spatial.contravariant[1]);
}

double surface_determinant(const SurfacePointFrame &material, const SurfacePointFrame &spatial) {
  return spatial.area_jacobian / material.area_jacobian;
}

double surface_determinant(const Tensor2 &a, const SurfacePointFrame &material) {
  const Vec3 a1 = a * material.covariant[0];
  const Vec3 a2 = a * material.covariant[1];
  return norm(cross(a1, a2)) / material.area_jacobian;
}

Tensor2 surface_gradient(const std::array<Vec3, 4> &nodal_values, const SurfacePointFrame &frame,
                         const BilinearShape &shape) {
  Tensor2 g;
  for (int k = 0; k < 4; ++k) {
    const Vec3 gk = shape.gradients[k][0] * frame.contravariant[0] + shape.gradients[k][1] * frame.contravariant[1];
    g += outer(nodal_values[k], gk);
  }
  return g;
}

Vec3 surface_gradient(const std::array<double, 4> &nodal_values, const SurfacePointFrame &frame,
                      const BilinearShape &shape) {
  Vec3 g;
  for (int k = 0; k < 4; ++k) {
    g += nodal_values[k] *
         (shape.gradients[k][0] * frame.contravariant[0] + shape.gradients[k][1] * frame.contravariant[1]);
  }
  return g;
}

std::array<Vec3, 4> surface_shape_gradients(const SurfacePointFrame &frame, const BilinearShape &shape) {
  std::array<Vec3, 4> g;
  for (int k = 0; k < 4; ++k)
    g[k] = shape.gradients[k][0] * frame.contravariant[0] + shape.gradients[k][1] * frame.contravariant[1];
  return g;
}

}  // namespace surfem
