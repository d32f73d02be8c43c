#ifndef SURFEM_SHAPE_FUNCTIONS_HPP
#define SURFEM_SHAPE_FUNCTIONS_HPP

#include <array>

#include "surfem/tensor.hpp"

namespace surfem {

// Isoparametric shape functions on the reference cells [-1,1]^d.
//
// Hex vertex ordering: vertex k sits at xi_d = 2*((k >> d) & 1) - 1, i.e.
//   k: 0=(-,-,-) 1=(+,-,-) 2=(-,+,-) 3=(+,+,-) 4=(-,-,+) 5=(+,-,+) 6=(-,+,+) 7=(+,+,+)
// Quad vertex ordering is the analogous 2D pattern: (-,-) (+,-) (-,+) (+,+).

inline std::array<double, 3> hex_vertex_xi(int k) {
  return {2.0 * (k & 1) - 1.0, 2.0 * ((k >> 1) & 1) - 1.0, 2.0 * ((k >> 2) & 1) - 1.0};
}

inline std::array<double, 2> quad_vertex_xi(int k) {
  return {2.0 * (k & 1) - 1.0, 2.0 * ((k >> 1) & 1) - 1.0};
}

struct TrilinearShape {
  std::array<double, 8> values;
  std::array<Vec3, 8> gradients;  // w.r.t. the isoparametric coordinates
};

struct BilinearShape {
  std::array<double, 4> values;
  std::array<std::array<double, 2>, 4> gradients;  // d/dxi^alpha
};

inline TrilinearShape shape_trilinear(const std::array<double, 3> &xi) {
  TrilinearShape s;
  for (int k = 0; k < 8; ++k) {
    const auto v = hex_vertex_xi(k);
    const double a0 = 1.0 + v[0] * xi[0];
    const double a1 = 1.0 + v[1] * xi[1];
    const double a2 = 1.0 + v[2] * xi[2];
    s.values[k] = 0.125 * a0 * a1 * a2;
    s.gradients[k] = {{0.125 * v[0] * a1 * a2, 0.125 * a0 * v[1] * a2, 0.125 * a0 * a1 * v[2]}};
  }
  return s;
}

inline BilinearShape shape_bilinear(const std::array<double, 2> &xi) {
  BilinearShape s;
  for (int k = 0; k < 4; ++k) {
    const auto v = quad_vertex_xi(k);
    const double a0 = 1.0 + v[0] * xi[0];
    const double a1 = 1.0 + v[1] * xi[1];
    s.values[k] = 0.25 * a0 * a1;
    s.gradients[k] = {0.25 * v[0] * a1, 0.25 * a0 * v[1]};
  }
  return s;
}

}  // namespace surfem

#endif
