#include "surfem/fe_values.hpp"

#include "surfem/errors.hpp"

namespace surfem {

void CellValues::reinit_material(const std::array<Vec3, 8> &X, const std::array<Vec3, 8> &u,
                                 const QuadratureRule<3> &rule, std::size_t cell_id) {
  n_q_ = rule.size();
  cell_id_ = cell_id;
  shape_.resize(n_q_);
  grad_material_.resize(n_q_);
  grad_spatial_.resize(n_q_);
  j_box0_.resize(n_q_);
  j_box_.resize(n_q_);
  jxw_.resize(n_q_);

  for (std::size_t q = 0; q < n_q_; ++q) {
    shape_[q] = shape_trilinear(rule.points[q]);
    const auto &s = shape_[q];

    Tensor2 jac_material, jac_spatial;  // d(.)_i / dxi_j
    for (int k = 0; k < 8; ++k)
      for (int i = 0; i < 3; ++i) {
        const double xi = X[k][i];
        const double xs = X[k][i] + u[k][i];
        for (int j = 0; j < 3; ++j) {
          jac_material(i, j) += xi * s.gradients[k][j];
          jac_spatial(i, j) += xs * s.gradients[k][j];
        }
      }

    j_box0_[q] = det(jac_material);
    if (j_box0_[q] <= 0.0)
      throw MeshError("cell " + std::to_string(cell_id) + " has nonpositive material Jacobian at quadrature point " +
                      std::to_string(q));
    j_box_[q] = det(jac_spatial);
    if (j_box_[q] <= 0.0) throw InvertedCellError(cell_id, static_cast<int>(q), j_box_[q]);

    const Tensor2 inv_material_t = transpose(inv(jac_material));
    const Tensor2 inv_spatial_t = transpose(inv(jac_spatial));
    for (int k = 0; k < 8; ++k) {
      grad_material_[q][k] = inv_material_t * s.gradients[k];
      grad_spatial_[q][k] = inv_spatial_t * s.gradients[k];
    }
    jxw_[q] = rule.weights[q] * j_box0_[q];
  }
}

std::pair<double, double> CellValues::jacobian_determinants(std::size_t q) const {
  const double J = j_box_[q] / j_box0_[q];
  return {J, 1.0 / J};
}

Tensor2 CellValues::interpolate_F(std::size_t q, const std::array<Vec3, 8> &x) const {
  Tensor2 F;
  for (int k = 0; k < 8; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) F(i, j) += x[k][i] * grad_material_[q][k][j];
  return F;
}

Tensor2 CellValues::interpolate_f(std::size_t q, const std::array<Vec3, 8> &X) const {
  Tensor2 f;
  for (int k = 0; k < 8; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) f(i, j) += X[k][i] * grad_spatial_[q][k][j];
  return f;
}

Tensor2 CellValues::interpolate_gradient(std::size_t q, const std::array<Vec3, 8> &values) const {
  Tensor2 g;
  for (int k = 0; k < 8; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) g(i, j) += values[k][i] * grad_material_[q][k][j];
  return g;
}

}  // namespace surfem
