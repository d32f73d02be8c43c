#ifndef SURFEM_FE_VALUES_HPP
#define SURFEM_FE_VALUES_HPP

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "surfem/quadrature.hpp"
#include "surfem/shape_functions.hpp"
#include "surfem/tensor.hpp"

namespace surfem {

// Per-cell shape data evaluated at the quadrature points of one hex cell, in
// both the Lagrangian view (gradients w.r.t. the material coordinates X) and
// the Eulerian view (gradients w.r.t. the spatial coordinates x = X + u).
// One instance per assembly task; reinit once per visited cell.
class CellValues {
 public:
  void reinit_material(const std::array<Vec3, 8> &X, const std::array<Vec3, 8> &u, const QuadratureRule<3> &rule,
                       std::size_t cell_id);

  std::size_t n_points() const { return n_q_; }
  std::size_t cell_id() const { return cell_id_; }

  double shape_value(std::size_t q, int node) const { return shape_[q].values[node]; }
  const Vec3 &grad_material(std::size_t q, int node) const { return grad_material_[q][node]; }
  const Vec3 &grad_spatial(std::size_t q, int node) const { return grad_spatial_[q][node]; }

  // Material integration measure w * J_{box,0}.
  double JxW(std::size_t q) const { return jxw_[q]; }

  double jacobian_isoparametric_material(std::size_t q) const { return j_box0_[q]; }
  double jacobian_isoparametric_spatial(std::size_t q) const { return j_box_[q]; }

  // (J, j): Jacobian-ratio determinant of the motion and its inverse.
  std::pair<double, double> jacobian_determinants(std::size_t q) const;

  // F = sum_I x^I (x) Grad Phi^I from the material view.
  Tensor2 interpolate_F(std::size_t q, const std::array<Vec3, 8> &x) const;
  // f = sum_I X^I (x) grad Phi_t^I from the spatial view.
  Tensor2 interpolate_f(std::size_t q, const std::array<Vec3, 8> &X) const;

  // Material gradient of a nodal vector field.
  Tensor2 interpolate_gradient(std::size_t q, const std::array<Vec3, 8> &values) const;

 private:
  std::size_t n_q_ = 0;
  std::size_t cell_id_ = 0;
  std::vector<TrilinearShape> shape_;
  std::vector<std::array<Vec3, 8>> grad_material_;
  std::vector<std::array<Vec3, 8>> grad_spatial_;
  std::vector<double> j_box0_, j_box_, jxw_;
};

}  // namespace surfem

#endif
