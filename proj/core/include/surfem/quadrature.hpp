#ifndef SURFEM_QUADRATURE_HPP
#define SURFEM_QUADRATURE_HPP

#include <array>
#include <cstddef>
#include <vector>

namespace surfem {

// Tensor-product Gauss-Legendre rules on the reference cells [-1,1]^dim.
template <int dim>
struct QuadratureRule {
  std::vector<std::array<double, dim>> points;
  std::vector<double> weights;

  std::size_t size() const { return points.size(); }
};

// 1D Gauss-Legendre nodes/weights on [-1,1], n in 1..6.
std::vector<std::pair<double, double>> gauss_legendre_1d(int n);

template <int dim>
QuadratureRule<dim> gauss_rule(int points_per_direction);

extern template QuadratureRule<2> gauss_rule<2>(int);
extern template QuadratureRule<3> gauss_rule<3>(int);

}  // namespace surfem

#endif
