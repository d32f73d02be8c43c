#include "surfem/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace surfem {

std::vector<std::pair<double, double>> gauss_legendre_1d(int n) {
  switch (n) {
    case 1:
      return {{0.0, 2.0}};
    case 2: {
      const double p = 1.0 / std::sqrt(3.0);
      return {{-p, 1.0}, {p, 1.0}};
    }
    case 3: {
      const double p = std::sqrt(3.0 / 5.0);
      return {{-p, 5.0 / 9.0}, {0.0, 8.0 / 9.0}, {p, 5.0 / 9.0}};
    }
    case 4: {
      const double a = std::sqrt(3.0 / 7.0 - 2.0 / 7.0 * std::sqrt(6.0 / 5.0));
      const double b = std::sqrt(3.0 / 7.0 + 2.0 / 7.0 * std::sqrt(6.0 / 5.0));
      const double wa = (18.0 + std::sqrt(30.0)) / 36.0;
      const double wb = (18.0 - std::sqrt(30.0)) / 36.0;
      return {{-b, wb}, {-a, wa}, {a, wa}, {b, wb}};
    }
    case 5: {
      const double a = 1.0 / 3.0 * std::sqrt(5.0 - 2.0 * std::sqrt(10.0 / 7.0));
      const double b = 1.0 / 3.0 * std::sqrt(5.0 + 2.0 * std::sqrt(10.0 / 7.0));
      const double wa = (322.0 + 13.0 * std::sqrt(70.0)) / 900.0;
      const double wb = (322.0 - 13.0 * std::sqrt(70.0)) / 900.0;
      return {{-b, wb}, {-a, wa}, {0.0, 128.0 / 225.0}, {a, wa}, {b, wb}};
    }
    case 6: {
      const double x1 = 0.2386191860831969086305017;
      const double x2 = 0.6612093864662645136613996;
      const double x3 = 0.9324695142031520278123016;
      const double w1 = 0.4679139345726910473898703;
      const double w2 = 0.3607615730481386075698335;
      const double w3 = 0.1713244923791703450402961;
      return {{-x3, w3}, {-x2, w2}, {-x1, w1}, {x1, w1}, {x2, w2}, {x3, w3}};
    }
    default:
      throw std::invalid_argument("gauss_legendre_1d: supported orders are 1..6");
  }
}

template <int dim>
QuadratureRule<dim> gauss_rule(int points_per_direction) {
  const auto line = gauss_legendre_1d(points_per_direction);
  QuadratureRule<dim> rule;
  if constexpr (dim == 2) {
    for (const auto &[x1, w1] : line)
      for (const auto &[x0, w0] : line) {
        rule.points.push_back({x0, x1});
        rule.weights.push_back(w0 * w1);
      }
  } else {
    static_assert(dim == 3);
    for (const auto &[x2, w2] : line)
      for (const auto &[x1, w1] : line)
        for (const auto &[x0, w0] : line) {
          rule.points.push_back({x0, x1, x2});
          rule.weights.push_back(w0 * w1 * w2);
        }
  }
  return rule;
}

template QuadratureRule<2> gauss_rule<2>(int);
template QuadratureRule<3> gauss_rule<3>(int);

}  // namespace surfem
