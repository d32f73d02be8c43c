#ifndef SURFEM_LINEAR_SOLVER_HPP
#define SURFEM_LINEAR_SOLVER_HPP

#include <cstddef>
#include <span>

#include "surfem/sparse_matrix.hpp"

namespace surfem {

struct CgResult {
  std::size_t iterations = 0;
  double residual = 0.0;  // final |A x - b|
};

// Jacobi-preconditioned conjugate gradients for the symmetric positive
// definite constrained system. Converges when |A x - b| <= tol * |b|;
// max_iterations = 0 defaults to 10 * n. Throws LinearSolverError when the
// iteration cap is exceeded.
CgResult solve_cg_jacobi(const SparseMatrix &A, std::span<const double> b, std::span<double> x, double tol = 1e-6,
                         std::size_t max_iterations = 0, unsigned threads = 1);

}  // namespace surfem

#endif
