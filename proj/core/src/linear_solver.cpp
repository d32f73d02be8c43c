#include "surfem/linear_solver.hpp"

#include <cmath>
#include <vector>

#include "surfem/errors.hpp"

namespace surfem {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

CgResult solve_cg_jacobi(const SparseMatrix &A, std::span<const double> b, std::span<double> x, double tol,
                         std::size_t max_iterations, unsigned threads) {
  const std::size_t n = A.n_rows();
  if (max_iterations == 0) max_iterations = 10 * n;

  std::fill(x.begin(), x.end(), 0.0);
  const double b_norm = std::sqrt(dot(b, b));
  if (b_norm == 0.0) return {0, 0.0};
  const double threshold = tol * b_norm;

  std::vector<double> inv_diag(n);
  {
    const auto d = A.diagonal();
    for (std::size_t i = 0; i < n; ++i) inv_diag[i] = d[i] != 0.0 ? 1.0 / d[i] : 1.0;
  }

  std::vector<double> r(b.begin(), b.end());  // x starts at zero
  std::vector<double> z(n), p(n), q(n);
  for (std::size_t i = 0; i < n; ++i) z[i] = inv_diag[i] * r[i];
  p = z;
  double rz = dot(r, z);

  for (std::size_t it = 1; it <= max_iterations; ++it) {
    A.vmult(p, q, threads);
    const double pq = dot(p, q);
    if (pq <= 0.0) throw LinearSolverError(it, std::sqrt(dot(r, r)));
    const double alpha = rz / pq;
    for (std::size_t i = 0; i < n; ++i) {
      x[i] += alpha * p[i];
      r[i] -= alpha * q[i];
    }
    const double r_norm = std::sqrt(dot(r, r));
    if (r_norm <= threshold) return {it, r_norm};

    for (std::size_t i = 0; i < n; ++i) z[i] = inv_diag[i] * r[i];
    const double rz_new = dot(r, z);
    const double beta = rz_new / rz;
    rz = rz_new;
    for (std::size_t i = 0; i < n; ++i) p[i] = z[i] + beta * p[i];
  }
  throw LinearSolverError(max_iterations, std::sqrt(dot(r, r)));
}

}  // namespace surfem
