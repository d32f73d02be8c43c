#ifndef SURFEM_ERRORS_HPP
#define SURFEM_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace surfem {

// All recoverable failures are reported through this hierarchy. The CLI maps
// SolverError and its descendants to exit code 1, usage/config problems to 2.

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

// A state with nonpositive Jacobian determinant handed to a constitutive law.
class InadmissibleStateError : public Error {
 public:
  using Error::Error;
};

// Nonpositive isoparametric-to-spatial Jacobian at a quadrature point; the
// abort condition for the Newton scheme.
class InvertedCellError : public Error {
 public:
  InvertedCellError(std::size_t cell, int qp, double jacobian, int step = -1)
      : Error(format(cell, qp, jacobian, step)), cell_(cell), qp_(qp), jacobian_(jacobian), step_(step) {}

  std::size_t cell() const { return cell_; }
  int quadrature_point() const { return qp_; }
  double jacobian() const { return jacobian_; }
  int step() const { return step_; }

  InvertedCellError with_step(int step) const { return {cell_, qp_, jacobian_, step}; }

 private:
  static std::string format(std::size_t cell, int qp, double jacobian, int step) {
    std::string s = "inverted cell: nonpositive Jacobian determinant " + std::to_string(jacobian) +
                    " at cell " + std::to_string(cell) + ", quadrature point " + std::to_string(qp);
    if (step >= 0) s += ", time step " + std::to_string(step);
    return s;
  }

  std::size_t cell_;
  int qp_;
  double jacobian_;
  int step_;
};

class DegenerateSurfaceCellError : public Error {
 public:
  DegenerateSurfaceCellError(std::size_t cell, int qp)
      : Error("degenerate surface cell " + std::to_string(cell) + " at quadrature point " + std::to_string(qp)),
        cell_(cell),
        qp_(qp) {}

  std::size_t cell() const { return cell_; }
  int quadrature_point() const { return qp_; }

 private:
  std::size_t cell_;
  int qp_;
};

class MeshError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  ConfigError(const std::string &what, const std::string &file = "", int line = 0)
      : Error(file.empty() ? what : file + ":" + std::to_string(line) + ": " + what), line_(line) {}

  int line() const { return line_; }

 private:
  int line_ = 0;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class LinearSolverError : public Error {
 public:
  LinearSolverError(std::size_t iterations, double residual)
      : Error("linear solver failed to converge: " + std::to_string(iterations) +
              " iterations, residual " + std::to_string(residual)),
        iterations_(iterations),
        residual_(residual) {}

  std::size_t iterations() const { return iterations_; }
  double residual() const { return residual_; }

 private:
  std::size_t iterations_;
  double residual_;
};

class NonConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace surfem

#endif
