#ifndef SURFEM_SPARSE_MATRIX_HPP
#define SURFEM_SPARSE_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace surfem {

// Compressed-row sparsity with sorted column indices per row.
struct SparsityPattern {
  std::vector<std::size_t> row_start;  // length n_rows + 1
  std::vector<std::uint32_t> cols;

  std::size_t n_rows() const { return row_start.empty() ? 0 : row_start.size() - 1; }
  std::size_t n_nonzero() const { return cols.size(); }

  // Builds the symmetric pattern covering all pairs within each dof clique
  // (one clique per cell, surface cells already mapped to volume dofs).
  static SparsityPattern from_cliques(std::size_t n_dofs, const std::vector<std::vector<std::size_t>> &cliques);
};

class SparseMatrix {
 public:
  SparseMatrix() = default;
  explicit SparseMatrix(SparsityPattern pattern);

  std::size_t n_rows() const { return pattern_.n_rows(); }
  const SparsityPattern &pattern() const { return pattern_; }

  void set_zero();
  void add(std::size_t i, std::size_t j, double value);  // entry must be in the pattern
  double operator()(std::size_t i, std::size_t j) const;  // 0 outside the pattern

  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }

  std::vector<double> diagonal() const;

  // y = A x, optionally row-parallel.
  void vmult(std::span<const double> x, std::span<double> y, unsigned threads = 1) const;

  // max_ij |A_ij - A_ji| over the pattern; for the symmetry checks.
  double symmetry_defect() const;
  double max_abs() const;

 private:
  std::size_t find(std::size_t i, std::size_t j) const;

  SparsityPattern pattern_;
  std::vector<double> values_;
};

}  // namespace surfem

#endif
