#include "surfem/sparse_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "surfem/parallel.hpp"

namespace surfem {

SparsityPattern SparsityPattern::from_cliques(std::size_t n_dofs,
                                              const std::vector<std::vector<std::size_t>> &cliques) {
  std::vector<std::vector<std::uint32_t>> rows(n_dofs);
  for (const auto &clique : cliques)
    for (const std::size_t i : clique)
      for (const std::size_t j : clique) rows[i].push_back(static_cast<std::uint32_t>(j));

  SparsityPattern p;
  p.row_start.resize(n_dofs + 1, 0);
  for (std::size_t i = 0; i < n_dofs; ++i) {
    auto &r = rows[i];
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    p.row_start[i + 1] = p.row_start[i] + r.size();
  }
  p.cols.reserve(p.row_start.back());
  for (auto &r : rows) p.cols.insert(p.cols.end(), r.begin(), r.end());
  return p;
}

SparseMatrix::SparseMatrix(SparsityPattern pattern) : pattern_(std::move(pattern)) {
  values_.assign(pattern_.n_nonzero(), 0.0);
}

void SparseMatrix::set_zero() { std::fill(values_.begin(), values_.end(), 0.0); }

std::size_t SparseMatrix::find(std::size_t i, std::size_t j) const {
  const auto begin = pattern_.cols.begin() + static_cast<std::ptrdiff_t>(pattern_.row_start[i]);
  const auto end = pattern_.cols.begin() + static_cast<std::ptrdiff_t>(pattern_.row_start[i + 1]);
  const auto it = std::lower_bound(begin, end, static_cast<std::uint32_t>(j));
  if (it == end || *it != j) return static_cast<std::size_t>(-1);
  return static_cast<std::size_t>(it - pattern_.cols.begin());
}

void SparseMatrix::add(std::size_t i, std::size_t j, double value) {
  const std::size_t k = find(i, j);
  if (k == static_cast<std::size_t>(-1))
    throw std::out_of_range("SparseMatrix::add outside the sparsity pattern");
  values_[k] += value;
}

double SparseMatrix::operator()(std::size_t i, std::size_t j) const {
  const std::size_t k = find(i, j);
  return k == static_cast<std::size_t>(-1) ? 0.0 : values_[k];
}

std::vector<double> SparseMatrix::diagonal() const {
  std::vector<double> d(n_rows(), 0.0);
  for (std::size_t i = 0; i < n_rows(); ++i) d[i] = (*this)(i, i);
  return d;
}

void SparseMatrix::vmult(std::span<const double> x, std::span<double> y, unsigned threads) const {
  parallel_for(
      n_rows(), threads,
      [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
          double s = 0.0;
          for (std::size_t k = pattern_.row_start[i]; k < pattern_.row_start[i + 1]; ++k)
            s += values_[k] * x[pattern_.cols[k]];
          y[i] = s;
        }
      },
      1024);
}

double SparseMatrix::symmetry_defect() const {
  double defect = 0.0;
  for (std::size_t i = 0; i < n_rows(); ++i)
    for (std::size_t k = pattern_.row_start[i]; k < pattern_.row_start[i + 1]; ++k) {
      const std::size_t j = pattern_.cols[k];
      if (j < i) continue;
      defect = std::max(defect, std::abs(values_[k] - (*this)(j, i)));
    }
  return defect;
}

double SparseMatrix::max_abs() const {
  double m = 0.0;
  for (const double v : values_) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace surfem
