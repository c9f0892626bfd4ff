#pragma once

// Integer elimination for sparse boundary matrices.

#include <cstdint>
#include <utility>
#include <vector>

#include "fsb/matrix.hpp"

namespace fsb {

using SparseColumn = std::vector<std::pair<std::uint32_t, std::int64_t>>;  // sorted by row

struct SparseMatrix {
  std::size_t rows = 0;
  std::vector<SparseColumn> cols;

  Mat to_dense() const;
};

struct SparseSmith {
  std::size_t rank = 0;
  // Nonzero invariant factors different from 1, ascending by divisibility.
  std::vector<Int> torsion;
  std::size_t unit_pivots = 0;  // eliminated before the dense phase
  std::size_t dense_rows = 0, dense_cols = 0;
};

// Rank and invariant factors over Z. Unit pivots are eliminated sparsely in
// int64 (overflow raises BudgetExceeded); the remainder goes to dense SNF.
SparseSmith sparse_smith(const SparseMatrix& a);

// A Z-basis of the kernel of a, as sparse columns.
std::vector<SparseColumn> sparse_kernel_basis(const SparseMatrix& a);

}  // namespace fsb
