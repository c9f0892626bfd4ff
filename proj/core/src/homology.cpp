#include "fsb/homology.hpp"

#include <algorithm>
#include <unordered_map>

#include "fsb/errors.hpp"
#include "fsb/exactlin.hpp"

namespace fsb {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorCode::BudgetExceeded, "int64 overflow in sparse elimination");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) fail(ErrorCode::BudgetExceeded, "int64 overflow in sparse elimination");
  return r;
}

// x -= q * y
void axpy(SparseColumn& x, std::int64_t q, const SparseColumn& y) {
  SparseColumn out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, checked_mul(-q, y[j].second));
      ++j;
    } else {
      std::int64_t v = checked_sub(x[i].second, checked_mul(q, y[j].second));
      if (v != 0) out.emplace_back(x[i].first, v);
      ++i;
      ++j;
    }
  }
  x.swap(out);
}

std::int64_t entry(const SparseColumn& c, std::uint32_t row) {
  auto it = std::lower_bound(c.begin(), c.end(), std::make_pair(row, std::int64_t(INT64_MIN)));
  return (it != c.end() && it->first == row) ? it->second : 0;
}

struct Reduced {
  std::vector<SparseColumn> cols;
  std::vector<SparseColumn> ops;  // column operations, only when tracked
  std::vector<std::size_t> pivot_cols, deferred, zero_cols;
  std::unordered_map<std::uint32_t, std::size_t> pivot_of_row;
};

// Persistence-style reduction with unit pivots on the lowest entry, then
// full clearing of pivot rows from the deferred columns.
Reduced reduce(const SparseMatrix& a, bool track) {
  Reduced r;
  r.cols = a.cols;
  if (track) {
    r.ops.resize(a.cols.size());
    for (std::size_t j = 0; j < a.cols.size(); ++j) r.ops[j] = {{static_cast<std::uint32_t>(j), 1}};
  }
  for (std::size_t j = 0; j < r.cols.size(); ++j) {
    auto& c = r.cols[j];
    while (!c.empty()) {
      auto [row, v] = c.back();
      auto it = r.pivot_of_row.find(row);
      if (it == r.pivot_of_row.end()) break;
      const auto& p = r.cols[it->second];
      const std::int64_t q = v * p.back().second;  // pivot entry is +-1
      axpy(c, q, p);
      if (track) axpy(r.ops[j], q, r.ops[it->second]);
    }
    if (c.empty()) {
      r.zero_cols.push_back(j);
    } else if (c.back().second == 1 || c.back().second == -1) {
      r.pivot_of_row[c.back().first] = j;
      r.pivot_cols.push_back(j);
    } else {
      r.deferred.push_back(j);
    }
  }
  for (std::size_t j : r.deferred) {
    auto& c = r.cols[j];
    // eliminating pivot row `row` only touches rows at or above it
    std::uint32_t bound = UINT32_MAX;
    while (true) {
      std::size_t idx = c.size();
      for (std::size_t k = c.size(); k-- > 0;)
        if (c[k].first < bound && r.pivot_of_row.count(c[k].first)) {
          idx = k;
          break;
        }
      if (idx == c.size()) break;
      const std::uint32_t row = c[idx].first;
      const std::size_t pc = r.pivot_of_row.at(row);
      const std::int64_t q = c[idx].second * r.cols[pc].back().second;
      axpy(c, q, r.cols[pc]);
      if (track) axpy(r.ops[j], q, r.ops[pc]);
      bound = row;
    }
  }
  return r;
}

// Dense residual: deferred columns restricted to non-pivot rows.
Mat residual(const Reduced& r, std::vector<std::uint32_t>& rows_used) {
  std::vector<std::uint32_t> rows;
  for (std::size_t j : r.deferred)
    for (const auto& [row, v] : r.cols[j]) rows.push_back(row);
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  rows_used = rows;
  Ring z = Ring::integers();
  Mat d(z, rows.size(), r.deferred.size());
  for (std::size_t jj = 0; jj < r.deferred.size(); ++jj)
    for (const auto& [row, v] : r.cols[r.deferred[jj]]) {
      if (r.pivot_of_row.count(row)) fail(ErrorCode::Internal, "pivot row survived clearing");
      std::size_t i = static_cast<std::size_t>(std::lower_bound(rows.begin(), rows.end(), row) - rows.begin());
      d.set(i, jj, Int(static_cast<long>(v)));
    }
  return d;
}

}  // namespace

Mat SparseMatrix::to_dense() const {
  Mat d(Ring::integers(), rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [row, v] : cols[j]) d.set(row, j, Int(static_cast<long>(v)));
  return d;
}

SparseSmith sparse_smith(const SparseMatrix& a) {
  Reduced r = reduce(a, false);
  SparseSmith out;
  out.unit_pivots = r.pivot_cols.size();
  out.rank = out.unit_pivots;
  if (!r.deferred.empty()) {
    std::vector<std::uint32_t> rows;
    Mat d = residual(r, rows);
    out.dense_rows = d.rows();
    out.dense_cols = d.cols();
    for (const Int& f : invariant_factors(d)) {
      ++out.rank;
      if (f != 1) out.torsion.push_back(f);
    }
  }
  return out;
}

std::vector<SparseColumn> sparse_kernel_basis(const SparseMatrix& a) {
  Reduced r = reduce(a, true);
  std::vector<SparseColumn> basis;
  for (std::size_t j : r.zero_cols) basis.push_back(r.ops[j]);
  if (r.deferred.empty()) return basis;
  std::vector<std::uint32_t> rows;
  Mat d = residual(r, rows);
  Mat k = kernel_basis(d);
  for (std::size_t c = 0; c < k.cols(); ++c) {
    SparseColumn acc;
    for (std::size_t jj = 0; jj < r.deferred.size(); ++jj) {
      if (k(jj, c) == 0) continue;
      if (!k(jj, c).fits_slong_p()) fail(ErrorCode::BudgetExceeded, "kernel coefficient exceeds int64");
      axpy(acc, -k(jj, c).get_si(), r.ops[r.deferred[jj]]);
    }
    basis.push_back(acc);
  }
  return basis;
}

}  // namespace fsb
