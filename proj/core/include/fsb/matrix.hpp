#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "fsb/ring.hpp"

namespace fsb {

using Vec = std::vector<Int>;

// Dense row-major matrix over a Ring. Entries set through set() or the
// arithmetic operators are always canonical.
class Mat {
 public:
  Mat() : ring_(Ring::integers()) {}
  Mat(const Ring& ring, std::size_t rows, std::size_t cols);

  static Mat identity(const Ring& ring, std::size_t n);
  static Mat from_rows(const Ring& ring, const std::vector<std::vector<long>>& rows);
  static Mat from_rows(const Ring& ring, const std::vector<Vec>& rows);
  static Mat from_columns(const Ring& ring, std::size_t n, const std::vector<Vec>& cols);
  static Mat row_vector(const Ring& ring, const Vec& v);
  static Mat column_vector(const Ring& ring, const Vec& v);

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, const Int& v) { data_[i * cols_ + j] = ring_.reduce(v); }
  // Unchecked mutable access; callers restore canonical form with canonicalize().
  Int& ref(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  void canonicalize();

  Vec row(std::size_t i) const;
  Vec column(std::size_t j) const;
  Mat row_mat(std::size_t i) const { return submatrix(i, 0, 1, cols_); }
  Mat col_mat(std::size_t j) const { return submatrix(0, j, rows_, 1); }
  Mat submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Mat& b);
  Mat select_columns(const std::vector<std::size_t>& idx) const;

  Mat transpose() const;
  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator-() const;
  Mat scaled(const Int& c) const;
  Vec apply(const Vec& v) const;

  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }
  bool is_zero() const;
  bool is_identity() const;

  std::vector<std::vector<Int>> to_nested() const;
  std::string to_string() const;

 private:
  Ring ring_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> data_;
};

Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);
Mat block_diag(const Mat& a, const Mat& b);
void require_same_ring(const Ring& a, const Ring& b, const char* where);

Int dot(const Ring& r, const Vec& a, const Vec& b);
Vec unit_vector(std::size_t n, std::size_t i);

}  // namespace fsb
