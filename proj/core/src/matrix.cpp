#include "fsb/matrix.hpp"

#include <sstream>

#include "fsb/errors.hpp"

namespace fsb {

void require_same_ring(const Ring& a, const Ring& b, const char* where) {
  if (a != b) fail(ErrorCode::RingMismatch, std::string(where) + ": " + a.name() + " vs " + b.name());
}

Mat::Mat(const Ring& ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

Mat Mat::identity(const Ring& ring, std::size_t n) {
  Mat m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

Mat Mat::from_rows(const Ring& ring, const std::vector<std::vector<long>>& rows) {
  std::size_t c = rows.empty() ? 0 : rows[0].size();
  Mat m(ring, rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) fail(ErrorCode::InvalidArgument, "ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, Int(rows[i][j]));
  }
  return m;
}

Mat Mat::from_rows(const Ring& ring, const std::vector<Vec>& rows) {
  std::size_t c = rows.empty() ? 0 : rows[0].size();
  Mat m(ring, rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) fail(ErrorCode::InvalidArgument, "ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Mat Mat::from_columns(const Ring& ring, std::size_t n, const std::vector<Vec>& cols) {
  Mat m(ring, n, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != n) fail(ErrorCode::InvalidArgument, "column has wrong length");
    for (std::size_t i = 0; i < n; ++i) m.set(i, j, cols[j][i]);
  }
  return m;
}

Mat Mat::row_vector(const Ring& ring, const Vec& v) { return from_rows(ring, std::vector<Vec>{v}); }

Mat Mat::column_vector(const Ring& ring, const Vec& v) { return from_columns(ring, v.size(), {v}); }

void Mat::canonicalize() {
  if (ring_.is_integers()) return;
  for (auto& x : data_) x = ring_.reduce(x);
}

Vec Mat::row(std::size_t i) const { return Vec(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }

Vec Mat::column(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Mat Mat::submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) fail(ErrorCode::InvalidArgument, "submatrix out of range");
  Mat m(ring_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) m.data_[i * nc + j] = (*this)(r0 + i, c0 + j);
  return m;
}

void Mat::set_block(std::size_t r0, std::size_t c0, const Mat& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) fail(ErrorCode::InvalidArgument, "block out of range");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) set(r0 + i, c0 + j, b(i, j));
}

Mat Mat::select_columns(const std::vector<std::size_t>& idx) const {
  Mat m(ring_, rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) m.data_[i * idx.size() + j] = (*this)(i, idx[j]);
  return m;
}

Mat Mat::transpose() const {
  Mat m(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.data_[j * rows_ + i] = (*this)(i, j);
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  require_same_ring(ring_, o.ring_, "matrix product");
  if (cols_ != o.rows_)
    fail(ErrorCode::InvalidArgument, "matrix product shape mismatch " + std::to_string(rows_) + "x" +
                                         std::to_string(cols_) + " * " + std::to_string(o.rows_) + "x" +
                                         std::to_string(o.cols_));
  Mat m(ring_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) m.data_[i * o.cols_ + j] += a * o(k, j);
    }
  }
  m.canonicalize();
  return m;
}

Mat Mat::operator+(const Mat& o) const {
  require_same_ring(ring_, o.ring_, "matrix sum");
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorCode::InvalidArgument, "matrix sum shape mismatch");
  Mat m(*this);
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = ring_.reduce(data_[k] + o.data_[k]);
  return m;
}

Mat Mat::operator-(const Mat& o) const {
  require_same_ring(ring_, o.ring_, "matrix difference");
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorCode::InvalidArgument, "matrix difference shape mismatch");
  Mat m(*this);
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = ring_.reduce(data_[k] - o.data_[k]);
  return m;
}

Mat Mat::operator-() const { return scaled(Int(-1)); }

Mat Mat::scaled(const Int& c) const {
  Mat m(*this);
  for (auto& x : m.data_) x = ring_.reduce(x * c);
  return m;
}

Vec Mat::apply(const Vec& v) const {
  if (v.size() != cols_) fail(ErrorCode::InvalidArgument, "vector length mismatch");
  Vec out(rows_, Int(0));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    out[i] = ring_.reduce(out[i]);
  }
  return out;
}

bool Mat::operator==(const Mat& o) const {
  return ring_ == o.ring_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool Mat::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

bool Mat::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

std::vector<std::vector<Int>> Mat::to_nested() const {
  std::vector<std::vector<Int>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = row(i);
  return out;
}

std::string Mat::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

Mat hstack(const Mat& a, const Mat& b) {
  require_same_ring(a.ring(), b.ring(), "hstack");
  if (a.rows() != b.rows()) fail(ErrorCode::InvalidArgument, "hstack row mismatch");
  Mat m(a.ring(), a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

Mat vstack(const Mat& a, const Mat& b) {
  require_same_ring(a.ring(), b.ring(), "vstack");
  if (a.cols() != b.cols()) fail(ErrorCode::InvalidArgument, "vstack column mismatch");
  Mat m(a.ring(), a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

Mat block_diag(const Mat& a, const Mat& b) {
  require_same_ring(a.ring(), b.ring(), "block_diag");
  Mat m(a.ring(), a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

Int dot(const Ring& r, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail(ErrorCode::InvalidArgument, "dot length mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return r.reduce(s);
}

Vec unit_vector(std::size_t n, std::size_t i) {
  Vec v(n, Int(0));
  v[i] = 1;
  return v;
}

}  // namespace fsb
