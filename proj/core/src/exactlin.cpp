#include "fsb/exactlin.hpp"

#include <random>

#include "fsb/errors.hpp"

namespace fsb {

namespace {

// Working state of the Smith reduction. A is kept as a flat Int array; every
// row operation is mirrored on U and (inverted) on U_inv, every column
// operation on V and V_inv.
class SmithEngine {
 public:
  explicit SmithEngine(const Mat& a)
      : r_(a.ring()),
        m_(a.rows()),
        n_(a.cols()),
        a_(a),
        u_(Mat::identity(r_, m_)),
        ui_(Mat::identity(r_, m_)),
        v_(Mat::identity(r_, n_)),
        vi_(Mat::identity(r_, n_)) {}

  SnfResult run() {
    std::size_t t = 0;
    const std::size_t lim = std::min(m_, n_);
    for (; t < lim; ++t) {
      if (!place_pivot(t)) break;
      while (true) {
        for (std::size_t i = t + 1; i < m_; ++i)
          if (!zero(i, t)) eliminate_row(t, i);
        bool col_dirty = false;
        for (std::size_t j = t + 1; j < n_; ++j)
          if (!zero(t, j)) {
            eliminate_col(t, j);
            col_dirty = true;
          }
        if (col_dirty && !column_clear(t)) continue;
        auto bad = non_divisible(t);
        if (!bad) break;
        add_row(t, *bad, Int(1));
      }
    }
    for (std::size_t i = 0; i < lim; ++i) {
      const Int& d = a_(i, i);
      if (r_.is_zero(d)) continue;
      Int u = r_.unit_part(d);
      if (u != 1) scale_row(i, r_.inverse(u), u);
    }
    SnfResult res{u_, a_, v_, ui_, vi_, 0};
    for (std::size_t i = 0; i < lim; ++i)
      if (!r_.is_zero(a_(i, i))) ++res.rank;
    return res;
  }

 private:
  bool zero(std::size_t i, std::size_t j) const { return sgn(a_(i, j)) == 0; }

  // Smaller is a better pivot.
  std::pair<Int, Int> norm(const Int& x) const {
    if (r_.is_integers()) return {abs(x), Int(0)};
    return {gcd(x, Int(r_.modulus())), x};
  }

  bool place_pivot(std::size_t t) {
    bool found = false;
    std::size_t bi = 0, bj = 0;
    std::pair<Int, Int> best;
    for (std::size_t i = t; i < m_; ++i)
      for (std::size_t j = t; j < n_; ++j) {
        if (zero(i, j)) continue;
        auto nv = norm(a_(i, j));
        if (!found || nv < best) {
          found = true;
          best = nv;
          bi = i;
          bj = j;
          if (best.first == 1) goto done;
        }
      }
  done:
    if (!found) return false;
    if (bi != t) swap_rows(t, bi);
    if (bj != t) swap_cols(t, bj);
    return true;
  }

  bool column_clear(std::size_t t) const {
    for (std::size_t i = t + 1; i < m_; ++i)
      if (!zero(i, t)) return false;
    return true;
  }

  std::optional<std::size_t> non_divisible(std::size_t t) const {
    const Int& p = a_(t, t);
    if (r_.is_unit(p)) return std::nullopt;
    for (std::size_t i = t + 1; i < m_; ++i)
      for (std::size_t j = t + 1; j < n_; ++j)
        if (!zero(i, j) && !r_.divides(p, a_(i, j))) return i;
    return std::nullopt;
  }

  static void row_combo(Mat& x, std::size_t p, std::size_t q, const Int& a, const Int& b, const Int& c,
                        const Int& d) {
    // rows (p, q) <- (a*p + b*q, c*p + d*q)
    for (std::size_t j = 0; j < x.cols(); ++j) {
      Int xp = x(p, j), xq = x(q, j);
      x.set(p, j, a * xp + b * xq);
      x.set(q, j, c * xp + d * xq);
    }
  }

  static void col_combo(Mat& x, std::size_t p, std::size_t q, const Int& a, const Int& b, const Int& c,
                        const Int& d) {
    // cols (p, q) <- (a*p + b*q, c*p + d*q)
    for (std::size_t i = 0; i < x.rows(); ++i) {
      Int xp = x(i, p), xq = x(i, q);
      x.set(i, p, a * xp + b * xq);
      x.set(i, q, c * xp + d * xq);
    }
  }

  // Row transform T = [[a,b],[c,d]] on rows (p,q) with det 1.
  void row_transform(std::size_t p, std::size_t q, const Int& a, const Int& b, const Int& c, const Int& d) {
    row_combo(a_, p, q, a, b, c, d);
    row_combo(u_, p, q, a, b, c, d);
    // U_inv <- U_inv * T^{-1}, T^{-1} = [[d,-b],[-c,a]]
    col_combo(ui_, p, q, d, -c, -b, a);
  }

  // Column transform: new col p = a*p + b*q, new col q = c*p + d*q, det 1.
  void col_transform(std::size_t p, std::size_t q, const Int& a, const Int& b, const Int& c, const Int& d) {
    col_combo(a_, p, q, a, b, c, d);
    col_combo(v_, p, q, a, b, c, d);
    // V_inv <- S^{-1} * V_inv where S has columns (a,b) and (c,d) in slots p,q.
    row_combo(vi_, p, q, d, -c, -b, a);
  }

  void eliminate_row(std::size_t t, std::size_t i) {
    const Int a = a_(t, t), b = a_(i, t);
    if (r_.divides(a, b)) {
      Int q = r_.quotient(b, a);
      row_transform(t, i, Int(1), Int(0), -q, Int(1));
      return;
    }
    Int s, c;
    Int g = gcdext(a, b, s, c);
    Int ag = a / g, bg = b / g;
    row_transform(t, i, s, c, -bg, ag);
  }

  void eliminate_col(std::size_t t, std::size_t j) {
    const Int a = a_(t, t), b = a_(t, j);
    if (r_.divides(a, b)) {
      Int q = r_.quotient(b, a);
      col_transform(t, j, Int(1), Int(0), -q, Int(1));
      return;
    }
    Int s, c;
    Int g = gcdext(a, b, s, c);
    Int ag = a / g, bg = b / g;
    col_transform(t, j, s, c, -bg, ag);
  }

  void add_row(std::size_t t, std::size_t i, const Int& c) { row_transform(t, i, Int(1), c, Int(0), Int(1)); }

  void swap_rows(std::size_t p, std::size_t q) {
    for (Mat* x : {&a_, &u_})
      for (std::size_t j = 0; j < x->cols(); ++j) std::swap(x->ref(p, j), x->ref(q, j));
    for (std::size_t i = 0; i < ui_.rows(); ++i) std::swap(ui_.ref(i, p), ui_.ref(i, q));
  }

  void swap_cols(std::size_t p, std::size_t q) {
    for (Mat* x : {&a_, &v_})
      for (std::size_t i = 0; i < x->rows(); ++i) std::swap(x->ref(i, p), x->ref(i, q));
    for (std::size_t j = 0; j < vi_.cols(); ++j) std::swap(vi_.ref(p, j), vi_.ref(q, j));
  }

  void scale_row(std::size_t i, const Int& c, const Int& cinv) {
    for (std::size_t j = 0; j < n_; ++j) a_.set(i, j, a_(i, j) * c);
    for (std::size_t j = 0; j < m_; ++j) u_.set(i, j, u_(i, j) * c);
    for (std::size_t k = 0; k < m_; ++k) ui_.set(k, i, ui_(k, i) * cinv);
  }

  Ring r_;
  std::size_t m_, n_;
  Mat a_, u_, ui_, v_, vi_;
};

}  // namespace

Vec SnfResult::diagonal() const {
  Vec d;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

std::size_t SnfResult::unit_count() const {
  std::size_t c = 0;
  for (const auto& d : diagonal())
    if (D.ring().is_unit(d)) ++c;
  return c;
}

SnfResult smith_normal_form(const Mat& a) { return SmithEngine(a).run(); }

Vec invariant_factors(const Mat& a) {
  Vec out;
  for (const auto& d : smith_normal_form(a).diagonal())
    if (sgn(d) != 0) out.push_back(d);
  return out;
}

Mat hermite_row_form(const Mat& a) {
  const Ring& r = a.ring();
  if (!r.is_pid()) return a;
  Mat h = a;
  std::size_t row = 0;
  for (std::size_t c = 0; c < h.cols() && row < h.rows(); ++c) {
    for (std::size_t i = row + 1; i < h.rows(); ++i) {
      if (sgn(h(i, c)) == 0) continue;
      Int x = h(row, c), y = h(i, c), s, t;
      Int g = gcdext(x, y, s, t);
      Int xg = x / g, yg = y / g;
      for (std::size_t j = 0; j < h.cols(); ++j) {
        Int p = h(row, j), q = h(i, j);
        h.set(row, j, s * p + t * q);
        h.set(i, j, -yg * p + xg * q);
      }
    }
    if (sgn(h(row, c)) == 0) continue;
    Int u = r.unit_part(h(row, c));
    if (u != 1) {
      Int ui = r.inverse(u);
      for (std::size_t j = 0; j < h.cols(); ++j) h.set(row, j, h(row, j) * ui);
    }
    const Int piv = h(row, c);
    for (std::size_t i = 0; i < row; ++i) {
      Int q;
      if (r.is_integers())
        mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), piv.get_mpz_t());
      else
        q = r.quotient(h(i, c), piv);
      if (sgn(q) == 0) continue;
      for (std::size_t j = 0; j < h.cols(); ++j) h.set(i, j, h(i, j) - q * h(row, j));
    }
    ++row;
  }
  return h.submatrix(0, 0, row, h.cols());
}

Mat kernel_basis(const Mat& a) {
  const Ring& r = a.ring();
  SnfResult s = smith_normal_form(a);
  const std::size_t n = a.cols();
  const std::size_t lim = std::min(a.rows(), n);
  std::vector<std::size_t> cols;
  for (std::size_t j = 0; j < n; ++j) {
    if (j >= lim) {
      cols.push_back(j);
      continue;
    }
    const Int& d = s.D(j, j);
    if (r.is_zero(d))
      cols.push_back(j);
    else if (!r.is_unit(d) && !r.is_pid())
      fail(ErrorCode::NonFreeKernel, "invariant factor " + d.get_str() + " over " + r.name());
  }
  Mat k = s.V.select_columns(cols);
  if (k.cols() == 0 || !r.is_pid()) return k;
  return hermite_row_form(k.transpose()).transpose();
}

bool is_unimodular_rows(const Mat& a) {
  if (a.rows() > a.cols()) return false;
  if (a.rows() == 0) return true;
  return smith_normal_form(a).unit_count() == a.rows();
}

bool is_unimodular_sequence(const Mat& columns) { return is_unimodular_rows(columns.transpose()); }

std::size_t relative_rank(std::size_t ambient_rank, const Mat& gens) {
  if (gens.rows() != ambient_rank)
    fail(ErrorCode::InvalidArgument, "generators must have " + std::to_string(ambient_rank) + " rows");
  if (gens.empty()) return 0;
  return smith_normal_form(gens).unit_count();
}

Mat right_inverse(const Mat& a) {
  SnfResult s = smith_normal_form(a);
  if (a.rows() > a.cols() || s.unit_count() != a.rows())
    fail(ErrorCode::NotInvertible, "rows are not unimodular");
  Mat e(a.ring(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) e.set(i, i, Int(1));
  return s.V * e * s.U;
}

std::optional<Mat> try_inverse(const Mat& a) {
  if (!a.is_square()) return std::nullopt;
  if (a.rows() == 0) return a;
  SnfResult s = smith_normal_form(a);
  if (s.unit_count() != a.rows()) return std::nullopt;
  return s.V * s.U;
}

Mat inverse(const Mat& a) {
  auto inv = try_inverse(a);
  if (!inv) fail(ErrorCode::NotInvertible, "matrix is not invertible over " + a.ring().name());
  return *inv;
}

bool is_invertible(const Mat& a) { return try_inverse(a).has_value(); }

Int determinant(const Mat& a) {
  if (!a.is_square()) fail(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return Int(1);
  // Fraction-free Bareiss elimination on integer lifts.
  std::vector<Int> m(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i * n + j] = a(i, j);
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m[k * n + k]) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(m[p * n + k]) == 0) ++p;
      if (p == n) return Int(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(m[k * n + j], m[p * n + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int v = m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j];
        mpz_divexact(m[i * n + j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m[k * n + k];
  }
  return a.ring().reduce(sign * m[n * n - 1]);
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
  const Ring& r = a.ring();
  if (b.size() != a.rows()) fail(ErrorCode::InvalidArgument, "right-hand side has wrong length");
  SnfResult s = smith_normal_form(a);
  Vec c = s.U.apply(b);
  Vec y(a.cols(), Int(0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Int d = i < a.cols() ? s.D(i, i) : Int(0);
    if (!r.divides(d, c[i])) return std::nullopt;
    if (i < a.cols()) y[i] = r.is_zero(d) ? Int(0) : r.quotient(c[i], d);
  }
  return s.V.apply(y);
}

std::pair<Mat, Mat> random_unimodular_pair(std::size_t n, const Ring& r, std::uint64_t seed, std::size_t steps) {
  Mat m = Mat::identity(r, n), mi = Mat::identity(r, n);
  if (n < 2) {
    // Only units are available; use a random unit scaling.
    if (n == 1 && steps > 0) {
      std::mt19937_64 rng(seed);
      Int u = 1;
      if (r.is_integers())
        u = (rng() & 1) ? 1 : -1;
      else
        for (std::size_t k = 0; k < steps; ++k) {
          Int c = r.reduce(Int(static_cast<unsigned long>(rng() % r.modulus())));
          if (r.is_unit(c)) u = r.mul(u, c);
        }
      m.set(0, 0, u);
      mi.set(0, 0, r.inverse(u));
    }
    return {m, mi};
  }
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t k) { return static_cast<std::size_t>(rng() % k); };
  for (std::size_t step = 0; step < steps; ++step) {
    std::size_t i = pick(n), j = pick(n - 1);
    if (j >= i) ++j;
    if (rng() % 4 != 0) {
      // row_i += c * row_j; inverse on the right: col_j -= c * col_i.
      Int c;
      if (r.is_integers()) {
        long v = static_cast<long>(pick(4)) - 2;
        c = v >= 0 ? v + 1 : v;
      } else {
        c = Int(static_cast<unsigned long>(1 + pick(static_cast<std::size_t>(r.modulus() - 1))));
      }
      for (std::size_t k = 0; k < n; ++k) m.set(i, k, m(i, k) + c * m(j, k));
      for (std::size_t k = 0; k < n; ++k) mi.set(k, j, mi(k, j) - c * mi(k, i));
    } else {
      // rows (i, j) <- (row_j, -row_i); inverse cols (i, j) <- (col_j, -col_i).
      for (std::size_t k = 0; k < n; ++k) {
        Int a = m(i, k), b = m(j, k);
        m.set(i, k, b);
        m.set(j, k, -a);
      }
      for (std::size_t k = 0; k < n; ++k) {
        Int a = mi(k, i), b = mi(k, j);
        mi.set(k, i, b);
        mi.set(k, j, -a);
      }
    }
  }
  return {m, mi};
}

Mat random_unimodular(std::size_t n, const Ring& r, std::uint64_t seed, std::size_t steps) {
  return random_unimodular_pair(n, r, seed, steps).first;
}

}  // namespace fsb
