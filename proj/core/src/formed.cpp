#include "fsb/formed.hpp"

#include "fsb/errors.hpp"
#include "fsb/exactlin.hpp"

namespace fsb {

void check_alternating(const Mat& lambda) {
  if (!lambda.is_square())
    fail(ErrorCode::NotAlternating, "lambda must be square, got " + std::to_string(lambda.rows()) + "x" +
                                        std::to_string(lambda.cols()));
  const Ring& r = lambda.ring();
  for (std::size_t i = 0; i < lambda.rows(); ++i) {
    if (!r.is_zero(lambda(i, i)))
      fail(ErrorCode::NotAlternating, "diagonal entry lambda[" + std::to_string(i) + "][" + std::to_string(i) +
                                          "] = " + lambda(i, i).get_str() + " is nonzero");
    for (std::size_t j = i + 1; j < lambda.cols(); ++j)
      if (!r.is_zero(lambda(i, j) + lambda(j, i)))
        fail(ErrorCode::NotAlternating, "lambda[" + std::to_string(i) + "][" + std::to_string(j) + "] = " +
                                            lambda(i, j).get_str() + " but lambda[" + std::to_string(j) + "][" +
                                            std::to_string(i) + "] = " + lambda(j, i).get_str());
  }
}

FormedSpace::FormedSpace(Mat lambda, Mat del) : lambda_(std::move(lambda)), del_(std::move(del)) {
  require_same_ring(lambda_.ring(), del_.ring(), "formed space");
  check_alternating(lambda_);
  if (del_.rows() != 1 || del_.cols() != lambda_.rows())
    fail(ErrorCode::InvalidArgument, "boundary must be a 1x" + std::to_string(lambda_.rows()) + " row");
  lambda_.canonicalize();
  del_.canonicalize();
}

FormedSpace FormedSpace::zero(const Ring& r) { return FormedSpace(Mat(r, 0, 0), Mat(r, 1, 0)); }

Int FormedSpace::pair(const Vec& u, const Vec& v) const { return dot(ring(), pairing_row(u), v); }

Int FormedSpace::boundary(const Vec& v) const { return dot(ring(), del_.row(0), v); }

Vec FormedSpace::pairing_row(const Vec& u) const {
  if (u.size() != rank()) fail(ErrorCode::InvalidArgument, "vector length does not match rank");
  Vec out(rank(), Int(0));
  for (std::size_t i = 0; i < rank(); ++i) {
    if (sgn(u[i]) == 0) continue;
    for (std::size_t j = 0; j < rank(); ++j) out[j] += u[i] * lambda_(i, j);
  }
  for (auto& x : out) x = ring().reduce(x);
  return out;
}

FormedSpace FormedSpace::transport(const Mat& p) const {
  if (p.rows() != rank()) fail(ErrorCode::InvalidArgument, "basis matrix has wrong number of rows");
  return FormedSpace(p.transpose() * lambda_ * p, del_ * p);
}

FormedSpace sum(const FormedSpace& a, const FormedSpace& b) {
  require_same_ring(a.ring(), b.ring(), "sum");
  const Ring& r = a.ring();
  const std::size_t na = a.rank(), nb = b.rank();
  Mat lam(r, na + nb, na + nb);
  lam.set_block(0, 0, a.lambda());
  lam.set_block(na, na, b.lambda());
  Mat cross = a.del().transpose() * b.del();
  lam.set_block(0, na, cross);
  lam.set_block(na, 0, -cross.transpose());
  return FormedSpace(lam, hstack(a.del(), b.del()));
}

FormedSpace x_power(std::size_t n, const Ring& r) {
  Mat lam(r, n, n), del(r, 1, n);
  for (std::size_t i = 0; i < n; ++i) {
    del.set(0, i, Int(1));
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) lam.set(i, j, Int(i < j ? 1 : -1));
  }
  return FormedSpace(lam, del);
}

Mat hyperbolic_form(std::size_t g, const Ring& r) {
  Mat lam(r, 2 * g, 2 * g);
  for (std::size_t i = 0; i < g; ++i) {
    lam.set(2 * i, 2 * i + 1, Int(1));
    lam.set(2 * i + 1, 2 * i, Int(-1));
  }
  return lam;
}

FormedSpace hyperbolic(std::size_t g, const Ring& r) { return FormedSpace(hyperbolic_form(g, r), Mat(r, 1, 2 * g)); }

Mat curved_form(const FormedSpace& a) { return a.lambda() + a.del().transpose() * a.del(); }

bool is_nondegenerate(const FormedSpace& a) { return a.rank() == 0 || is_invertible(curved_form(a)); }

FormedSpace x_power_model(std::size_t n, const Ring& r) {
  const std::size_t g = n / 2;
  if (n % 2 == 1) return sum(hyperbolic(g, r), x_power(1, r));
  Mat del(r, 1, n);
  if (g > 0) del.set(0, 1, Int(1));
  return FormedSpace(hyperbolic_form(g, r), del);
}

std::string morphism_defect(const FormedSpace& source, const FormedSpace& target, const Mat& m) {
  if (source.ring() != target.ring() || m.ring() != source.ring()) return "ring mismatch";
  if (m.rows() != target.rank() || m.cols() != source.rank())
    return "matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", expected " +
           std::to_string(target.rank()) + "x" + std::to_string(source.rank());
  if (m.transpose() * target.lambda() * m != source.lambda()) return "lambda is not preserved";
  if (target.del() * m != source.del()) return "boundary is not preserved";
  return {};
}

Morphism::Morphism(FormedSpace source, FormedSpace target, Mat matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  auto defect = morphism_defect(source_, target_, matrix_);
  if (!defect.empty()) fail(ErrorCode::NotAMorphism, defect);
}

Morphism Morphism::compose(const Morphism& before) const {
  if (before.target() != source_) fail(ErrorCode::NotAMorphism, "composition: target does not match source");
  return Morphism(before.source(), target_, matrix_ * before.matrix());
}

WitnessIso::WitnessIso(FormedSpace source, FormedSpace target, Mat matrix)
    : fwd_(std::move(source), std::move(target), std::move(matrix)), inv_(inverse(fwd_.matrix())) {}

WitnessIso::WitnessIso(FormedSpace source, FormedSpace target, Mat matrix, Mat inv)
    : fwd_(std::move(source), std::move(target), std::move(matrix)), inv_(std::move(inv)) {
  const std::size_t n = fwd_.matrix().rows();
  if (!fwd_.matrix().is_square() || inv_.rows() != n || inv_.cols() != n ||
      !(fwd_.matrix() * inv_).is_identity() || !(inv_ * fwd_.matrix()).is_identity())
    fail(ErrorCode::NotInvertible, "supplied inverse does not invert the witness");
}

WitnessIso WitnessIso::identity(const FormedSpace& a) {
  Mat id = Mat::identity(a.ring(), a.rank());
  return WitnessIso(a, a, id, id);
}

WitnessIso WitnessIso::inverted() const { return WitnessIso(target(), source(), inv_, matrix()); }

WitnessIso WitnessIso::compose(const WitnessIso& before) const {
  if (before.target() != source()) fail(ErrorCode::NotAMorphism, "composition: target does not match source");
  return WitnessIso(before.source(), target(), matrix() * before.matrix(), before.inverse_matrix() * inv_);
}

bool WitnessIso::verify() const {
  return morphism_defect(source(), target(), matrix()).empty() &&
         morphism_defect(target(), source(), inv_).empty() && (matrix() * inv_).is_identity() &&
         (inv_ * matrix()).is_identity();
}

Morphism sum(const Morphism& phi, const Morphism& psi) {
  return Morphism(sum(phi.source(), psi.source()), sum(phi.target(), psi.target()),
                  block_diag(phi.matrix(), psi.matrix()));
}

WitnessIso sum(const WitnessIso& phi, const WitnessIso& psi) {
  return WitnessIso(sum(phi.source(), psi.source()), sum(phi.target(), psi.target()),
                    block_diag(phi.matrix(), psi.matrix()), block_diag(phi.inverse_matrix(), psi.inverse_matrix()));
}

Mat braid_block(std::size_t n, std::size_t m, const Ring& r) {
  Mat b(r, n + m, n + m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) b.set(i, j, Int(i % 2 == 0 ? 2 : -2));
    b.set(i, n + i, Int(1));
  }
  const int sign = m % 2 == 0 ? 1 : -1;
  for (std::size_t i = 0; i < n; ++i) b.set(m + i, i, Int(sign));
  return b;
}

WitnessIso braid_matrix(std::size_t n, std::size_t m, const Ring& r) {
  FormedSpace x = x_power(n + m, r);
  return WitnessIso(x, x, braid_block(n, m, r));
}

Vec characteristic_vector(std::size_t n, const Ring& r) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "characteristic vector needs n >= 1");
  Vec v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = r.reduce(Int(i % 2 == 0 ? 1 : -1));
  FormedSpace x = x_power(n, r);
  Vec row = x.pairing_row(v);
  Vec del = x.del().row(0);
  Vec expected = n % 2 == 1 ? Vec(n, Int(0)) : del;
  if (row != expected) fail(ErrorCode::Internal, "characteristic vector identity lambda(v,-) failed");
  if (curved_form(x).transpose().apply(v) != del)
    fail(ErrorCode::Internal, "characteristic vector identity lambda'(v,-) = del failed");
  return v;
}

namespace {

Mat substitution(std::size_t n, const Ring& r) {
  if (n == 1) return Mat::identity(r, 1);
  if (n == 2) return Mat::from_rows(r, std::vector<std::vector<long>>{{1, 0}, {-1, 1}});
  // columns e = x - y, f = y - z, u = x - y + z
  return Mat::from_rows(r, std::vector<std::vector<long>>{{1, 0, 1}, {-1, 1, -1}, {0, -1, 1}});
}

}  // namespace

WitnessIso standardize_x_power(std::size_t n, const Ring& r) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "standardize_x_power needs n >= 1");
  if (n <= 3) return WitnessIso(x_power_model(n, r), x_power(n, r), substitution(n, r));
  const std::size_t g = n / 2;
  WitnessIso prev = standardize_x_power(2 * g - 1, r);
  if (n % 2 == 1) {
    // (H^{g-1},0) # ((H,0) # X) -> (H^{g-1},0) # X^3 -> X^{2g-1} # X^2
    WitnessIso step = sum(WitnessIso::identity(hyperbolic(g - 1, r)), standardize_x_power(3, r));
    WitnessIso lift = sum(prev, WitnessIso::identity(x_power(2, r)));
    return lift.compose(step);
  }
  // (H^{g-1},0) # (H, lambda(e1,-)) -> (H^{g-1},0) # X^2 -> X^{2g-1} # X
  WitnessIso step = sum(WitnessIso::identity(hyperbolic(g - 1, r)), standardize_x_power(2, r));
  WitnessIso lift = sum(prev, WitnessIso::identity(x_power(1, r)));
  WitnessIso chain = lift.compose(step);
  // Move the last hyperbolic block to the front so del = lambda(e1,-).
  Mat perm(r, n, n);
  perm.set(n - 2, 0, Int(1));
  perm.set(n - 1, 1, Int(1));
  for (std::size_t i = 0; i + 2 < n; ++i) perm.set(i, i + 2, Int(1));
  WitnessIso reorder(x_power_model(n, r), chain.source(), perm, perm.transpose());
  return chain.compose(reorder);
}

}  // namespace fsb
