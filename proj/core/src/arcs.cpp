#include "fsb/arcs.hpp"

#include <algorithm>

#include "fsb/errors.hpp"
#include "fsb/exactlin.hpp"

namespace fsb {

std::string to_string(ComplexKind k) {
  switch (k) {
    case ComplexKind::Aalg:
      return "Aalg";
    case ComplexKind::B:
      return "B";
    case ComplexKind::D:
      return "D";
    case ComplexKind::U:
      return "U";
  }
  return "?";
}

ComplexKind parse_complex_kind(const std::string& s) {
  if (s == "Aalg" || s == "A" || s == "aalg") return ComplexKind::Aalg;
  if (s == "B" || s == "b") return ComplexKind::B;
  if (s == "D" || s == "d") return ComplexKind::D;
  if (s == "U" || s == "u") return ComplexKind::U;
  fail(ErrorCode::InvalidArgument, "unknown complex kind '" + s + "' (expected Aalg, B, D or U)");
}

namespace {

void require_arcs(const std::vector<Vec>& vs, const FormedSpace& a) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i].size() != a.rank())
      fail(ErrorCode::InvalidArgument, "vector " + std::to_string(i) + " has the wrong length");
    if (!is_arc(vs[i], a))
      fail(ErrorCode::NotAnArc, "vector " + std::to_string(i) + " has del = " + a.boundary(vs[i]).get_str());
  }
}

}  // namespace

bool is_arc(const Vec& v, const FormedSpace& a) { return a.ring().is_one(a.boundary(v)); }

bool is_nonseparating(const Vec& v, const FormedSpace& a) { return is_b_simplex({v}, a); }

bool is_aalg_simplex(const std::vector<Vec>& vs, const FormedSpace& a) {
  require_arcs(vs, a);
  if (vs.empty()) return false;
  return is_unimodular_sequence(Mat::from_columns(a.ring(), a.rank(), vs));
}

bool is_b_simplex(const std::vector<Vec>& vs, const FormedSpace& a) {
  require_arcs(vs, a);
  if (vs.empty()) return false;
  Mat rows(a.ring(), vs.size() + 1, a.rank());
  for (std::size_t i = 0; i < vs.size(); ++i) {
    Vec r = a.pairing_row(vs[i]);
    for (std::size_t j = 0; j < a.rank(); ++j) rows.set(i, j, r[j]);
  }
  for (std::size_t j = 0; j < a.rank(); ++j) rows.set(vs.size(), j, a.del()(0, j));
  return is_unimodular_rows(rows);
}

std::optional<std::vector<Vec>> is_d_simplex(const std::vector<Vec>& vs, const FormedSpace& a) {
  if (!is_b_simplex(vs, a)) fail(ErrorCode::NotBSimplex, "vectors are not jointly non-separating");
  const Ring& r = a.ring();
  const std::size_t p = vs.size();
  std::vector<std::vector<bool>> rel(p, std::vector<bool>(p, false));
  std::vector<std::size_t> out(p, 0);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j)
      if (i != j && r.is_one(a.pair(vs[i], vs[j]))) {
        rel[i][j] = true;
        ++out[i];
      }
  std::vector<std::size_t> order(p);
  for (std::size_t i = 0; i < p; ++i) order[i] = i;
  // in characteristic 2 the relation is symmetric and any order will do
  if (r.characteristic() != 2)
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return out[x] > out[y]; });
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = i + 1; j < p; ++j)
      if (!rel[order[i]][order[j]]) return std::nullopt;
  std::vector<Vec> res;
  for (auto i : order) res.push_back(vs[i]);
  return res;
}

ArcSimplex::ArcSimplex(FormedSpace space, std::vector<Vec> vectors, ComplexKind kind)
    : space_(std::move(space)), vectors_(std::move(vectors)), kind_(kind) {
  if (vectors_.empty()) fail(ErrorCode::NotASimplex, "a simplex needs at least one vertex");
  switch (kind_) {
    case ComplexKind::Aalg:
      if (!is_aalg_simplex(vectors_, space_)) fail(ErrorCode::NotASimplex, "arcs are not a unimodular sequence");
      break;
    case ComplexKind::B:
      if (!is_b_simplex(vectors_, space_)) fail(ErrorCode::NotBSimplex, "arcs are not jointly non-separating");
      break;
    case ComplexKind::D: {
      auto ord = is_d_simplex(vectors_, space_);
      if (!ord) fail(ErrorCode::NotASimplex, "arcs admit no ordering with lambda(a_i, a_j) = 1 for i < j");
      vectors_ = *ord;
      break;
    }
    case ComplexKind::U:
      fail(ErrorCode::InvalidArgument, "U simplices are not arc simplices");
  }
}

CutSpace cut(const FormedSpace& a, const std::vector<Vec>& sigma) {
  if (!is_b_simplex(sigma, a)) fail(ErrorCode::NotBSimplex, "cut needs a jointly non-separating family");
  const Ring& r = a.ring();
  Mat rows(r, sigma.size(), a.rank());
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    Vec pr = a.pairing_row(sigma[i]);
    for (std::size_t j = 0; j < a.rank(); ++j) rows.set(i, j, pr[j] + a.del()(0, j));
  }
  Mat k = kernel_basis(rows);
  if (k.cols() != a.rank() - sigma.size()) fail(ErrorCode::Internal, "cut space has unexpected rank");
  FormedSpace s(k.transpose() * a.lambda() * k, a.del() * k);
  return {s, k};
}

CutSpace cut(const ArcSimplex& sigma) { return cut(sigma.space(), sigma.vectors()); }

Splitting split_off(const Morphism& f) {
  const FormedSpace& target = f.target();
  const Ring& r = target.ring();
  const Mat& fm = f.matrix();
  const std::size_t k = fm.cols();
  Mat curved = curved_form(target);
  Mat rows = fm.transpose() * curved;
  Mat c = kernel_basis(rows);
  FormedSpace comp(c.transpose() * target.lambda() * c, target.del() * c);
  FormedSpace src = sum(comp, f.source());
  if (c.cols() + k != target.rank()) fail(ErrorCode::Internal, "complement has the wrong rank");
  (void)r;
  return {comp, c, WitnessIso(src, target, hstack(c, fm))};
}

}  // namespace fsb
