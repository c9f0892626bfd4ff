#include "fsb/classify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "fsb/errors.hpp"
#include "fsb/exactlin.hpp"
#include "fsb/finite.hpp"
#include "fsb/genus.hpp"

namespace fsb {

std::string FormData::to_string() const {
  std::ostringstream os;
  os << "(n=" << n << ", l=" << l << ", d=(";
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i].get_str();
  os << "), delta=(";
  for (std::size_t i = 0; i < delta.size(); ++i) os << (i ? "," : "") << delta[i].get_str();
  os << "))";
  return os.str();
}

namespace {

void require_pid(const Ring& r, const char* what) {
  if (!r.is_pid()) fail(ErrorCode::UnsupportedRing, std::string(what) + " needs Z or F_p, got " + r.name());
}

}  // namespace

FormData form_data(const FormedSpace& a) {
  const Ring& r = a.ring();
  require_pid(r, "form_data");
  FormData fd;
  fd.n = a.rank();
  if (fd.n == 0) {
    fd.delta.push_back(Int(0));
    return fd;
  }
  SnfResult s = smith_normal_form(a.lambda());
  Vec diag = s.diagonal();
  for (std::size_t i = 0; 2 * i < s.rank; ++i) fd.d.push_back(diag[2 * i]);
  fd.l = fd.n - 2 * fd.d.size();
  // M_i = { m : lambda m = 0 mod d_i } = V diag(c_j) with c_j = d_i / gcd(d_i, D_jj)
  for (const Int& di : fd.d) {
    std::vector<Int> vals;
    for (std::size_t j = 0; j < fd.n; ++j) {
      Int c = r.is_zero(diag[j]) ? Int(1) : r.quotient(di, r.ideal_gcd({di, diag[j]}));
      vals.push_back(r.mul(a.boundary(s.V.column(j)), c));
    }
    fd.delta.push_back(r.ideal_gcd(vals));
  }
  std::vector<Int> rad;
  for (std::size_t j = 0; j < fd.n; ++j)
    if (r.is_zero(diag[j])) rad.push_back(a.boundary(s.V.column(j)));
  fd.delta.push_back(rad.empty() ? Int(0) : r.ideal_gcd(rad));
  return fd;
}

bool is_realizable(const FormData& fd, const Ring& r) {
  if (!r.is_pid()) return false;
  const std::size_t k = fd.d.size();
  if (fd.n == 0 || fd.n != 2 * k + fd.l || fd.delta.size() != k + 1) return false;
  for (const auto& x : fd.d)
    if (r.is_zero(x) || r.normalize(x) != x) return false;
  for (const auto& x : fd.delta)
    if (r.normalize(x) != x) return false;
  for (std::size_t i = 1; i < k; ++i) {
    if (!r.divides(fd.d[i - 1], fd.d[i])) return false;
    if (!r.divides(fd.delta[i - 1], fd.delta[i])) return false;
    Int ratio = r.quotient(fd.d[i], fd.d[i - 1]);
    if (!r.divides(fd.delta[i], r.mul(ratio, fd.delta[i - 1]))) return false;
  }
  if (k >= 1 && !r.divides(fd.delta[k - 1], fd.delta[k])) return false;
  // the radical is zero when l = 0
  if (fd.l == 0 && !r.is_zero(fd.delta[k])) return false;
  return true;
}

bool is_realizable(const FormData& fd) { return is_realizable(fd, Ring::integers()); }

FormedSpace standard_model(const FormData& fd, const Ring& r) {
  if (!is_realizable(fd, r)) fail(ErrorCode::NotRealizable, fd.to_string() + " is not realizable over " + r.name());
  const std::size_t k = fd.k();
  Mat lam(r, fd.n, fd.n), del(r, 1, fd.n);
  for (std::size_t i = 0; i < k; ++i) {
    lam.set(2 * i, 2 * i + 1, fd.d[i]);
    lam.set(2 * i + 1, 2 * i, -fd.d[i]);
    del.set(0, 2 * i, fd.delta[i]);
  }
  for (std::size_t j = 2 * k; j < fd.n; ++j) del.set(0, j, fd.delta[k]);
  return FormedSpace(lam, del);
}

namespace {

// Basis surgery on a: pairs (e_i, f_i) with lambda(e_i, f_i) = d_i and a
// radical basis g.
class Reducer {
 public:
  explicit Reducer(const FormedSpace& a) : a_(a), r_(a.ring()) {}

  void skew_normal_form() {
    const std::size_t n = a_.rank();
    Mat w = Mat::identity(r_, n);
    Mat L = a_.lambda();
    while (L.rows() > 0 && !L.is_zero()) {
      SnfResult s = smith_normal_form(L);
      const Int d1 = s.D(0, 0);
      Vec x = s.U.row(0), y = s.V.column(0);
      Vec ly = L.apply(y), xl = L.transpose().apply(x);
      for (auto& c : ly) c = r_.quotient(c, d1);
      for (auto& c : xl) c = r_.quotient(-c, d1);
      // c -> (lambda(c, y), lambda(x, c)) / d1 retracts onto <x, y>
      Mat k = kernel_basis(vstack(Mat::row_vector(r_, ly), Mat::row_vector(r_, xl)));
      e_.push_back(w.apply(x));
      f_.push_back(w.apply(y));
      d_.push_back(d1);
      w = w * k;
      L = restrict_form(L, k);
    }
    for (std::size_t j = 0; j < w.cols(); ++j) g_.push_back(w.column(j));
  }

  void step1() {
    if (g_.empty()) return;
    std::vector<Int> vals;
    for (const auto& g : g_) vals.push_back(del(g));
    const Int delta = r_.ideal_gcd(vals);
    if (r_.is_zero(delta)) return;
    Vec u(g_.size());
    for (std::size_t j = 0; j < g_.size(); ++j) u[j] = r_.quotient(vals[j], delta);
    SnfResult s = smith_normal_form(Mat::row_vector(r_, u));
    std::vector<Vec> ng;
    for (std::size_t j = 0; j < g_.size(); ++j) {
      Vec v(a_.rank(), Int(0));
      Int scale = j == 0 ? s.U(0, 0) : Int(1);
      for (std::size_t i = 0; i < g_.size(); ++i) axpy(v, r_.mul(s.V(i, j), scale), g_[i]);
      ng.push_back(v);
    }
    for (std::size_t j = 1; j < ng.size(); ++j) axpy(ng[j], Int(1), ng[0]);
    g_ = ng;
  }

  // SL2 change of (e_i, f_i) making del(f_i) = 0 and del(e_i) = gcd.
  void step2(std::size_t i) {
    Int a = del(e_[i]), b = del(f_[i]);
    if (r_.is_zero(b)) return;
    Int s, t;
    Int g = gcdext(a, b, s, t);
    Int B = -b / g, D = a / g;
    Vec e(a_.rank(), Int(0)), f(a_.rank(), Int(0));
    axpy(e, s, e_[i]);
    axpy(e, t, f_[i]);
    axpy(f, B, e_[i]);
    axpy(f, D, f_[i]);
    e_[i] = e;
    f_[i] = f;
  }

  void step3() {
    if (g_.empty() || r_.is_zero(del(g_[0]))) return;
    for (std::size_t i = 0; i < e_.size(); ++i) {
      axpy(f_[i], Int(1), g_[0]);
      step2(i);
    }
  }

  void step4(std::size_t i, std::size_t j) {
    const Vec ei = e_[i], ej = e_[j];
    axpy(f_[i], Int(1), ej);
    axpy(f_[j], r_.quotient(d_[j], d_[i]), ei);
    step2(i);
    step2(j);
  }

  void step5() {
    const std::size_t k = e_.size();
    for (std::size_t m = k; m-- > 0;) {
      if (m + 1 < k) step4(m, m + 1);
      for (std::size_t i = 0; i < m; ++i) step4(i, m);
    }
  }

  // Rescale pairs by units so that del(e_i) is the canonical generator.
  void normalize(const FormData& fd) {
    for (std::size_t i = 0; i < e_.size(); ++i) {
      Int a = del(e_[i]);
      if (a == fd.delta[i]) continue;
      if (r_.normalize(a) != fd.delta[i])
        fail(ErrorCode::Internal, "reduction reached del(e_" + std::to_string(i + 1) + ") = " + a.get_str() +
                                      " instead of " + fd.delta[i].get_str());
      Int u = r_.unit_part(a), ui = r_.inverse(u);
      for (auto& c : e_[i]) c = r_.mul(c, ui);
      for (auto& c : f_[i]) c = r_.mul(c, u);
    }
  }

  Mat basis() const {
    std::vector<Vec> cols;
    for (std::size_t i = 0; i < e_.size(); ++i) {
      cols.push_back(e_[i]);
      cols.push_back(f_[i]);
    }
    for (const auto& g : g_) cols.push_back(g);
    return Mat::from_columns(r_, a_.rank(), cols);
  }

 private:
  Int del(const Vec& v) const { return a_.boundary(v); }
  void axpy(Vec& y, const Int& c, const Vec& x) const {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = r_.reduce(y[i] + c * x[i]);
  }

  const FormedSpace& a_;
  const Ring& r_;
  std::vector<Vec> e_, f_, g_;
  Vec d_;
};

}  // namespace

Reduction reduce_to_standard(const FormedSpace& a) {
  const Ring& r = a.ring();
  require_pid(r, "reduce_to_standard");
  FormData fd = form_data(a);
  if (a.rank() == 0) fail(ErrorCode::InvalidArgument, "reduce_to_standard needs a nonzero space");
  Reducer red(a);
  red.skew_normal_form();
  red.step1();
  for (std::size_t i = 0; i < fd.k(); ++i) red.step2(i);
  red.step3();
  red.step5();
  red.normalize(fd);
  FormedSpace model = standard_model(fd, r);
  Mat p = red.basis();
  std::string defect = morphism_defect(model, a, p);
  if (!defect.empty()) fail(ErrorCode::Internal, "reduction basis is not a morphism: " + defect);
  return {fd, WitnessIso(model, a, p)};
}

std::optional<WitnessIso> isomorphism_search(const FormedSpace& a, const FormedSpace& b, std::size_t cap) {
  const Ring& r = a.ring();
  require_same_ring(r, b.ring(), "isomorphism_search");
  if (!r.is_finite()) fail(ErrorCode::InfiniteRing, "exhaustive isomorphism search needs a finite ring");
  const std::size_t n = a.rank();
  if (n != b.rank()) return std::nullopt;
  if (n > cap)
    fail(ErrorCode::CapExceeded, "rank " + std::to_string(n) + " exceeds the exhaustive search cap " + std::to_string(cap));
  if (n == 0) return WitnessIso::identity(a);
  fin::FiniteSpace fb(b);
  const fin::SmallRing& sr = fb.ring();
  const std::uint64_t total = fin::space_size(n, sr.m, 1u << 20);
  std::vector<fin::Row> all(total, fin::Row(n));
  for (std::uint64_t c = 0; c < total; ++c) fin::decode(c, n, sr.m, all[c].data());
  std::vector<std::vector<std::size_t>> cand(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto target = static_cast<std::int32_t>(a.del()(0, j).get_si());
    for (std::size_t c = 0; c < total; ++c)
      if (fb.boundary(all[c].data()) == target) cand[j].push_back(c);
  }
  std::vector<std::size_t> chosen;
  std::optional<WitnessIso> found;
  std::function<void(std::size_t)> dfs = [&](std::size_t j) {
    if (found) return;
    if (j == n) {
      std::vector<std::int32_t> flat;
      for (auto c : chosen) flat.insert(flat.end(), all[c].begin(), all[c].end());
      if (!fin::rows_unimodular(flat, n, n, sr)) return;
      std::vector<Vec> cols;
      for (auto c : chosen) cols.push_back(fin::to_vec(all[c].data(), n));
      found = WitnessIso(a, b, Mat::from_columns(r, n, cols));
      return;
    }
    for (std::size_t c : cand[j]) {
      bool ok = true;
      for (std::size_t i = 0; i < j && ok; ++i)
        ok = fb.pair(all[chosen[i]].data(), all[c].data()) == static_cast<std::int32_t>(a.lambda()(i, j).get_si());
      if (!ok) continue;
      chosen.push_back(c);
      dfs(j + 1);
      chosen.pop_back();
      if (found) return;
    }
  };
  dfs(0);
  return found;
}

std::optional<WitnessIso> is_isomorphic(const FormedSpace& a, const FormedSpace& b) {
  const Ring& r = a.ring();
  require_same_ring(r, b.ring(), "is_isomorphic");
  if (a.rank() != b.rank()) return std::nullopt;
  if (a == b) return WitnessIso::identity(a);
  if (!r.is_pid()) {
    if (!r.is_finite()) fail(ErrorCode::UnsupportedRing, "isomorphism test over " + r.name());
    return isomorphism_search(a, b);
  }
  Reduction ra = reduce_to_standard(a), rb = reduce_to_standard(b);
  if (ra.data != rb.data) return std::nullopt;
  return rb.witness.compose(ra.witness.inverted());
}

namespace {

// An automorphism of n sending b to c, where lambda(b, c) = +-1 and both are
// arcs: the braiding on the X # X summand spanned by the pair.
Mat edge_automorphism(const FormedSpace& n, const Vec& b, const Vec& c) {
  const Ring& r = n.ring();
  const bool forward = r.is_one(n.pair(b, c));
  const Vec& x1 = forward ? b : c;
  const Vec& x2 = forward ? c : b;
  Mat curved = curved_form(n);
  Mat rows = vstack(Mat::row_vector(r, curved.transpose().apply(x1)), Mat::row_vector(r, curved.transpose().apply(x2)));
  Mat k = kernel_basis(rows);
  Mat q = hstack(k, Mat::from_columns(r, n.rank(), {x1, x2}));
  // beta^-1 sends x1 to x2, beta sends x2 to x1
  Mat loc = forward ? Mat::from_rows(r, std::vector<std::vector<long>>{{0, -1}, {1, 2}})
                    : Mat::from_rows(r, std::vector<std::vector<long>>{{2, 1}, {-1, 0}});
  Mat blk = block_diag(Mat::identity(r, k.cols()), loc);
  return q * blk * inverse(q);
}

bool is_edge(const FormedSpace& n, const Vec& b, const Vec& c) {
  const Ring& r = n.ring();
  Int v = n.pair(b, c);
  return r.is_one(v) || r.is_one(r.neg(v));
}

// A third arc c adjacent to both a1 and a2, if the linear conditions are solvable.
std::optional<Vec> common_neighbour(const FormedSpace& n, const Vec& a1, const Vec& a2) {
  const Ring& r = n.ring();
  Mat rows = vstack(vstack(n.del(), Mat::row_vector(r, n.pairing_row(a1))), Mat::row_vector(r, n.pairing_row(a2)));
  for (long s1 : {1, -1})
    for (long s2 : {1, -1})
      if (auto c = solve(rows, Vec{Int(1), Int(s1), Int(s2)})) return c;
  return std::nullopt;
}

// Random arcs c with lambda(a, c) = +-1.
std::vector<Vec> sample_neighbours(const FormedSpace& n, const Vec& a, std::mt19937_64& rng, int count) {
  const Ring& r = n.ring();
  Mat rows = vstack(n.del(), Mat::row_vector(r, n.pairing_row(a)));
  std::vector<Vec> out;
  Mat k;
  try {
    k = kernel_basis(rows);
  } catch (const Error&) {
    return out;
  }
  for (long s : {1, -1}) {
    auto base = solve(rows, Vec{Int(1), Int(s)});
    if (!base) continue;
    out.push_back(*base);
    for (int t = 1; t < count; ++t) {
      Vec c = *base;
      for (std::size_t j = 0; j < k.cols(); ++j) {
        Int coef(static_cast<long>(rng() % 5) - 2);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = r.reduce(c[i] + coef * k(i, j));
      }
      out.push_back(c);
    }
  }
  return out;
}

// Over Z: neighbours c of a with |lambda(c, a2)| as small as the affine
// solution lattice allows.
std::vector<Vec> euclid_neighbours(const FormedSpace& n, const Vec& a, const Vec& a2) {
  const Ring& r = n.ring();
  Mat rows = vstack(n.del(), Mat::row_vector(r, n.pairing_row(a)));
  std::vector<Vec> out;
  Mat k = kernel_basis(rows);
  for (long s : {1, -1}) {
    auto base = solve(rows, Vec{Int(1), Int(s)});
    if (!base) continue;
    const Int v0 = n.pair(*base, a2);
    if (k.cols() == 0) {
      out.push_back(*base);
      continue;
    }
    Vec w(k.cols());
    Int g = 0;
    for (std::size_t j = 0; j < k.cols(); ++j) {
      w[j] = n.pair(k.column(j), a2);
      g = gcd(g, w[j]);
    }
    if (sgn(g) == 0) {
      out.push_back(*base);
      continue;
    }
    Int res;
    mpz_fdiv_r(res.get_mpz_t(), v0.get_mpz_t(), g.get_mpz_t());
    for (Int target : {res, Int(res - g)}) {
      if (sgn(target) == 0) continue;
      auto t = solve(Mat::row_vector(r, w), Vec{Int(target - v0)});
      if (!t) continue;
      Vec c = *base;
      Vec kt = k.apply(*t);
      for (std::size_t i = 0; i < c.size(); ++i) c[i] += kt[i];
      out.push_back(c);
    }
  }
  return out;
}

std::vector<Vec> arc_path(const FormedSpace& n, const Vec& a1, const Vec& a2) {
  if (a1 == a2) return {a1};
  if (is_edge(n, a1, a2)) return {a1, a2};
  if (auto c = common_neighbour(n, a1, a2)) return {a1, *c, a2};
  std::mt19937_64 rng(n.rank() * 7919 + 17);
  // greedy descent towards a2: first on |lambda(c, a2)|, then on the
  // coordinate distance
  const Ring& r = n.ring();
  auto key = [&](const Vec& x) {
    Int h = n.pair(x, a2);
    if (r.is_finite()) h = r.is_zero(h) ? Int(r.modulus()) : Int(1);
    h = abs(h);
    if (sgn(h) == 0) h = Int(-1);
    Int t = 0;
    for (std::size_t i = 0; i < x.size(); ++i) t += abs(Int(x[i] - a2[i]));
    return std::make_pair(h, t);
  };
  auto less = [](const std::pair<Int, Int>& a, const std::pair<Int, Int>& b) {
    auto rank = [](const Int& h) { return sgn(h) < 0 ? Int(0) : h; };
    bool ia = sgn(a.first) < 0, ib = sgn(b.first) < 0;
    if (ia != ib) return ib;
    if (rank(a.first) != rank(b.first)) return rank(a.first) < rank(b.first);
    return a.second < b.second;
  };
  {
    std::vector<Vec> path{a1};
    auto best = key(a1);
    for (int step = 0; step < 512; ++step) {
      const Vec& cur = path.back();
      if (is_edge(n, cur, a2)) {
        path.push_back(a2);
        return path;
      }
      if (auto d = common_neighbour(n, cur, a2)) {
        path.push_back(*d);
        path.push_back(a2);
        return path;
      }
      std::vector<Vec> cands = sample_neighbours(n, cur, rng, 16);
      if (r.is_integers()) {
        for (auto& c : euclid_neighbours(n, cur, a2)) cands.push_back(c);
      }
      std::optional<Vec> pick;
      for (auto& c : cands) {
        auto kc = key(c);
        if (less(kc, best)) {
          best = kc;
          pick = c;
        }
      }
      if (!pick) break;
      path.push_back(*pick);
    }
  }
  // breadth-first over sampled neighbours of a1, closing each candidate with
  // a direct edge or a common neighbour of a2
  std::map<Vec, Vec> parent;
  parent.emplace(a1, a1);
  std::vector<Vec> layer{a1};
  auto unwind = [&](Vec x) {
    std::vector<Vec> path;
    while (true) {
      path.push_back(x);
      const Vec& p = parent.at(x);
      if (p == x) break;
      x = p;
    }
    std::reverse(path.begin(), path.end());
    return path;
  };
  for (int depth = 0; depth < 4 && !layer.empty(); ++depth) {
    std::vector<Vec> next;
    for (const auto& x : layer) {
      for (auto& c : sample_neighbours(n, x, rng, 8)) {
        if (parent.count(c)) continue;
        parent.emplace(c, x);
        if (is_edge(n, c, a2)) {
          auto path = unwind(c);
          path.push_back(a2);
          return path;
        }
        if (auto d = common_neighbour(n, c, a2)) {
          auto path = unwind(c);
          path.push_back(*d);
          path.push_back(a2);
          return path;
        }
        if (next.size() < 64) next.push_back(c);
      }
    }
    layer = std::move(next);
  }
  fail(ErrorCode::NoPath, "no edge path found between the two arcs");
}

}  // namespace

WitnessIso cancel_x_by_arcs(const FormedSpace& m1, const FormedSpace& m2, const WitnessIso& premise) {
  const Ring& r = m1.ring();
  require_same_ring(r, m2.ring(), "cancel_x");
  const FormedSpace x = x_power(1, r);
  if (premise.source() != sum(m1, x) || premise.target() != sum(m2, x))
    fail(ErrorCode::InvalidArgument, "premise must be an isomorphism M1 # X -> M2 # X");
  const FormedSpace& n = premise.target();
  const std::size_t dim = n.rank();
  const Vec a2 = unit_vector(dim, dim - 1);
  const Vec a1 = premise.matrix().column(dim - 1);
  std::vector<Vec> path = arc_path(n, a1, a2);
  Mat psi = Mat::identity(r, dim);
  for (std::size_t i = 0; i + 1 < path.size(); ++i) psi = edge_automorphism(n, path[i], path[i + 1]) * psi;
  WitnessIso moved = WitnessIso(n, n, psi).compose(premise);
  const Mat& theta = moved.matrix();
  if (theta.column(dim - 1) != a2) fail(ErrorCode::Internal, "arc path did not reach the target arc");
  const std::size_t d = dim - 1;
  Mat block = theta.submatrix(0, 0, d, d);
  Mat inv = moved.inverse_matrix().submatrix(0, 0, d, d);
  for (std::size_t j = 0; j < d; ++j)
    if (!r.is_zero(theta(d, j))) fail(ErrorCode::Internal, "complement was not preserved");
  return WitnessIso(m1, m2, block, inv);
}

WitnessIso cancel_x(const FormedSpace& m1, const FormedSpace& m2, const std::optional<WitnessIso>& premise) {
  const Ring& r = m1.ring();
  require_same_ring(r, m2.ring(), "cancel_x");
  for (const auto* m : {&m1, &m2})
    if (m->rank() == 0 || !is_unimodular_rows(m->del()))
      fail(ErrorCode::HypothesisFailed, std::string("del is not surjective on ") + (m == &m1 ? "M1" : "M2") +
                                            ", so its arc genus is 0 and X cannot be cancelled");
  const FormedSpace x = x_power(1, r);
  const FormedSpace s1 = sum(m1, x), s2 = sum(m2, x);
  std::optional<WitnessIso> phi = premise;
  if (phi) {
    if (phi->source() != s1 || phi->target() != s2 || !phi->verify())
      fail(ErrorCode::InvalidArgument, "supplied premise is not an isomorphism M1 # X -> M2 # X");
  }
  if (r.is_pid()) {
    if (!phi && !is_isomorphic(s1, s2)) fail(ErrorCode::HypothesisFailed, "M1 # X and M2 # X are not isomorphic");
    auto w = is_isomorphic(m1, m2);
    if (!w) fail(ErrorCode::Internal, "form data differ although M1 # X = M2 # X");
    return *w;
  }
  if (!phi) phi = is_isomorphic(s1, s2);
  if (!phi) fail(ErrorCode::HypothesisFailed, "M1 # X and M2 # X are not isomorphic");
  std::size_t gx = 0;
  try {
    gx = arc_genus(m1).g_X;
  } catch (const Error& e) {
    fail(ErrorCode::HypothesisFailed, std::string("arc genus of M1 could not be certified: ") + e.what());
  }
  const std::size_t need = 2 * static_cast<std::size_t>(r.usr_bound()) + 5;
  if (gx < need)
    fail(ErrorCode::HypothesisFailed,
         "g_X(M1) = " + std::to_string(gx) + " is below the required " + std::to_string(need) + " over " + r.name());
  return cancel_x_by_arcs(m1, m2, *phi);
}

}  // namespace fsb
