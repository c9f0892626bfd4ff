#include "fsb/genus.hpp"

#include <algorithm>
#include <functional>

#include "fsb/errors.hpp"
#include "fsb/exactlin.hpp"
#include "fsb/finite.hpp"

namespace fsb {

std::string to_string(GenusMethod m) {
  switch (m) {
    case GenusMethod::Snf:
      return "snf";
    case GenusMethod::Greedy:
      return "greedy";
    case GenusMethod::BruteForce:
      return "brute_force";
    case GenusMethod::Formula:
      return "formula";
  }
  return "unknown";
}

Mat restrict_form(const Mat& lambda, const Mat& basis) { return basis.transpose() * lambda * basis; }

namespace {

void require_square(const Mat& lambda) {
  if (!lambda.is_square()) fail(ErrorCode::InvalidArgument, "form must be square");
  check_alternating(lambda);
}

// Local coordinates x, y with x^T L y = 1, if any pair has unit value.
bool find_unit_pair(const Mat& L, Vec& x, Vec& y) {
  const Ring& r = L.ring();
  const std::size_t k = L.rows();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (r.is_unit(L(i, j))) {
        x = unit_vector(k, i);
        y = Vec(k, Int(0));
        y[j] = r.inverse(L(i, j));
        return true;
      }
  if (r.is_field() || k < 2) return false;
  SnfResult s = smith_normal_form(L);
  if (!r.is_unit(s.D(0, 0))) return false;
  // e1^T U L V e1 = d1
  x = s.U.row(0);
  y = s.V.column(0);
  Int inv = r.inverse(s.D(0, 0));
  for (auto& c : y) c = r.mul(c, inv);
  return true;
}

Mat column_of(const Ring& r, const Vec& v) { return Mat::column_vector(r, v); }

}  // namespace

HyperbolicSplit hyperbolic_split(const Mat& lambda) {
  require_square(lambda);
  const Ring& r = lambda.ring();
  const std::size_t n = lambda.rows();
  Mat w = Mat::identity(r, n);
  Mat L = lambda;
  std::vector<Vec> pairs;
  Vec x, y;
  while (L.rows() >= 2 && find_unit_pair(L, x, y)) {
    pairs.push_back(w.apply(x));
    pairs.push_back(w.apply(y));
    Mat rows = vstack(Mat::row_vector(r, L.transpose().apply(x)), Mat::row_vector(r, L.transpose().apply(y)));
    Mat k = kernel_basis(rows);
    w = w * k;
    L = restrict_form(L, k);
  }
  HyperbolicSplit out;
  out.basis = pairs.empty() ? Mat(r, n, 0) : Mat::from_columns(r, n, pairs);
  out.complement = w;
  return out;
}

std::size_t hyperbolic_genus_snf(const Mat& lambda) {
  require_square(lambda);
  if (!lambda.ring().is_pid()) fail(ErrorCode::UnsupportedRing, "SNF genus needs a PID, got " + lambda.ring().name());
  if (lambda.rows() == 0) return 0;
  return smith_normal_form(lambda).unit_count() / 2;
}

std::size_t hyperbolic_genus_upper_bound(const Mat& lambda) {
  require_square(lambda);
  const Ring& r = lambda.ring();
  if (r.is_pid()) return hyperbolic_genus_snf(lambda);
  std::size_t best = lambda.rows() / 2;
  for (auto p : r.prime_factors()) {
    Ring f = Ring::mod(p);
    Mat red(f, lambda.rows(), lambda.cols());
    for (std::size_t i = 0; i < lambda.rows(); ++i)
      for (std::size_t j = 0; j < lambda.cols(); ++j) red.set(i, j, lambda(i, j));
    best = std::min(best, hyperbolic_genus_snf(red));
  }
  return best;
}

std::size_t hyperbolic_genus_exhaustive(const Mat& lambda, std::uint64_t budget) {
  require_square(lambda);
  const std::size_t n = lambda.rows();
  if (n < 2) return 0;
  FormedSpace s(lambda, Mat(lambda.ring(), 1, n));
  fin::FiniteSpace fs(s);
  const std::int32_t m = fs.modulus();
  const std::uint64_t total = fin::space_size(n, m, budget);
  std::vector<fin::Row> all(total, fin::Row(n));
  std::vector<fin::Row> rows(total, fin::Row(n));
  for (std::uint64_t c = 0; c < total; ++c) {
    fin::decode(c, n, m, all[c].data());
    fs.pairing_row(all[c].data(), rows[c].data());
  }
  auto pr = [&](std::size_t a, std::size_t b) {
    std::int64_t t = 0;
    for (std::size_t i = 0; i < n; ++i) t += static_cast<std::int64_t>(rows[a][i]) * all[b][i];
    return fs.ring().reduce(t);
  };
  const std::size_t ub = hyperbolic_genus_upper_bound(lambda);
  std::size_t best = 0;
  std::uint64_t nodes = 0;
  std::vector<std::size_t> cand(total);
  for (std::size_t i = 0; i < total; ++i) cand[i] = i;
  std::function<void(std::size_t, const std::vector<std::size_t>&)> dfs = [&](std::size_t depth,
                                                                              const std::vector<std::size_t>& c) {
    best = std::max(best, depth);
    if (best >= ub) return;
    for (std::size_t ui : c) {
      if (++nodes > budget) fail(ErrorCode::BudgetExceeded, "exhaustive hyperbolic search exceeded the node budget");
      for (std::size_t vi : c) {
        if (pr(ui, vi) != 1 % m) continue;
        std::vector<std::size_t> next;
        for (std::size_t w : c)
          if (pr(ui, w) == 0 && pr(vi, w) == 0) next.push_back(w);
        dfs(depth + 1, next);
        if (best >= ub) return;
      }
    }
  };
  dfs(0, cand);
  return best;
}

HyperbolicGenus hyperbolic_genus_report(const Mat& lambda) {
  require_square(lambda);
  const Ring& r = lambda.ring();
  if (r.is_pid()) return {hyperbolic_genus_snf(lambda), GenusMethod::Snf, true};
  const std::size_t greedy = hyperbolic_split(lambda).genus();
  const std::size_t ub = hyperbolic_genus_upper_bound(lambda);
  if (greedy == ub) return {greedy, GenusMethod::Greedy, true};
  if (lambda.rows() <= 6) return {hyperbolic_genus_exhaustive(lambda), GenusMethod::BruteForce, true};
  return {greedy, GenusMethod::Greedy, false};
}

std::size_t hyperbolic_genus(const Mat& lambda) { return hyperbolic_genus_report(lambda).genus; }

Mat max_arc_tuple(const FormedSpace& a, std::size_t cap, std::uint64_t budget) {
  const Ring& r = a.ring();
  const std::size_t n = a.rank();
  if (!r.is_finite()) fail(ErrorCode::InfiniteRing, "arc search needs a finite ring");
  if (n > cap)
    fail(ErrorCode::CapExceeded, "rank " + std::to_string(n) + " exceeds the search cap " + std::to_string(cap));
  if (n == 0) return Mat(r, 0, 0);
  fin::FiniteSpace fs(a);
  std::vector<fin::Row> arcs = fin::enumerate_arcs(fs, budget);
  if (arcs.empty()) return Mat(r, n, 0);
  std::vector<fin::Row> rows(arcs.size(), fin::Row(n));
  for (std::size_t i = 0; i < arcs.size(); ++i) fs.pairing_row(arcs[i].data(), rows[i].data());

  std::size_t ub = n;
  if (is_unimodular_rows(a.del())) {
    Mat k = kernel_basis(a.del());
    ub = std::min(ub, 1 + hyperbolic_genus_upper_bound(a.lambda()) +
                          (k.cols() ? hyperbolic_genus_upper_bound(restrict_form(a.lambda(), k)) : 0));
  }
  const std::int32_t one = 1 % fs.modulus();
  std::vector<std::size_t> path, best;
  std::uint64_t nodes = 0;
  std::function<void(const std::vector<std::size_t>&)> dfs = [&](const std::vector<std::size_t>& cand) {
    if (path.size() > best.size()) best = path;
    if (best.size() >= ub) return;
    for (std::size_t ai : cand) {
      if (++nodes > budget) fail(ErrorCode::BudgetExceeded, "arc tuple search exceeded the node budget");
      std::vector<std::size_t> next;
      for (std::size_t b : cand) {
        std::int64_t t = 0;
        for (std::size_t i = 0; i < n; ++i) t += static_cast<std::int64_t>(rows[ai][i]) * arcs[b][i];
        if (fs.ring().reduce(t) == one) next.push_back(b);
      }
      if (path.size() + 1 + next.size() <= best.size()) continue;
      path.push_back(ai);
      dfs(next);
      path.pop_back();
      if (best.size() >= ub) return;
    }
  };
  std::vector<std::size_t> all(arcs.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  dfs(all);
  std::vector<Vec> cols;
  for (auto i : best) cols.push_back(fin::to_vec(arcs[i].data(), n));
  return cols.empty() ? Mat(r, n, 0) : Mat::from_columns(r, n, cols);
}

std::size_t arc_genus_bruteforce(const FormedSpace& a, std::size_t cap, std::uint64_t budget) {
  return max_arc_tuple(a, cap, budget).cols();
}

GenusReport arc_genus(const FormedSpace& a, std::size_t cap) {
  const Ring& r = a.ring();
  GenusReport rep;
  rep.g_H = hyperbolic_genus(a.lambda());
  if (a.rank() == 0 || !is_unimodular_rows(a.del())) {
    rep.g_X = 0;
    rep.method = GenusMethod::Formula;
    rep.conditions_used.push_back("del not unimodular");
    return rep;
  }
  Mat k = kernel_basis(a.del());
  rep.g_H_ker_del = k.cols() ? hyperbolic_genus(restrict_form(a.lambda(), k)) : 0;
  const std::size_t formula = 1 + rep.g_H + *rep.g_H_ker_del;
  if (r.is_pid()) {
    rep.g_X = formula;
    rep.method = GenusMethod::Formula;
    rep.conditions_used.push_back("(i) del unimodular and R a PID");
    return rep;
  }
  if (rep.g_H >= static_cast<std::size_t>(r.usr_bound()) + 1) {
    rep.g_X = formula;
    rep.method = GenusMethod::Formula;
    rep.conditions_used.push_back("(ii) del unimodular and g_H >= usr + 1");
    return rep;
  }
  // g_X <= 1 + g_H + g_H(ker del) <= 3 < 2 usr + 2 here, so (iii) cannot hold.
  rep.g_X = arc_genus_bruteforce(a, cap);
  rep.method = GenusMethod::BruteForce;
  return rep;
}

HyperbolicPair find_hyperbolic_for_functional(const Mat& lambda, const Mat& l) {
  require_square(lambda);
  const Ring& r = lambda.ring();
  const std::size_t n = lambda.rows();
  require_same_ring(r, l.ring(), "find_hyperbolic_for_functional");
  if (l.rows() != 1 || l.cols() != n) fail(ErrorCode::InvalidArgument, "functional must be 1 x " + std::to_string(n));
  if (!is_unimodular_rows(l)) fail(ErrorCode::InvalidArgument, "functional is not unimodular");
  HyperbolicSplit split = hyperbolic_split(lambda);
  const std::size_t g = split.genus();
  // 2g >= sr(R) for both Z (sr 2) and Z/m (sr 1)
  if (2 * g < static_cast<std::size_t>(r.sr_bound()) || g == 0)
    fail(ErrorCode::HypothesisFailed, "no hyperbolic summand: g_H = 0");
  const Mat& b = split.basis;
  const Mat& c = split.complement;
  Mat p = hstack(b, c);
  Mat pinv = inverse(p);

  Vec x = right_inverse(l).column(0);
  Vec coords = pinv.apply(x);
  Vec tail(coords.begin() + static_cast<std::ptrdiff_t>(2 * g), coords.end());
  Vec x1 = c.cols() ? c.apply(tail) : Vec(n, Int(0));

  const Vec lv = l.row(0);
  Vec rr(2 * g);
  for (std::size_t i = 0; i < 2 * g; ++i) rr[i] = dot(r, lv, b.column(i));
  const Int cc = dot(r, lv, x1);

  // Stable range correction: w_i = r_i + t_i c with (w_0, ..., w_{2g-1}) unimodular.
  Vec t(2 * g, Int(0));
  Vec w = rr;
  auto tail_gcd = [&]() {
    Int gg = r.is_finite() ? Int(r.modulus()) : Int(0);
    for (std::size_t i = 1; i < 2 * g; ++i) gg = gcd(gg, w[i]);
    return gg;
  };
  Int gg = tail_gcd();
  if (sgn(gg) == 0) {
    t[1] = 1;
    w[1] = r.add(rr[1], cc);
    gg = tail_gcd();
  }
  if (sgn(gg) != 0 && gg != 1) {
    // the part of gg coprime to r_0
    Int t0 = gg;
    for (Int h = gcd(t0, rr[0]); h != 1; h = gcd(t0, rr[0])) t0 /= h;
    t[0] = t0;
    w[0] = r.add(rr[0], t0 * cc);
  }
  Mat wrow = Mat::row_vector(r, w);
  if (!is_unimodular_rows(wrow)) fail(ErrorCode::Internal, "stable range correction did not produce a unimodular row");
  Vec coef = right_inverse(wrow).column(0);

  Vec u0 = b.apply(coef);
  Int s(0);
  for (std::size_t i = 0; i < 2 * g; ++i) s += coef[i] * t[i];
  Vec u(n);
  for (std::size_t i = 0; i < n; ++i) u[i] = r.reduce(u0[i] + s * x1[i]);

  Vec pr = Mat::row_vector(r, lambda.transpose().apply(u0)).operator*(b).row(0);
  Vec y = right_inverse(Mat::row_vector(r, pr)).column(0);
  Vec v = b.apply(y);

  const Int luv = Mat::row_vector(r, u).operator*(lambda).apply(v)[0];
  if (!r.is_one(luv) || !r.is_unit(r.ideal_gcd({dot(r, lv, u), dot(r, lv, v)})))
    fail(ErrorCode::Internal, "hyperbolic pair construction failed its contract");
  return {u, v};
}

Mat adapted_hyperbolic_basis(const Mat& lambda, const Mat& l) {
  require_square(lambda);
  const Ring& r = lambda.ring();
  const std::size_t n = lambda.rows();
  const std::size_t g = hyperbolic_genus(lambda);
  if (g == 0) fail(ErrorCode::HypothesisFailed, "g_H = 0");
  if (!r.is_pid() && g < static_cast<std::size_t>(r.usr_bound()) + 1)
    fail(ErrorCode::HypothesisFailed, "g_H = " + std::to_string(g) + " < usr + 1 over " + r.name());
  HyperbolicPair hp = find_hyperbolic_for_functional(lambda, l);

  // H^g = <u, v> + (hyperbolic part of its complement)
  Mat rows = vstack(Mat::row_vector(r, lambda.transpose().apply(hp.u)),
                    Mat::row_vector(r, lambda.transpose().apply(hp.v)));
  Mat k = kernel_basis(rows);
  Mat hb = hstack(column_of(r, hp.u), column_of(r, hp.v));
  if (k.cols()) {
    HyperbolicSplit sub = hyperbolic_split(restrict_form(lambda, k));
    if (sub.genus() != g - 1) fail(ErrorCode::Internal, "complement of a hyperbolic pair lost more than one genus");
    if (sub.genus()) hb = hstack(hb, k * sub.basis);
  } else if (g != 1) {
    fail(ErrorCode::Internal, "genus mismatch");
  }

  const Mat j = hyperbolic_form(g, r);
  Mat lh = l * hb;
  if (!is_unimodular_rows(lh)) fail(ErrorCode::Internal, "functional not unimodular on the hyperbolic summand");
  // l = lambda(vv, -) on H^g
  Vec vv = j.apply(lh.row(0));
  Vec f1(2 * g), e1 = right_inverse(lh).column(0);
  for (std::size_t i = 0; i < 2 * g; ++i) f1[i] = r.neg(vv[i]);

  Mat local = hstack(column_of(r, e1), column_of(r, f1));
  if (g > 1) {
    Mat krows = vstack(Mat::row_vector(r, j.transpose().apply(e1)), Mat::row_vector(r, j.transpose().apply(f1)));
    Mat kk = kernel_basis(krows);
    HyperbolicSplit sub = hyperbolic_split(restrict_form(j, kk));
    if (sub.genus() != g - 1) fail(ErrorCode::Internal, "hyperbolic complement did not split");
    local = hstack(local, kk * sub.basis);
  }
  Mat out = hb * local;
  if (restrict_form(lambda, out) != j) fail(ErrorCode::Internal, "adapted basis is not hyperbolic");
  (void)n;
  return out;
}

BoundaryInvariant boundary_invariant(const FormedSpace& a) {
  if (a.rank() == 0 || !is_unimodular_rows(a.del())) return {0, false};
  Mat k = kernel_basis(a.del());
  if (k.cols() == 0) return {0, true};
  return {smith_normal_form(restrict_form(a.lambda(), k)).unit_count(), true};
}

std::size_t boundary_invariant_rank(const FormedSpace& a) { return boundary_invariant(a).rank; }

}  // namespace fsb
