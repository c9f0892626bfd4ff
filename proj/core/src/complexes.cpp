#include "fsb/complexes.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "fsb/errors.hpp"
#include "fsb/exactlin.hpp"
#include "fsb/finite.hpp"
#include "fsb/genus.hpp"
#include "fsb/groups.hpp"

namespace fsb {

SimplicialComplex::SimplicialComplex(Ring ring, std::optional<ComplexKind> kind, std::size_t dim_cap,
                                     std::vector<Vec> vertices, std::vector<std::vector<Simplex>> simplices)
    : ring_(std::move(ring)),
      kind_(kind),
      dim_cap_(dim_cap),
      vertices_(std::move(vertices)),
      simplices_(std::move(simplices)) {
  while (!simplices_.empty() && simplices_.back().empty()) simplices_.pop_back();
  if (simplices_.size() > dim_cap_ + 1) fail(ErrorCode::InvalidArgument, "simplices above dim_cap");
  for (auto& layer : simplices_) std::sort(layer.begin(), layer.end());
}

SimplicialComplex SimplicialComplex::from_facets(std::size_t num_vertices, const std::vector<Simplex>& facets,
                                                 std::size_t dim_cap) {
  std::vector<std::set<Simplex>> layers(dim_cap + 1);
  for (Simplex f : facets) {
    std::sort(f.begin(), f.end());
    for (auto v : f)
      if (v >= num_vertices) fail(ErrorCode::InvalidArgument, "facet uses an unknown vertex");
    const std::size_t k = f.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << k); ++mask) {
      Simplex s;
      for (std::size_t i = 0; i < k; ++i)
        if (mask >> i & 1) s.push_back(f[i]);
      if (s.size() - 1 <= dim_cap) layers[s.size() - 1].insert(s);
    }
  }
  std::vector<Vec> verts(num_vertices);
  for (std::size_t i = 0; i < num_vertices; ++i) verts[i] = Vec{Int(static_cast<long>(i))};
  std::vector<std::vector<Simplex>> simplices;
  for (auto& l : layers) simplices.emplace_back(l.begin(), l.end());
  return SimplicialComplex(Ring::integers(), std::nullopt, dim_cap, std::move(verts), std::move(simplices));
}

const std::vector<Simplex>& SimplicialComplex::simplices(std::size_t p) const {
  static const std::vector<Simplex> empty;
  return p < simplices_.size() ? simplices_[p] : empty;
}

int SimplicialComplex::top_dim() const { return static_cast<int>(simplices_.size()) - 1; }

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
  if (s.empty()) return std::nullopt;
  const auto& layer = simplices(s.size() - 1);
  auto it = std::lower_bound(layer.begin(), layer.end(), s);
  if (it == layer.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - layer.begin());
}

bool SimplicialComplex::contains(const Simplex& s) const { return index_of(s).has_value(); }

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f;
  for (const auto& l : simplices_) f.push_back(l.size());
  return f;
}

namespace {

using Pred = std::function<bool(const Simplex&)>;

// Grows simplices dimension by dimension. Candidates for extending a
// (p-1)-simplex are common neighbours in the 1-skeleton; every candidate is
// re-tested with the full predicate.
std::vector<std::vector<Simplex>> grow(std::size_t nv, std::size_t dim_cap, const Pred& pred, std::uint64_t budget) {
  std::vector<std::vector<Simplex>> layers;
  std::uint64_t total = nv;
  layers.emplace_back();
  for (std::uint32_t v = 0; v < nv; ++v) layers[0].push_back({v});
  if (dim_cap == 0 || nv == 0) return layers;
  const std::uint64_t pairs = static_cast<std::uint64_t>(nv) * (nv - 1) / 2;
  if (pairs > 64 * budget) fail(ErrorCode::BudgetExceeded, "too many vertex pairs to test for edges");
  std::vector<std::vector<std::uint32_t>> nbr(nv);
  layers.emplace_back();
  for (std::uint32_t u = 0; u < nv; ++u)
    for (std::uint32_t v = u + 1; v < nv; ++v)
      if (pred({u, v})) {
        layers[1].push_back({u, v});
        nbr[u].push_back(v);
        if (++total > budget) fail(ErrorCode::BudgetExceeded, "complex has more simplices than the budget");
      }
  for (std::size_t p = 2; p <= dim_cap; ++p) {
    std::vector<Simplex> next;
    for (const auto& s : layers[p - 1]) {
      for (auto v : nbr[s.back()]) {
        bool ok = true;
        for (std::size_t i = 0; i + 1 < s.size() && ok; ++i) ok = std::binary_search(nbr[s[i]].begin(), nbr[s[i]].end(), v);
        if (!ok) continue;
        Simplex t = s;
        t.push_back(v);
        if (!pred(t)) continue;
        next.push_back(std::move(t));
        if (++total > budget) fail(ErrorCode::BudgetExceeded, "complex has more simplices than the budget");
      }
    }
    if (next.empty()) break;
    layers.push_back(std::move(next));
  }
  return layers;
}

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int32_t dot_mod(const fin::Row& a, const fin::Row& b, const fin::SmallRing& r) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<std::int64_t>(a[i]) * b[i];
  return r.reduce(s);
}

bool has_disordered_order(const std::vector<std::vector<bool>>& one) {
  const std::size_t k = one.size();
  std::vector<std::size_t> out(k, 0), ord(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j && one[i][j]) ++out[i];
  std::iota(ord.begin(), ord.end(), 0);
  std::stable_sort(ord.begin(), ord.end(), [&](std::size_t x, std::size_t y) { return out[x] > out[y]; });
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (!one[ord[i]][ord[j]]) return false;
  return true;
}

}  // namespace

SimplicialComplex build_complex(const FormedSpace& a, ComplexKind kind, std::size_t dim_cap, std::uint64_t budget) {
  if (kind == ComplexKind::U) fail(ErrorCode::InvalidArgument, "use build_u_complex for U");
  fin::FiniteSpace fs(a);
  const fin::SmallRing& sr = fs.ring();
  const std::size_t n = a.rank();
  const std::uint64_t total = fin::space_size(n, fs.modulus(), budget);
  std::vector<fin::Row> verts, rows;
  fin::Row v(n), pr(n);
  const std::int32_t one = 1 % fs.modulus();
  for (std::uint64_t c = 0; c < total; ++c) {
    fin::decode(c, n, fs.modulus(), v.data());
    if (fs.boundary(v.data()) != one) continue;
    if (kind == ComplexKind::Aalg) {
      if (!fin::rows_unimodular(v, 1, n, sr)) continue;
      verts.push_back(v);
      rows.push_back(v);
    } else {
      fs.pairing_row(v.data(), pr.data());
      fin::Row two(pr);
      two.insert(two.end(), fs.del().begin(), fs.del().end());
      if (!fin::rows_unimodular(two, 2, n, sr)) continue;
      verts.push_back(v);
      rows.push_back(pr);
    }
  }
  const std::size_t nv = verts.size();
  Pred pred = [&](const Simplex& s) {
    std::vector<std::int32_t> m;
    for (auto i : s) m.insert(m.end(), rows[i].begin(), rows[i].end());
    std::size_t k = s.size();
    if (kind != ComplexKind::Aalg) {
      m.insert(m.end(), fs.del().begin(), fs.del().end());
      ++k;
    }
    if (kind == ComplexKind::D) {
      // cheap necessary condition first
      std::vector<std::vector<bool>> rel(s.size(), std::vector<bool>(s.size(), false));
      for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < s.size(); ++j)
          if (i != j) rel[i][j] = dot_mod(rows[s[i]], verts[s[j]], sr) == one;
      if (!has_disordered_order(rel)) return false;
    }
    return fin::rows_unimodular(m, k, n, sr);
  };
  auto layers = grow(nv, dim_cap, pred, budget);
  std::vector<Vec> vv;
  for (const auto& x : verts) vv.push_back(fin::to_vec(x.data(), n));
  return SimplicialComplex(a.ring(), kind, dim_cap, std::move(vv), std::move(layers));
}

SimplicialComplex build_u_complex(const Ring& r, std::size_t n, const Vec& base, const Mat& gens, std::size_t dim_cap,
                                  std::uint64_t budget) {
  fin::SmallRing sr(r);
  if (base.size() != n || gens.rows() != n) fail(ErrorCode::InvalidArgument, "coset data has the wrong size");
  fin::space_size(n, sr.m, budget);
  const std::size_t k = gens.cols();
  const std::uint64_t combos = fin::space_size(k, sr.m, budget);
  std::vector<fin::Row> g;
  for (std::size_t j = 0; j < k; ++j) g.push_back(fin::to_row(gens.column(j), sr));
  fin::Row b = fin::to_row(base, sr);
  std::set<std::uint64_t> codes;
  fin::Row c(k), v(n);
  for (std::uint64_t code = 0; code < combos; ++code) {
    fin::decode(code, k, sr.m, c.data());
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t s = b[i];
      for (std::size_t j = 0; j < k; ++j) s += static_cast<std::int64_t>(c[j]) * g[j][i];
      v[i] = sr.reduce(s);
    }
    if (fin::rows_unimodular(v, 1, n, sr)) codes.insert(fin::encode(v.data(), n, sr.m));
  }
  std::vector<fin::Row> verts;
  for (auto code : codes) {
    fin::decode(code, n, sr.m, v.data());
    verts.push_back(v);
  }
  Pred pred = [&](const Simplex& s) {
    std::vector<std::int32_t> m;
    for (auto i : s) m.insert(m.end(), verts[i].begin(), verts[i].end());
    return fin::rows_unimodular(m, s.size(), n, sr);
  };
  auto layers = grow(verts.size(), dim_cap, pred, budget);
  std::vector<Vec> vv;
  for (const auto& x : verts) vv.push_back(fin::to_vec(x.data(), n));
  return SimplicialComplex(r, ComplexKind::U, dim_cap, std::move(vv), std::move(layers));
}

SimplicialComplex link(const SimplicialComplex& cx, const Simplex& sigma_in) {
  Simplex sigma = sigma_in;
  std::sort(sigma.begin(), sigma.end());
  if (!cx.contains(sigma)) fail(ErrorCode::NotASimplex, "sigma is not a simplex of the complex");
  const std::size_t s = sigma.size();
  const std::size_t cap = cx.dim_cap() >= s ? cx.dim_cap() - s : 0;
  std::vector<std::vector<Simplex>> raw(cap + 1);
  std::set<std::uint32_t> used;
  for (std::size_t q = 0; q <= cap; ++q) {
    for (const auto& t : cx.simplices(q + s)) {
      if (!std::includes(t.begin(), t.end(), sigma.begin(), sigma.end())) continue;
      Simplex tau;
      std::set_difference(t.begin(), t.end(), sigma.begin(), sigma.end(), std::back_inserter(tau));
      for (auto v : tau) used.insert(v);
      raw[q].push_back(std::move(tau));
    }
  }
  std::vector<std::uint32_t> old(used.begin(), used.end());
  std::vector<Vec> verts;
  for (auto v : old) verts.push_back(cx.vertices()[v]);
  for (auto& layer : raw)
    for (auto& tau : layer)
      for (auto& v : tau) v = static_cast<std::uint32_t>(std::lower_bound(old.begin(), old.end(), v) - old.begin());
  return SimplicialComplex(cx.ring(), cx.kind(), cap, std::move(verts), std::move(raw));
}

SparseMatrix boundary_matrix(const SimplicialComplex& cx, std::size_t p) {
  SparseMatrix m;
  if (p == 0) {
    m.rows = 1;
    m.cols.assign(cx.count(0), SparseColumn{{0u, 1}});
    return m;
  }
  const auto& faces = cx.simplices(p - 1);
  m.rows = faces.size();
  for (const auto& s : cx.simplices(p)) {
    SparseColumn col;
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex f;
      for (std::size_t j = 0; j < s.size(); ++j)
        if (j != i) f.push_back(s[j]);
      auto it = std::lower_bound(faces.begin(), faces.end(), f);
      if (it == faces.end() || *it != f) fail(ErrorCode::Internal, "complex is not closed under faces");
      col.emplace_back(static_cast<std::uint32_t>(it - faces.begin()), i % 2 == 0 ? 1 : -1);
    }
    std::sort(col.begin(), col.end());
    m.cols.push_back(std::move(col));
  }
  return m;
}

HomologyReport reduced_homology(const SimplicialComplex& cx, int max_deg) {
  if (max_deg < -1) fail(ErrorCode::InvalidArgument, "max_deg must be at least -1");
  if (max_deg > static_cast<int>(cx.dim_cap()) - 1)
    fail(ErrorCode::InvalidArgument, "homology in degree " + std::to_string(max_deg) + " needs simplices above dim_cap " +
                                         std::to_string(cx.dim_cap()));
  HomologyReport rep;
  rep.kind = cx.kind();
  rep.ring = cx.ring().name();
  rep.dim_cap = cx.dim_cap();
  rep.f_vector = cx.f_vector();
  // smith[p] describes the boundary from p-simplices; p = 0 is the augmentation
  std::vector<SparseSmith> smith;
  for (int p = 0; p <= max_deg + 1; ++p) smith.push_back(sparse_smith(boundary_matrix(cx, static_cast<std::size_t>(p))));
  for (int k = -1; k <= max_deg; ++k) {
    DegreeHomology d;
    d.degree = k;
    const std::size_t ck = k < 0 ? 1 : cx.count(static_cast<std::size_t>(k));
    const std::size_t rank_out = k < 0 ? 0 : smith[static_cast<std::size_t>(k)].rank;
    const auto& in = smith[static_cast<std::size_t>(k + 1)];
    d.betti = ck - rank_out - in.rank;
    d.torsion = in.torsion;
    rep.degrees.push_back(d);
  }
  rep.verified_connectivity = -2;
  for (const auto& d : rep.degrees) {
    if (!d.vanishes()) break;
    rep.verified_connectivity = d.degree;
  }
  return rep;
}

std::optional<CycleCertificate> nonzero_cycle(const SimplicialComplex& cx, int degree) {
  if (degree < -1 || degree >= static_cast<int>(cx.dim_cap())) fail(ErrorCode::InvalidArgument, "degree out of range");
  CycleCertificate cert;
  cert.degree = degree;
  cert.boundary_check_done = true;
  if (degree == -1) {
    if (cx.num_vertices() > 0) return std::nullopt;
    cert.simplices = {Simplex{}};
    cert.coefficients = {Int(1)};
    return cert;
  }
  const std::size_t k = static_cast<std::size_t>(degree);
  SparseMatrix up = boundary_matrix(cx, k + 1);
  SparseSmith base = sparse_smith(up);
  auto torsion_product = [](const SparseSmith& s) {
    Int p = 1;
    for (const auto& t : s.torsion) p *= t;
    return p;
  };
  for (const auto& z : sparse_kernel_basis(boundary_matrix(cx, k))) {
    SparseMatrix ext = up;
    if (ext.rows == 0) ext.rows = cx.count(k);
    ext.cols.push_back(z);
    SparseSmith s = sparse_smith(ext);
    // same rank and same index in the saturation iff z lies in the image
    if (s.rank == base.rank && torsion_product(s) == torsion_product(base)) continue;
    std::set<std::uint32_t> used;
    for (const auto& [row, c] : z) {
      cert.simplices.push_back(cx.simplices(k)[row]);
      cert.coefficients.push_back(Int(static_cast<long>(c)));
      for (auto v : cx.simplices(k)[row]) used.insert(v);
    }
    for (auto v : used) cert.vertex_vectors.push_back(cx.vertices()[v]);
    cert.is_boundary = false;
    return cert;
  }
  return std::nullopt;
}

PredictedBound predicted_connectivity(const FormedSpace& a, ComplexKind kind) {
  RingProfile prof = ring_profile(a.ring());
  switch (kind) {
    case ComplexKind::D: {
      const long g = static_cast<long>(arc_genus(a).g_X);
      if (prof.is_pid) return {static_cast<int>(floor_div(g - 5, 3)), "floor((g_X - 5) / 3), PID; g_X = " + std::to_string(g)};
      return {static_cast<int>(floor_div(g - 2 * prof.usr - 6, 3)),
              "floor((g_X - 2 usr - 6) / 3); g_X = " + std::to_string(g) + ", usr = " + std::to_string(prof.usr)};
    }
    case ComplexKind::B: {
      const long g = static_cast<long>(arc_genus(a).g_X);
      return {static_cast<int>(g - prof.sr - 3),
              "g_X - sr - 3; g_X = " + std::to_string(g) + ", sr = " + std::to_string(prof.sr)};
    }
    case ComplexKind::Aalg: {
      const long n = static_cast<long>(a.rank());
      return {static_cast<int>(n - prof.sr - 2), "rk - sr - 2; rk = " + std::to_string(n) + ", sr = " + std::to_string(prof.sr)};
    }
    case ComplexKind::U:
      break;
  }
  fail(ErrorCode::InvalidArgument, "use predicted_u_connectivity for U");
}

PredictedBound predicted_u_connectivity(const Ring& r, std::size_t n, const Mat& gens) {
  RingProfile prof = ring_profile(r);
  const long rr = static_cast<long>(relative_rank(n, gens));
  return {static_cast<int>(rr - prof.sr - 1), "r(M, N) - sr - 1; r = " + std::to_string(rr) + ", sr = " + std::to_string(prof.sr)};
}

namespace {

HomologyReport check_against(const SimplicialComplex& cx, const PredictedBound& pb) {
  const int top = static_cast<int>(cx.dim_cap()) - 1;
  const int max_deg = std::max(-1, std::min(top, pb.bound + 1));
  HomologyReport rep = reduced_homology(cx, max_deg);
  rep.predicted_bound = pb.bound;
  rep.bound_formula = pb.formula;
  rep.note = "connectivity checked through reduced integral homology; pi_1 is not computed";
  if (pb.bound > top) rep.note += "; bound exceeds the computed range, checked through degree " + std::to_string(top);
  rep.bound_met = true;
  for (const auto& d : rep.degrees) {
    if (d.degree > pb.bound) break;
    if (!d.vanishes()) {
      rep.bound_met = false;
      rep.certificate = nonzero_cycle(cx, d.degree);
      break;
    }
  }
  return rep;
}

}  // namespace

HomologyReport connectivity_report(const FormedSpace& a, ComplexKind kind, std::size_t dim_cap, std::uint64_t budget) {
  PredictedBound pb = predicted_connectivity(a, kind);
  return check_against(build_complex(a, kind, dim_cap, budget), pb);
}

HomologyReport u_connectivity_report(const Ring& r, std::size_t n, const Vec& base, const Mat& gens,
                                     std::size_t dim_cap, std::uint64_t budget) {
  PredictedBound pb = predicted_u_connectivity(r, n, gens);
  return check_against(build_u_complex(r, n, base, gens, dim_cap, budget), pb);
}

std::uint64_t valid_orderings(const FormedSpace& a, const std::vector<Vec>& simplex) {
  const std::size_t k = simplex.size();
  if (k > 10) fail(ErrorCode::BudgetExceeded, "too many vertices to permute");
  std::vector<std::size_t> ord(k);
  std::iota(ord.begin(), ord.end(), 0);
  std::vector<std::vector<bool>> one(k, std::vector<bool>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) one[i][j] = i != j && a.ring().is_one(a.pair(simplex[i], simplex[j]));
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i)
      for (std::size_t j = i + 1; j < k && ok; ++j) ok = one[ord[i]][ord[j]];
    if (ok) ++count;
  } while (std::next_permutation(ord.begin(), ord.end()));
  return count;
}

CountCheck destabilization_count_check(std::size_t n, std::size_t p, const Ring& r, std::uint64_t budget) {
  if (!r.is_field()) fail(ErrorCode::UnsupportedRing, "the counting check runs over finite fields");
  if (n < 2 || p > n - 2) fail(ErrorCode::InvalidArgument, "the counting check needs p <= n - 2");
  FormedSpace x = x_power(n, r);
  SimplicialComplex cx = build_complex(x, ComplexKind::D, p, budget);
  CountCheck res;
  res.n = n;
  res.p = p;
  res.unordered = cx.count(p);
  for (const auto& s : cx.simplices(p)) {
    std::vector<Vec> vs;
    for (auto i : s) vs.push_back(cx.vertices()[i]);
    res.lhs += valid_orderings(x, vs);
  }
  res.aut_n = *aut_x_power(n, r, true, kDefaultGroupBudget).order;
  res.aut_rest = *aut_x_power(n - p - 1, r, true, kDefaultGroupBudget).order;
  res.rhs = res.aut_n / res.aut_rest;
  res.equal = res.aut_n % res.aut_rest == 0 && res.lhs == res.rhs;
  return res;
}

}  // namespace fsb
