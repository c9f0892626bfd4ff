#include "fsb/groups.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <unordered_set>

#include "fsb/arcs.hpp"
#include "fsb/errors.hpp"
#include "fsb/exactlin.hpp"
#include "fsb/finite.hpp"

namespace fsb {

namespace {

// Matrices over Z/m (m <= 255) packed row-major into strings for hashing.
struct Packer {
  std::size_t n;
  std::int64_t m;
  Ring ring;

  Packer(std::size_t n_, const Ring& r) : n(n_), m(r.modulus()), ring(r) {
    if (!r.is_finite()) fail(ErrorCode::InfiniteRing, "group enumeration requires a finite ring");
    if (m > 255) fail(ErrorCode::BudgetExceeded, "group enumeration supports moduli up to 255");
  }

  std::string pack(const Mat& a) const {
    std::string s(n * n, '\0');
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) s[i * n + j] = static_cast<char>(a(i, j).get_si());
    return s;
  }

  Mat unpack(const std::string& s) const {
    Mat a(ring, n, n);
    for (std::size_t i = 0; i < n * n; ++i) a.ref(i / n, i % n) = static_cast<unsigned char>(s[i]);
    return a;
  }

  std::string mul(const std::string& a, const std::string& b) const {
    std::string out(n * n, '\0');
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::int64_t acc = 0;
        for (std::size_t k = 0; k < n; ++k)
          acc += static_cast<std::int64_t>(static_cast<unsigned char>(a[i * n + k])) *
                 static_cast<unsigned char>(b[k * n + j]);
        out[i * n + j] = static_cast<char>(acc % m);
      }
    return out;
  }

  std::vector<std::int32_t> apply(const std::string& a, const std::vector<std::int32_t>& v) const {
    std::vector<std::int32_t> out(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t acc = 0;
      for (std::size_t k = 0; k < n; ++k) acc += static_cast<std::int64_t>(static_cast<unsigned char>(a[i * n + k])) * v[k];
      out[i] = static_cast<std::int32_t>(acc % m);
    }
    return out;
  }
};

std::vector<std::string> closure(const std::vector<std::string>& gens, const Packer& pk, std::uint64_t budget) {
  std::string id(pk.n * pk.n, '\0');
  for (std::size_t i = 0; i < pk.n; ++i) id[i * pk.n + i] = 1 % pk.m;
  std::unordered_set<std::string> seen{id};
  std::vector<std::string> elems{id};
  for (std::size_t head = 0; head < elems.size(); ++head)
    for (const auto& g : gens) {
      std::string y = pk.mul(g, elems[head]);
      if (seen.insert(y).second) {
        elems.push_back(std::move(y));
        if (elems.size() > budget)
          fail(ErrorCode::BudgetExceeded, "group has more than " + std::to_string(budget) + " elements");
      }
    }
  return elems;
}

// Family of vectors whose transvections generate Sp on H^g.
std::vector<Vec> symplectic_family(std::size_t g) {
  std::vector<Vec> out;
  const std::size_t n = 2 * g;
  auto e = [&](std::size_t i) { return 2 * i; };
  auto f = [&](std::size_t i) { return 2 * i + 1; };
  for (std::size_t i = 0; i < g; ++i) {
    out.push_back(unit_vector(n, e(i)));
    out.push_back(unit_vector(n, f(i)));
  }
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) {
      Vec v = unit_vector(n, e(i));
      v[f(j)] += 1;
      out.push_back(v);
      if (i < j) {
        Vec a = unit_vector(n, e(i)), b = unit_vector(n, f(i));
        a[e(j)] += 1;
        b[f(j)] += 1;
        out.push_back(a);
        out.push_back(b);
      }
    }
  return out;
}

void require_field(const Ring& f) {
  if (!f.is_field()) fail(ErrorCode::UnsupportedRing, "expected a finite field, got " + f.name());
}

std::uint64_t checked_pow(std::uint64_t q, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i)
    if (__builtin_mul_overflow(r, q, &r)) fail(ErrorCode::BudgetExceeded, "group order overflows 64 bits");
  return r;
}

std::vector<std::vector<std::int32_t>> nonseparating_arcs(const FormedSpace& a, std::uint64_t budget) {
  fin::FiniteSpace fs(a);
  std::vector<std::vector<std::int32_t>> out;
  const std::size_t n = a.rank();
  for (const auto& v : fin::enumerate_arcs(fs, budget)) {
    std::vector<std::int32_t> rows(2 * n);
    fs.pairing_row(v.data(), rows.data());
    for (std::size_t j = 0; j < n; ++j) rows[n + j] = fs.del()[j];
    if (fin::rows_unimodular(rows, 2, n, fs.ring())) out.push_back(v);
  }
  return out;
}

// All automorphisms by column-wise search, for small rank.
std::vector<Mat> exhaustive_automorphisms(const FormedSpace& a, std::uint64_t budget) {
  fin::FiniteSpace fs(a);
  const std::size_t n = a.rank();
  const std::int32_t m = fs.modulus();
  const std::uint64_t total = fin::space_size(n, m, budget);
  std::vector<std::vector<std::int32_t>> by_del(m);
  std::vector<std::vector<std::int32_t>> vecs(total, std::vector<std::int32_t>(n));
  std::vector<std::vector<std::size_t>> cand(n);
  for (std::uint64_t c = 0; c < total; ++c) {
    fin::decode(c, n, m, vecs[c].data());
    for (std::size_t j = 0; j < n; ++j)
      if (fs.boundary(vecs[c].data()) == fs.del()[j]) cand[j].push_back(c);
  }
  std::vector<std::vector<std::int32_t>> target(n, std::vector<std::int32_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) target[i][j] = fs.ring().reduce(a.lambda()(i, j).get_si());
  std::vector<std::size_t> chosen(n);
  std::vector<Mat> out;
  std::uint64_t nodes = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (++nodes > budget * 4) fail(ErrorCode::BudgetExceeded, "automorphism search exceeded its budget");
    if (j == n) {
      std::vector<std::int32_t> rows(n * n);
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t i = 0; i < n; ++i) rows[c * n + i] = vecs[chosen[c]][i];
      if (!fin::rows_unimodular(rows, n, n, fs.ring())) return;
      Mat phi(a.ring(), n, n);
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t i = 0; i < n; ++i) phi.ref(i, c) = vecs[chosen[c]][i];
      out.push_back(phi);
      return;
    }
    for (std::size_t c : cand[j]) {
      bool ok = true;
      for (std::size_t i = 0; i < j && ok; ++i) ok = fs.pair(vecs[chosen[i]].data(), vecs[c].data()) == target[i][j];
      if (!ok) continue;
      chosen[j] = c;
      rec(j + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace

Mat transvection(const FormedSpace& a, const Vec& v) {
  const Ring& r = a.ring();
  Mat t = Mat::identity(r, a.rank());
  Vec w = a.lambda().apply(v);
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = 0; j < a.rank(); ++j) t.set(i, j, t(i, j) + v[i] * w[j]);
  return t;
}

std::vector<Mat> sp_generators(std::size_t g, const Ring& f) {
  if (g == 0) fail(ErrorCode::InvalidArgument, "sp_generators needs g >= 1");
  FormedSpace h = hyperbolic(g, f);
  std::vector<Mat> out;
  for (const auto& v : symplectic_family(g)) {
    Mat t = transvection(h, v);
    Morphism(h, h, t);
    out.push_back(t);
  }
  return out;
}

std::uint64_t sp_order(std::size_t g, std::uint64_t q) {
  std::uint64_t r = checked_pow(q, g * g);
  for (std::size_t i = 1; i <= g; ++i)
    if (__builtin_mul_overflow(r, checked_pow(q, 2 * i) - 1, &r))
      fail(ErrorCode::BudgetExceeded, "group order overflows 64 bits");
  return r;
}

std::uint64_t x_power_aut_order(std::size_t n, std::uint64_t q) {
  const std::size_t g = n / 2;
  if (n % 2 == 1 || n == 0) return sp_order(g, q);
  return sp_order(g, q) / (checked_pow(q, 2 * g) - 1);
}

std::vector<Mat> enumerate_group(const std::vector<Mat>& generators, std::size_t n, const Ring& r,
                                 std::uint64_t budget) {
  Packer pk(n, r);
  std::vector<std::string> gens;
  for (const auto& g : generators) gens.push_back(pk.pack(g));
  std::vector<Mat> out;
  for (const auto& s : closure(gens, pk, budget)) out.push_back(pk.unpack(s));
  return out;
}

AutGroup aut_x_power(std::size_t n, const Ring& f, bool enumerate, std::uint64_t budget) {
  require_field(f);
  FormedSpace x = x_power(n, f);
  AutGroup grp{x, {}, std::nullopt, std::nullopt, "x-power closure", true};
  if (n >= 2) {
    const std::size_t g = n / 2;
    FormedSpace model = x_power_model(n, f);
    WitnessIso w = standardize_x_power(n, f);
    std::vector<Mat> model_gens;
    if (n % 2 == 1) {
      for (const auto& t : sp_generators(g, f)) model_gens.push_back(block_diag(t, Mat::identity(f, 1)));
    } else {
      // transvections along vectors orthogonal to e1 fix e1, hence del
      for (const auto& v : symplectic_family(g))
        if (f.is_zero(model.pair(unit_vector(n, 0), v))) model_gens.push_back(transvection(model, v));
    }
    for (const auto& t : model_gens) {
      Mat phi = w.matrix() * t * w.inverse_matrix();
      Morphism(x, x, phi);
      grp.generators.push_back(phi);
    }
  }
  const std::uint64_t expected = x_power_aut_order(n, static_cast<std::uint64_t>(f.modulus()));
  if (enumerate) {
    auto elems = enumerate_group(grp.generators, n, f, budget);
    grp.order = elems.size();
    grp.complete = elems.size() == expected;
    grp.elements = std::move(elems);
  } else {
    grp.order = expected;
  }
  return grp;
}

AutGroup aut_group(const FormedSpace& a, std::uint64_t budget) {
  const Ring& r = a.ring();
  if (!r.is_finite()) fail(ErrorCode::InfiniteRing, "automorphism groups are enumerated over finite rings only");
  if (r.is_field() && a == x_power(a.rank(), r)) return aut_x_power(a.rank(), r, true, budget);
  Packer pk(a.rank(), r);
  std::vector<Mat> seeds;
  {
    fin::FiniteSpace fs(a);
    const std::size_t n = a.rank();
    const std::uint64_t total = fin::space_size(n, fs.modulus(), budget);
    std::vector<std::int32_t> v(n);
    std::set<std::string> distinct;
    for (std::uint64_t c = 1; c < total; ++c) {
      fin::decode(c, n, fs.modulus(), v.data());
      if (fs.boundary(v.data()) != 0) continue;
      Mat t = transvection(a, fin::to_vec(v.data(), n));
      if (!t.is_identity() && distinct.insert(pk.pack(t)).second) seeds.push_back(t);
    }
  }
  if (a.rank() > 4) {
    auto elems = enumerate_group(seeds, a.rank(), r, budget);
    return AutGroup{a, seeds, elems.size(), std::move(elems), "transvection closure", false};
  }
  auto all = exhaustive_automorphisms(a, budget);
  std::unordered_set<std::string> all_set;
  for (const auto& m : all) all_set.insert(pk.pack(m));
  // grow a generating set: transvections first, then missing elements
  std::vector<std::string> gens;
  for (const auto& s : seeds) gens.push_back(pk.pack(s));
  auto span = closure(gens, pk, budget);
  std::unordered_set<std::string> have(span.begin(), span.end());
  for (const auto& m : all) {
    if (have.size() == all_set.size()) break;
    std::string s = pk.pack(m);
    if (have.count(s)) continue;
    gens.push_back(s);
    span = closure(gens, pk, budget);
    have = std::unordered_set<std::string>(span.begin(), span.end());
  }
  if (have.size() != all_set.size()) fail(ErrorCode::Internal, "generated group differs from the exhaustive one");
  AutGroup grp{a, {}, all.size(), std::move(all), "exhaustive", true};
  for (const auto& s : gens) grp.generators.push_back(pk.unpack(s));
  return grp;
}

std::vector<std::vector<Vec>> orbit_nonseparating(const FormedSpace& a, std::uint64_t budget) {
  AutGroup grp = aut_group(a, budget);
  if (!grp.complete) fail(ErrorCode::CapExceeded, "automorphism group is only known up to a subgroup at this rank");
  Packer pk(a.rank(), a.ring());
  std::vector<std::string> gens;
  for (const auto& g : grp.generators) gens.push_back(pk.pack(g));
  auto arcs = nonseparating_arcs(a, budget);
  std::map<std::vector<std::int32_t>, std::size_t> index;
  for (std::size_t i = 0; i < arcs.size(); ++i) index[arcs[i]] = i;
  std::vector<int> orbit_of(arcs.size(), -1);
  std::vector<std::vector<Vec>> orbits;
  // arcs are in increasing order, so each orbit starts at its least element
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (orbit_of[i] >= 0) continue;
    const int id = static_cast<int>(orbits.size());
    std::vector<std::size_t> members{i};
    orbit_of[i] = id;
    for (std::size_t h = 0; h < members.size(); ++h)
      for (const auto& g : gens) {
        auto it = index.find(pk.apply(g, arcs[members[h]]));
        if (it == index.end()) fail(ErrorCode::Internal, "automorphism moved a non-separating arc off the set");
        if (orbit_of[it->second] < 0) {
          orbit_of[it->second] = id;
          members.push_back(it->second);
        }
      }
    std::sort(members.begin(), members.end());
    std::vector<Vec> orbit;
    for (auto k : members) orbit.push_back(fin::to_vec(arcs[k].data(), a.rank()));
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

SquareCheck stabilization_square_check(const Mat& phi) {
  const Ring& r = phi.ring();
  const std::size_t n = phi.rows();
  SquareCheck res;
  res.checked = 1;
  if (n % 2 == 0) {
    res.ok = false;
    res.failure = "expected an automorphism of an odd X-power";
    return res;
  }
  FormedSpace x = x_power(n, r), big = x_power(n + 2, r);
  if (auto d = morphism_defect(x, x, phi); !d.empty()) {
    res.ok = false;
    res.failure = "not an automorphism: " + d;
    return res;
  }
  Mat psi = block_diag(phi, Mat::identity(r, 2));
  Vec v = characteristic_vector(n, r);
  Vec e(n + 2, Int(0)), f(n + 2, Int(0));
  for (std::size_t i = 0; i < n; ++i) e[i] = v[i];
  e[n] = -1;
  f[n] = 1;
  f[n + 1] = -1;
  for (auto& c : e) c = r.reduce(c);
  for (auto& c : f) c = r.reduce(c);
  if (!r.is_one(big.pair(e, f)) || !r.is_zero(big.boundary(e)) || !r.is_zero(big.boundary(f))) {
    res.ok = false;
    res.failure = "(e, f) is not a hyperbolic pair in ker del";
    return res;
  }
  if (psi.apply(e) != e || psi.apply(f) != f) {
    res.ok = false;
    res.failure = "phi # id does not fix the hyperbolic pair";
    return res;
  }
  // iota: X^n -> <e, f>^perp, x -> x - lambda(x, f) e - lambda(e, x) f
  Mat iota(r, n + 2, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec xj = unit_vector(n + 2, j);
    Int a = big.pair(xj, f), b = big.pair(e, xj);
    for (std::size_t i = 0; i < n + 2; ++i) iota.set(i, j, xj[i] - a * e[i] - b * f[i]);
  }
  if (auto d = morphism_defect(x, big, iota); !d.empty()) {
    res.ok = false;
    res.failure = "complement inclusion: " + d;
    return res;
  }
  // the other route: phi on the complement, identity on <e, f>
  Mat basis = hstack(iota, hstack(Mat::column_vector(r, e), Mat::column_vector(r, f)));
  Mat other = basis * block_diag(phi, Mat::identity(r, 2)) * inverse(basis);
  if (other != psi) {
    res.ok = false;
    res.failure = "the two stabilizations differ";
  }
  return res;
}

SquareCheck stabilization_square_check(std::size_t g, const Ring& f, std::size_t samples, std::uint64_t seed,
                                       std::uint64_t budget) {
  AutGroup grp = aut_x_power(2 * g + 1, f, true, budget);
  SquareCheck total;
  total.checked = 0;
  auto run = [&](const Mat& phi) {
    SquareCheck c = stabilization_square_check(phi);
    ++total.checked;
    if (!c.ok && total.ok) {
      total.ok = false;
      total.failure = c.failure;
    }
  };
  run(Mat::identity(f, 2 * g + 1));
  for (const auto& gen : grp.generators) run(gen);
  const auto& elems = *grp.elements;
  if (elems.size() <= samples) {
    for (const auto& e : elems) run(e);
  } else {
    std::mt19937_64 rng(seed);
    for (std::size_t s = 0; s < samples; ++s) run(elems[rng() % elems.size()]);
  }
  return total;
}

}  // namespace fsb
