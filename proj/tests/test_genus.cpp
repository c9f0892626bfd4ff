#include <doctest.h>

#include <random>

#include "fsb/errors.hpp"
#include "fsb/exactlin.hpp"
#include "fsb/genus.hpp"
#include "oracles.hpp"

using namespace fsb;

namespace {

const Ring Z = Ring::integers();

Mat rows(const Ring& r, std::vector<std::vector<long>> v) { return Mat::from_rows(r, v); }

FormedSpace random_space(const Ring& r, std::size_t n, std::mt19937_64& rng, long bound = 3) {
  return FormedSpace(oracle::random_alternating(r, n, rng, bound), oracle::random_matrix(r, 1, n, rng, bound));
}

FormedSpace restrict_space(const FormedSpace& a, const Mat& k) {
  return FormedSpace(restrict_form(a.lambda(), k), a.del() * k);
}

// Every formed space of rank n over Z/m, as (lambda, del) pairs.
template <class F>
void for_all_spaces(std::size_t n, std::int64_t m, bool all_del, F&& f) {
  const Ring r = Ring::mod(m);
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  for (const auto& entries : oracle::all_vectors(slots.size(), m)) {
    Mat lam(r, n, n);
    for (std::size_t s = 0; s < slots.size(); ++s) {
      lam.set(slots[s].first, slots[s].second, entries[s]);
      lam.set(slots[s].second, slots[s].first, -entries[s]);
    }
    if (all_del) {
      for (const auto& d : oracle::all_vectors(n, m)) f(FormedSpace(lam, Mat::row_vector(r, d)));
    } else {
      Mat d(r, 1, n);
      if (n) d.set(0, n - 1, Int(1));
      f(FormedSpace(lam, d));
    }
  }
}

}  // namespace

TEST_CASE("hyperbolic genus examples") {
  CHECK(hyperbolic_genus(hyperbolic_form(1, Z)) == 1);
  CHECK(hyperbolic_genus(rows(Z, {{0, 2}, {-2, 0}})) == 0);
  CHECK(hyperbolic_genus(x_power(5, Z).lambda()) == 2);
  CHECK(hyperbolic_genus(Mat(Z, 0, 0)) == 0);
  CHECK(hyperbolic_genus_report(hyperbolic_form(2, Ring::mod(6))).method == GenusMethod::Greedy);
  CHECK(hyperbolic_genus_report(hyperbolic_form(2, Z)).method == GenusMethod::Snf);
  // over Z/6 the entries 2 and 3 combine to a unit pairing
  const Ring r6 = Ring::mod(6);
  Mat lam = rows(r6, {{0, 2, 3}, {-2, 0, 0}, {-3, 0, 0}});
  CHECK(hyperbolic_genus(lam) == 1);
  CHECK(oracle::hyperbolic_genus_exhaustive(lam) == 1);
}

TEST_CASE("hyperbolic genus: SNF, greedy and exhaustive agree") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 1 + rng() % 8;
    Mat lam = oracle::random_alternating(Z, n, rng, 2 + trial % 4);
    std::size_t snf = hyperbolic_genus_snf(lam);
    HyperbolicSplit sp = hyperbolic_split(lam);
    CHECK(sp.genus() == snf);
    CHECK(restrict_form(lam, sp.basis) == hyperbolic_form(sp.genus(), Z));
    CHECK(is_invertible(hstack(sp.basis, sp.complement)));
    CHECK(restrict_form(lam, sp.complement).rows() == n - 2 * snf);
    if (sp.complement.cols()) CHECK((sp.basis.transpose() * lam * sp.complement).is_zero());
  }
  for (std::int64_t m : {2, 3, 4, 6, 8, 9, 12}) {
    const Ring r = Ring::mod(m);
    for (int trial = 0; trial < 25; ++trial) {
      std::size_t n = 1 + rng() % (m <= 3 ? 5 : m <= 6 ? 4 : 3);
      Mat lam = oracle::random_alternating(r, n, rng, m);
      if (trial % 3 == 0) {
        // scale to land in a proper ideal
        Mat scaled = lam.scaled(Int(r.prime_factors()[0]));
        lam = block_diag(scaled, hyperbolic_form(1, r)).submatrix(0, 0, n, n);
        check_alternating(lam);
      }
      const std::size_t ex = oracle::hyperbolic_genus_exhaustive(lam);
      HyperbolicGenus rep = hyperbolic_genus_report(lam);
      CHECK(rep.genus == ex);
      CHECK(rep.certified);
      CHECK(hyperbolic_split(lam).genus() == ex);
      CHECK(hyperbolic_genus_upper_bound(lam) == ex);
      if (n <= 4) CHECK(hyperbolic_genus_exhaustive(lam) == ex);
    }
  }
}

TEST_CASE("hyperbolic genus is a congruence invariant") {
  std::mt19937_64 rng(5);
  for (std::int64_t m : {0, 2, 3, 6, 12}) {
    const Ring r = m ? Ring::mod(m) : Z;
    for (int trial = 0; trial < 15; ++trial) {
      std::size_t n = 1 + rng() % 7;
      Mat lam = oracle::random_alternating(r, n, rng, 3);
      Mat p = random_unimodular(n, r, rng(), 12);
      CHECK(hyperbolic_genus(restrict_form(lam, p)) == hyperbolic_genus(lam));
    }
  }
}

TEST_CASE("arc genus examples") {
  for (std::size_t n = 0; n <= 7; ++n) {
    GenusReport rep = arc_genus(x_power(n, Z));
    CHECK(rep.g_X == n);
    CHECK(rep.method == GenusMethod::Formula);
  }
  CHECK(arc_genus(hyperbolic(1, Z)).g_X == 0);
  CHECK(arc_genus(hyperbolic(1, Z)).conditions_used.front() == "del not unimodular");
  const Ring f2 = Ring::mod(2);
  CHECK(arc_genus(x_power(4, f2)).g_X == 4);
  CHECK(oracle::arc_genus_exhaustive(x_power(4, f2).lambda(), x_power(4, f2).del()) == 4);
  CHECK(arc_genus_bruteforce(x_power(3, f2)) == 3);
  CHECK(arc_genus_bruteforce(hyperbolic(1, f2)) == 0);
  CHECK(arc_genus_bruteforce(FormedSpace::zero(f2)) == 0);
  CHECK_THROWS_AS(arc_genus_bruteforce(x_power(7, f2)), Error);
  Mat t = max_arc_tuple(x_power(3, Ring::mod(3)));
  FormedSpace x3 = x_power(3, Ring::mod(3));
  CHECK(Morphism(x3, x3, t).matrix() == t);
}

TEST_CASE("arc genus formula matches brute force on every small F2 and F3 space") {
  std::size_t checked = 0;
  for (std::int64_t m : {2, 3})
    for (std::size_t n = 1; n <= (m == 2 ? 5u : 4u); ++n)
      for_all_spaces(n, m, true, [&](const FormedSpace& a) {
        GenusReport rep = arc_genus(a);
        const std::size_t bf = arc_genus_bruteforce(a);
        CHECK(rep.g_X == bf);
        if (rep.g_H_ker_del) CHECK(rep.g_X <= 1 + rep.g_H + *rep.g_H_ker_del);
        ++checked;
      });
  CHECK(checked > 60000);
}

TEST_CASE("arc genus over composite moduli") {
  std::mt19937_64 rng(23);
  for (std::int64_t m : {4, 6}) {
    const Ring r = Ring::mod(m);
    for (int trial = 0; trial < 40; ++trial) {
      std::size_t n = 1 + rng() % 4;
      FormedSpace a = random_space(r, n, rng);
      if (trial % 4 == 0) a = sum(a, x_power(1 + rng() % 2, r));
      if (a.rank() > 5) continue;
      GenusReport rep = arc_genus(a);
      CHECK(rep.g_X == oracle::arc_genus_exhaustive(a.lambda(), a.del()));
      if (rep.method == GenusMethod::BruteForce) CHECK(rep.g_H < 2);
    }
  }
}

TEST_CASE("find_hyperbolic_for_functional") {
  auto check_pair = [](const Mat& lam, const Mat& l) {
    HyperbolicPair p = find_hyperbolic_for_functional(lam, l);
    const Ring& r = lam.ring();
    Int luv = dot(r, p.u, lam.apply(p.v));
    CHECK(r.is_one(luv));
    Vec lv = l.row(0);
    CHECK(r.is_unit(r.ideal_gcd({dot(r, lv, p.u), dot(r, lv, p.v)})));
    return p;
  };
  HyperbolicPair p = check_pair(hyperbolic_form(1, Z), rows(Z, {{1, 0}}));
  CHECK(dot(Z, {1, 0}, p.u) == 1);
  Mat lam3 = block_diag(hyperbolic_form(1, Z), Mat(Z, 1, 1));
  p = check_pair(lam3, rows(Z, {{0, 0, 1}}));
  CHECK(p.u[2] != 0);
  check_pair(hyperbolic_form(1, Z), rows(Z, {{2, 3}}));
  CHECK_THROWS_AS(find_hyperbolic_for_functional(Mat(Z, 2, 2), rows(Z, {{1, 0}})), Error);

  std::mt19937_64 rng(31);
  for (std::int64_t m : {0, 3, 4, 6, 10}) {
    const Ring r = m ? Ring::mod(m) : Z;
    for (int trial = 0; trial < 30; ++trial) {
      std::size_t n = 2 + rng() % 6;
      Mat lam = oracle::random_alternating(r, n, rng, 4);
      if (hyperbolic_genus(lam) == 0) lam = block_diag(hyperbolic_form(1, r), lam).submatrix(0, 0, n, n);
      Mat l = oracle::random_matrix(r, 1, n, rng, 5);
      if (!is_unimodular_rows(l) || hyperbolic_genus(lam) == 0) continue;
      check_pair(lam, l);
    }
  }
}

TEST_CASE("adapted hyperbolic basis") {
  auto check_basis = [](const Mat& lam, const Mat& l) {
    Mat b = adapted_hyperbolic_basis(lam, l);
    const Ring& r = lam.ring();
    const std::size_t g = b.cols() / 2;
    CHECK(g == hyperbolic_genus(lam));
    CHECK(restrict_form(lam, b) == hyperbolic_form(g, r));
    Mat lb = l * b;
    CHECK(r.is_one(lb(0, 0)));
    for (std::size_t j = 1; j < b.cols(); ++j) CHECK(r.is_zero(lb(0, j)));
    return b;
  };
  Mat b = check_basis(hyperbolic_form(1, Z), rows(Z, {{1, 0}}));
  CHECK(b.column(0) == Vec{1, 0});
  b = check_basis(hyperbolic_form(1, Z), rows(Z, {{1, 1}}));
  check_basis(hyperbolic_form(2, Z), rows(Z, {{0, 0, 1, 0}}));
  CHECK_THROWS_AS(adapted_hyperbolic_basis(hyperbolic_form(1, Ring::mod(6)), rows(Ring::mod(6), {{1, 0}})), Error);

  std::mt19937_64 rng(37);
  for (std::int64_t m : {0, 2, 5, 6, 12}) {
    const Ring r = m ? Ring::mod(m) : Z;
    for (int trial = 0; trial < 25; ++trial) {
      std::size_t n = 2 + rng() % 7;
      Mat lam = oracle::random_alternating(r, n, rng, 4);
      Mat l = oracle::random_matrix(r, 1, n, rng, 5);
      if (!is_unimodular_rows(l)) continue;
      std::size_t g = hyperbolic_genus(lam);
      if (g == 0 || (!r.is_pid() && g < 2)) {
        CHECK_THROWS_AS(adapted_hyperbolic_basis(lam, l), Error);
        continue;
      }
      check_basis(lam, l);
    }
  }
}

TEST_CASE("boundary invariant") {
  CHECK(boundary_invariant_rank(x_power(3, Z)) == 2);
  CHECK(boundary_invariant_rank(x_power(1, Z)) == 0);
  for (std::size_t g = 1; g <= 5; ++g) CHECK(boundary_invariant_rank(x_power(2 * g, Z)) == 2 * g - 2);
  CHECK_FALSE(boundary_invariant(hyperbolic(1, Z)).del_unimodular);
}

TEST_CASE("genus inequalities on seeded integer instances") {
  std::mt19937_64 rng(41);
  int done = 0;
  while (done < 100) {
    std::size_t n = 2 + rng() % 7;
    FormedSpace a = random_space(Z, n, rng, 2);
    if (rng() % 3 == 0) a = sum(a, x_power(1 + rng() % 3, Z));
    Mat l = oracle::random_matrix(Z, 1, a.rank(), rng, 3);
    if (!is_unimodular_rows(l)) continue;
    ++done;
    Mat k = kernel_basis(l);
    // the kernel of a unimodular functional keeps all but one hyperbolic summand
    CHECK(hyperbolic_genus(restrict_form(a.lambda(), k)) + 1 >= hyperbolic_genus(a.lambda()));
    GenusReport rep = arc_genus(a);
    if (rep.g_X > 0) {
      CHECK(boundary_invariant_rank(a) + 2 >= rep.g_X);
      CHECK(rep.g_X <= a.rank());
    }
    if (is_unimodular_rows(vstack(l, a.del())))
      CHECK(arc_genus(restrict_space(a, k)).g_X + 2 >= rep.g_X);
  }
}
