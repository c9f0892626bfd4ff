#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "fsb/arcs.hpp"
#include "fsb/errors.hpp"
#include "fsb/exactlin.hpp"
#include "fsb/groups.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace fsb;

namespace {

Mat rows(const Ring& r, std::vector<std::vector<long>> v) { return Mat::from_rows(r, v); }

// All n x n matrices over F_p preserving lambda and del with nonzero determinant.
std::size_t brute_force_aut_order(const FormedSpace& a) {
  const std::size_t n = a.rank();
  const std::int64_t p = a.ring().modulus();
  std::size_t count = 0;
  for (const auto& flat : oracle::all_vectors(n * n, p)) {
    std::vector<std::vector<Int>> rows(n, std::vector<Int>(n));
    for (std::size_t i = 0; i < n * n; ++i) rows[i / n][i % n] = flat[i];
    if (oracle::det_expand(rows) % p == 0) continue;
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) {
      Int d = 0;
      for (std::size_t i = 0; i < n; ++i) d += a.del()(0, i) * rows[i][j];
      ok = (d - a.del()(0, j)) % p == 0;
    }
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = i + 1; j < n && ok; ++j) {
        Int s = 0;
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t l = 0; l < n; ++l) s += rows[k][i] * a.lambda()(k, l) * rows[l][j];
        ok = (s - a.lambda()(i, j)) % p == 0;
      }
    if (ok) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("symplectic generators") {
  Ring f2 = Ring::mod(2), f3 = Ring::mod(3);
  CHECK(enumerate_group(sp_generators(1, f2), 2, f2).size() == 6);
  CHECK(enumerate_group(sp_generators(2, f2), 4, f2).size() == 720);
  CHECK(enumerate_group(sp_generators(1, f3), 2, f3).size() == 24);
  CHECK(sp_order(1, 2) == 6);
  CHECK(sp_order(2, 2) == 720);
  CHECK(sp_order(1, 3) == 24);
  CHECK(sp_order(2, 3) == 51840);
  for (const auto& t : sp_generators(3, f2)) CHECK((t * t).is_identity());
  FormedSpace h = hyperbolic(2, f3);
  for (const auto& t : sp_generators(2, f3)) CHECK(morphism_defect(h, h, t).empty());
  CHECK_THROWS_AS(sp_generators(0, f2), Error);
}

TEST_CASE("automorphism groups of X powers") {
  Ring f2 = Ring::mod(2), f3 = Ring::mod(3);
  const std::uint64_t f2_orders[] = {1, 1, 2, 6, 48, 720, 23040};
  for (std::size_t n = 0; n <= 6; ++n) {
    AutGroup g = aut_x_power(n, f2);
    CHECK(*g.order == f2_orders[n]);
    CHECK(g.complete);
    CHECK(*g.order == x_power_aut_order(n, 2));
  }
  const std::uint64_t f3_orders[] = {1, 1, 3, 24, 648, 51840};
  for (std::size_t n = 0; n <= 5; ++n) CHECK(*aut_x_power(n, f3).order == f3_orders[n]);
  CHECK(aut_group(x_power(1, f2)).order == std::uint64_t(1));
  CHECK_THROWS_AS(aut_x_power(3, Ring::mod(4)), Error);
  CHECK_THROWS_AS(aut_group(x_power(2, Ring::integers())), Error);
  CHECK_THROWS_AS(aut_x_power(6, f3, true, 1000), Error);
}

TEST_CASE("enumerated groups are closed and fix v_n") {
  for (const Ring& r : {Ring::mod(2), Ring::mod(3)}) {
    for (std::size_t n : {3, 4, 5}) {
      if (r.modulus() == 3 && n == 5) continue;
      AutGroup g = aut_x_power(n, r);
      const auto& el = *g.elements;
      std::set<std::vector<Int>> set;
      auto key = [&](const Mat& m) {
        std::vector<Int> k;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) k.push_back(m(i, j));
        return k;
      };
      for (const auto& m : el) set.insert(key(m));
      CHECK(set.size() == el.size());
      std::mt19937_64 rng(n);
      Vec v = characteristic_vector(n, r);
      for (auto& c : v) c = r.reduce(c);
      for (int s = 0; s < 40; ++s) {
        const Mat& a = el[rng() % el.size()];
        const Mat& b = el[rng() % el.size()];
        CHECK(set.count(key(a * b)));
        CHECK(set.count(key(inverse(a))));
        CHECK(morphism_defect(g.space, g.space, a).empty());
        if (n % 2 == 1) CHECK(a.apply(v) == v);
      }
      // stabilization phi -> phi # id_X is injective
      std::set<std::vector<Int>> stab;
      for (const auto& m : el) {
        Mat s = block_diag(m, Mat::identity(r, 1));
        std::vector<Int> k;
        for (std::size_t i = 0; i <= n; ++i)
          for (std::size_t j = 0; j <= n; ++j) k.push_back(s(i, j));
        stab.insert(k);
        CHECK(morphism_defect(x_power(n + 1, r), x_power(n + 1, r), s).empty());
      }
      CHECK(stab.size() == el.size());
    }
  }
}

TEST_CASE("group orders agree with brute force") {
  Ring f2 = Ring::mod(2), f3 = Ring::mod(3);
  CHECK(brute_force_aut_order(x_power(3, f2)) == 6);
  CHECK(brute_force_aut_order(x_power(2, f3)) == 3);
  CHECK(brute_force_aut_order(x_power(4, f2)) == 48);
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 12; ++trial) {
    const Ring& r = trial % 2 ? f3 : f2;
    const std::size_t n = 1 + rng() % (r.modulus() == 2 ? 4 : 2);
    FormedSpace a = gen::random_space(r, n, rng);
    AutGroup g = aut_group(a);
    CHECK(g.complete);
    CHECK(*g.order == brute_force_aut_order(a));
    CHECK(enumerate_group(g.generators, n, r).size() == *g.order);
    for (const auto& m : g.generators) CHECK(morphism_defect(a, a, m).empty());
  }
}

TEST_CASE("orbits on non-separating arcs") {
  Ring f2 = Ring::mod(2);
  auto o5 = orbit_nonseparating(x_power(5, f2));
  REQUIRE(o5.size() == 1);
  CHECK(o5[0].size() == 15);
  auto o3 = orbit_nonseparating(x_power(3, f2));
  REQUIRE(o3.size() == 1);
  CHECK(o3[0].size() == 3);
  // the only arc of X has lambda(a, -) = 0, so it is separating
  CHECK_FALSE(is_nonseparating(Vec{1}, x_power(1, f2)));
  CHECK(orbit_nonseparating(x_power(1, f2)).empty());
  for (std::size_t n = 3; n <= 6; ++n) CHECK(orbit_nonseparating(x_power(n, f2)).size() == 1);
  // orbits partition the non-separating arcs, each listed from its least element
  FormedSpace a(rows(f2, {{0, 1, 0}, {1, 0, 0}, {0, 0, 0}}), rows(f2, {{1, 0, 1}}));
  auto orbits = orbit_nonseparating(a);
  std::size_t total = 0;
  for (const auto& o : orbits) {
    total += o.size();
    CHECK(std::is_sorted(o.begin(), o.end()));
  }
  std::size_t arcs = 0;
  for (const auto& v : oracle::all_vectors(3, 2))
    if (is_arc(v, a) && is_nonseparating(v, a)) ++arcs;
  CHECK(total == arcs);
}

TEST_CASE("stabilization square") {
  Ring f2 = Ring::mod(2), f3 = Ring::mod(3);
  SquareCheck c1 = stabilization_square_check(1, f2, 6);
  CHECK(c1.ok);
  CHECK(c1.checked >= 6);
  CHECK(stabilization_square_check(2, f2, 50, 1).ok);
  CHECK(stabilization_square_check(1, f3, 24).ok);
  CHECK(stabilization_square_check(Mat::identity(f2, 5)).ok);
  CHECK(stabilization_square_check(Mat::identity(Ring::integers(), 3)).ok);
  // not an automorphism
  CHECK_FALSE(stabilization_square_check(rows(f2, {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}})).ok);
}
