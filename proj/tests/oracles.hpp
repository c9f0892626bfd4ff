#pragma once
// Brute-force reference implementations used only by tests. None of these
// call into the library's elimination code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "fsb/matrix.hpp"

namespace oracle {

using fsb::Int;
using fsb::Mat;
using fsb::Ring;
using fsb::Vec;

// Cofactor expansion over Z (lifts of the entries).
inline Int det_expand(const std::vector<std::vector<Int>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  Int total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Int>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Int> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(a[i][j]);
      minor.push_back(row);
    }
    Int term = a[0][c] * det_expand(minor);
    total += (c % 2 == 0) ? term : Int(-term);
  }
  return total;
}

inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
    if (pos == k) {
      f(idx);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      idx[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
}

// gcd of all k x k minors of an integer matrix (determinantal divisor).
inline Int minor_gcd(const std::vector<std::vector<Int>>& a, std::size_t k) {
  const std::size_t r = a.size(), c = r ? a[0].size() : 0;
  Int g = 0;
  for_each_subset(r, k, [&](const std::vector<std::size_t>& rows) {
    for_each_subset(c, k, [&](const std::vector<std::size_t>& cols) {
      std::vector<std::vector<Int>> m(k, std::vector<Int>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m[i][j] = a[rows[i]][cols[j]];
      Int d = det_expand(m);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    });
  });
  return g;
}

// Invariant factors of an integer matrix from determinantal divisors.
inline std::vector<Int> invariant_factors_by_minors(const std::vector<std::vector<Int>>& a) {
  const std::size_t r = a.size(), c = r ? a[0].size() : 0;
  std::vector<Int> out;
  Int prev = 1;
  for (std::size_t k = 1; k <= std::min(r, c); ++k) {
    Int g = minor_gcd(a, k);
    if (g == 0) {
      out.push_back(0);
      prev = 0;
      continue;
    }
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

// All vectors of (Z/m)^n in lexicographic order.
inline std::vector<Vec> all_vectors(std::size_t n, std::int64_t m) {
  std::vector<Vec> out;
  Vec v(n, Int(0));
  while (true) {
    out.push_back(v);
    std::size_t i = 0;
    while (i < n) {
      v[i] += 1;
      if (v[i] < m) break;
      v[i] = 0;
      ++i;
    }
    if (i == n) break;
  }
  return out;
}

// A (k x n over Z/m) has a right inverse iff every e_i is in the image.
inline bool has_right_inverse_bruteforce(const Mat& a) {
  const std::int64_t m = a.ring().modulus();
  std::set<Vec> image;
  for (const auto& x : all_vectors(a.cols(), m)) image.insert(a.apply(x));
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (!image.count(fsb::unit_vector(a.rows(), i))) return false;
  return true;
}

inline Mat random_matrix(const Ring& r, std::size_t rows, std::size_t cols, std::mt19937_64& rng, long bound) {
  Mat a(r, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      a.set(i, j, Int(static_cast<long>(rng() % (2 * bound + 1)) - bound));
  return a;
}

inline Mat random_alternating(const Ring& r, std::size_t n, std::mt19937_64& rng, long bound) {
  Mat a(r, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Int v(static_cast<long>(rng() % (2 * bound + 1)) - bound);
      a.set(i, j, v);
      a.set(j, i, -v);
    }
  return a;
}

// Maximal number of mutually orthogonal hyperbolic pairs, by exhaustive
// depth-first search over (Z/m)^n. Only for tiny n and m.
inline std::size_t hyperbolic_genus_exhaustive(const Mat& lam) {
  const Ring& r = lam.ring();
  const std::size_t n = lam.rows();
  auto vecs = all_vectors(n, r.modulus());
  const std::size_t nv = vecs.size();
  const long m = r.modulus();
  std::vector<long> lv(n * n);
  for (std::size_t i = 0; i < n * n; ++i) lv[i] = lam(i / n, i % n).get_si();
  std::vector<long> row(nv * n);
  for (std::size_t a = 0; a < nv; ++a)
    for (std::size_t j = 0; j < n; ++j) {
      long t = 0;
      for (std::size_t i = 0; i < n; ++i) t += vecs[a][i].get_si() * lv[i * n + j];
      row[a * n + j] = t % m;
    }
  std::vector<long> gram(nv * nv);
  for (std::size_t a = 0; a < nv; ++a)
    for (std::size_t b = 0; b < nv; ++b) {
      long s = 0;
      for (std::size_t j = 0; j < n; ++j) s += row[a * n + j] * vecs[b][j].get_si();
      gram[a * nv + b] = ((s % m) + m) % m;
    }
  std::size_t best = 0;
  std::function<void(const std::vector<std::size_t>&, std::size_t)> rec = [&](const std::vector<std::size_t>& cand,
                                                                               std::size_t depth) {
    best = std::max(best, depth);
    if (2 * best >= n) return;
    for (std::size_t u : cand)
      for (std::size_t v : cand) {
        if (gram[u * nv + v] != 1 % m) continue;
        std::vector<std::size_t> next;
        for (std::size_t w : cand)
          if (gram[u * nv + w] == 0 && gram[v * nv + w] == 0) next.push_back(w);
        rec(next, depth + 1);
        if (2 * best >= n) return;
      }
  };
  std::vector<std::size_t> all(nv);
  for (std::size_t i = 0; i < nv; ++i) all[i] = i;
  rec(all, 0);
  return best;
}

// Largest g with arcs a_1..a_g (del = 1) and lambda(a_i, a_j) = 1 for i < j,
// by plain depth-first search over (Z/m)^n.
inline std::size_t arc_genus_exhaustive(const Mat& lam, const Mat& del) {
  const Ring& r = lam.ring();
  const std::size_t n = lam.rows();
  const long m = r.modulus();
  std::vector<long> lv(n * n), dv(n);
  for (std::size_t i = 0; i < n * n; ++i) lv[i] = lam(i / n, i % n).get_si();
  for (std::size_t i = 0; i < n; ++i) dv[i] = del(0, i).get_si();
  std::vector<std::vector<long>> arcs;
  for (const auto& v : all_vectors(n, m)) {
    long s = 0;
    for (std::size_t i = 0; i < n; ++i) s += dv[i] * v[i].get_si();
    if (((s % m) + m) % m == 1 % m) {
      std::vector<long> a(n);
      for (std::size_t i = 0; i < n; ++i) a[i] = v[i].get_si();
      arcs.push_back(a);
    }
  }
  const std::size_t na = arcs.size();
  std::vector<char> one(na * na);
  for (std::size_t a = 0; a < na; ++a) {
    std::vector<long> row(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) row[j] += arcs[a][i] * lv[i * n + j];
    for (std::size_t b = 0; b < na; ++b) {
      long s = 0;
      for (std::size_t j = 0; j < n; ++j) s += row[j] * arcs[b][j];
      one[a * na + b] = ((s % m) + m) % m == 1 % m;
    }
  }
  std::size_t best = 0;
  std::function<void(const std::vector<std::size_t>&, std::size_t)> rec = [&](const std::vector<std::size_t>& cand,
                                                                               std::size_t depth) {
    best = std::max(best, depth);
    if (best >= n || depth + cand.size() <= best) return;
    for (std::size_t a : cand) {
      std::vector<std::size_t> next;
      for (std::size_t b : cand)
        if (one[a * na + b]) next.push_back(b);
      rec(next, depth + 1);
      if (best >= n) return;
    }
  };
  std::vector<std::size_t> all(na);
  for (std::size_t i = 0; i < na; ++i) all[i] = i;
  rec(all, 0);
  return best;
}

}  // namespace oracle
