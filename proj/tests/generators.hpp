#pragma once
// Seeded generators of test instances. These may use library routines; the
// independent reference computations live in oracles.hpp.

#include <random>

#include "fsb/classify.hpp"
#include "fsb/exactlin.hpp"
#include "fsb/formed.hpp"
#include "oracles.hpp"

namespace gen {

using fsb::FormData;
using fsb::FormedSpace;
using fsb::Int;
using fsb::Mat;
using fsb::Ring;
using fsb::Vec;

inline FormedSpace random_space(const Ring& r, std::size_t n, std::mt19937_64& rng, long bound = 3) {
  return FormedSpace(oracle::random_alternating(r, n, rng, bound), oracle::random_matrix(r, 1, n, rng, bound));
}

// x -> x + lambda(x, v) v; an automorphism whenever del(v) = 0.
inline Mat transvection(const FormedSpace& a, const Vec& v) {
  const Ring& r = a.ring();
  Mat t = Mat::identity(r, a.rank());
  Vec w = a.lambda().apply(v);
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = 0; j < a.rank(); ++j) t.set(i, j, t(i, j) + v[i] * w[j]);
  return t;
}

// Product of transvections along random vectors of ker del.
inline Mat random_automorphism(const FormedSpace& a, std::mt19937_64& rng, int steps) {
  const Ring& r = a.ring();
  Mat phi = Mat::identity(r, a.rank());
  if (a.rank() == 0) return phi;
  Mat k = fsb::kernel_basis(a.del());
  if (k.cols() == 0) return phi;
  for (int s = 0; s < steps; ++s) {
    Vec coeff(k.cols());
    for (auto& c : coeff) c = Int(static_cast<long>(rng() % 5) - 2);
    phi = gen::transvection(a, k.apply(coeff)) * phi;
  }
  return phi;
}

// Random realizable form data over Z with n <= max_n and entries <= bound.
inline FormData random_form_data(std::mt19937_64& rng, std::size_t max_n = 8, long bound = 8) {
  FormData fd;
  fd.n = 1 + rng() % max_n;
  const std::size_t k = rng() % (fd.n / 2 + 1);
  fd.l = fd.n - 2 * k;
  long d = 1;
  for (std::size_t i = 0; i < k; ++i) {
    long next = d;
    for (int tries = 0; tries < 4; ++tries) {
      long cand = d * (1 + static_cast<long>(rng() % 3));
      if (cand <= bound) next = cand;
    }
    fd.d.push_back(Int(next));
    d = next;
  }
  auto divisors = [](long x) {
    std::vector<long> out;
    for (long t = 1; t <= x; ++t)
      if (x % t == 0) out.push_back(t);
    return out;
  };
  long prev = 0;
  for (std::size_t i = 0; i <= k; ++i) {
    long cur;
    if (i == 0) {
      cur = static_cast<long>(rng() % (bound + 1));
      if (k > 0 && rng() % 3 == 0) cur = 1;
    } else if (i < k) {
      long ratio = fd.d[i].get_si() / fd.d[i - 1].get_si();
      auto dv = divisors(ratio);
      cur = prev * dv[rng() % dv.size()];
      if (cur > bound) cur = prev;
    } else {
      cur = fd.l == 0 ? 0 : prev * static_cast<long>(rng() % 3);
      if (cur > bound) cur = prev;
    }
    fd.delta.push_back(Int(cur));
    prev = cur;
  }
  return fd;
}

}  // namespace gen
