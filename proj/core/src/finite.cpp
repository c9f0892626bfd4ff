#include "fsb/finite.hpp"

#include <numeric>

#include "fsb/errors.hpp"

namespace fsb::fin {

SmallRing::SmallRing(const Ring& r) {
  if (!r.is_finite()) fail(ErrorCode::InfiniteRing, "enumeration requires a finite ring");
  if (r.modulus() > 46340) fail(ErrorCode::BudgetExceeded, "modulus too large for enumeration");
  m = static_cast<std::int32_t>(r.modulus());
  for (auto p : r.prime_factors()) primes.push_back(static_cast<std::int32_t>(p));
}

bool SmallRing::is_unit(std::int32_t x) const { return std::gcd(x, m) == 1; }

FiniteSpace::FiniteSpace(const FormedSpace& a) : ring_(a.ring()), n_(a.rank()), lam_(n_ * n_), del_(n_) {
  for (std::size_t i = 0; i < n_; ++i) {
    del_[i] = static_cast<std::int32_t>(a.del()(0, i).get_si());
    for (std::size_t j = 0; j < n_; ++j) lam_[i * n_ + j] = static_cast<std::int32_t>(a.lambda()(i, j).get_si());
  }
}

std::int32_t FiniteSpace::pair(const std::int32_t* a, const std::int32_t* b) const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    if (a[i] == 0) continue;
    std::int64_t t = 0;
    for (std::size_t j = 0; j < n_; ++j) t += static_cast<std::int64_t>(lam_[i * n_ + j]) * b[j];
    s += a[i] * (t % ring_.m);
  }
  return ring_.reduce(s);
}

std::int32_t FiniteSpace::boundary(const std::int32_t* a) const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < n_; ++i) s += static_cast<std::int64_t>(del_[i]) * a[i];
  return ring_.reduce(s);
}

void FiniteSpace::pairing_row(const std::int32_t* a, std::int32_t* out) const {
  for (std::size_t j = 0; j < n_; ++j) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < n_; ++i) s += static_cast<std::int64_t>(a[i]) * lam_[i * n_ + j];
    out[j] = ring_.reduce(s);
  }
}

std::uint64_t space_size(std::size_t n, std::int32_t m, std::uint64_t budget) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= static_cast<std::uint64_t>(m);
    if (total > budget)
      fail(ErrorCode::BudgetExceeded, std::to_string(m) + "^" + std::to_string(n) + " exceeds the enumeration budget " +
                                          std::to_string(budget));
  }
  return total;
}

void decode(std::uint64_t code, std::size_t n, std::int32_t m, std::int32_t* out) {
  for (std::size_t i = n; i-- > 0;) {
    out[i] = static_cast<std::int32_t>(code % static_cast<std::uint64_t>(m));
    code /= static_cast<std::uint64_t>(m);
  }
}

std::uint64_t encode(const std::int32_t* v, std::size_t n, std::int32_t m) {
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < n; ++i) code = code * static_cast<std::uint64_t>(m) + static_cast<std::uint64_t>(v[i]);
  return code;
}

std::size_t rank_mod_p(std::vector<std::int32_t> mat, std::size_t k, std::size_t n, std::int32_t p) {
  for (auto& x : mat) x %= p;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n && rank < k; ++c) {
    std::size_t piv = rank;
    while (piv < k && mat[piv * n + c] == 0) ++piv;
    if (piv == k) continue;
    if (piv != rank)
      for (std::size_t j = 0; j < n; ++j) std::swap(mat[piv * n + j], mat[rank * n + j]);
    // inverse of the pivot by Fermat
    std::int64_t inv = 1, base = mat[rank * n + c], e = p - 2;
    while (e > 0) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    for (std::size_t i = rank + 1; i < k; ++i) {
      std::int64_t f = mat[i * n + c] * inv % p;
      if (f == 0) continue;
      for (std::size_t j = c; j < n; ++j) {
        std::int64_t v = (mat[i * n + j] - f * mat[rank * n + j]) % p;
        mat[i * n + j] = static_cast<std::int32_t>(v < 0 ? v + p : v);
      }
    }
    ++rank;
  }
  return rank;
}

bool rows_unimodular(const std::vector<std::int32_t>& mat, std::size_t k, std::size_t n, const SmallRing& r) {
  if (k > n) return false;
  for (auto p : r.primes)
    if (rank_mod_p(mat, k, n, p) != k) return false;
  return true;
}

Vec to_vec(const std::int32_t* v, std::size_t n) {
  Vec out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = v[i];
  return out;
}

Row to_row(const Vec& v, const SmallRing& r) {
  Row out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Int x;
    mpz_fdiv_r_ui(x.get_mpz_t(), v[i].get_mpz_t(), static_cast<unsigned long>(r.m));
    out[i] = static_cast<std::int32_t>(x.get_si());
  }
  return out;
}

std::vector<Row> enumerate_arcs(const FiniteSpace& s, std::uint64_t budget) {
  const std::size_t n = s.rank();
  const std::uint64_t total = space_size(n, s.modulus(), budget);
  std::vector<Row> arcs;
  Row v(n);
  for (std::uint64_t code = 0; code < total; ++code) {
    decode(code, n, s.modulus(), v.data());
    if (s.boundary(v.data()) == 1 % s.modulus()) arcs.push_back(v);
  }
  return arcs;
}

}  // namespace fsb::fin
