#pragma once

// Small-integer representation of formed spaces over Z/m for enumeration
// work. Vectors are rows of int32 residues in [0, m).

#include <cstdint>
#include <vector>

#include "fsb/formed.hpp"

namespace fsb::fin {

using Row = std::vector<std::int32_t>;

struct SmallRing {
  std::int32_t m = 2;
  std::vector<std::int32_t> primes;

  explicit SmallRing(const Ring& r);
  std::int32_t reduce(std::int64_t x) const {
    std::int64_t v = x % m;
    return static_cast<std::int32_t>(v < 0 ? v + m : v);
  }
  bool is_unit(std::int32_t x) const;
};

class FiniteSpace {
 public:
  explicit FiniteSpace(const FormedSpace& a);

  const SmallRing& ring() const { return ring_; }
  std::int32_t modulus() const { return ring_.m; }
  std::size_t rank() const { return n_; }

  std::int32_t pair(const std::int32_t* a, const std::int32_t* b) const;
  std::int32_t boundary(const std::int32_t* a) const;
  // out = a^T lambda
  void pairing_row(const std::int32_t* a, std::int32_t* out) const;
  const Row& del() const { return del_; }

 private:
  SmallRing ring_;
  std::size_t n_;
  Row lam_, del_;
};

// m^n, or throws BudgetExceeded when above budget.
std::uint64_t space_size(std::size_t n, std::int32_t m, std::uint64_t budget);
void decode(std::uint64_t code, std::size_t n, std::int32_t m, std::int32_t* out);
std::uint64_t encode(const std::int32_t* v, std::size_t n, std::int32_t m);

// Rank of a k x n matrix (row-major) modulo a prime p.
std::size_t rank_mod_p(std::vector<std::int32_t> mat, std::size_t k, std::size_t n, std::int32_t p);
// Rows form a unimodular family over Z/m iff they are independent modulo
// every prime dividing m.
bool rows_unimodular(const std::vector<std::int32_t>& mat, std::size_t k, std::size_t n, const SmallRing& r);

Vec to_vec(const std::int32_t* v, std::size_t n);
Row to_row(const Vec& v, const SmallRing& r);

// All arcs (del(a) = 1) of the space, in increasing code order.
std::vector<Row> enumerate_arcs(const FiniteSpace& s, std::uint64_t budget);

}  // namespace fsb::fin
