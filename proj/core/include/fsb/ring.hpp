#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fsb {

using Int = mpz_class;

// Coefficient ring: the integers or Z/m. Elements are plain Ints kept in
// canonical form (0 <= x < m for Z/m, any integer for Z).
class Ring {
 public:
  static Ring integers();
  static Ring mod(std::int64_t m);

  bool is_integers() const { return modulus_ == 0; }
  bool is_finite() const { return modulus_ != 0; }
  // 0 for the integers.
  std::int64_t modulus() const { return modulus_; }
  std::int64_t characteristic() const { return modulus_; }
  bool is_pid() const;
  bool is_field() const { return is_finite() && is_pid(); }
  int sr_bound() const { return is_integers() ? 2 : 1; }
  int usr_bound() const { return is_integers() ? 2 : 1; }

  // Distinct primes dividing m; empty for the integers.
  const std::vector<std::int64_t>& prime_factors() const { return primes_; }

  Int reduce(const Int& x) const;
  Int reduce(long x) const { return reduce(Int(x)); }
  bool is_zero(const Int& x) const { return sgn(reduce(x)) == 0; }
  bool is_one(const Int& x) const { return reduce(x) == 1; }
  bool is_unit(const Int& x) const;
  // Throws NotInvertible for non-units.
  Int inverse(const Int& x) const;
  // a | b in the ring.
  bool divides(const Int& a, const Int& b) const;
  // Some q with a*q = b; requires divides(a, b).
  Int quotient(const Int& b, const Int& a) const;
  // Canonical generator of the principal ideal (x).
  Int normalize(const Int& x) const;
  // A unit u with u * normalize(x) = x.
  Int unit_part(const Int& x) const;
  Int ideal_gcd(const std::vector<Int>& elems) const;

  Int add(const Int& a, const Int& b) const { return reduce(a + b); }
  Int sub(const Int& a, const Int& b) const { return reduce(a - b); }
  Int mul(const Int& a, const Int& b) const { return reduce(a * b); }
  Int neg(const Int& a) const { return reduce(-a); }

  std::string name() const;

  bool operator==(const Ring& o) const { return modulus_ == o.modulus_; }
  bool operator!=(const Ring& o) const { return modulus_ != o.modulus_; }

 private:
  explicit Ring(std::int64_t m);
  std::int64_t modulus_ = 0;
  std::vector<std::int64_t> primes_;
};

struct RingProfile {
  int sr = 0;
  int usr = 0;
  bool is_pid = false;
  std::int64_t characteristic = 0;

  bool operator==(const RingProfile&) const = default;
};

RingProfile ring_profile(const Ring& r);

// Parses "Z", "Zmod:6", "Zmod6", "F2", "Z/6".
Ring parse_ring(const std::string& text);

bool is_prime(std::int64_t n);
std::vector<std::int64_t> prime_factors(std::int64_t n);

// Integer helpers shared across modules.
Int gcd(const Int& a, const Int& b);
// Returns g = gcd(a,b) >= 0 and sets s,t with s*a + t*b = g.
Int gcdext(const Int& a, const Int& b, Int& s, Int& t);
std::int64_t to_i64(const Int& x);
bool fits_i64(const Int& x);

}  // namespace fsb
