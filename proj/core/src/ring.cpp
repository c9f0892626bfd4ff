#include "fsb/ring.hpp"

#include <cctype>
#include <limits>

#include "fsb/errors.hpp"

namespace fsb {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int gcdext(const Int& a, const Int& b, Int& s, Int& t) {
  Int g;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

bool fits_i64(const Int& x) { return mpz_fits_slong_p(x.get_mpz_t()) != 0; }

std::int64_t to_i64(const Int& x) {
  if (!fits_i64(x)) fail(ErrorCode::InvalidArgument, "integer does not fit in 64 bits: " + x.get_str());
  return x.get_si();
}

Ring::Ring(std::int64_t m) : modulus_(m) {
  if (m != 0) primes_ = fsb::prime_factors(m);
}

Ring Ring::integers() { return Ring(0); }

Ring Ring::mod(std::int64_t m) {
  if (m < 2) fail(ErrorCode::InvalidArgument, "modulus must be at least 2, got " + std::to_string(m));
  return Ring(m);
}

bool Ring::is_pid() const { return is_integers() || (primes_.size() == 1 && primes_[0] == modulus_); }

Int Ring::reduce(const Int& x) const {
  if (is_integers()) return x;
  Int r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(modulus_));
  return r;
}

bool Ring::is_unit(const Int& x) const {
  if (is_integers()) return x == 1 || x == -1;
  return gcd(reduce(x), Int(modulus_)) == 1;
}

Int Ring::inverse(const Int& x) const {
  if (is_integers()) {
    if (x == 1 || x == -1) return x;
    fail(ErrorCode::NotInvertible, x.get_str() + " is not a unit in Z");
  }
  Int r;
  Int m(modulus_);
  if (mpz_invert(r.get_mpz_t(), reduce(x).get_mpz_t(), m.get_mpz_t()) == 0)
    fail(ErrorCode::NotInvertible, x.get_str() + " is not a unit in " + name());
  return reduce(r);
}

bool Ring::divides(const Int& a, const Int& b) const {
  if (is_integers()) {
    if (sgn(a) == 0) return sgn(b) == 0;
    return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0;
  }
  Int g = gcd(reduce(a), Int(modulus_));
  return mpz_divisible_p(reduce(b).get_mpz_t(), g.get_mpz_t()) != 0;
}

Int Ring::quotient(const Int& b, const Int& a) const {
  if (!divides(a, b)) fail(ErrorCode::InvalidArgument, a.get_str() + " does not divide " + b.get_str());
  if (is_integers()) {
    if (sgn(a) == 0) return Int(0);
    Int q;
    mpz_divexact(q.get_mpz_t(), b.get_mpz_t(), a.get_mpz_t());
    return q;
  }
  Int ar = reduce(a), br = reduce(b), m(modulus_);
  Int g = gcd(ar, m);
  Int mm = m / g;
  if (mm == 1) return Int(0);
  Int a1 = ar / g, b1 = br / g, inv;
  mpz_invert(inv.get_mpz_t(), a1.get_mpz_t(), mm.get_mpz_t());
  return reduce(b1 * inv);
}

Int Ring::normalize(const Int& x) const {
  if (is_integers()) return abs(x);
  Int g = gcd(reduce(x), Int(modulus_));
  return g == modulus_ ? Int(0) : g;
}

Int Ring::unit_part(const Int& x) const {
  if (is_integers()) return sgn(x) < 0 ? Int(-1) : Int(1);
  Int g = normalize(x);
  if (sgn(g) == 0) return Int(1);
  Int m(modulus_);
  Int mm = m / g;
  Int u = reduce(x) / g;
  while (gcd(u, m) != 1) u += mm;
  return reduce(u);
}

Int Ring::ideal_gcd(const std::vector<Int>& elems) const {
  Int g = 0;
  for (const auto& e : elems) g = gcd(g, reduce(e));
  return normalize(g);
}

std::string Ring::name() const { return is_integers() ? "Z" : "Z/" + std::to_string(modulus_); }

RingProfile ring_profile(const Ring& r) {
  return RingProfile{r.sr_bound(), r.usr_bound(), r.is_pid(), r.characteristic()};
}

Ring parse_ring(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t == "Z" || t == "ZZ") return Ring::integers();
  std::string digits;
  for (const char* prefix : {"Zmod:", "Zmod", "Z/", "F", "GF"}) {
    std::string p(prefix);
    if (t.rfind(p, 0) == 0) {
      digits = t.substr(p.size());
      break;
    }
  }
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    fail(ErrorCode::InvalidArgument, "cannot parse ring '" + text + "'");
  std::int64_t m = std::stoll(digits);
  if ((t[0] == 'F' || t[0] == 'G') && !is_prime(m))
    fail(ErrorCode::InvalidArgument, "field size must be prime in '" + text + "'");
  return Ring::mod(m);
}

}  // namespace fsb
