#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fsb/formed.hpp"

namespace fsb {

inline constexpr std::uint64_t kDefaultGroupBudget = 2'000'000;

struct AutGroup {
  FormedSpace space;
  std::vector<Mat> generators;
  std::optional<std::uint64_t> order;
  std::optional<std::vector<Mat>> elements;
  // "x-power closure", "exhaustive" or "transvection closure"
  std::string method;
  // false when the generators are only known to span a subgroup
  bool complete = true;
};

// Transvections x -> x + lambda(x, v) v on H^g for v in
// {e_i, f_i, e_i + e_j, e_i + f_j, f_i + f_j}.
std::vector<Mat> sp_generators(std::size_t g, const Ring& f);
std::uint64_t sp_order(std::size_t g, std::uint64_t q);
// |Sp_2g(q)| for n = 2g + 1 and |Sp_2g(q)| / (q^2g - 1) for n = 2g.
std::uint64_t x_power_aut_order(std::size_t n, std::uint64_t q);

// x -> x + lambda(x, v) v
Mat transvection(const FormedSpace& a, const Vec& v);

// Closure of the generators under products, capped at budget elements.
std::vector<Mat> enumerate_group(const std::vector<Mat>& generators, std::size_t n, const Ring& r,
                                 std::uint64_t budget = kDefaultGroupBudget);

AutGroup aut_x_power(std::size_t n, const Ring& f, bool enumerate = true, std::uint64_t budget = kDefaultGroupBudget);
AutGroup aut_group(const FormedSpace& a, std::uint64_t budget = kDefaultGroupBudget);

// Orbits of Aut(a) on non-separating arcs; each orbit sorted, orbits sorted
// by their least element.
std::vector<std::vector<Vec>> orbit_nonseparating(const FormedSpace& a, std::uint64_t budget = kDefaultGroupBudget);

struct SquareCheck {
  bool ok = true;
  std::size_t checked = 0;
  std::string failure;
};

// For phi in Aut(X^(2g+1)): phi # id_(X^2) fixes the hyperbolic pair
// e = v - x_(2g+2), f = x_(2g+2) - x_(2g+3) and equals phi transported to
// the complement of <e, f> plus the identity on <e, f>. Checks all
// generators, then `samples` random group elements (all of them when the
// group has at most `samples` elements).
SquareCheck stabilization_square_check(std::size_t g, const Ring& f, std::size_t samples, std::uint64_t seed = 0,
                                       std::uint64_t budget = kDefaultGroupBudget);
SquareCheck stabilization_square_check(const Mat& phi);

}  // namespace fsb
