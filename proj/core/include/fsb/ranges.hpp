#pragma once

#include <optional>
#include <string>

#include "fsb/ring.hpp"

namespace fsb {

struct RangeQuery {
  std::size_t n = 0;
  Ring ring = Ring::integers();
  std::optional<std::size_t> coefficient_degree;  // r; absent for constant coefficients
};

// Degrees i in which a stabilization map is known to be epi / mono / iso.
struct DegreeRange {
  enum class Kind { Empty, UpTo, All };
  Kind kind = Kind::Empty;
  int max_degree = -1;  // meaningful for UpTo

  static DegreeRange up_to(long bound);  // Empty when bound < 0
  static DegreeRange all() { return {Kind::All, -1}; }
  bool contains(int i) const { return kind == Kind::All || (kind == Kind::UpTo && i >= 0 && i <= max_degree); }
  std::string to_string() const;
  bool operator==(const DegreeRange&) const = default;
};

struct StabilityRanges {
  int c = 0;
  DegreeRange epi;
  DegreeRange mono_or_iso;
  // "mono" for constant coefficients, "iso" for degree-r coefficients
  std::string second_kind;
};

// c = 0 over a PID and 2 usr + 2 otherwise. Constant coefficients: epi for
// i <= (n - c) / 3, mono for i <= (n - c - 3) / 3 when n is odd and in all
// degrees when n is even. Degree r: epi for i <= (n - c - 3r + 1) / 3, iso
// for i <= (n - c - 3r - 2) / 3. Floors throughout; n = 0 has no
// stabilization map into it and gets empty ranges.
StabilityRanges stability_ranges(const RangeQuery& q);

}  // namespace fsb
