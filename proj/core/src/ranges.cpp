#include "fsb/ranges.hpp"

namespace fsb {

namespace {

long floor_div3(long a) { return a >= 0 ? a / 3 : -((-a + 2) / 3); }

}  // namespace

DegreeRange DegreeRange::up_to(long bound) {
  if (bound < 0) return {};
  return {Kind::UpTo, static_cast<int>(bound)};
}

std::string DegreeRange::to_string() const {
  switch (kind) {
    case Kind::Empty:
      return "empty";
    case Kind::All:
      return "all i";
    case Kind::UpTo:
      return "i <= " + std::to_string(max_degree);
  }
  return "?";
}

StabilityRanges stability_ranges(const RangeQuery& q) {
  RingProfile prof = ring_profile(q.ring);
  StabilityRanges out;
  out.c = prof.is_pid ? 0 : 2 * prof.usr + 2;
  out.second_kind = q.coefficient_degree ? "iso" : "mono";
  if (q.n == 0) return out;
  const long n = static_cast<long>(q.n), c = out.c;
  if (!q.coefficient_degree) {
    out.epi = DegreeRange::up_to(floor_div3(n - c));
    out.mono_or_iso = n % 2 == 0 ? DegreeRange::all() : DegreeRange::up_to(floor_div3(n - c - 3));
  } else {
    const long r = static_cast<long>(*q.coefficient_degree);
    out.epi = DegreeRange::up_to(floor_div3(n - c - 3 * r + 1));
    out.mono_or_iso = DegreeRange::up_to(floor_div3(n - c - 3 * r - 2));
  }
  return out;
}

}  // namespace fsb
