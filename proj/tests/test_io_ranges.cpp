#include <doctest.h>

#include <random>

#include "fsb/classify.hpp"
#include "fsb/errors.hpp"
#include "fsb/io.hpp"
#include "fsb/ranges.hpp"
#include "fsb/suites.hpp"
#include "generators.hpp"

using namespace fsb;

namespace {

// floor((a) / 3) written out the long way
long floor3(long a) {
  long q = 0;
  if (a >= 0)
    while (3 * (q + 1) <= a) ++q;
  else
    while (3 * q > a) --q;
  return q;
}

}  // namespace

TEST_CASE("ranges: worked values") {
  Ring z = Ring::integers();
  StabilityRanges a = stability_ranges({12, z, std::nullopt});
  CHECK(a.c == 0);
  CHECK(a.epi == DegreeRange::up_to(4));
  CHECK(a.mono_or_iso == DegreeRange::all());
  CHECK(a.second_kind == "mono");

  StabilityRanges b = stability_ranges({12, z, 1});
  CHECK(b.epi == DegreeRange::up_to(3));
  CHECK(b.mono_or_iso == DegreeRange::up_to(2));
  CHECK(b.second_kind == "iso");

  for (const char* r : {"Z", "F2", "Zmod:6"}) {
    StabilityRanges e = stability_ranges({0, parse_ring(r), std::nullopt});
    CHECK(e.epi.kind == DegreeRange::Kind::Empty);
    CHECK(e.mono_or_iso.kind == DegreeRange::Kind::Empty);
  }
  CHECK(stability_ranges({7, parse_ring("Z/6"), std::nullopt}).c == 4);
  CHECK(stability_ranges({7, parse_ring("F3"), std::nullopt}).c == 0);
}

TEST_CASE("ranges: formula sweep against a hand floor") {
  for (const char* name : {"Z", "F2", "Z/4", "Z/6"}) {
    Ring r = parse_ring(name);
    const long c = r.is_pid() ? 0 : 4;
    for (std::size_t n = 1; n <= 40; ++n) {
      StabilityRanges s = stability_ranges({n, r, std::nullopt});
      const long n_ = static_cast<long>(n);
      CHECK(s.epi == DegreeRange::up_to(floor3(n_ - c)));
      CHECK(s.mono_or_iso == (n % 2 == 0 ? DegreeRange::all() : DegreeRange::up_to(floor3(n_ - c - 3))));
      for (long k = 0; k <= 5; ++k) {
        StabilityRanges t = stability_ranges({n, r, static_cast<std::size_t>(k)});
        CHECK(t.epi == DegreeRange::up_to(floor3(n_ - c - 3 * k + 1)));
        CHECK(t.mono_or_iso == DegreeRange::up_to(floor3(n_ - c - 3 * k - 2)));
        // iso range sits inside the epi range
        CHECK((t.mono_or_iso.kind == DegreeRange::Kind::Empty || t.epi.contains(t.mono_or_iso.max_degree)));
      }
    }
  }
}

TEST_CASE("io: spaces and form data survive a JSON round trip") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 50; ++t) {
    Ring r = t % 2 ? Ring::integers() : Ring::mod(2 + t % 5);
    FormedSpace a = gen::random_space(r, rng() % 6, rng, 4);
    CHECK(space_from_json(json::parse(to_json(a).dump())) == a);
  }
  std::mt19937_64 rng2(3);
  for (int t = 0; t < 50; ++t) {
    FormData fd = gen::random_form_data(rng2);
    CHECK(form_data_from_json(json::parse(to_json(fd).dump())) == fd);
  }
  Int big("123456789012345678901234567890");
  CHECK(to_json(big).is_string());
  CHECK(int_from_json(to_json(big)) == big);
  CHECK(int_from_json(to_json(Int(-7))) == -7);
  CHECK(space_from_json(json{{"ring", "Z/3"}, {"x_power", 4}}) == x_power(4, Ring::mod(3)));
}

TEST_CASE("io: malformed input is rejected") {
  CHECK_THROWS_AS(space_from_json(json::array()), Error);
  CHECK_THROWS_AS(space_from_json(json{{"ring", "Z"}, {"lambda", {{0, 1}, {-1, 0}}}}), Error);
  CHECK_THROWS_AS(space_from_json(json{{"ring", "Z"}, {"lambda", {{0, 1}, {-1, 0}}}, {"del", {1}}}), Error);
  // not alternating
  CHECK_THROWS_AS(space_from_json(json{{"ring", "Z"}, {"lambda", {{1, 1}, {-1, 0}}}, {"del", {1, 0}}}), Error);
}

TEST_CASE("io: csv tables") {
  std::vector<std::pair<RangeQuery, StabilityRanges>> rows;
  RangeQuery q{12, Ring::integers(), 1};
  rows.emplace_back(q, stability_ranges(q));
  std::string csv = ranges_csv(rows);
  CHECK(csv.find("12,Z,1,0,i <= 3,iso,i <= 2") != std::string::npos);
}

TEST_CASE("suites: reports are deterministic and honest about budgets") {
  SuiteReport a = run_suite("braid", 4, 1 << 20), b = run_suite("braid", 4, 1 << 20);
  CHECK(a.passed());
  CHECK(a.to_json() == b.to_json());
  CHECK(a.to_json()["first_failure"].is_null());
  SuiteReport c = run_suite("counting", 0, 1 << 20);
  CHECK(c.passed());
  bool saw_anchor = false;
  for (const auto& ch : c.checks)
    if (ch.inputs.contains("p") && ch.inputs["n"] == 5 && ch.inputs["p"] == 0)
      saw_anchor = ch.outputs["lhs"] == 15 && ch.outputs["rhs"] == 15;
  CHECK(saw_anchor);
  SuiteReport tiny = run_suite("connectivity", 0, 10);
  CHECK(tiny.skipped() > 0);
  CHECK(tiny.passed());
  CHECK_THROWS_AS(run_suite("nope", 0, 1), Error);
}
