#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fsb/classify.hpp"
#include "fsb/complexes.hpp"
#include "fsb/errors.hpp"
#include "fsb/genus.hpp"
#include "fsb/groups.hpp"
#include "fsb/io.hpp"
#include "fsb/ranges.hpp"
#include "fsb/suites.hpp"

using namespace fsb;

namespace {

struct Common {
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;  // 0 means per-command default
  std::string out;
  bool csv = false;
};

// A space from a JSON file, or X^n over --ring.
struct SpaceArg {
  std::string file;
  std::optional<std::size_t> x_power;
  std::string ring = "Z";

  void add(CLI::App* app, bool positional = true) {
    if (positional) app->add_option("file", file, "formed space JSON")->check(CLI::ExistingFile);
    app->add_option("--x-power", x_power, "use X^n");
    app->add_option("--ring", ring, "ring for --x-power: Z, Zmod:m, F2, ...");
  }

  FormedSpace get() const {
    if (x_power) return fsb::x_power(*x_power, parse_ring(ring));
    if (file.empty()) fail(ErrorCode::InvalidArgument, "give a JSON file or --x-power");
    return space_from_json(read_json(file));
  }

  static json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::InvalidArgument, "cannot open " + path);
    try {
      return json::parse(in);
    } catch (const json::exception& e) {
      fail(ErrorCode::InvalidArgument, path + ": " + e.what());
    }
  }
};

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(c.out);
  if (!f) fail(ErrorCode::InvalidArgument, "cannot write " + c.out);
  f << text;
  if (text.empty() || text.back() != '\n') f << '\n';
}

void emit(const Common& c, const json& j) { emit(c, j.dump(2)); }

std::uint64_t or_default(std::uint64_t b, std::uint64_t d) { return b == 0 ? d : b; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fsb: formed spaces with boundary"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--seed", common.seed, "seed for randomized checks");
  app.add_option("--budget", common.budget, "cap on enumeration sizes");
  app.add_option("--out", common.out, "write output here instead of stdout");
  app.add_flag("--csv", common.csv, "CSV table instead of JSON where supported");
  int status = 0;

  auto* classify = app.add_subcommand("classify", "form data and base change to the standard model");
  SpaceArg classify_in;
  classify_in.add(classify);
  classify->callback([&] {
    Reduction red = reduce_to_standard(classify_in.get());
    emit(common, json{{"form_data", to_json(red.data)},
                      {"base_change", to_json(red.witness.matrix())},
                      {"witness", to_json(red.witness)}});
  });

  auto* iso = app.add_subcommand("iso", "isomorphism witness or null");
  std::string iso_a, iso_b;
  iso->add_option("a", iso_a)->required()->check(CLI::ExistingFile);
  iso->add_option("b", iso_b)->required()->check(CLI::ExistingFile);
  iso->callback([&] {
    auto w = is_isomorphic(space_from_json(SpaceArg::read_json(iso_a)), space_from_json(SpaceArg::read_json(iso_b)));
    emit(common, w ? to_json(*w) : json(nullptr));
  });

  auto* genus = app.add_subcommand("genus", "hyperbolic and arc genus");
  SpaceArg genus_in;
  genus_in.add(genus);
  genus->callback([&] { emit(common, to_json(arc_genus(genus_in.get()))); });

  auto* braid = app.add_subcommand("braid", "braiding X^n # X^m -> X^m # X^n");
  std::size_t bn = 1, bm = 1;
  std::string bring = "Z";
  braid->add_option("--n", bn)->required();
  braid->add_option("--m", bm)->required();
  braid->add_option("--ring", bring);
  braid->callback([&] {
    WitnessIso w = braid_matrix(bn, bm, parse_ring(bring));
    emit(common, to_json(w));
    if (!w.verify()) status = 1;
  });

  auto* complex = app.add_subcommand("complex", "arc complex f-vector and reduced homology");
  SpaceArg cx_in;
  cx_in.add(complex);
  std::string kind_text = "D";
  std::size_t max_dim = 2;
  bool homology = false;
  complex->add_option("--kind", kind_text, "Aalg, B or D");
  complex->add_option("--max-dim", max_dim, "largest simplex dimension built");
  complex->add_flag("--homology", homology, "compute reduced homology and check the predicted bound");
  complex->callback([&] {
    FormedSpace a = cx_in.get();
    ComplexKind kind = parse_complex_kind(kind_text);
    const std::uint64_t b = or_default(common.budget, kDefaultEnumerationBudget);
    if (!homology) {
      SimplicialComplex cx = build_complex(a, kind, max_dim, b);
      emit(common, json{{"kind", to_string(kind)}, {"ring", a.ring().name()}, {"dim_cap", max_dim}, {"f_vector", cx.f_vector()}});
      return;
    }
    HomologyReport h = connectivity_report(a, kind, max_dim, b);
    if (common.csv) emit(common, homology_csv(h));
    else emit(common, to_json(h));
    if (!h.bound_met) status = 1;
  });

  auto* wcount = app.add_subcommand("wcount", "ordered D-simplices against automorphism cosets");
  std::size_t wn = 5, wp = 0;
  std::string wring = "Zmod:2";
  wcount->add_option("--n", wn)->required();
  wcount->add_option("--p", wp)->required();
  wcount->add_option("--ring", wring);
  wcount->callback([&] {
    CountCheck c = destabilization_count_check(wn, wp, parse_ring(wring), or_default(common.budget, kDefaultEnumerationBudget));
    emit(common, to_json(c));
    if (!c.equal) status = 1;
  });

  auto* aut = app.add_subcommand("aut", "automorphism group order and arc orbits");
  SpaceArg aut_in;
  aut_in.add(aut);
  aut->callback([&] {
    FormedSpace a = aut_in.get();
    const std::uint64_t b = or_default(common.budget, kDefaultGroupBudget);
    json j = to_json(aut_group(a, b));
    json orbits = json::array();
    for (const auto& o : orbit_nonseparating(a, b))
      orbits.push_back(json{{"size", o.size()}, {"representative", to_json(o.front())}});
    j["orbits"] = orbits;
    j["transitive"] = orbits.size() == 1;
    emit(common, j);
  });

  auto* ranges = app.add_subcommand("ranges", "stability ranges for Sp-type groups of X^n");
  std::vector<std::size_t> rn;
  std::string rring = "Z";
  std::optional<std::size_t> rr;
  ranges->add_option("--n", rn, "one or more n")->required();
  ranges->add_option("--ring", rring);
  ranges->add_option("--r", rr, "coefficient degree");
  ranges->callback([&] {
    std::vector<std::pair<RangeQuery, StabilityRanges>> rows;
    for (std::size_t n : rn) {
      RangeQuery q{n, parse_ring(rring), rr};
      rows.emplace_back(q, stability_ranges(q));
    }
    if (common.csv) {
      emit(common, ranges_csv(rows));
      return;
    }
    json arr = json::array();
    for (const auto& [q, s] : rows) arr.push_back(json{{"query", to_json(q)}, {"ranges", to_json(s)}});
    emit(common, rows.size() == 1 ? arr[0] : arr);
  });

  auto* suite = app.add_subcommand("suite", "run a named batch of checks");
  std::string suite_name;
  suite->add_option("name", suite_name)->required()->check(CLI::IsMember(suite_names()));
  suite->callback([&] {
    SuiteReport rep = run_suite(suite_name, common.seed, or_default(common.budget, kDefaultEnumerationBudget));
    emit(common, rep.to_json());
    if (!rep.passed()) status = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Error& e) {
    std::cerr << "fsb: " << e.what() << '\n';
    return 2;
  }
  return status;
}
