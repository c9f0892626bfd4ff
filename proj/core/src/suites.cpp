#include "fsb/suites.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "fsb/classify.hpp"
#include "fsb/complexes.hpp"
#include "fsb/errors.hpp"
#include "fsb/exactlin.hpp"
#include "fsb/genus.hpp"
#include "fsb/groups.hpp"
#include "fsb/io.hpp"

namespace fsb {

bool SuiteReport::passed() const { return failures() == 0; }

std::size_t SuiteReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const SuiteCheck& c) { return !c.passed; }));
}

std::size_t SuiteReport::skipped() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const SuiteCheck& c) { return c.skipped; }));
}

json SuiteReport::to_json() const {
  json cs = json::array();
  json first = nullptr;
  for (const auto& c : checks) {
    json j{{"name", c.name}, {"provenance", c.provenance}, {"inputs", c.inputs}, {"outputs", c.outputs},
           {"passed", c.passed}, {"skipped", c.skipped}};
    if (c.skipped) j["skip_reason"] = c.skip_reason;
    if (!c.passed && first.is_null()) first = j;
    cs.push_back(j);
  }
  return json{{"suite", suite},        {"seed", seed},           {"budget", budget},       {"passed", passed()},
              {"failures", failures()}, {"skipped", skipped()}, {"checks", cs}, {"first_failure", first}};
}

std::vector<std::string> suite_names() { return {"braid", "classify", "genus", "connectivity", "counting", "cancellation"}; }

namespace {

using Rng = std::mt19937_64;

struct Runner {
  SuiteReport& rep;
  std::uint64_t budget;

  // body fills outputs and returns the verdict; errors count as failures
  // except BudgetExceeded, which marks the check skipped
  void check(const std::string& name, const std::string& provenance, json inputs,
             const std::function<bool(json&)>& body) {
    SuiteCheck c;
    c.name = name;
    c.provenance = provenance;
    c.inputs = std::move(inputs);
    c.outputs = json::object();
    try {
      c.passed = body(c.outputs);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::BudgetExceeded) {
        c.skipped = true;
        c.skip_reason = e.what();
      } else {
        c.passed = false;
        c.outputs["error"] = e.what();
      }
    }
    rep.checks.push_back(std::move(c));
  }
};

Mat random_matrix(const Ring& r, std::size_t rows, std::size_t cols, Rng& rng, long bound) {
  Mat a(r, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a.set(i, j, Int(static_cast<long>(rng() % (2 * bound + 1)) - bound));
  return a;
}

FormedSpace random_space(const Ring& r, std::size_t n, Rng& rng, long bound) {
  Mat lam(r, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Int v(static_cast<long>(rng() % (2 * bound + 1)) - bound);
      lam.set(i, j, v);
      lam.set(j, i, -v);
    }
  return FormedSpace(lam, random_matrix(r, 1, n, rng, bound));
}

// Transvections along ker del and braidings.
Mat random_x_automorphism(std::size_t n, const Ring& r, Rng& rng) {
  FormedSpace x = x_power(n, r);
  Mat phi = Mat::identity(r, n);
  if (n == 0) return phi;
  Mat k = kernel_basis(x.del());
  for (int step = 0; step < 4; ++step) {
    if (rng() % 3 == 0 || k.cols() == 0) {
      std::size_t a = rng() % (n + 1);
      phi = braid_block(a, n - a, r) * phi;
    } else {
      Vec c(k.cols());
      for (auto& x_ : c) x_ = Int(static_cast<long>(rng() % 3) - 1);
      phi = transvection(x, k.apply(c)) * phi;
    }
  }
  return phi;
}

FormData random_form_data(Rng& rng, std::size_t max_n, long bound) {
  FormData fd;
  fd.n = 1 + rng() % max_n;
  const std::size_t k = rng() % (fd.n / 2 + 1);
  fd.l = fd.n - 2 * k;
  long d = 1;
  for (std::size_t i = 0; i < k; ++i) {
    long next = d * (1 + static_cast<long>(rng() % 3));
    if (next > bound) next = d;
    fd.d.push_back(Int(next));
    d = next;
  }
  long prev = 0;
  for (std::size_t i = 0; i <= k; ++i) {
    long cur;
    if (i == 0) {
      cur = static_cast<long>(rng() % (bound + 1));
    } else if (i < k) {
      const long ratio = fd.d[i].get_si() / fd.d[i - 1].get_si();
      cur = prev * (rng() % 2 ? ratio : 1);
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

void braid_suite(Runner& run, Rng& rng) {
  for (const Ring& r : {Ring::integers(), Ring::mod(2), Ring::mod(3)}) {
    run.check("braid morphisms n + m <= 12", "the braiding X^n # X^m -> X^m # X^n preserves lambda and del",
              json{{"ring", r.name()}}, [&](json& out) {
                std::size_t count = 0;
                bool ok = true;
                for (std::size_t n = 0; n <= 12; ++n)
                  for (std::size_t m = 0; n + m <= 12; ++m) {
                    ok = ok && braid_matrix(n, m, r).verify();
                    ++count;
                  }
                out["verified"] = count;
                return ok;
              });
    run.check("Yang-Baxter on X^3", "(b # 1)(1 # b)(b # 1) = (1 # b)(b # 1)(1 # b)", json{{"ring", r.name()}},
              [&](json&) {
                Mat b = braid_block(1, 1, r), i1 = Mat::identity(r, 1);
                return block_diag(b, i1) * block_diag(i1, b) * block_diag(b, i1) ==
                       block_diag(i1, b) * block_diag(b, i1) * block_diag(i1, b);
              });
  }
  run.check("naturality of the braiding", "b o (phi # psi) = (psi # phi) o b for automorphisms phi, psi",
            json{{"pairs", 100}}, [&](json& out) {
              std::size_t good = 0;
              for (int t = 0; t < 100; ++t) {
                Ring r = t % 3 == 0 ? Ring::integers() : Ring::mod(t % 3 == 1 ? 2 : 3);
                const std::size_t n = 1 + rng() % 4, m = 1 + rng() % 4;
                Mat phi = random_x_automorphism(n, r, rng), psi = random_x_automorphism(m, r, rng);
                Mat b = braid_block(n, m, r);
                if (b * block_diag(phi, psi) == block_diag(psi, phi) * b) ++good;
              }
              out["agreeing"] = good;
              return good == 100;
            });
  run.check("standardization witnesses", "X^2g = (H^g, del = lambda(e1, -)) and X^(2g+1) = (H^g, 0) # X",
            json{{"n_max", 12}, {"ring", "Z"}}, [&](json& out) {
              bool ok = true;
              Ring z = Ring::integers();
              for (std::size_t n = 1; n <= 12; ++n) {
                WitnessIso w = standardize_x_power(n, z);
                ok = ok && w.verify() && w.source() == x_power_model(n, z) && w.target() == x_power(n, z);
              }
              out["verified"] = ok;
              return ok;
            });
}

void classify_suite(Runner& run, Rng& rng) {
  Ring z = Ring::integers();
  run.check("classification round trip", "form data -> standard model -> unimodular twist -> form data",
            json{{"trials", 200}}, [&](json& out) {
              std::size_t good = 0;
              json first_bad = nullptr;
              for (int t = 0; t < 200; ++t) {
                FormData fd = random_form_data(rng, 8, 8);
                if (!is_realizable(fd)) {
                  if (first_bad.is_null()) first_bad = json{{"unrealizable", to_json(fd)}};
                  continue;
                }
                FormedSpace model = standard_model(fd, z);
                FormedSpace tw = model.transport(random_unimodular(fd.n, z, rng(), 4 * fd.n));
                Reduction red = reduce_to_standard(tw);
                if (red.data == fd && red.witness.verify() && red.witness.target() == tw) ++good;
                else if (first_bad.is_null()) first_bad = to_json(fd);
              }
              out["recovered"] = good;
              out["first_failure"] = first_bad;
              return good == 200;
            });
  run.check("hyperbolic shift law", "form_data(A # (H, 0)) prepends d = 1 and repeats delta_1",
            json{{"trials", 40}}, [&](json& out) {
              std::size_t good = 0;
              for (int t = 0; t < 40; ++t) {
                FormedSpace a = random_space(z, 1 + rng() % 6, rng, 4);
                FormData fd = form_data(a), fh = form_data(sum(a, hyperbolic(1, z)));
                FormData expect = fd;
                expect.n += 2;
                expect.d.insert(expect.d.begin(), Int(1));
                expect.delta.insert(expect.delta.begin(), fd.delta[0]);
                if (fh == expect) ++good;
              }
              out["agreeing"] = good;
              return good == 40;
            });
}

void genus_suite(Runner& run, Rng& rng) {
  run.check("hyperbolic genus: SNF against greedy splitting", "unit invariant factors count hyperbolic summands",
            json{{"forms", 100}}, [&](json& out) {
              std::size_t good = 0;
              for (int t = 0; t < 100; ++t) {
                Ring r = t % 3 == 0 ? Ring::integers() : Ring::mod(t % 3 == 1 ? 2 : 3);
                FormedSpace a = random_space(r, 1 + rng() % 8, rng, 3);
                const std::size_t snf = hyperbolic_genus_snf(a.lambda());
                const std::size_t greedy = hyperbolic_split(a.lambda()).genus();
                bool ok = snf == greedy;
                if (ok && r.is_finite() && a.rank() <= 5) ok = hyperbolic_genus_exhaustive(a.lambda()) == snf;
                if (ok) ++good;
              }
              out["agreeing"] = good;
              return good == 100;
            });
  for (std::int64_t m : {2, 3}) {
    run.check("arc genus formula against brute force", "g_X = 1 + g_H + g_H(ker del) when del is onto",
              json{{"ring", "Z/" + std::to_string(m)}, {"max_rank", m == 2 ? 5 : 4}, {"del", "all unimodular"}},
              [&](json& out) {
                Ring r = Ring::mod(m);
                const std::size_t nmax = m == 2 ? 5 : 4;
                std::size_t checked = 0, good = 0;
                for (std::size_t n = 1; n <= nmax; ++n) {
                  std::vector<std::pair<std::size_t, std::size_t>> slots;
                  for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
                  std::uint64_t lam_count = 1, del_count = 1;
                  for (std::size_t s = 0; s < slots.size(); ++s) lam_count *= m;
                  for (std::size_t s = 0; s < n; ++s) del_count *= m;
                  if (lam_count * del_count > run.budget) fail(ErrorCode::BudgetExceeded, "too many spaces");
                  for (std::uint64_t lc = 0; lc < lam_count; ++lc) {
                    Mat lam(r, n, n);
                    std::uint64_t c = lc;
                    for (const auto& [i, j] : slots) {
                      lam.set(i, j, Int(static_cast<long>(c % m)));
                      lam.set(j, i, Int(-static_cast<long>(c % m)));
                      c /= m;
                    }
                    for (std::uint64_t dc = 1; dc < del_count; ++dc) {
                      Mat del(r, 1, n);
                      std::uint64_t e = dc;
                      for (std::size_t i = 0; i < n; ++i) {
                        del.set(0, i, Int(static_cast<long>(e % m)));
                        e /= m;
                      }
                      FormedSpace a(lam, del);
                      ++checked;
                      if (arc_genus(a).g_X == arc_genus_bruteforce(a)) ++good;
                    }
                  }
                }
                out["checked"] = checked;
                out["agreeing"] = good;
                return checked == good;
              });
  }
  // GL_5 moves any onto del to the last coordinate, so this covers rank 5
  // over F_3 up to isomorphism
  run.check("arc genus formula against brute force", "g_X = 1 + g_H + g_H(ker del) when del is onto",
            json{{"ring", "Z/3"}, {"rank", 5}, {"del", "(0,0,0,0,1)"}}, [&](json& out) {
              Ring r = Ring::mod(3);
              const std::size_t n = 5;
              if (59049 > run.budget) fail(ErrorCode::BudgetExceeded, "too many spaces");
              Mat del(r, 1, n);
              del.set(0, n - 1, Int(1));
              std::size_t checked = 0, good = 0;
              for (std::uint64_t lc = 0; lc < 59049; ++lc) {
                Mat lam(r, n, n);
                std::uint64_t c = lc;
                for (std::size_t i = 0; i < n; ++i)
                  for (std::size_t j = i + 1; j < n; ++j) {
                    lam.set(i, j, Int(static_cast<long>(c % 3)));
                    lam.set(j, i, Int(-static_cast<long>(c % 3)));
                    c /= 3;
                  }
                FormedSpace a(lam, del);
                ++checked;
                if (arc_genus(a).g_X == arc_genus_bruteforce(a)) ++good;
              }
              out["checked"] = checked;
              out["agreeing"] = good;
              return checked == good;
            });
  run.check("genus inequalities over Z", "kernels of unimodular functionals lose at most one hyperbolic summand",
            json{{"instances", 100}}, [&](json& out) {
              Ring z = Ring::integers();
              std::size_t done = 0, good = 0;
              while (done < 100) {
                FormedSpace a = random_space(z, 2 + rng() % 7, rng, 2);
                Mat l = random_matrix(z, 1, a.rank(), rng, 3);
                if (!is_unimodular_rows(l)) continue;
                ++done;
                Mat k = kernel_basis(l);
                bool ok = hyperbolic_genus(restrict_form(a.lambda(), k)) + 1 >= hyperbolic_genus(a.lambda());
                if (is_unimodular_rows(vstack(l, a.del()))) {
                  FormedSpace ka(restrict_form(a.lambda(), k), a.del() * k);
                  ok = ok && arc_genus(ka).g_X + 2 >= arc_genus(a).g_X;
                }
                if (ok) ++good;
              }
              out["holding"] = good;
              return good == 100;
            });
}

void connectivity_suite(Runner& run) {
  auto one = [&](const FormedSpace& a, ComplexKind kind, int bound_override) {
    run.check("connectivity of " + to_string(kind) + "(X^" + std::to_string(a.rank()) + ")",
              "reduced homology vanishes through the predicted connectivity bound",
              json{{"ring", a.ring().name()}, {"kind", to_string(kind)}, {"n", a.rank()}}, [&](json& out) {
                PredictedBound pb = predicted_connectivity(a, kind);
                const int bound = bound_override >= -1 ? bound_override : pb.bound;
                const std::size_t cap = static_cast<std::size_t>(std::max(1, bound + 1));
                HomologyReport h = connectivity_report(a, kind, cap, run.budget);
                out = to_json(h);
                return h.bound_met;
              });
  };
  Ring f2 = Ring::mod(2), f3 = Ring::mod(3);
  for (std::size_t n : {5, 6, 7, 8}) one(x_power(n, f2), ComplexKind::D, -2);
  for (std::size_t n : {5, 6}) one(x_power(n, f3), ComplexKind::D, -2);
  for (std::size_t n : {4, 5, 6}) one(x_power(n, f2), ComplexKind::B, -2);
  for (std::size_t n : {3, 4, 5}) one(x_power(n, f2), ComplexKind::Aalg, -2);
}

void counting_suite(Runner& run) {
  Ring f2 = Ring::mod(2);
  for (std::size_t n = 2; n <= 6; ++n)
    for (std::size_t p = 0; p <= std::min<std::size_t>(3, n - 2); ++p)
      run.check("ordered simplices against automorphism cosets",
                "ordered p-simplices of D(X^n) = |Aut X^n| / |Aut X^(n-p-1)|", json{{"n", n}, {"p", p}, {"ring", "Z/2"}},
                [&](json& out) {
                  CountCheck c = destabilization_count_check(n, p, f2, run.budget);
                  out = to_json(c);
                  return c.equal;
                });
  run.check("orbit transitivity", "Aut(X^n) is transitive on non-separating arcs", json{{"n", "3..6"}, {"ring", "Z/2"}},
            [&](json& out) {
              bool ok = true;
              for (std::size_t n = 3; n <= 6; ++n) {
                auto orbits = orbit_nonseparating(x_power(n, f2));
                out[std::to_string(n)] = orbits.size();
                ok = ok && orbits.size() == 1;
              }
              return ok;
            });
}

void cancellation_suite(Runner& run, Rng& rng) {
  Ring z = Ring::integers();
  run.check("cancellation of X over Z", "A # X = B # X with del onto implies A = B", json{{"pairs", 100}},
            [&](json& out) {
              std::size_t done = 0, good = 0;
              while (done < 100) {
                FormedSpace a = random_space(z, 1 + rng() % 6, rng, 3);
                if (!is_unimodular_rows(a.del())) continue;
                FormedSpace b = a.transport(random_unimodular(a.rank(), z, rng(), 3 * a.rank()));
                if (rng() % 2) b = standard_model(form_data(a), z).transport(random_unimodular(a.rank(), z, rng(), 6));
                if (form_data(sum(a, x_power(1, z))) != form_data(sum(b, x_power(1, z)))) continue;
                ++done;
                WitnessIso w = cancel_x(a, b);
                if (w.verify() && w.source() == a && w.target() == b) ++good;
              }
              out["verified"] = good;
              return good == 100;
            });
  run.check("non-surjective boundary is rejected", "cancellation needs del onto", json{{"pair", "(X^2, (H, 0))"}},
            [&](json& out) {
              try {
                cancel_x(x_power(2, z), hyperbolic(1, z));
              } catch (const Error& e) {
                out["diagnostic"] = e.what();
                return e.code() == ErrorCode::HypothesisFailed &&
                       std::string(e.what()).find("surjective") != std::string::npos;
              }
              return false;
            });
}

}  // namespace

SuiteReport run_suite(const std::string& name, std::uint64_t seed, std::uint64_t budget) {
  SuiteReport rep;
  rep.suite = name;
  rep.seed = seed;
  rep.budget = budget;
  Runner run{rep, budget};
  Rng rng(seed);
  if (name == "braid") braid_suite(run, rng);
  else if (name == "classify") classify_suite(run, rng);
  else if (name == "genus") genus_suite(run, rng);
  else if (name == "connectivity") connectivity_suite(run);
  else if (name == "counting") counting_suite(run);
  else if (name == "cancellation") cancellation_suite(run, rng);
  else fail(ErrorCode::InvalidArgument, "unknown suite '" + name + "'");
  return rep;
}

}  // namespace fsb
