#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fsb/formed.hpp"

namespace fsb {

enum class GenusMethod { Snf, Greedy, BruteForce, Formula };
std::string to_string(GenusMethod m);

struct HyperbolicGenus {
  std::size_t genus = 0;
  GenusMethod method = GenusMethod::Snf;
  // True when the value matches the upper bound min_p rank(lambda mod p)/2
  // (always true for the SNF method).
  bool certified = true;
};

// Columns e1, f1, e2, f2, ... of `basis` have hyperbolic Gram matrix; the
// columns of `complement` span the lambda-orthogonal complement, and together
// they form a basis of R^n.
struct HyperbolicSplit {
  Mat basis;
  Mat complement;
  std::size_t genus() const { return basis.cols() / 2; }
};

// Repeatedly splits off a pair u, v with lambda(u, v) = 1.
HyperbolicSplit hyperbolic_split(const Mat& lambda);

HyperbolicGenus hyperbolic_genus_report(const Mat& lambda);
std::size_t hyperbolic_genus(const Mat& lambda);
// Over a PID: half the number of unit invariant factors.
std::size_t hyperbolic_genus_snf(const Mat& lambda);
// Over a finite ring: min over primes p | m of rank(lambda mod p) / 2. Over Z
// this is the SNF value.
std::size_t hyperbolic_genus_upper_bound(const Mat& lambda);
// Search over tuples (u1, v1, u2, v2, ...) with hyperbolic Gram matrix.
// Finite rings only; throws BudgetExceeded past `budget` search nodes.
std::size_t hyperbolic_genus_exhaustive(const Mat& lambda, std::uint64_t budget = 50'000'000);

// B^T lambda B
Mat restrict_form(const Mat& lambda, const Mat& basis);

struct GenusReport {
  std::size_t g_H = 0;
  std::optional<std::size_t> g_H_ker_del;
  std::size_t g_X = 0;
  GenusMethod method = GenusMethod::Formula;
  std::vector<std::string> conditions_used;
};

GenusReport arc_genus(const FormedSpace& a, std::size_t cap = 6);

// Largest g admitting a morphism X^g -> a, found by extending partial arc
// tuples. Finite rings with rank <= cap only.
std::size_t arc_genus_bruteforce(const FormedSpace& a, std::size_t cap = 6, std::uint64_t budget = 20'000'000);
// The columns of the returned matrix are a maximal arc tuple (a_1, ..., a_g)
// with lambda(a_i, a_j) = 1 for i < j.
Mat max_arc_tuple(const FormedSpace& a, std::size_t cap = 6, std::uint64_t budget = 20'000'000);

struct HyperbolicPair {
  Vec u, v;
};

// u, v with lambda(u, v) = 1 and l(u) = 1. Requires l unimodular and a
// hyperbolic summand in lambda.
HyperbolicPair find_hyperbolic_for_functional(const Mat& lambda, const Mat& l);

// n x 2g matrix with columns e1, f1, ..., eg, fg spanning an H^g summand,
// l(e1) = 1 and l vanishing on the other columns.
Mat adapted_hyperbolic_basis(const Mat& lambda, const Mat& l);

struct BoundaryInvariant {
  std::size_t rank = 0;
  bool del_unimodular = false;
};
BoundaryInvariant boundary_invariant(const FormedSpace& a);
std::size_t boundary_invariant_rank(const FormedSpace& a);

}  // namespace fsb
