#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "fsb/matrix.hpp"

namespace fsb {

// U * A * V = D with U, V invertible and D diagonal, d1 | d2 | ...
// Diagonal entries are canonical ideal generators (nonnegative over Z,
// divisors of m over Z/m with m itself written as 0).
struct SnfResult {
  Mat U, D, V;
  Mat U_inv, V_inv;
  std::size_t rank = 0;

  Vec diagonal() const;
  std::size_t unit_count() const;
};

SnfResult smith_normal_form(const Mat& a);
// Nonzero invariant factors only.
Vec invariant_factors(const Mat& a);

// Columns form a basis of ker(a). Over Z and fields the basis is put in
// canonical column echelon form. Throws NonFreeKernel over Z/m when the kernel
// is not free.
Mat kernel_basis(const Mat& a);

// Canonical row echelon form of the row lattice: Hermite form over Z, reduced
// row echelon form over fields. Zero rows are dropped. Composite Z/m is
// returned unchanged.
Mat hermite_row_form(const Mat& a);

bool is_unimodular_rows(const Mat& a);
bool is_unimodular_sequence(const Mat& columns);
std::size_t relative_rank(std::size_t ambient_rank, const Mat& gens);

// b with a * b = identity; requires is_unimodular_rows(a).
Mat right_inverse(const Mat& a);
Mat inverse(const Mat& a);
std::optional<Mat> try_inverse(const Mat& a);
bool is_invertible(const Mat& a);
Int determinant(const Mat& a);

// Some x with a * x = b (b a column), or nullopt.
std::optional<Vec> solve(const Mat& a, const Vec& b);

// Product of `steps` random elementary matrices; deterministic in seed.
Mat random_unimodular(std::size_t n, const Ring& r, std::uint64_t seed, std::size_t steps);
// Same matrix together with its inverse.
std::pair<Mat, Mat> random_unimodular_pair(std::size_t n, const Ring& r, std::uint64_t seed, std::size_t steps);

}  // namespace fsb
