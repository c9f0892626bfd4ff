#pragma once

#include <string>

#include "fsb/matrix.hpp"

namespace fsb {

// A free module R^n with an alternating form lambda (n x n) and a boundary
// functional del (1 x n). Construction validates both.
class FormedSpace {
 public:
  FormedSpace(Mat lambda, Mat del);
  static FormedSpace zero(const Ring& r);

  const Ring& ring() const { return lambda_.ring(); }
  std::size_t rank() const { return lambda_.rows(); }
  const Mat& lambda() const { return lambda_; }
  const Mat& del() const { return del_; }

  // lambda(u, v) = u^T lambda v
  Int pair(const Vec& u, const Vec& v) const;
  Int boundary(const Vec& v) const;
  // The row u^T lambda, i.e. the functional lambda(u, -).
  Vec pairing_row(const Vec& u) const;
  // (P^T lambda P, del P): the space in the basis given by the columns of P.
  FormedSpace transport(const Mat& p) const;

  bool operator==(const FormedSpace& o) const { return lambda_ == o.lambda_ && del_ == o.del_; }
  bool operator!=(const FormedSpace& o) const { return !(*this == o); }

 private:
  Mat lambda_, del_;
};

// Throws NotAlternating naming the first offending entry.
void check_alternating(const Mat& lambda);

FormedSpace sum(const FormedSpace& a, const FormedSpace& b);
FormedSpace x_power(std::size_t n, const Ring& r);
Mat hyperbolic_form(std::size_t g, const Ring& r);
// (H^g, 0)
FormedSpace hyperbolic(std::size_t g, const Ring& r);
Mat curved_form(const FormedSpace& a);
bool is_nondegenerate(const FormedSpace& a);

// The hyperbolic model of X^n: (H^g, del = lambda(e1, -)) for n = 2g and
// (H^g, 0) # X for n = 2g + 1.
FormedSpace x_power_model(std::size_t n, const Ring& r);

// A linear map target.rank x source.rank preserving lambda and del. Every
// constructor verifies both equations.
class Morphism {
 public:
  Morphism(FormedSpace source, FormedSpace target, Mat matrix);

  const FormedSpace& source() const { return source_; }
  const FormedSpace& target() const { return target_; }
  const Mat& matrix() const { return matrix_; }

  // this o before
  Morphism compose(const Morphism& before) const;

 private:
  FormedSpace source_, target_;
  Mat matrix_;
};

// Returns an empty string when m is a morphism source -> target, else a
// description of the first failed equation.
std::string morphism_defect(const FormedSpace& source, const FormedSpace& target, const Mat& m);

// An invertible morphism together with its inverse matrix.
class WitnessIso {
 public:
  WitnessIso(FormedSpace source, FormedSpace target, Mat matrix);
  WitnessIso(FormedSpace source, FormedSpace target, Mat matrix, Mat inverse);
  static WitnessIso identity(const FormedSpace& a);

  const FormedSpace& source() const { return fwd_.source(); }
  const FormedSpace& target() const { return fwd_.target(); }
  const Mat& matrix() const { return fwd_.matrix(); }
  const Mat& inverse_matrix() const { return inv_; }
  const Morphism& morphism() const { return fwd_; }

  WitnessIso inverted() const;
  // this o before
  WitnessIso compose(const WitnessIso& before) const;
  // Re-checks both structure equations and both inverse products.
  bool verify() const;

 private:
  Morphism fwd_;
  Mat inv_;
};

// phi # psi : A # C -> B # D (block diagonal).
Morphism sum(const Morphism& phi, const Morphism& psi);
WitnessIso sum(const WitnessIso& phi, const WitnessIso& psi);

// beta_{n,m} : X^n # X^m -> X^m # X^n.
WitnessIso braid_matrix(std::size_t n, std::size_t m, const Ring& r);
Mat braid_block(std::size_t n, std::size_t m, const Ring& r);

// v_n = (1, -1, 1, ...), with its defining identities checked.
Vec characteristic_vector(std::size_t n, const Ring& r);

// Witness from x_power_model(n) to X^n, built inductively from the rank 2
// and rank 3 substitutions.
WitnessIso standardize_x_power(std::size_t n, const Ring& r);

}  // namespace fsb
