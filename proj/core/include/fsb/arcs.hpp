#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fsb/formed.hpp"

namespace fsb {

enum class ComplexKind { Aalg, B, D, U };
std::string to_string(ComplexKind k);
ComplexKind parse_complex_kind(const std::string& s);

// del(v) = 1
bool is_arc(const Vec& v, const FormedSpace& a);
// {v . -, del} unimodular. Throws NotAnArc.
bool is_nonseparating(const Vec& v, const FormedSpace& a);
// Arcs forming a unimodular sequence. Throws NotAnArc.
bool is_aalg_simplex(const std::vector<Vec>& vs, const FormedSpace& a);
// {a_0 . -, ..., a_p . -, del} unimodular. Throws NotAnArc.
bool is_b_simplex(const std::vector<Vec>& vs, const FormedSpace& a);
// An ordering with lambda(a_i, a_j) = 1 for i < j, if any. Throws NotBSimplex.
std::optional<std::vector<Vec>> is_d_simplex(const std::vector<Vec>& vs, const FormedSpace& a);

// A simplex of the complex of the given kind (Aalg, B or D), validated on
// construction. D simplices are stored in their canonical order.
class ArcSimplex {
 public:
  ArcSimplex(FormedSpace space, std::vector<Vec> vectors, ComplexKind kind);

  const FormedSpace& space() const { return space_; }
  const std::vector<Vec>& vectors() const { return vectors_; }
  ComplexKind kind() const { return kind_; }
  std::size_t dim() const { return vectors_.size() - 1; }

 private:
  FormedSpace space_;
  std::vector<Vec> vectors_;
  ComplexKind kind_;
};

struct CutSpace {
  FormedSpace space;
  Mat inclusion;  // n x rank, columns a basis of the cut submodule
};

// M \ sigma = intersection of ker(del + a_i . -), with the restricted structure.
CutSpace cut(const FormedSpace& a, const std::vector<Vec>& sigma);
CutSpace cut(const ArcSimplex& sigma);

struct Splitting {
  FormedSpace complement;
  Mat complement_basis;
  WitnessIso witness;  // complement # X^k -> target
};

// f : X^k -> A gives A = C # X^k with C = { m : lambda'(f(x), m) = 0 }.
Splitting split_off(const Morphism& f);

}  // namespace fsb
