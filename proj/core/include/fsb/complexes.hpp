#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fsb/arcs.hpp"
#include "fsb/formed.hpp"
#include "fsb/homology.hpp"

namespace fsb {

inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t(1) << 20;

using Simplex = std::vector<std::uint32_t>;  // sorted vertex indices

class SimplicialComplex {
 public:
  SimplicialComplex(Ring ring, std::optional<ComplexKind> kind, std::size_t dim_cap, std::vector<Vec> vertices,
                    std::vector<std::vector<Simplex>> simplices);
  // Abstract complex: downward closure of the facets, truncated at dim_cap.
  static SimplicialComplex from_facets(std::size_t num_vertices, const std::vector<Simplex>& facets,
                                       std::size_t dim_cap);

  const Ring& ring() const { return ring_; }
  std::optional<ComplexKind> kind() const { return kind_; }
  std::size_t dim_cap() const { return dim_cap_; }
  const std::vector<Vec>& vertices() const { return vertices_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  // p-simplices in lexicographic order; empty beyond the top dimension.
  const std::vector<Simplex>& simplices(std::size_t p) const;
  std::size_t count(std::size_t p) const { return simplices(p).size(); }
  // -1 for the empty complex
  int top_dim() const;
  bool contains(const Simplex& s) const;
  std::optional<std::size_t> index_of(const Simplex& s) const;
  std::vector<std::size_t> f_vector() const;

 private:
  Ring ring_;
  std::optional<ComplexKind> kind_;
  std::size_t dim_cap_;
  std::vector<Vec> vertices_;
  std::vector<std::vector<Simplex>> simplices_;
};

// Complex of arcs (Aalg, B or D) of a space over a finite ring. Vertices
// are listed in increasing coordinate order.
SimplicialComplex build_complex(const FormedSpace& a, ComplexKind kind, std::size_t dim_cap,
                                std::uint64_t budget = kDefaultEnumerationBudget);

// U(R^n, m + N): unimodular vectors of the coset m + N (N spanned by the
// columns of `gens`), simplices the unimodular sequences.
SimplicialComplex build_u_complex(const Ring& r, std::size_t n, const Vec& base, const Mat& gens, std::size_t dim_cap,
                                  std::uint64_t budget = kDefaultEnumerationBudget);

// Link of sigma, on the vertices that occur in it (original vectors kept).
SimplicialComplex link(const SimplicialComplex& cx, const Simplex& sigma);

// Boundary map from p-simplices to (p-1)-simplices; p = 0 gives the augmentation.
SparseMatrix boundary_matrix(const SimplicialComplex& cx, std::size_t p);

struct DegreeHomology {
  int degree = 0;
  std::size_t betti = 0;
  std::vector<Int> torsion;
  bool vanishes() const { return betti == 0 && torsion.empty(); }
};

// An integral cycle in some degree, given by simplices and coefficients.
struct CycleCertificate {
  int degree = 0;
  std::vector<Simplex> simplices;
  std::vector<Int> coefficients;
  std::vector<Vec> vertex_vectors;  // vertex index -> vector, for the vertices used
  bool boundary_check_done = false;
  bool is_boundary = false;
};

struct HomologyReport {
  std::optional<ComplexKind> kind;
  std::string ring;
  std::size_t dim_cap = 0;
  std::vector<std::size_t> f_vector;
  std::vector<DegreeHomology> degrees;  // starting at degree -1
  // largest c with reduced H_i = 0 for all computed i <= c
  int verified_connectivity = -2;
  std::optional<int> predicted_bound;
  std::string bound_formula;
  bool bound_met = true;
  std::optional<CycleCertificate> certificate;
  std::string note;
};

// Reduced integral homology in degrees -1..max_deg. Requires max_deg < dim_cap.
HomologyReport reduced_homology(const SimplicialComplex& cx, int max_deg);

// A cycle representing a nonzero class in the given degree, if there is one.
std::optional<CycleCertificate> nonzero_cycle(const SimplicialComplex& cx, int degree);

struct PredictedBound {
  int bound = 0;
  std::string formula;
};
PredictedBound predicted_connectivity(const FormedSpace& a, ComplexKind kind);
PredictedBound predicted_u_connectivity(const Ring& r, std::size_t n, const Mat& gens);

// Builds the complex, computes homology up to min(dim_cap - 1, bound + 1) and
// compares with the predicted bound; a failure carries a cycle certificate.
HomologyReport connectivity_report(const FormedSpace& a, ComplexKind kind, std::size_t dim_cap,
                                   std::uint64_t budget = kDefaultEnumerationBudget);
HomologyReport u_connectivity_report(const Ring& r, std::size_t n, const Vec& base, const Mat& gens,
                                     std::size_t dim_cap, std::uint64_t budget = kDefaultEnumerationBudget);

// Number of orderings (a_0, ..., a_p) of the simplex with lambda(a_i, a_j) = 1 for i < j.
std::uint64_t valid_orderings(const FormedSpace& a, const std::vector<Vec>& simplex);

struct CountCheck {
  std::size_t n = 0, p = 0;
  std::uint64_t unordered = 0;
  std::uint64_t lhs = 0;
  std::uint64_t aut_n = 0, aut_rest = 0;
  std::uint64_t rhs = 0;
  bool equal = false;
};

// Ordered p-simplices of D(X^n) against |Aut X^n| / |Aut X^(n-p-1)|.
CountCheck destabilization_count_check(std::size_t n, std::size_t p, const Ring& r,
                                       std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace fsb
