#pragma once

#include <optional>
#include <string>

#include "fsb/formed.hpp"

namespace fsb {

// (n, l, d_1..d_k, delta_1..delta_{k+1}) with canonical generators.
struct FormData {
  std::size_t n = 0;
  std::size_t l = 0;
  Vec d;
  Vec delta;

  std::size_t k() const { return d.size(); }
  bool operator==(const FormData& o) const { return n == o.n && l == o.l && d == o.d && delta == o.delta; }
  bool operator!=(const FormData& o) const { return !(*this == o); }
  std::string to_string() const;
};

// Over Z or F_p. Throws UnsupportedRing otherwise.
FormData form_data(const FormedSpace& a);

bool is_realizable(const FormData& fd, const Ring& r);
bool is_realizable(const FormData& fd);

// Basis e1, f1, ..., ek, fk, g1, ..., gl with lambda(e_i, f_i) = d_i,
// del(e_i) = delta_i, del(f_i) = 0, del(g_j) = delta_{k+1}.
FormedSpace standard_model(const FormData& fd, const Ring& r);

struct Reduction {
  FormData data;
  WitnessIso witness;  // standard_model(data) -> a
};
Reduction reduce_to_standard(const FormedSpace& a);

// Witness a -> b, or nullopt. Over Z and F_p via form data; over composite
// Z/m by exhaustive search when rank <= 4 (CapExceeded otherwise).
std::optional<WitnessIso> is_isomorphic(const FormedSpace& a, const FormedSpace& b);
std::optional<WitnessIso> isomorphism_search(const FormedSpace& a, const FormedSpace& b, std::size_t cap = 4);

// Witness m1 -> m2 given m1 # X = m2 # X. Over a PID the premise is checked
// and the witness comes from form data. Otherwise `premise` (m1 # X -> m2 # X)
// must be supplied or found, and g_X(m1) >= 2 usr + 5 must be certified.
WitnessIso cancel_x(const FormedSpace& m1, const FormedSpace& m2,
                    const std::optional<WitnessIso>& premise = std::nullopt);

// The arc-orbit construction: moves phi(x) to x by braidings along an edge
// path of arcs, then restricts to the complements. Any ring.
WitnessIso cancel_x_by_arcs(const FormedSpace& m1, const FormedSpace& m2, const WitnessIso& premise);

}  // namespace fsb
