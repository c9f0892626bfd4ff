#include "fsb/io.hpp"

#include <sstream>

#include "fsb/errors.hpp"

namespace fsb {

json to_json(const Int& x) {
  if (x.fits_slong_p()) return json(x.get_si());
  return json(x.get_str());
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) {
    Int x;
    if (x.set_str(j.get<std::string>(), 10) != 0)
      fail(ErrorCode::InvalidArgument, "not an integer: " + j.get<std::string>());
    return x;
  }
  fail(ErrorCode::InvalidArgument, "expected an integer, got " + j.dump());
}

json to_json(const Ring& r) { return r.name(); }

Ring ring_from_json(const json& j) {
  if (!j.is_string()) fail(ErrorCode::InvalidArgument, "ring must be a string such as \"Z\" or \"Zmod:6\"");
  return parse_ring(j.get<std::string>());
}

json to_json(const Vec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

Vec vec_from_json(const json& j) {
  if (!j.is_array()) fail(ErrorCode::InvalidArgument, "expected an array");
  Vec v;
  for (const auto& x : j) v.push_back(int_from_json(x));
  return v;
}

json to_json(const Mat& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

Mat mat_from_json(const json& j, const Ring& r) {
  if (!j.is_array()) fail(ErrorCode::InvalidArgument, "matrix must be an array of rows");
  std::vector<Vec> rows;
  for (const auto& row : j) rows.push_back(vec_from_json(row));
  for (const auto& row : rows)
    if (row.size() != rows[0].size()) fail(ErrorCode::InvalidArgument, "matrix rows have different lengths");
  return Mat::from_rows(r, rows);
}

json to_json(const FormedSpace& a) {
  return json{{"ring", to_json(a.ring())}, {"rank", a.rank()}, {"lambda", to_json(a.lambda())},
              {"del", to_json(a.del().row(0))}};
}

FormedSpace space_from_json(const json& j) {
  if (!j.is_object()) fail(ErrorCode::InvalidArgument, "formed space must be a JSON object");
  Ring r = j.contains("ring") ? ring_from_json(j.at("ring")) : Ring::integers();
  if (j.contains("x_power")) return x_power(j.at("x_power").get<std::size_t>(), r);
  if (!j.contains("lambda") || !j.contains("del"))
    fail(ErrorCode::InvalidArgument, "formed space needs \"lambda\" and \"del\" (or \"x_power\")");
  Mat lam = j.at("lambda").empty() ? Mat(r, 0, 0) : mat_from_json(j.at("lambda"), r);
  Vec del = vec_from_json(j.at("del"));
  if (del.size() != lam.rows()) fail(ErrorCode::InvalidArgument, "del has the wrong length");
  Mat d(r, 1, del.size());
  for (std::size_t i = 0; i < del.size(); ++i) d.set(0, i, del[i]);
  return FormedSpace(lam, d);
}

json to_json(const FormData& fd) {
  return json{{"n", fd.n}, {"l", fd.l}, {"d", to_json(fd.d)}, {"delta", to_json(fd.delta)}};
}

FormData form_data_from_json(const json& j) {
  FormData fd;
  fd.n = j.at("n").get<std::size_t>();
  fd.l = j.at("l").get<std::size_t>();
  fd.d = vec_from_json(j.at("d"));
  fd.delta = vec_from_json(j.at("delta"));
  return fd;
}

json to_json(const GenusReport& g) {
  json j{{"g_H", g.g_H}, {"g_X", g.g_X}, {"method", to_string(g.method)}, {"conditions_used", g.conditions_used}};
  j["g_H_ker_del"] = g.g_H_ker_del ? json(*g.g_H_ker_del) : json(nullptr);
  return j;
}

json to_json(const WitnessIso& w) {
  return json{{"source", to_json(w.source())},
              {"target", to_json(w.target())},
              {"matrix", to_json(w.matrix())},
              {"inverse", to_json(w.inverse_matrix())},
              {"verified", w.verify()}};
}

json to_json(const CycleCertificate& c) {
  json terms = json::array();
  for (std::size_t i = 0; i < c.simplices.size(); ++i)
    terms.push_back(json{{"simplex", c.simplices[i]}, {"coefficient", to_json(c.coefficients[i])}});
  json verts = json::array();
  for (const auto& v : c.vertex_vectors) verts.push_back(to_json(v));
  return json{{"degree", c.degree},
              {"terms", terms},
              {"vertex_vectors", verts},
              {"boundary_check_done", c.boundary_check_done},
              {"is_boundary", c.is_boundary}};
}

json to_json(const HomologyReport& h) {
  json betti = json::array(), torsion = json::array();
  for (const auto& d : h.degrees) {
    betti.push_back(d.betti);
    torsion.push_back(to_json(Vec(d.torsion.begin(), d.torsion.end())));
  }
  json j{{"kind", h.kind ? to_string(*h.kind) : "abstract"},
         {"ring", h.ring},
         {"dim_cap", h.dim_cap},
         {"f_vector", h.f_vector},
         {"first_degree", -1},
         {"reduced_betti", betti},
         {"torsion", torsion},
         {"verified_connectivity", h.verified_connectivity},
         {"bound_met", h.bound_met},
         {"note", h.note}};
  j["predicted_bound"] = h.predicted_bound ? json(*h.predicted_bound) : json(nullptr);
  j["bound_formula"] = h.bound_formula;
  j["certificate"] = h.certificate ? to_json(*h.certificate) : json(nullptr);
  return j;
}

json to_json(const CountCheck& c) {
  return json{{"n", c.n},     {"p", c.p},         {"unordered_simplices", c.unordered}, {"lhs", c.lhs},
              {"aut_n", c.aut_n}, {"aut_rest", c.aut_rest}, {"rhs", c.rhs}, {"equal", c.equal}};
}

json to_json(const DegreeRange& r) {
  json j{{"kind", r.kind == DegreeRange::Kind::Empty ? "empty" : r.kind == DegreeRange::Kind::All ? "all" : "up_to"},
         {"text", r.to_string()}};
  j["max_degree"] = r.kind == DegreeRange::Kind::UpTo ? json(r.max_degree) : json(nullptr);
  return j;
}

json to_json(const StabilityRanges& s) {
  return json{{"c", s.c}, {"epi", to_json(s.epi)}, {s.second_kind, to_json(s.mono_or_iso)}};
}

json to_json(const RangeQuery& q) {
  json j{{"n", q.n}, {"ring", to_json(q.ring)}};
  j["r"] = q.coefficient_degree ? json(*q.coefficient_degree) : json(nullptr);
  return j;
}

json to_json(const AutGroup& g) {
  json gens = json::array();
  for (const auto& m : g.generators) gens.push_back(to_json(m));
  json j{{"space", to_json(g.space)}, {"generators", gens}, {"method", g.method}, {"complete", g.complete}};
  j["order"] = g.order ? json(*g.order) : json(nullptr);
  return j;
}

json to_json(const SquareCheck& s) { return json{{"ok", s.ok}, {"checked", s.checked}, {"failure", s.failure}}; }

std::string homology_csv(const HomologyReport& h) {
  std::ostringstream out;
  out << "degree,betti,torsion,simplices\n";
  for (const auto& d : h.degrees) {
    out << d.degree << ',' << d.betti << ',';
    for (std::size_t i = 0; i < d.torsion.size(); ++i) out << (i ? ";" : "") << d.torsion[i].get_str();
    out << ',';
    if (d.degree >= 0 && static_cast<std::size_t>(d.degree) < h.f_vector.size()) out << h.f_vector[d.degree];
    else if (d.degree < 0) out << 1;
    else out << 0;
    out << '\n';
  }
  return out.str();
}

std::string ranges_csv(const std::vector<std::pair<RangeQuery, StabilityRanges>>& rows) {
  std::ostringstream out;
  out << "n,ring,r,c,epi,second_kind,second\n";
  for (const auto& [q, s] : rows) {
    out << q.n << ',' << q.ring.name() << ',';
    if (q.coefficient_degree) out << *q.coefficient_degree;
    out << ',' << s.c << ',' << s.epi.to_string() << ',' << s.second_kind << ',' << s.mono_or_iso.to_string() << '\n';
  }
  return out.str();
}

}  // namespace fsb
