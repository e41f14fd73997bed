#include "flagtop/report.hpp"

namespace flagtop {

Json to_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

Json to_json(const Rational& value) {
  Rational q = value;
  q.canonicalize();
  if (q.get_den() == 1) return to_json(Integer(q.get_num()));
  return Json(q.get_str());
}

Json to_json(const Root& r) { return Json(r.coords); }

Json to_json(const DualRoot& d) {
  Json out = Json::array();
  for (const auto& c : d.coords) out.push_back(to_json(c));
  return out;
}

Json to_json(const ThetaSubset& t) {
  Json out = Json::array();
  for (auto i : t.indices()) out.push_back(i + 1);
  return out;
}

Json to_json(const ReflectionWord& w) {
  Json out = Json::array();
  for (auto i : w.letters) out.push_back(i + 1);
  return out;
}

Json to_json(const QuotientGroup& q) {
  Json torsion = Json::array();
  for (const auto& t : q.torsion) torsion.push_back(to_json(t));
  return Json{{"free_rank", q.free_rank}, {"torsion", torsion}};
}

Json to_json(const RootSystem& s) {
  Json cartan = Json::array();
  for (std::size_t i = 0; i < s.rank(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < s.rank(); ++j) row.push_back(s.cartan()(i, j));
    cartan.push_back(row);
  }
  Json sym = Json::array();
  for (const auto& d : s.symmetrizer()) sym.push_back(to_json(d));
  Json pos = Json::array();
  for (const auto& r : s.positive_roots()) pos.push_back(to_json(r));
  return Json{{"kind", s.kind().name()},
              {"rank", s.rank()},
              {"cartan", cartan},
              {"symmetrizer", sym},
              {"positive_roots", pos}};
}

namespace {

Json class_fields(const ResidueClass& c) {
  Json members = Json::array();
  for (const auto& m : c.members) members.push_back(to_json(m));
  Json lengths = Json::array();
  for (auto l : c.lengths_present) lengths.push_back(to_string(l));
  return Json{{"representative", to_json(c.representative)},
              {"members", members},
              {"lengths", lengths},
              {"size", c.members.size()}};
}

}  // namespace

Json to_json(const IsotropyDecomposition& d) {
  Json classes = Json::array();
  for (const auto& c : d.classes) {
    Json j = class_fields(c);
    j["zero"] = c.is_zero_class;
    classes.push_back(j);
  }
  Json out{{"theta", to_json(d.theta)}, {"classes", classes}, {"k", metric_parameter_count(d)}};
  out["geometric"] = d.reduced;
  if (d.component_dims) {
    out["component_dims"] = *d.component_dims;
  } else {
    out["component_dims"] = nullptr;
  }
  return out;
}

Json to_json(const RigidityReport& r) {
  Json j = class_fields(r.class_ref);
  j["w_theta_transitive"] = r.w_theta_transitive;
  j["single_length"] = r.single_length;
  j["dual_containment"] = r.dual_containment;
  j["theta_rigid"] = r.theta_rigid;
  if (r.witness)
    j["witness"] = Json::array({to_json(r.witness->first), to_json(r.witness->second)});
  else
    j["witness"] = nullptr;
  return j;
}

Json to_json(const Pi1Report& r) {
  return Json{{"preset", to_string(r.preset)},
              {"pi1_U", to_json(r.pi1_u)},
              {"pi1_U_theta", to_json(r.pi1_u_theta)},
              {"boundary_image", to_json(r.boundary_image)},
              {"boundary_surjective", r.boundary_surjective}};
}

Json to_json(const SphereClass& c) {
  Json coords = Json::array();
  for (const auto& x : c.coords) coords.push_back(to_json(x));
  return Json{{"root", to_json(c.source_root)}, {"coords", coords}, {"formal", c.formal}};
}

Json roots_json(const RootSystem& s) {
  Json out = Json::array();
  for (const auto& r : s.roots())
    out.push_back(Json{{"coords", to_json(r)},
                       {"positive", r.is_positive()},
                       {"length", to_string(length_class(s, r))},
                       {"norm2", to_json(s.norm2(r))},
                       {"dual", to_json(dual(s, r))}});
  return out;
}

Json pi2_report_json(const RootSystem& s, const ThetaSubset& theta, GroupPreset preset,
                     bool include_spheres) {
  Json out{{"schema_version", kSchemaVersion},
           {"kind", s.kind().name()},
           {"rank", s.rank()},
           {"theta", to_json(theta)}};
  Json basis = Json::array();
  for (std::size_t i = 0; i < s.rank(); ++i)
    if (!theta.contains(i)) basis.push_back(to_json(s.simple_root(i)));
  out["pi2_rank"] = basis.size();
  out["basis"] = basis;
  out["formal"] = !s.is_reduced();
  Json classes = Json::array();
  for (const auto& r : rigidity_report(s, theta)) classes.push_back(to_json(r));
  out["classes"] = classes;
  if (s.is_reduced())
    out["pi1"] = to_json(pi1_report(s, theta, preset));
  else
    out["pi1"] = nullptr;
  if (include_spheres) {
    Json spheres = Json::array();
    for (const auto& r : s.positive_roots())
      if (!in_theta_span(theta, r)) spheres.push_back(to_json(sphere_class(s, theta, r)));
    out["spheres"] = spheres;
  }
  return out;
}

}  // namespace flagtop
