#include "flagtop/pi2.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace flagtop {

namespace {

void require_sphere_root(const RootSystem& s, const ThetaSubset& theta, const Root& alpha) {
  s.require_root(alpha);
  theta.validate(s.rank());
  if (in_theta_span(theta, alpha))
    throw std::invalid_argument(alpha.str() + " lies in Pi_Theta; no sphere is attached to it");
}

RatVector difference(const DualRoot& a, const DualRoot& b) {
  RatVector v(a.coords.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coords[i] - b.coords[i];
  return v;
}

bool dual_congruent(const RootSystem& s, const IntegerLattice& r_dual_theta, const Root& a, const Root& b) {
  return member(r_dual_theta, difference(dual(s, a), dual(s, b)));
}

}  // namespace

std::vector<Root> pi2_basis(const RootSystem& s, const ThetaSubset& theta) {
  if (!s.is_reduced()) throw std::invalid_argument("pi2_basis: " + s.kind().name() + " is not reduced");
  theta.validate(s.rank());
  std::vector<Root> basis;
  for (std::size_t i = 0; i < s.rank(); ++i)
    if (!theta.contains(i)) basis.push_back(s.simple_root(i));
  return basis;
}

SphereClass sphere_class(const RootSystem& s, const ThetaSubset& theta, const Root& alpha) {
  require_sphere_root(s, theta, alpha);
  const DualRoot dv = dual(s, alpha);
  SphereClass out;
  out.source_root = alpha;
  out.formal = !s.is_reduced();
  for (std::size_t i = 0; i < s.rank(); ++i) {
    if (theta.contains(i)) continue;
    out.basis_indices.push_back(i);
    out.coords.push_back(dv.coords[i]);
  }
  return out;
}

bool same_homotopy_class(const RootSystem& s, const ThetaSubset& theta, const Root& alpha,
                         const Root& beta) {
  require_sphere_root(s, theta, alpha);
  require_sphere_root(s, theta, beta);
  if (s.is_reduced()) return sphere_class(s, theta, alpha).coords == sphere_class(s, theta, beta).coords;
  return dual_congruent(s, theta_dual_root_lattice(s, theta.indices()), alpha, beta);
}

bool sum_relation(const RootSystem& s, const ThetaSubset& theta, const Root& alpha, const Root& beta,
                  const Root& delta) {
  require_sphere_root(s, theta, alpha);
  require_sphere_root(s, theta, beta);
  require_sphere_root(s, theta, delta);
  if (s.is_reduced()) {
    const auto a = sphere_class(s, theta, alpha).coords;
    const auto b = sphere_class(s, theta, beta).coords;
    const auto d = sphere_class(s, theta, delta).coords;
    for (std::size_t i = 0; i < d.size(); ++i)
      if (d[i] != a[i] + b[i]) return false;
    return true;
  }
  const auto da = dual(s, alpha), db = dual(s, beta), dd = dual(s, delta);
  RatVector v(s.rank());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = dd.coords[i] - da.coords[i] - db.coords[i];
  return member(theta_dual_root_lattice(s, theta.indices()), v);
}

std::vector<RigidityReport> rigidity_report(const RootSystem& s, const ThetaSubset& theta) {
  const IsotropyDecomposition d = residue_classes(s, theta);
  const IntegerLattice r_dual_theta = theta_dual_root_lattice(s, theta.indices());
  std::vector<RigidityReport> out;
  for (std::size_t c = 1; c < d.classes.size(); ++c) {
    const ResidueClass& cls = d.classes[c];
    RigidityReport rep;
    rep.class_ref = cls;

    rep.w_theta_transitive = w_theta_orbit(s, theta, cls.representative) == cls.members;

    std::set<Rational> norms;
    for (const auto& m : cls.members) norms.insert(s.norm2(m));
    rep.single_length = norms.size() == 1;

    rep.dual_containment = std::all_of(cls.members.begin(), cls.members.end(), [&](const Root& m) {
      return dual_congruent(s, r_dual_theta, m, cls.representative);
    });
    rep.theta_rigid = rep.dual_containment;

    if (!rep.theta_rigid) {
      for (const auto& a : cls.members) {
        for (const auto& b : cls.members)
          if (s.norm2(a) > s.norm2(b) && !dual_congruent(s, r_dual_theta, a, b)) {
            rep.witness = std::make_pair(a, b);
            break;
          }
        if (rep.witness) break;
      }
      if (!rep.witness)
        for (const auto& a : cls.members) {
          for (const auto& b : cls.members)
            if (!dual_congruent(s, r_dual_theta, a, b)) {
              rep.witness = std::make_pair(a, b);
              break;
            }
          if (rep.witness) break;
        }
    }
    out.push_back(std::move(rep));
  }
  return out;
}

bool full_transitivity(const RootSystem& s, const ThetaSubset& theta) {
  auto transitive = [](const std::vector<RigidityReport>& reports) {
    return std::all_of(reports.begin(), reports.end(),
                       [](const RigidityReport& r) { return r.w_theta_transitive; });
  };
  return transitive(rigidity_report(s, theta)) && transitive(rigidity_report(dual_system(s), theta));
}

bool full_transitivity_closed_form(const RootSystem& s, const ThetaSubset& theta) {
  return s.is_simply_laced() || theta.empty();
}

bool dual_classes_coincide(const RootSystem& s, const ThetaSubset& theta) {
  theta.validate(s.rank());
  const IntegerLattice r_theta = theta_root_lattice(s, theta.indices());
  const IntegerLattice r_dual_theta = theta_dual_root_lattice(s, theta.indices());
  const auto& roots = s.roots();
  std::vector<DualRoot> duals;
  for (const auto& r : roots) duals.push_back(dual(s, r));

  for (std::size_t a = 0; a < roots.size(); ++a) {
    if (in_theta_span(theta, roots[a])) continue;
    for (std::size_t g = 0; g < roots.size(); ++g) {
      const Root diff = roots[g] - roots[a];
      const bool same_class = member(r_theta, RatVector(diff.coords.begin(), diff.coords.end()));
      const bool same_dual_class = member(r_dual_theta, difference(duals[g], duals[a]));
      if (same_class != same_dual_class) return false;
    }
  }
  return true;
}

bool long_theta_criterion(const RootSystem& s, const ThetaSubset& theta) {
  theta.validate(s.rank());
  return std::all_of(theta.indices().begin(), theta.indices().end(),
                     [&](std::size_t i) { return length_class(s, s.simple_root(i)) == LengthClass::Long; });
}

std::string to_string(GroupPreset p) {
  return p == GroupPreset::SimplyConnected ? "simply-connected" : "adjoint";
}

GroupPreset parse_group_preset(const std::string& text) {
  if (text == "simply-connected" || text == "simply_connected" || text == "sc") return GroupPreset::SimplyConnected;
  if (text == "adjoint" || text == "adj") return GroupPreset::Adjoint;
  throw std::invalid_argument("unknown group preset '" + text + "'");
}

Pi1Report pi1_report(const RootSystem& s, const ThetaSubset& theta, GroupPreset preset) {
  if (!s.is_reduced()) throw std::invalid_argument("pi1_report: " + s.kind().name() + " is not reduced");
  theta.validate(s.rank());
  const StandardLattices lat = standard_lattices(s);
  const IntegerLattice& coroot = lat.coroot;
  const IntegerLattice& gamma = preset == GroupPreset::SimplyConnected ? lat.coroot : lat.coweight;
  const IntegerLattice coroot_theta = theta_dual_root_lattice(s, theta.indices());

  Pi1Report r;
  r.preset = preset;
  r.pi1_u = quotient(gamma, coroot);
  r.pi1_u_theta = quotient(gamma, coroot_theta);
  r.boundary_image = quotient(coroot, coroot_theta);
  r.boundary_surjective = gamma == coroot;
  if (r.boundary_surjective != r.pi1_u.trivial())
    throw std::logic_error("pi1_report: surjectivity disagrees with pi1(U)");
  return r;
}

}  // namespace flagtop
