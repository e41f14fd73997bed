#pragma once

#include "flagtop/isotropy.hpp"
#include "flagtop/lattice.hpp"
#include "flagtop/root_system.hpp"
#include "flagtop/weyl.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace flagtop {

/// Homotopy class of the sphere attached to a root outside Pi_Theta: the
/// coefficients of alpha^vee mod R^vee_Theta in the basis {alpha_i^vee : i not in Theta}.
struct SphereClass {
  Root source_root;
  std::vector<std::size_t> basis_indices;  // Sigma - Theta
  RatVector coords;
  /// Set for nonreduced systems, where the group-theoretic picture does not apply.
  bool formal = false;
};

/// Simple roots Sigma - Theta. Throws std::invalid_argument for nonreduced systems.
std::vector<Root> pi2_basis(const RootSystem& s, const ThetaSubset& theta);

SphereClass sphere_class(const RootSystem& s, const ThetaSubset& theta, const Root& alpha);

/// alpha^vee == beta^vee mod R^vee_Theta.
bool same_homotopy_class(const RootSystem& s, const ThetaSubset& theta, const Root& alpha,
                         const Root& beta);

/// delta^vee == alpha^vee + beta^vee mod R^vee_Theta.
bool sum_relation(const RootSystem& s, const ThetaSubset& theta, const Root& alpha, const Root& beta,
                  const Root& delta);

/// The three conditions on a nonzero residue class, each computed on its own path.
struct RigidityReport {
  ResidueClass class_ref;
  bool w_theta_transitive = false;  // W_Theta orbit of the representative is the class
  bool single_length = false;       // length scan
  bool dual_containment = false;    // every member's dual is congruent to the representative's dual mod R^vee_Theta
  bool theta_rigid = false;         // == dual_containment
  /// First (longer, shorter) pair whose duals are not congruent; set when not rigid.
  std::optional<std::pair<Root, Root>> witness;

  bool consistent() const {
    return w_theta_transitive == single_length && single_length == dual_containment &&
           theta_rigid == dual_containment;
  }
};

std::vector<RigidityReport> rigidity_report(const RootSystem& s, const ThetaSubset& theta);

/// W_Theta transitive on every nonzero class of Pi mod R_Theta and of the dual
/// system mod R^vee_Theta.
bool full_transitivity(const RootSystem& s, const ThetaSubset& theta);

/// Simply laced, or Theta empty.
bool full_transitivity_closed_form(const RootSystem& s, const ThetaSubset& theta);

/// Pi_Theta(alpha)^vee == Pi^vee_Theta(alpha^vee) for every root alpha outside Pi_Theta.
bool dual_classes_coincide(const RootSystem& s, const ThetaSubset& theta);

/// Every simple root in Theta is long.
bool long_theta_criterion(const RootSystem& s, const ThetaSubset& theta);

enum class GroupPreset { SimplyConnected, Adjoint };

std::string to_string(GroupPreset p);
GroupPreset parse_group_preset(const std::string& text);

struct Pi1Report {
  GroupPreset preset = GroupPreset::SimplyConnected;
  QuotientGroup pi1_u;           // Gamma / Gamma^vee
  QuotientGroup pi1_u_theta;     // Gamma / Gamma^vee_Theta
  QuotientGroup boundary_image;  // Gamma^vee / Gamma^vee_Theta
  bool boundary_surjective = false;
};

/// Throws std::invalid_argument for nonreduced systems.
Pi1Report pi1_report(const RootSystem& s, const ThetaSubset& theta, GroupPreset preset);

}  // namespace flagtop
