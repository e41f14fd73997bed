#pragma once

#include "flagtop/root_system.hpp"
#include "flagtop/weyl.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

namespace flagtop {

/// One block of the partition of the positive roots plus zero mod R_Theta.
struct ResidueClass {
  Root representative;
  std::vector<Root> members;  // positive roots, root_order
  std::set<LengthClass> lengths_present;
  bool is_zero_class = false;

  bool single_length() const { return lengths_present.size() <= 1; }
  bool contains(const Root& r) const;
};

struct IsotropyDecomposition {
  ThetaSubset theta;
  bool reduced = true;
  /// Zero class first (members Pi+_Theta, representative the zero vector),
  /// then nonzero classes ordered by representative.
  std::vector<ResidueClass> classes;
  /// 2 |Pi_i| per nonzero class; withheld for nonreduced systems.
  std::optional<std::vector<std::size_t>> component_dims;

  std::size_t nonzero_count() const { return classes.empty() ? 0 : classes.size() - 1; }
  const ResidueClass& zero_class() const { return classes.front(); }
  /// Nonzero class containing the positive root r; throws for r in Pi_Theta.
  const ResidueClass& class_of(const Root& r) const;
};

/// Partition computed through HNF membership of differences in R_Theta.
IsotropyDecomposition residue_classes(const RootSystem& s, const ThetaSubset& theta);

/// Same partition by comparing the coefficients outside Theta.
IsotropyDecomposition residue_classes_by_coefficients(const RootSystem& s, const ThetaSubset& theta);

/// Number k of invariant-metric parameters (nonzero classes). For nonreduced
/// systems the count is combinatorial only; check `d.reduced`.
std::size_t metric_parameter_count(const IsotropyDecomposition& d);

/// alpha == beta mod R_Theta. Throws std::invalid_argument for roots in Pi_Theta.
bool same_invariant_geometry(const RootSystem& s, const ThetaSubset& theta, const Root& alpha,
                             const Root& beta);

/// A W_Theta word mapping alpha to beta, or nullopt when they differ in length
/// or residue class.
std::optional<ReflectionWord> isometry_witness(const RootSystem& s, const ThetaSubset& theta,
                                               const Root& alpha, const Root& beta);

}  // namespace flagtop
