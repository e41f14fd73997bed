#pragma once

#include "flagtop/root_system.hpp"

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace flagtop {

/// A subset Theta of the simple roots, stored as sorted 0-based indices.
class ThetaSubset {
public:
  ThetaSubset() = default;
  explicit ThetaSubset(std::vector<std::size_t> indices);

  /// Bit i of mask selects simple root i.
  static ThetaSubset from_mask(unsigned long mask, std::size_t rank);
  /// Comma/space separated 1-based (Bourbaki) indices; "" is the empty set.
  static ThetaSubset parse(std::string_view text, std::size_t rank);

  const std::vector<std::size_t>& indices() const { return indices_; }
  bool contains(std::size_t i) const;
  bool empty() const { return indices_.empty(); }
  std::size_t size() const { return indices_.size(); }
  /// Throws std::invalid_argument if an index is >= rank.
  void validate(std::size_t rank) const;
  /// 1-based, e.g. "{1,3}".
  std::string str() const;

  friend bool operator==(const ThetaSubset&, const ThetaSubset&) = default;
  friend auto operator<=>(const ThetaSubset&, const ThetaSubset&) = default;

private:
  std::vector<std::size_t> indices_;
};

/// True iff alpha lies in the span of Theta (alpha in Pi_Theta).
bool in_theta_span(const ThetaSubset& theta, const Root& alpha);

/// Word r_{letters[0]} ... r_{letters[k-1]}; the last letter acts first.
struct ReflectionWord {
  std::vector<std::size_t> letters;

  std::size_t length() const { return letters.size(); }
  friend bool operator==(const ReflectionWord&, const ReflectionWord&) = default;
};

/// r_i(beta) = beta - <beta, alpha_i^vee> alpha_i.
Root reflect(const RootSystem& s, std::size_t i, const Root& beta);

Root apply_word(const RootSystem& s, const ReflectionWord& w, const Root& beta);

/// The same reflection acting on dual-simple-root coordinates (transposed Cartan data).
DualRoot reflect(const RootSystem& s, std::size_t i, const DualRoot& v);

/// Orbit of beta under W_Theta by breadth-first closure; sorted by root_order.
std::vector<Root> w_theta_orbit(const RootSystem& s, const ThetaSubset& theta, const Root& beta);

/// Trace of connect_word, for reports and descent checks.
struct ConnectTrace {
  ReflectionWord word;
  /// sum |n_i| of beta_current - beta2 over Theta, one entry per visited root.
  std::vector<int> potential;
};

/// A W_Theta word taking beta1 to beta2 by coefficient descent. Requires both
/// roots outside Pi_Theta, of equal length, and congruent mod R_Theta; throws
/// std::invalid_argument otherwise.
ReflectionWord connect_word(const RootSystem& s, const ThetaSubset& theta, const Root& beta1,
                            const Root& beta2);
ConnectTrace connect_trace(const RootSystem& s, const ThetaSubset& theta, const Root& beta1,
                           const Root& beta2);

/// Result of the long-root neighbour construction for a short simple root.
struct LongNeighbor {
  Root phi;
  /// Short simple roots alpha = path[0], ..., path.back(), ending next to `long_simple`.
  std::vector<std::size_t> path;
  std::size_t long_simple = 0;
  /// k = <alpha_n, beta^vee> for the last short root on the path and the long simple root.
  int k = 0;
};

/// For a short simple root alpha, a long root phi with <alpha, phi> != 0, built
/// by reflecting the nearest long simple root back along the Dynkin path.
/// Throws std::invalid_argument if the system has no long simple root or
/// alpha is not a short simple root.
LongNeighbor long_neighbor_chain(const RootSystem& s, std::size_t alpha);
Root long_neighbor(const RootSystem& s, std::size_t alpha);

}  // namespace flagtop
