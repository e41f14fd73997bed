#pragma once

#include "flagtop/numeric.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace flagtop {

enum class Family { A, B, C, D, E, F, G, BC };

/// Cartan type label, e.g. B3 or BC2.
struct RootSystemKind {
  Family family = Family::A;
  int rank = 1;

  /// Throws std::invalid_argument when the rank is not allowed for the family.
  void validate() const;
  std::string name() const;
  /// Parses "A3", "bc2", "G2", ...; throws std::invalid_argument.
  static RootSystemKind parse(std::string_view text);

  friend bool operator==(const RootSystemKind&, const RootSystemKind&) = default;
  friend auto operator<=>(const RootSystemKind&, const RootSystemKind&) = default;
};

std::string family_name(Family f);

enum class LengthClass { Short, Long, Longer };

std::string to_string(LengthClass c);

/// A root written in the simple-root basis. Coefficients of a root are bounded
/// by the highest root (at most 6 in E8), so machine ints are exact here.
struct Root {
  std::vector<int> coords;

  std::size_t rank() const { return coords.size(); }
  int height() const;
  bool is_zero() const;
  bool is_positive() const;

  Root operator-() const;
  friend Root operator+(const Root& a, const Root& b);
  friend Root operator-(const Root& a, const Root& b);
  friend Root operator*(int k, const Root& a);
  friend bool operator==(const Root&, const Root&) = default;
  /// Plain lexicographic order on coordinates; usable as a map key.
  friend auto operator<=>(const Root&, const Root&) = default;

  std::string str() const;
};

/// Presentation order: by height, then lexicographically descending so that
/// the simple roots come out in index order.
bool root_order(const Root& a, const Root& b);

/// Coefficients of a dual root over the dual simple roots.
struct DualRoot {
  RatVector coords;

  bool is_integral() const;
  friend bool operator==(const DualRoot&, const DualRoot&) = default;
  std::string str() const;
};

/// An immutable finite root system, reduced or of type BC.
class RootSystem {
public:
  static RootSystem build(const RootSystemKind& kind);

  const RootSystemKind& kind() const { return kind_; }
  std::size_t rank() const { return static_cast<std::size_t>(kind_.rank); }
  /// cartan()(i, j) = <alpha_i, alpha_j^vee>.
  const Matrix<int>& cartan() const { return cartan_; }
  /// d_i = <alpha_i, alpha_i> / 2, normalized so long roots have d = 1.
  const RatVector& symmetrizer() const { return symmetrizer_; }

  const std::vector<Root>& roots() const { return roots_; }
  const std::vector<Root>& positive_roots() const { return positive_; }

  Root simple_root(std::size_t i) const;
  bool contains(const Root& r) const { return index_.count(r) != 0; }
  /// Position in roots(); throws std::invalid_argument for non-roots.
  std::size_t index_of(const Root& r) const;

  bool is_reduced() const { return kind_.family != Family::BC; }
  bool is_simply_laced() const;

  /// Exact Euclidean form on the span of the roots.
  Rational inner_product(const Root& a, const Root& b) const;
  Rational norm2(const Root& a) const { return inner_product(a, a); }
  /// <beta, alpha_i^vee> via Cartan integers.
  int pairing_with_coroot(const Root& beta, std::size_t i) const;

  /// Throws std::invalid_argument if r is not in the system.
  void require_root(const Root& r) const;

private:
  RootSystem(RootSystemKind kind, Matrix<int> cartan, RatVector symmetrizer,
             std::vector<Root> seeds);
  friend RootSystem dual_system(const RootSystem& s);

  RootSystemKind kind_;
  Matrix<int> cartan_;
  RatVector symmetrizer_;
  RatMatrix gram_;
  std::vector<Root> roots_;
  std::vector<Root> positive_;
  std::map<Root, std::size_t> index_;
};

/// Bourbaki Cartan matrix for a reduced kind (B_n Cartan for BC_n).
Matrix<int> cartan_matrix(const RootSystemKind& kind);

/// Classical root count for the kind.
std::size_t expected_root_count(const RootSystemKind& kind);

LengthClass length_class(const RootSystem& s, const Root& alpha);

/// alpha^vee = 2 alpha / <alpha, alpha>, over the dual simple roots.
DualRoot dual(const RootSystem& s, const Root& alpha);

/// The dual root system {alpha^vee}, renormalized so long roots have length^2 2.
/// Its simple roots are the indivisible dual simple roots in the same index
/// order, so Theta keeps its indices when passing to the dual.
RootSystem dual_system(const RootSystem& s);

/// Rewrites dual(s, alpha) in the simple-root coordinates of dual_system(s).
Root dual_as_root(const RootSystem& s, const Root& alpha);

}  // namespace flagtop
