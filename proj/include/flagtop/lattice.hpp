#pragma once

#include "flagtop/numeric.hpp"
#include "flagtop/root_system.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace flagtop {

/// H = U * M with H in row Hermite normal form: nonzero rows first, strictly
/// increasing pivot columns, positive pivots, entries above a pivot reduced
/// into [0, pivot). U is unimodular.
struct HermiteForm {
  IntMatrix h;
  IntMatrix u;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

HermiteForm hnf(const IntMatrix& m);

/// D = U * M * V with D diagonal, d_1 | d_2 | ..., d_i >= 0, U and V unimodular.
struct SmithForm {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;
  std::vector<Integer> diagonal() const;
};

SmithForm snf(const IntMatrix& m);

Integer determinant(const IntMatrix& m);

/// The lattice (1/denominator) * Z-span(basis rows) inside Q^ambient_dim.
/// Basis rows are linearly independent over Q.
class IntegerLattice {
public:
  IntegerLattice() = default;
  IntegerLattice(std::size_t ambient_dim, std::vector<IntVector> basis, Integer denominator = 1);

  /// Spans an arbitrary (possibly dependent) generating set, reduced through HNF.
  static IntegerLattice span(std::size_t ambient_dim, const std::vector<IntVector>& generators,
                             Integer denominator = 1);
  static IntegerLattice span(std::size_t ambient_dim, const std::vector<RatVector>& generators);
  /// Z-span of the coordinate vectors e_i, i in indices.
  static IntegerLattice coordinate(std::size_t ambient_dim, const std::vector<std::size_t>& indices);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<IntVector>& basis() const { return basis_; }
  const Integer& denominator() const { return denominator_; }
  /// Reduced row HNF of the (scaled) basis; canonical for the lattice.
  const IntMatrix& hermite() const { return hermite_.h; }

  /// Exact coordinates x with v = sum x_r * hermite_row_r / denominator, or
  /// empty if v is not in the rational span or x is not integral.
  bool solve(const RatVector& v, IntVector* coords) const;

  friend bool operator==(const IntegerLattice& a, const IntegerLattice& b);

private:
  std::size_t ambient_dim_ = 0;
  std::vector<IntVector> basis_;
  Integer denominator_ = 1;
  HermiteForm hermite_;
};

/// v in the lattice, decided by back-substitution against the HNF.
bool member(const IntegerLattice& l, const RatVector& v);
bool member(const IntegerLattice& l, const IntVector& v);

struct QuotientGroup {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // invariant factors >= 2, each dividing the next

  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  bool torsion_free() const { return torsion.empty(); }
  std::string str() const;
  friend bool operator==(const QuotientGroup&, const QuotientGroup&) = default;
};

/// l_big / l_small. Throws std::invalid_argument unless l_small is contained in l_big.
QuotientGroup quotient(const IntegerLattice& l_big, const IntegerLattice& l_small);

/// Lattices attached to a root system. `root` lives in simple-root coordinates.
/// `dual_root`, `coroot` and `coweight` live in dual-simple-root coordinates
/// (the identification of coroot vectors with dual roots).
struct StandardLattices {
  IntegerLattice root;
  IntegerLattice dual_root;
  IntegerLattice coroot;
  IntegerLattice coweight;
};

/// For a nonreduced system the coweight lattice is left empty (dimension 0).
StandardLattices standard_lattices(const RootSystem& s);

/// R_Theta in simple-root coordinates.
IntegerLattice theta_root_lattice(const RootSystem& s, const std::vector<std::size_t>& theta);
/// R^vee_Theta, the Z-span of the dual Theta roots, in dual-simple-root coordinates.
IntegerLattice theta_dual_root_lattice(const RootSystem& s, const std::vector<std::size_t>& theta);

}  // namespace flagtop
