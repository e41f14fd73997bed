#include "flagtop/isotropy.hpp"

#include "flagtop/lattice.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace flagtop {

namespace {

void require_outside(const ThetaSubset& theta, const Root& r) {
  if (in_theta_span(theta, r))
    throw std::invalid_argument(r.str() + " lies in Pi_Theta; no sphere is attached to it");
}

RatVector as_rational(const Root& r) { return RatVector(r.coords.begin(), r.coords.end()); }

// Groups the positive roots with an equivalence predicate; the zero class is
// detected with `is_zero`.
IsotropyDecomposition partition(const RootSystem& s, const ThetaSubset& theta,
                                 const std::function<bool(const Root&)>& is_zero,
                                 const std::function<bool(const Root&, const Root&)>& equivalent) {
  theta.validate(s.rank());
  IsotropyDecomposition d;
  d.theta = theta;
  d.reduced = s.is_reduced();

  ResidueClass zero;
  zero.is_zero_class = true;
  zero.representative = Root{std::vector<int>(s.rank(), 0)};
  std::vector<ResidueClass> nonzero;
  for (const auto& beta : s.positive_roots()) {
    if (is_zero(beta)) {
      zero.members.push_back(beta);
      zero.lengths_present.insert(length_class(s, beta));
      continue;
    }
    auto it = std::find_if(nonzero.begin(), nonzero.end(),
                           [&](const ResidueClass& c) { return equivalent(c.representative, beta); });
    if (it == nonzero.end()) {
      nonzero.push_back(ResidueClass{beta, {}, {}, false});
      it = std::prev(nonzero.end());
    }
    it->members.push_back(beta);
    it->lengths_present.insert(length_class(s, beta));
  }
  // positive_roots() is already in root_order, so representatives are the
  // minimal members and the classes are created in representative order.
  d.classes.push_back(std::move(zero));
  for (auto& c : nonzero) d.classes.push_back(std::move(c));
  if (d.reduced) {
    std::vector<std::size_t> dims;
    for (std::size_t i = 1; i < d.classes.size(); ++i) dims.push_back(2 * d.classes[i].members.size());
    d.component_dims = std::move(dims);
  }
  return d;
}

}  // namespace

bool ResidueClass::contains(const Root& r) const {
  return std::find(members.begin(), members.end(), r) != members.end();
}

const ResidueClass& IsotropyDecomposition::class_of(const Root& r) const {
  for (std::size_t i = 1; i < classes.size(); ++i)
    if (classes[i].contains(r)) return classes[i];
  throw std::invalid_argument(r.str() + " is not in a nonzero residue class");
}

IsotropyDecomposition residue_classes(const RootSystem& s, const ThetaSubset& theta) {
  const IntegerLattice r_theta = theta_root_lattice(s, theta.indices());
  return partition(
      s, theta, [&](const Root& b) { return member(r_theta, as_rational(b)); },
      [&](const Root& a, const Root& b) { return member(r_theta, as_rational(a - b)); });
}

IsotropyDecomposition residue_classes_by_coefficients(const RootSystem& s, const ThetaSubset& theta) {
  auto outside = [&](const Root& r) {
    std::vector<int> key;
    for (std::size_t i = 0; i < r.rank(); ++i)
      if (!theta.contains(i)) key.push_back(r.coords[i]);
    return key;
  };
  return partition(
      s, theta,
      [&](const Root& b) {
        auto k = outside(b);
        return std::all_of(k.begin(), k.end(), [](int c) { return c == 0; });
      },
      [&](const Root& a, const Root& b) { return outside(a) == outside(b); });
}

std::size_t metric_parameter_count(const IsotropyDecomposition& d) { return d.nonzero_count(); }

bool same_invariant_geometry(const RootSystem& s, const ThetaSubset& theta, const Root& alpha,
                             const Root& beta) {
  s.require_root(alpha);
  s.require_root(beta);
  require_outside(theta, alpha);
  require_outside(theta, beta);
  return member(theta_root_lattice(s, theta.indices()), as_rational(alpha - beta));
}

std::optional<ReflectionWord> isometry_witness(const RootSystem& s, const ThetaSubset& theta,
                                               const Root& alpha, const Root& beta) {
  if (!same_invariant_geometry(s, theta, alpha, beta)) return std::nullopt;
  if (s.norm2(alpha) != s.norm2(beta)) return std::nullopt;
  return connect_word(s, theta, alpha, beta);
}

}  // namespace flagtop
