#include "flagtop/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace flagtop {

namespace {

void link(Matrix<int>& a, std::size_t i, std::size_t j) {
  a(i, j) = -1;
  a(j, i) = -1;
}

// Symmetrizer from Cartan data: <a_i, a_j> = A_ij d_j = A_ji d_i.
RatVector symmetrize(const Matrix<int>& a) {
  const std::size_t n = a.rows();
  RatVector d(n, Rational(0));
  if (n == 0) return d;
  d[0] = 1;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t i = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || a(i, j) == 0 || d[j] != 0) continue;
      // A_ij d_j = A_ji d_i
      d[j] = d[i] * a(j, i) / a(i, j);
      queue.push_back(j);
    }
  }
  Rational longest = *std::max_element(d.begin(), d.end());
  for (auto& x : d) x /= longest;
  return d;
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E: return "E";
    case Family::F: return "F";
    case Family::G: return "G";
    case Family::BC: return "BC";
  }
  return "?";
}

std::string to_string(LengthClass c) {
  switch (c) {
    case LengthClass::Short: return "short";
    case LengthClass::Long: return "long";
    case LengthClass::Longer: return "longer";
  }
  return "?";
}

void RootSystemKind::validate() const {
  bool ok = false;
  switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::B:
    case Family::C: ok = rank >= 2; break;
    case Family::D: ok = rank >= 3; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
    case Family::BC: ok = rank >= 1; break;
  }
  if (!ok)
    throw std::invalid_argument("invalid rank " + std::to_string(rank) + " for family " +
                                family_name(family));
}

std::string RootSystemKind::name() const { return family_name(family) + std::to_string(rank); }

RootSystemKind RootSystemKind::parse(std::string_view text) {
  std::string upper;
  for (char c : text) upper.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  std::size_t split = 0;
  while (split < upper.size() && std::isalpha(static_cast<unsigned char>(upper[split]))) ++split;
  const std::string letters = upper.substr(0, split);
  const std::string digits = upper.substr(split);
  static const std::map<std::string, Family> families = {
      {"A", Family::A}, {"B", Family::B}, {"C", Family::C}, {"D", Family::D},
      {"E", Family::E}, {"F", Family::F}, {"G", Family::G}, {"BC", Family::BC}};
  auto it = families.find(letters);
  if (it == families.end() || digits.empty() ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
      digits.size() > 3)
    throw std::invalid_argument("cannot parse root system kind '" + std::string(text) + "'");
  RootSystemKind k{it->second, std::stoi(digits)};
  k.validate();
  return k;
}

int Root::height() const { return std::accumulate(coords.begin(), coords.end(), 0); }

bool Root::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
}

bool Root::is_positive() const {
  return !is_zero() && std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; });
}

Root Root::operator-() const {
  Root r = *this;
  for (auto& c : r.coords) c = -c;
  return r;
}

Root operator+(const Root& a, const Root& b) {
  Root r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
  return r;
}

Root operator-(const Root& a, const Root& b) { return a + (-b); }

Root operator*(int k, const Root& a) {
  Root r = a;
  for (auto& c : r.coords) c *= k;
  return r;
}

std::string Root::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? "," : "") << coords[i];
  os << ')';
  return os.str();
}

bool root_order(const Root& a, const Root& b) {
  const int ha = a.height(), hb = b.height();
  if (ha != hb) return ha < hb;
  return a.coords > b.coords;
}

bool DualRoot::is_integral() const {
  return std::all_of(coords.begin(), coords.end(), [](const Rational& q) { return q.get_den() == 1; });
}

std::string DualRoot::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? "," : "") << coords[i].get_str();
  os << ')';
  return os.str();
}

Matrix<int> cartan_matrix(const RootSystemKind& kind) {
  kind.validate();
  const std::size_t n = static_cast<std::size_t>(kind.rank);
  Matrix<int> a(n, n, 0);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = 2;
  switch (kind.family) {
    case Family::A:
      for (std::size_t i = 0; i + 1 < n; ++i) link(a, i, i + 1);
      break;
    case Family::B:
    case Family::BC:
      for (std::size_t i = 0; i + 1 < n; ++i) link(a, i, i + 1);
      if (n >= 2) a(n - 2, n - 1) = -2;  // alpha_n short
      break;
    case Family::C:
      for (std::size_t i = 0; i + 1 < n; ++i) link(a, i, i + 1);
      a(n - 1, n - 2) = -2;  // alpha_n long
      break;
    case Family::D:
      for (std::size_t i = 0; i + 2 < n; ++i) link(a, i, i + 1);
      link(a, n - 3, n - 1);
      break;
    case Family::E:
      link(a, 0, 2);
      link(a, 1, 3);
      for (std::size_t i = 2; i + 1 < n; ++i) link(a, i, i + 1);
      break;
    case Family::F:
      link(a, 0, 1);
      link(a, 1, 2);
      link(a, 2, 3);
      a(1, 2) = -2;
      break;
    case Family::G:
      a(0, 1) = -1;
      a(1, 0) = -3;
      break;
  }
  return a;
}

std::size_t expected_root_count(const RootSystemKind& kind) {
  const std::size_t n = static_cast<std::size_t>(kind.rank);
  switch (kind.family) {
    case Family::A: return n * (n + 1);
    case Family::B:
    case Family::C: return 2 * n * n;
    case Family::D: return 2 * n * (n - 1);
    case Family::E: return n == 6 ? 72 : n == 7 ? 126 : 240;
    case Family::F: return 48;
    case Family::G: return 12;
    case Family::BC: return 2 * n * n + 2 * n;
  }
  return 0;
}

RootSystem::RootSystem(RootSystemKind kind, Matrix<int> cartan, RatVector symmetrizer,
                       std::vector<Root> seeds)
    : kind_(kind), cartan_(std::move(cartan)), symmetrizer_(std::move(symmetrizer)) {
  const std::size_t n = rank();
  gram_ = RatMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram_(i, j) = cartan_(i, j) * symmetrizer_[j];

  // Orbit closure of the seeds under the simple reflections.
  std::deque<Root> queue;
  auto visit = [&](Root r) {
    if (index_.emplace(r, roots_.size()).second) {
      roots_.push_back(r);
      queue.push_back(std::move(r));
    }
  };
  for (auto& s : seeds) visit(s);
  while (!queue.empty()) {
    Root beta = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      const int p = pairing_with_coroot(beta, i);
      if (p == 0) continue;
      Root image = beta;
      image.coords[i] -= p;
      visit(std::move(image));
    }
  }

  std::sort(roots_.begin(), roots_.end(), [](const Root& a, const Root& b) {
    const bool pa = a.is_positive(), pb = b.is_positive();
    if (pa != pb) return pa;
    if (pa) return root_order(a, b);
    return root_order(-a, -b);
  });
  index_.clear();
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    index_.emplace(roots_[i], i);
    if (roots_[i].is_positive()) positive_.push_back(roots_[i]);
  }
}

RootSystem RootSystem::build(const RootSystemKind& kind) {
  Matrix<int> a = cartan_matrix(kind);
  const std::size_t n = a.rows();
  RatVector d;
  if (kind.family == Family::BC && n == 1) {
    d = {Rational(1, 2)};
  } else {
    d = symmetrize(a);
  }
  std::vector<Root> seeds;
  for (std::size_t i = 0; i < n; ++i) {
    Root r{std::vector<int>(n, 0)};
    r.coords[i] = 1;
    seeds.push_back(r);
  }
  if (kind.family == Family::BC) seeds.push_back(2 * seeds.back());
  return RootSystem(kind, std::move(a), std::move(d), std::move(seeds));
}

Root RootSystem::simple_root(std::size_t i) const {
  if (i >= rank()) throw std::invalid_argument("simple root index out of range");
  Root r{std::vector<int>(rank(), 0)};
  r.coords[i] = 1;
  return r;
}

std::size_t RootSystem::index_of(const Root& r) const {
  auto it = index_.find(r);
  if (it == index_.end()) throw std::invalid_argument(r.str() + " is not a root of " + kind_.name());
  return it->second;
}

void RootSystem::require_root(const Root& r) const {
  if (r.rank() != rank() || !contains(r))
    throw std::invalid_argument(r.str() + " is not a root of " + kind_.name());
}

bool RootSystem::is_simply_laced() const {
  return is_reduced() &&
         std::all_of(symmetrizer_.begin(), symmetrizer_.end(), [](const Rational& d) { return d == 1; });
}

Rational RootSystem::inner_product(const Root& a, const Root& b) const {
  Rational sum = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (a.coords[i] == 0) continue;
    for (std::size_t j = 0; j < rank(); ++j)
      if (b.coords[j] != 0) sum += gram_(i, j) * a.coords[i] * b.coords[j];
  }
  return sum;
}

int RootSystem::pairing_with_coroot(const Root& beta, std::size_t i) const {
  if (i >= rank()) throw std::invalid_argument("simple root index out of range");
  int p = 0;
  for (std::size_t j = 0; j < rank(); ++j) p += beta.coords[j] * cartan_(j, i);
  return p;
}

LengthClass length_class(const RootSystem& s, const Root& alpha) {
  s.require_root(alpha);
  const Rational n2 = s.norm2(alpha);
  if (n2 < 2) return LengthClass::Short;
  if (n2 == 2) return LengthClass::Long;
  return LengthClass::Longer;
}

DualRoot dual(const RootSystem& s, const Root& alpha) {
  s.require_root(alpha);
  const Rational d_alpha = s.norm2(alpha) / 2;
  DualRoot out;
  out.coords.reserve(s.rank());
  for (std::size_t i = 0; i < s.rank(); ++i)
    out.coords.push_back(Rational(alpha.coords[i]) * s.symmetrizer()[i] / d_alpha);
  return out;
}

namespace {

// Factor taking dual-simple-root coordinates to the indivisible simple basis of
// the dual system: for BC the short simple root alpha_n has dual 2 alpha_n,
// whose indivisible half becomes the dual system's alpha_n.
std::vector<int> dual_basis_scale(const RootSystem& s) {
  std::vector<int> scale(s.rank(), 1);
  if (!s.is_reduced()) scale.back() = 2;
  return scale;
}

}  // namespace

RootSystem dual_system(const RootSystem& s) {
  RootSystemKind k = s.kind();
  if (k.family == Family::B)
    k.family = Family::C;
  else if (k.family == Family::C)
    k.family = Family::B;
  if (!s.is_reduced()) return RootSystem::build(k);

  Matrix<int> a = s.cartan().transposed();
  RatVector d(s.rank());
  for (std::size_t i = 0; i < s.rank(); ++i) d[i] = 1 / s.symmetrizer()[i];
  Rational longest = *std::max_element(d.begin(), d.end());
  for (auto& x : d) x /= longest;
  std::vector<Root> seeds;
  for (std::size_t i = 0; i < s.rank(); ++i) seeds.push_back(s.simple_root(i));
  return RootSystem(k, std::move(a), std::move(d), std::move(seeds));
}

Root dual_as_root(const RootSystem& s, const Root& alpha) {
  const DualRoot dv = dual(s, alpha);
  const auto scale = dual_basis_scale(s);
  Root r{std::vector<int>(s.rank(), 0)};
  for (std::size_t i = 0; i < s.rank(); ++i) {
    Rational c = dv.coords[i] * scale[i];
    if (c.get_den() != 1) throw std::logic_error("dual root " + dv.str() + " is not integral in the dual basis");
    r.coords[i] = static_cast<int>(c.get_num().get_si());
  }
  return r;
}

}  // namespace flagtop
