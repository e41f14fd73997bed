#include "flagtop/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

namespace flagtop {

ThetaSubset::ThetaSubset(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
}

ThetaSubset ThetaSubset::from_mask(unsigned long mask, std::size_t rank) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < rank; ++i)
    if (mask & (1UL << i)) idx.push_back(i);
  return ThetaSubset(std::move(idx));
}

ThetaSubset ThetaSubset::parse(std::string_view text, std::size_t rank) {
  std::vector<std::size_t> idx;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    if (!std::all_of(token.begin(), token.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw std::invalid_argument("bad simple-root index '" + token + "'");
    const long v = std::stol(token);
    if (v < 1 || static_cast<std::size_t>(v) > rank)
      throw std::invalid_argument("simple-root index " + token + " out of range 1.." + std::to_string(rank));
    idx.push_back(static_cast<std::size_t>(v - 1));
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '{' || c == '}')
      flush();
    else
      token.push_back(c);
  }
  flush();
  return ThetaSubset(std::move(idx));
}

bool ThetaSubset::contains(std::size_t i) const {
  return std::binary_search(indices_.begin(), indices_.end(), i);
}

void ThetaSubset::validate(std::size_t rank) const {
  for (auto i : indices_)
    if (i >= rank) throw std::invalid_argument("Theta index out of range for rank " + std::to_string(rank));
}

std::string ThetaSubset::str() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < indices_.size(); ++k) os << (k ? "," : "") << indices_[k] + 1;
  os << '}';
  return os.str();
}

bool in_theta_span(const ThetaSubset& theta, const Root& alpha) {
  for (std::size_t i = 0; i < alpha.rank(); ++i)
    if (alpha.coords[i] != 0 && !theta.contains(i)) return false;
  return true;
}

Root reflect(const RootSystem& s, std::size_t i, const Root& beta) {
  if (i >= s.rank()) throw std::invalid_argument("reflection index out of range");
  Root image = beta;
  image.coords[i] -= s.pairing_with_coroot(beta, i);
  return image;
}

DualRoot reflect(const RootSystem& s, std::size_t i, const DualRoot& v) {
  if (i >= s.rank()) throw std::invalid_argument("reflection index out of range");
  DualRoot image = v;
  for (std::size_t j = 0; j < s.rank(); ++j)
    if (v.coords[j] != 0) image.coords[i] -= v.coords[j] * s.cartan()(i, j);
  return image;
}

Root apply_word(const RootSystem& s, const ReflectionWord& w, const Root& beta) {
  Root r = beta;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r = reflect(s, *it, r);
  return r;
}

std::vector<Root> w_theta_orbit(const RootSystem& s, const ThetaSubset& theta, const Root& beta) {
  s.require_root(beta);
  theta.validate(s.rank());
  std::vector<Root> orbit{beta};
  std::map<Root, bool> seen{{beta, true}};
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (auto i : theta.indices()) {
      Root image = reflect(s, i, orbit[head]);
      if (seen.emplace(image, true).second) orbit.push_back(std::move(image));
    }
  }
  std::sort(orbit.begin(), orbit.end(), root_order);
  return orbit;
}

namespace {

int potential(const Root& diff) {
  int p = 0;
  for (int c : diff.coords) p += std::abs(c);
  return p;
}

}  // namespace

ConnectTrace connect_trace(const RootSystem& s, const ThetaSubset& theta, const Root& beta1,
                           const Root& beta2) {
  s.require_root(beta1);
  s.require_root(beta2);
  theta.validate(s.rank());
  if (in_theta_span(theta, beta1) || in_theta_span(theta, beta2))
    throw std::invalid_argument("connect_word: roots must lie outside Pi_Theta");
  if (!in_theta_span(theta, beta1 - beta2))
    throw std::invalid_argument("connect_word: " + beta1.str() + " and " + beta2.str() +
                                " lie in different residue classes mod R_Theta");
  if (s.norm2(beta1) != s.norm2(beta2))
    throw std::invalid_argument("connect_word: " + beta1.str() + " and " + beta2.str() +
                                " have different lengths, no W_Theta word exists");

  ConnectTrace trace;
  Root current = beta1;
  std::vector<std::size_t> applied;  // in application order
  trace.potential.push_back(potential(current - beta2));
  while (current != beta2) {
    const Root diff = current - beta2;  // n_i, supported on Theta
    std::size_t chosen = s.rank();
    for (auto j : theta.indices()) {
      if (diff.coords[j] == 0) continue;
      const int p = s.pairing_with_coroot(current, j);
      if (static_cast<long>(p) * diff.coords[j] > 0) {
        chosen = j;
        break;
      }
    }
    if (chosen == s.rank())
      throw std::logic_error("connect_word: no descending reflection from " + current.str() + " to " +
                             beta2.str());
    current = reflect(s, chosen, current);
    applied.push_back(chosen);
    const int next = potential(current - beta2);
    if (next >= trace.potential.back())
      throw std::logic_error("connect_word: coefficient potential did not decrease at " + current.str());
    trace.potential.push_back(next);
  }
  trace.word.letters.assign(applied.rbegin(), applied.rend());
  return trace;
}

ReflectionWord connect_word(const RootSystem& s, const ThetaSubset& theta, const Root& beta1,
                            const Root& beta2) {
  return connect_trace(s, theta, beta1, beta2).word;
}

LongNeighbor long_neighbor_chain(const RootSystem& s, std::size_t alpha) {
  if (alpha >= s.rank()) throw std::invalid_argument("long_neighbor: index out of range");
  const auto& d = s.symmetrizer();
  const auto& a = s.cartan();
  if (d[alpha] >= 1) throw std::invalid_argument("long_neighbor: simple root is not short");

  // BFS over the Dynkin diagram; neighbours visited in index order.
  const std::size_t n = s.rank();
  std::vector<std::size_t> parent(n, n);
  std::vector<bool> seen(n, false);
  std::deque<std::size_t> queue{alpha};
  seen[alpha] = true;
  std::size_t target = n;
  while (!queue.empty() && target == n) {
    const std::size_t i = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[j] || a(i, j) == 0) continue;
      seen[j] = true;
      parent[j] = i;
      if (d[j] == 1) {
        target = j;
        break;
      }
      queue.push_back(j);
    }
  }
  if (target == n) throw std::invalid_argument("long_neighbor: no long simple root is connected to alpha");

  LongNeighbor out;
  out.long_simple = target;
  for (std::size_t v = parent[target]; v != n; v = parent[v]) {
    out.path.push_back(v);
    if (v == alpha) break;
  }
  std::reverse(out.path.begin(), out.path.end());
  out.k = a(out.path.back(), target);

  // phi_0 = r_n(beta), phi_{m+1} = r_{n-m-1}(phi_m), ending with r_alpha.
  Root phi = s.simple_root(target);
  if (out.path.size() > 1)
    for (auto it = out.path.rbegin(); it != out.path.rend(); ++it) phi = reflect(s, *it, phi);
  out.phi = phi;
  return out;
}

Root long_neighbor(const RootSystem& s, std::size_t alpha) { return long_neighbor_chain(s, alpha).phi; }

}  // namespace flagtop
