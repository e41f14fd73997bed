// Acceptance checks, one per criterion. Prints a single PASS/FAIL line per
// criterion followed by indented detail lines. Exit status 0 iff all selected
// criteria pass.
//
//   acceptance                 run all criteria
//   acceptance --criterion N   run criterion N only

#include "flagtop/isotropy.hpp"
#include "flagtop/lattice.hpp"
#include "flagtop/pi2.hpp"
#include "flagtop/survey.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

using namespace flagtop;

namespace {

constexpr double kExampleSeconds = 1.0;
constexpr double kSurveySeconds = 60.0;
constexpr int kGridMaxRank = 4;
constexpr int kLongNeighborMaxRank = 6;
constexpr int kRandomVectorsPerLattice = 1000;

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> details;

  void fail(const std::string& line) {
    pass = false;
    if (details.size() < 25) details.push_back(line);
  }
};

struct Instance {
  RootSystem s;
  ThetaSubset theta;
};

std::vector<RootSystem> grid_systems() {
  SurveyConfig config;
  config.families = {Family::A, Family::B, Family::C, Family::D, Family::F, Family::G, Family::BC};
  config.max_rank = kGridMaxRank;
  std::vector<RootSystem> out;
  for (const auto& k : survey_kinds(config)) out.push_back(RootSystem::build(k));
  return out;
}

template <class F>
void for_each_instance(const std::vector<RootSystem>& systems, F&& f) {
  for (const auto& s : systems)
    for (unsigned long mask = 0; mask < (1ul << s.rank()); ++mask) f(s, ThetaSubset::from_mask(mask, s.rank()));
}

std::string where(const RootSystem& s, const ThetaSubset& theta) { return s.kind().name() + " " + theta.str(); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome g2_example() {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  const RootSystem g2 = RootSystem::build({Family::G, 2});
  const auto theta = ThetaSubset::parse("1", 2);
  const auto dec = residue_classes(g2, theta);
  const auto reports = rigidity_report(g2, theta);
  const auto dual_reports = rigidity_report(dual_system(g2), theta);
  const double elapsed = seconds_since(t0);

  if (dec.nonzero_count() != 2) out.fail("expected 2 nonzero classes, got " + std::to_string(dec.nonzero_count()));
  bool found_mixed = false;
  for (const auto& r : reports) {
    if (r.class_ref.members.size() != 4) continue;
    found_mixed = true;
    if (r.class_ref.lengths_present != std::set<LengthClass>{LengthClass::Short, LengthClass::Long})
      out.fail("4-element class does not contain both lengths");
    if (r.w_theta_transitive) out.fail("4-element class reported transitive");
    if (r.theta_rigid) out.fail("4-element class reported rigid");
  }
  if (!found_mixed) out.fail("no 4-element class");
  if (dual_reports.size() != 3) out.fail("dual: expected 3 nonzero classes, got " + std::to_string(dual_reports.size()));
  for (const auto& r : dual_reports)
    if (!r.w_theta_transitive || !r.theta_rigid)
      out.fail("dual class " + r.class_ref.representative.str() + " not transitive/rigid");
  if (elapsed >= kExampleSeconds) out.fail("took " + std::to_string(elapsed) + " s");
  std::ostringstream os;
  os << "G2 Theta={1}: " << dec.nonzero_count() << " classes; dual: " << dual_reports.size() << " classes; "
     << elapsed * 1e3 << " ms";
  out.summary = os.str();
  return out;
}

Outcome triple_equivalence() {
  Outcome out;
  const auto systems = grid_systems();
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t instances = 0, classes = 0;
  for_each_instance(systems, [&](const RootSystem& s, const ThetaSubset& theta) {
    ++instances;
    for (const auto& r : rigidity_report(s, theta)) {
      ++classes;
      if (!r.consistent()) {
        std::ostringstream os;
        os << where(s, theta) << " class " << r.class_ref.representative.str() << ": transitive=" << r.w_theta_transitive
           << " single_length=" << r.single_length << " dual_containment=" << r.dual_containment;
        out.fail(os.str());
      }
    }
  });
  const double elapsed = seconds_since(t0);
  if (elapsed >= kSurveySeconds) out.fail("took " + std::to_string(elapsed) + " s");
  std::ostringstream os;
  os << instances << " instances, " << classes << " classes, " << elapsed << " s single-threaded";
  out.summary = os.str();
  return out;
}

Outcome full_transitivity_classification() {
  Outcome out;
  std::size_t instances = 0, mismatches = 0, dual_mismatches = 0, at_full_theta = 0;
  for_each_instance(grid_systems(), [&](const RootSystem& s, const ThetaSubset& theta) {
    ++instances;
    const bool closed = full_transitivity_closed_form(s, theta);
    const bool full = full_transitivity(s, theta);
    const bool coincide = dual_classes_coincide(s, theta);
    const bool bad = full != closed || coincide != closed;
    if (full != closed) ++mismatches;
    if (coincide != closed) ++dual_mismatches;
    if (bad && theta.size() == s.rank()) ++at_full_theta;
    if (bad) {
      std::ostringstream os;
      os << where(s, theta) << ": full_transitivity=" << full << " dual_classes_coincide=" << coincide
         << " closed_form=" << closed;
      out.fail(os.str());
    }
  });
  std::ostringstream os;
  os << instances << " instances, " << mismatches << " transitivity mismatches, " << dual_mismatches
     << " dual-class mismatches (" << at_full_theta << " of the failing instances have Theta = Sigma)";
  out.summary = os.str();
  return out;
}

Outcome long_theta() {
  Outcome out;
  std::size_t instances = 0, violations = 0;
  std::map<std::string, std::size_t> by_pattern;
  for_each_instance(grid_systems(), [&](const RootSystem& s, const ThetaSubset& theta) {
    ++instances;
    bool all_single = true, all_transitive = true;
    for (const auto& r : rigidity_report(s, theta)) {
      all_single = all_single && r.single_length;
      all_transitive = all_transitive && r.w_theta_transitive;
    }
    const bool long_roots = long_theta_criterion(s, theta);
    if (long_roots == all_single && all_single == all_transitive) return;
    ++violations;
    std::ostringstream os;
    os << "theta_long=" << long_roots << " single_length=" << all_single << " transitive=" << all_transitive;
    ++by_pattern[os.str()];
    out.fail(where(s, theta) + ": " + os.str());
  });
  std::ostringstream os;
  os << instances << " instances, " << violations << " violations";
  for (const auto& [pattern, n] : by_pattern) os << "; " << n << "x [" << pattern << "]";
  out.summary = os.str();
  return out;
}

std::vector<Integer> expected_adjoint_pi1(const RootSystemKind& k) {
  switch (k.family) {
    case Family::A: return {k.rank + 1};
    case Family::B:
    case Family::C: return {2};
    case Family::D: return k.rank % 2 ? std::vector<Integer>{4} : std::vector<Integer>{2, 2};
    case Family::E: return k.rank == 6 ? std::vector<Integer>{3} : k.rank == 7 ? std::vector<Integer>{2} : std::vector<Integer>{};
    default: return {};
  }
}

Outcome pi1_and_boundary() {
  Outcome out;
  std::size_t instances = 0;
  for_each_instance(grid_systems(), [&](const RootSystem& s, const ThetaSubset& theta) {
    if (!s.is_reduced()) return;
    ++instances;
    const auto q = quotient(standard_lattices(s).dual_root, theta_dual_root_lattice(s, theta.indices()));
    if (!q.torsion_free() || q.free_rank != s.rank() - theta.size())
      out.fail(where(s, theta) + ": coroot quotient " + q.str());
  });
  std::size_t kinds = 0;
  std::vector<RootSystemKind> all;
  for (int n = 1; n <= 8; ++n) {
    all.push_back({Family::A, n});
    if (n >= 2) all.push_back({Family::B, n});
    if (n >= 2) all.push_back({Family::C, n});
    if (n >= 3) all.push_back({Family::D, n});
  }
  for (int n = 6; n <= 8; ++n) all.push_back({Family::E, n});
  all.push_back({Family::F, 4});
  all.push_back({Family::G, 2});
  for (const auto& k : all) {
    ++kinds;
    const auto p = pi1_report(RootSystem::build(k), ThetaSubset{}, GroupPreset::Adjoint);
    const QuotientGroup expected{0, expected_adjoint_pi1(k)};
    if (p.pi1_u != expected) out.fail(k.name() + ": adjoint pi1 " + p.pi1_u.str() + ", expected " + expected.str());
  }
  out.summary = std::to_string(instances) + " reduced instances torsion-free; adjoint pi1 checked for " +
                std::to_string(kinds) + " kinds";
  return out;
}

Outcome connect_words() {
  Outcome out;
  std::size_t pairs = 0, longest = 0;
  for_each_instance(grid_systems(), [&](const RootSystem& s, const ThetaSubset& theta) {
    const auto dec = residue_classes(s, theta);
    for (std::size_t c = 1; c < dec.classes.size(); ++c)
      for (const auto& b1 : dec.classes[c].members)
        for (const auto& b2 : dec.classes[c].members) {
          if (s.norm2(b1) != s.norm2(b2)) continue;
          ++pairs;
          const std::string tag = where(s, theta) + " " + b1.str() + " -> " + b2.str();
          try {
            const auto trace = connect_trace(s, theta, b1, b2);
            longest = std::max(longest, trace.word.length());
            for (auto l : trace.word.letters)
              if (!theta.contains(l)) out.fail(tag + ": letter outside Theta");
            if (apply_word(s, trace.word, b1) != b2) out.fail(tag + ": word does not map beta1 to beta2");
            for (std::size_t i = 1; i < trace.potential.size(); ++i)
              if (trace.potential[i] >= trace.potential[i - 1]) out.fail(tag + ": potential did not decrease");
          } catch (const std::exception& e) {
            out.fail(tag + ": " + e.what());
          }
        }
  });
  out.summary = std::to_string(pairs) + " same-length pairs connected, longest word " + std::to_string(longest);
  return out;
}

Outcome long_neighbors() {
  Outcome out;
  std::size_t checked = 0;
  std::vector<std::string> skipped;
  for (int n = 1; n <= kLongNeighborMaxRank; ++n) {
    std::vector<RootSystemKind> kinds{{Family::BC, n}};
    if (n >= 2) kinds.push_back({Family::B, n});
    if (n >= 3) kinds.push_back({Family::C, n});
    if (n == 2) kinds.push_back({Family::G, 2});
    if (n == 4) kinds.push_back({Family::F, 4});
    for (const auto& k : kinds) {
      const RootSystem s = RootSystem::build(k);
      bool has_long = false;
      for (const auto& r : s.roots()) has_long = has_long || length_class(s, r) == LengthClass::Long;
      if (!has_long) {
        skipped.push_back(k.name());
        continue;
      }
      for (std::size_t i = 0; i < s.rank(); ++i) {
        if (length_class(s, s.simple_root(i)) != LengthClass::Short) continue;
        ++checked;
        const std::string tag = k.name() + " alpha_" + std::to_string(i + 1);
        try {
          const Root phi = long_neighbor(s, i);
          if (!s.contains(phi)) out.fail(tag + ": result is not a root");
          else if (length_class(s, phi) != LengthClass::Long) out.fail(tag + ": " + phi.str() + " is not long");
          else if (s.inner_product(phi, s.simple_root(i)) == 0) out.fail(tag + ": zero pairing");
        } catch (const std::exception& e) {
          out.fail(tag + ": " + e.what());
        }
      }
    }
  }
  out.summary = std::to_string(checked) + " short simple roots";
  for (const auto& k : skipped) out.summary += "; " + k + " has no long roots";
  return out;
}

Outcome oracle_equivalence() {
  Outcome out;
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> small(-5, 5), den(1, 4);
  std::size_t instances = 0, vectors = 0;
  auto check_lattice = [&](const IntegerLattice& l, const std::string& tag) {
    std::vector<oracle::QVec> rows;
    for (const auto& b : l.basis()) {
      oracle::QVec q(b.begin(), b.end());
      for (auto& x : q) x /= l.denominator();
      rows.push_back(q);
    }
    for (int v = 0; v < kRandomVectorsPerLattice; ++v) {
      RatVector x(l.ambient_dim(), 0);
      if (v % 2 == 0 && !rows.empty()) {
        for (const auto& r : rows) {
          const int c = small(rng);
          for (std::size_t j = 0; j < x.size(); ++j) x[j] += c * r[j];
        }
        if (v % 4 == 0) x[static_cast<std::size_t>(v / 4) % x.size()] += Rational(1, den(rng) + 1);
      } else {
        for (auto& e : x) e = Rational(small(rng), v % 3 ? 1 : den(rng));
      }
      for (auto& e : x) e.canonicalize();
      ++vectors;
      const auto sol = oracle::solve_rows(rows, x);
      bool expected = sol.has_value();
      if (sol)
        for (const auto& q : *sol) expected = expected && q.get_den() == 1;
      if (member(l, x) != expected) out.fail(tag + ": member disagrees with rational solve");
    }
  };
  for_each_instance(grid_systems(), [&](const RootSystem& s, const ThetaSubset& theta) {
    if (!s.is_reduced()) return;
    ++instances;
    const auto a = residue_classes(s, theta);
    const auto b = residue_classes_by_coefficients(s, theta);
    bool same = a.classes.size() == b.classes.size();
    for (std::size_t c = 0; same && c < a.classes.size(); ++c) same = a.classes[c].members == b.classes[c].members;
    if (!same) out.fail(where(s, theta) + ": partitions differ");
    check_lattice(theta_root_lattice(s, theta.indices()), where(s, theta) + " R_Theta");
    check_lattice(theta_dual_root_lattice(s, theta.indices()), where(s, theta) + " dual R_Theta");
  });
  out.summary = std::to_string(instances) + " reduced instances, " + std::to_string(vectors) + " random vectors (" +
                std::to_string(kRandomVectorsPerLattice) + " per lattice, 2 lattices per instance)";
  return out;
}

const std::map<int, std::pair<const char*, std::function<Outcome()>>>& criteria() {
  static const std::map<int, std::pair<const char*, std::function<Outcome()>>> table = {
      {1, {"G2 short-Theta example", g2_example}},
      {2, {"transitive <=> single length <=> dual containment", triple_equivalence}},
      {3, {"full transitivity <=> simply laced or Theta empty", full_transitivity_classification}},
      {4, {"Theta long <=> single-length classes <=> transitive classes", long_theta}},
      {5, {"torsion-free boundary image and adjoint pi1", pi1_and_boundary}},
      {6, {"coefficient-descent words connect same-length pairs", connect_words}},
      {7, {"long neighbour of every short simple root", long_neighbors}},
      {8, {"partition and membership oracles agree", oracle_equivalence}},
  };
  return table;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      selected.push_back(std::atoi(argv[++i]));
    } else {
      std::cerr << "usage: acceptance [--criterion N]...\n";
      return 2;
    }
  }
  if (selected.empty())
    for (const auto& [n, c] : criteria()) selected.push_back(n);

  bool all_pass = true;
  for (int n : selected) {
    const auto it = criteria().find(n);
    if (it == criteria().end()) {
      std::cerr << "unknown criterion " << n << '\n';
      return 2;
    }
    const Outcome o = it->second.second();
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << n << " (" << it->second.first << "): " << o.summary
              << '\n';
    for (const auto& d : o.details) std::cout << "      " << d << '\n';
    all_pass = all_pass && o.pass;
  }
  return all_pass ? 0 : 1;
}
