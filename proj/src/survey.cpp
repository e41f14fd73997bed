#include "flagtop/survey.hpp"

#include "flagtop/isotropy.hpp"
#include "flagtop/lattice.hpp"
#include "flagtop/pi2.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cctype>
#include <iomanip>
#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace flagtop {

namespace {

const std::string kTriple = "triple_equivalence";
const std::string kFull = "full_transitivity";
const std::string kDualEq = "dual_class_equality";
const std::string kLongTheta = "long_theta_criterion";
const std::string kBoundary = "boundary_torsion_free";
const std::string kConnect = "connect_word";
const std::string kInvariance = "class_invariance";
const std::string kPartition = "partition_oracle";
const std::string kHomotopy = "same_length_same_homotopy";
const std::string kEquivariance = "equivariance";
const std::string kNeighbor = "long_neighbor";

class Recorder {
public:
  Recorder(InstanceResult& r) : r_(r) {}
  void check(const std::string& name, bool ok, const std::string& detail = {}) {
    ++r_.evaluated[name];
    if (!ok) r_.violations.push_back({r_.kind.name(), r_.theta.str(), name, detail});
  }

private:
  InstanceResult& r_;
};

std::string flag(bool b) { return b ? "true" : "false"; }

Root positive_part(const Root& r) { return r.is_positive() ? r : -r; }

bool same_partition(const IsotropyDecomposition& a, const IsotropyDecomposition& b) {
  if (a.classes.size() != b.classes.size()) return false;
  for (std::size_t i = 0; i < a.classes.size(); ++i)
    if (a.classes[i].members != b.classes[i].members ||
        a.classes[i].representative != b.classes[i].representative)
      return false;
  return true;
}

}  // namespace

void SurveyConfig::validate() const {
  if (max_rank < 0 || max_rank > 8) throw std::invalid_argument("max_rank must be in [0, 8]");
  if (jobs < 1) throw std::invalid_argument("jobs must be >= 1");
}

std::vector<Family> parse_families(const std::string& text) {
  std::string upper;
  for (char c : text) upper.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (upper == "ALL")
    return {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G, Family::BC};
  static const std::map<std::string, Family> names = {
      {"A", Family::A}, {"B", Family::B}, {"C", Family::C}, {"D", Family::D},
      {"E", Family::E}, {"F", Family::F}, {"G", Family::G}, {"BC", Family::BC}};
  std::vector<Family> out;
  std::stringstream ss(upper);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), [](unsigned char c) { return std::isspace(c); }), tok.end());
    if (tok.empty()) continue;
    auto it = names.find(tok);
    if (it == names.end()) throw std::invalid_argument("unknown family '" + tok + "'");
    if (std::find(out.begin(), out.end(), it->second) == out.end()) out.push_back(it->second);
  }
  return out;
}

std::vector<RootSystemKind> survey_kinds(const SurveyConfig& config) {
  std::vector<RootSystemKind> kinds;
  for (Family f : config.families)
    for (int n = 1; n <= config.max_rank; ++n) {
      RootSystemKind k{f, n};
      try {
        k.validate();
      } catch (const std::invalid_argument&) {
        continue;
      }
      kinds.push_back(k);
    }
  std::sort(kinds.begin(), kinds.end());
  return kinds;
}

const std::vector<std::string>& survey_checks() {
  static const std::vector<std::string> names = {kTriple,    kFull,      kDualEq,   kLongTheta,
                                                 kBoundary,  kConnect,   kInvariance, kPartition,
                                                 kHomotopy,  kEquivariance, kNeighbor};
  return names;
}

InstanceResult check_instance(const RootSystem& s, const ThetaSubset& theta) {
  InstanceResult res;
  res.kind = s.kind();
  res.theta = theta;
  Recorder rec(res);

  const IsotropyDecomposition dec = residue_classes(s, theta);
  const auto reports = rigidity_report(s, theta);
  res.nonzero_classes = reports.size();

  bool all_transitive = true, all_single = true;
  for (const auto& r : reports) {
    rec.check(kTriple, r.consistent(),
              "class of " + r.class_ref.representative.str() + ": transitive=" + flag(r.w_theta_transitive) +
                  " single_length=" + flag(r.single_length) + " dual_containment=" + flag(r.dual_containment));
    all_transitive = all_transitive && r.w_theta_transitive;
    all_single = all_single && r.single_length;
    if (r.theta_rigid) ++res.rigid_classes;
  }

  const bool closed_form = full_transitivity_closed_form(s, theta);
  const bool full = full_transitivity(s, theta);
  rec.check(kFull, full == closed_form,
            "full_transitivity=" + flag(full) + " closed_form=" + flag(closed_form));
  const bool dual_eq = dual_classes_coincide(s, theta);
  rec.check(kDualEq, dual_eq == closed_form,
            "dual_classes_coincide=" + flag(dual_eq) + " closed_form=" + flag(closed_form));

  const bool long_theta = long_theta_criterion(s, theta);
  rec.check(kLongTheta, long_theta == all_single && all_single == all_transitive,
            "theta_long=" + flag(long_theta) + " all_single_length=" + flag(all_single) +
                " all_transitive=" + flag(all_transitive));

  if (s.is_reduced()) {
    const StandardLattices lat = standard_lattices(s);
    const QuotientGroup q = quotient(lat.coroot, theta_dual_root_lattice(s, theta.indices()));
    rec.check(kBoundary, q.torsion_free() && q.free_rank == s.rank() - theta.size(),
              "coroot quotient " + q.str());
  }

  const auto by_coeff = residue_classes_by_coefficients(s, theta);
  rec.check(kPartition, same_partition(dec, by_coeff), "HNF and coefficient partitions differ");

  for (std::size_t c = 0; c < dec.classes.size(); ++c) {
    const ResidueClass& cls = dec.classes[c];
    for (const auto& beta : cls.members)
      for (auto i : theta.indices()) {
        const Root image = positive_part(reflect(s, i, beta));
        rec.check(kInvariance, cls.contains(image),
                  "r_" + std::to_string(i + 1) + beta.str() + " leaves its class");
      }
    if (cls.is_zero_class) continue;

    for (const auto& a : cls.members) {
      for (auto i : theta.indices()) {
        const Root image = reflect(s, i, a);
        bool ok = dual(s, image) == reflect(s, i, dual(s, a));
        if (s.is_reduced()) ok = ok && sphere_class(s, theta, image).coords == sphere_class(s, theta, a).coords;
        rec.check(kEquivariance, ok, "reflection " + std::to_string(i + 1) + " on " + a.str());
      }
      for (const auto& b : cls.members) {
        if (s.norm2(a) != s.norm2(b)) continue;
        rec.check(kHomotopy, same_homotopy_class(s, theta, a, b), a.str() + " vs " + b.str());
        ++res.connect_pairs;
        try {
          const ConnectTrace t = connect_trace(s, theta, a, b);
          bool ok = apply_word(s, t.word, a) == b;
          for (auto l : t.word.letters) ok = ok && theta.contains(l);
          for (std::size_t k = 1; k < t.potential.size(); ++k) ok = ok && t.potential[k] < t.potential[k - 1];
          res.max_word_length = std::max(res.max_word_length, t.word.length());
          rec.check(kConnect, ok, a.str() + " -> " + b.str());
        } catch (const std::exception& e) {
          rec.check(kConnect, false, e.what());
        }
      }
    }
  }

  // Per-system check, attached to the Theta = {} instance.
  if (theta.empty() && !s.is_simply_laced()) {
    const bool has_long_simple = std::any_of(s.symmetrizer().begin(), s.symmetrizer().end(),
                                             [](const Rational& d) { return d == 1; });
    for (std::size_t i = 0; i < s.rank() && has_long_simple; ++i) {
      if (length_class(s, s.simple_root(i)) != LengthClass::Short) continue;
      try {
        const Root phi = long_neighbor(s, i);
        rec.check(kNeighbor,
                  length_class(s, phi) == LengthClass::Long && s.inner_product(s.simple_root(i), phi) != 0,
                  "alpha_" + std::to_string(i + 1) + " -> " + phi.str());
      } catch (const std::exception& e) {
        rec.check(kNeighbor, false, e.what());
      }
    }
  }
  return res;
}

SurveyResult run_survey(const SurveyConfig& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();

  std::vector<std::shared_ptr<const RootSystem>> systems;
  std::vector<std::pair<std::size_t, ThetaSubset>> work;
  for (const auto& k : survey_kinds(config)) {
    systems.push_back(std::make_shared<const RootSystem>(RootSystem::build(k)));
    const std::size_t n = static_cast<std::size_t>(k.rank);
    std::set<ThetaSubset> thetas;
    if (config.theta_mode == ThetaMode::AllSubsets) {
      for (unsigned long m = 0; m < (1UL << n); ++m) thetas.insert(ThetaSubset::from_mask(m, n));
    } else {
      for (const auto& text : config.listed_thetas) {
        try {
          thetas.insert(ThetaSubset::parse(text, n));
        } catch (const std::invalid_argument&) {
        }
      }
    }
    // order by mask so that subsets of a kind appear as 0, 1, 2, ... in the report
    std::vector<ThetaSubset> ordered(thetas.begin(), thetas.end());
    auto mask = [](const ThetaSubset& t) {
      unsigned long m = 0;
      for (auto i : t.indices()) m |= 1UL << i;
      return m;
    };
    std::sort(ordered.begin(), ordered.end(),
              [&](const ThetaSubset& a, const ThetaSubset& b) { return mask(a) < mask(b); });
    for (auto& t : ordered) work.emplace_back(systems.size() - 1, std::move(t));
  }

  SurveyResult result;
  result.instances.resize(work.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < work.size(); i = next++)
      result.instances[i] = check_instance(*systems[work[i].first], work[i].second);
  };
  const std::size_t jobs = std::min<std::size_t>(static_cast<std::size_t>(config.jobs), std::max<std::size_t>(work.size(), 1));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  for (const auto& name : survey_checks()) {
    result.evaluated[name] = 0;
    result.violation_counts[name] = 0;
  }
  for (const auto& inst : result.instances) {
    result.total_classes += inst.nonzero_classes;
    result.total_rigid += inst.rigid_classes;
    result.total_pairs += inst.connect_pairs;
    result.max_word_length = std::max(result.max_word_length, inst.max_word_length);
    for (const auto& [name, n] : inst.evaluated) result.evaluated[name] += n;
    for (const auto& v : inst.violations) {
      ++result.violation_counts[v.check];
      result.violations.push_back(v);
    }
  }
  result.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

Json survey_json(const SurveyConfig& config, const SurveyResult& result) {
  Json families = Json::array();
  for (auto f : config.families) families.push_back(family_name(f));
  Json cfg{{"families", families},
           {"max_rank", config.max_rank},
           {"theta_mode", config.theta_mode == ThetaMode::AllSubsets ? "all_subsets" : "listed"}};
  if (config.theta_mode == ThetaMode::Listed) cfg["thetas"] = config.listed_thetas;

  Json checks = Json::object();
  for (const auto& name : survey_checks())
    checks[name] = Json{{"evaluated", result.evaluated.at(name)}, {"violations", result.violation_counts.at(name)}};

  Json instances = Json::array();
  for (const auto& inst : result.instances)
    instances.push_back(Json{{"kind", inst.kind.name()},
                             {"theta", to_json(inst.theta)},
                             {"classes", inst.nonzero_classes},
                             {"rigid_classes", inst.rigid_classes},
                             {"max_word_length", inst.max_word_length},
                             {"violations", inst.violations.size()}});
  Json violations = Json::array();
  for (const auto& v : result.violations)
    violations.push_back(Json{{"kind", v.kind}, {"theta", v.theta}, {"check", v.check}, {"detail", v.detail}});

  return Json{{"schema_version", kSchemaVersion},
              {"config", cfg},
              {"instances", result.instances.size()},
              {"classes", result.total_classes},
              {"rigid_classes", result.total_rigid},
              {"connect_pairs", result.total_pairs},
              {"max_word_length", result.max_word_length},
              {"checks", checks},
              {"violation_total", result.violations.size()},
              {"violations", violations},
              {"per_instance", instances}};
}

std::string survey_table(const SurveyResult& result) {
  std::ostringstream os;
  os << "instances        " << result.instances.size() << '\n'
     << "nonzero classes  " << result.total_classes << " (" << result.total_rigid << " rigid)\n"
     << "connect pairs    " << result.total_pairs << '\n'
     << "max word length  " << result.max_word_length << '\n'
     << '\n'
     << std::left << std::setw(28) << "check" << std::right << std::setw(10) << "evaluated" << std::setw(12)
     << "violations" << '\n';
  for (const auto& name : survey_checks())
    os << std::left << std::setw(28) << name << std::right << std::setw(10) << result.evaluated.at(name)
       << std::setw(12) << result.violation_counts.at(name) << '\n';
  if (!result.violations.empty()) {
    os << '\n';
    for (const auto& v : result.violations)
      os << "VIOLATION " << v.kind << ' ' << v.theta << ' ' << v.check << ": " << v.detail << '\n';
  }
  return os.str();
}

}  // namespace flagtop
