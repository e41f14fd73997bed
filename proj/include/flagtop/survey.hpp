#pragma once

#include "flagtop/report.hpp"
#include "flagtop/root_system.hpp"
#include "flagtop/weyl.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace flagtop {

enum class ThetaMode { AllSubsets, Listed };
enum class OutputFormat { Json, Table };

struct SurveyConfig {
  std::vector<Family> families;
  int max_rank = 4;
  ThetaMode theta_mode = ThetaMode::AllSubsets;
  /// 1-based index lists, used with ThetaMode::Listed; entries out of range
  /// for a given rank are skipped.
  std::vector<std::string> listed_thetas;
  std::string output;  // empty: stdout
  OutputFormat format = OutputFormat::Table;
  int jobs = 1;

  /// Throws std::invalid_argument on max_rank outside [0, 8] or jobs < 1.
  void validate() const;
};

/// "all" or a comma separated list such as "A,B,BC".
std::vector<Family> parse_families(const std::string& text);

/// All kinds of the configured families with rank <= max_rank, sorted.
std::vector<RootSystemKind> survey_kinds(const SurveyConfig& config);

/// Names of the checks run on every instance, in report order.
const std::vector<std::string>& survey_checks();

struct Violation {
  std::string kind;
  std::string theta;
  std::string check;
  std::string detail;
};

struct InstanceResult {
  RootSystemKind kind;
  ThetaSubset theta;
  std::size_t nonzero_classes = 0;
  std::size_t rigid_classes = 0;
  std::size_t connect_pairs = 0;
  std::size_t max_word_length = 0;
  std::map<std::string, std::size_t> evaluated;  // check -> number of evaluations
  std::vector<Violation> violations;
};

/// Runs every check on one (kind, Theta) instance.
InstanceResult check_instance(const RootSystem& s, const ThetaSubset& theta);

struct SurveyResult {
  std::vector<InstanceResult> instances;  // sorted by (kind, Theta)
  std::size_t total_classes = 0;
  std::size_t total_rigid = 0;
  std::size_t total_pairs = 0;
  std::size_t max_word_length = 0;
  std::map<std::string, std::size_t> evaluated;
  std::map<std::string, std::size_t> violation_counts;
  std::vector<Violation> violations;
  double wall_seconds = 0;

  bool ok() const { return violations.empty(); }
};

/// Fans instances out over `jobs` workers; the merged result does not depend on jobs.
SurveyResult run_survey(const SurveyConfig& config);

/// Deterministic report (no timing information).
Json survey_json(const SurveyConfig& config, const SurveyResult& result);
std::string survey_table(const SurveyResult& result);

}  // namespace flagtop
