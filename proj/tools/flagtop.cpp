// flagtop: root-system reports, pi2 / rigidity queries and exhaustive surveys
// for flag manifolds U / U_Theta.
//
// Exit codes: 0 success, 1 a survey check was violated, 2 usage error.

#include "flagtop/figure.hpp"
#include "flagtop/isotropy.hpp"
#include "flagtop/pi2.hpp"
#include "flagtop/report.hpp"
#include "flagtop/survey.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace flagtop;

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "table") return OutputFormat::Table;
  throw UsageError("unknown format '" + s + "'");
}

RootSystem build(const std::string& kind) {
  try {
    return RootSystem::build(RootSystemKind::parse(kind));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

ThetaSubset theta_for(const RootSystem& s, const std::string& text) {
  try {
    return ThetaSubset::parse(text, s.rank());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot open '" + path + "' for writing");
  out << text;
}

std::string lengths_str(const std::set<LengthClass>& ls) {
  std::string out;
  for (auto l : ls) out += (out.empty() ? "" : "+") + to_string(l);
  return out;
}

std::string roots_table(const RootSystem& s) {
  std::ostringstream os;
  os << s.kind().name() << ": " << s.roots().size() << " roots, " << s.positive_roots().size() << " positive\n";
  os << std::left << std::setw(18) << "root" << std::setw(8) << "length" << std::setw(8) << "norm2"
     << "dual\n";
  for (const auto& r : s.roots())
    os << std::left << std::setw(18) << r.str() << std::setw(8) << to_string(length_class(s, r)) << std::setw(8)
       << s.norm2(r).get_str() << dual(s, r).str() << '\n';
  return os.str();
}

std::string isotropy_table(const RootSystem& s, const IsotropyDecomposition& d) {
  std::ostringstream os;
  os << s.kind().name() << ", Theta = " << d.theta.str() << ": " << d.nonzero_count() << " nonzero classes, k = "
     << metric_parameter_count(d) << (d.reduced ? "" : " (nonreduced: combinatorial only)") << '\n';
  for (std::size_t c = 0; c < d.classes.size(); ++c) {
    const auto& cls = d.classes[c];
    os << (cls.is_zero_class ? "Pi_0  " : "Pi_" + std::to_string(c) + std::string(c < 10 ? "  " : " "));
    os << "size " << cls.members.size();
    if (!cls.is_zero_class) {
      os << "  lengths " << lengths_str(cls.lengths_present);
      if (d.component_dims) os << "  dim m = " << (*d.component_dims)[c - 1];
    }
    os << "  {";
    for (std::size_t i = 0; i < cls.members.size(); ++i) os << (i ? " " : "") << cls.members[i].str();
    os << "}\n";
  }
  return os.str();
}

std::string pi2_table(const RootSystem& s, const ThetaSubset& theta, GroupPreset preset, bool spheres) {
  std::ostringstream os;
  os << s.kind().name() << ", Theta = " << theta.str() << (s.is_reduced() ? "" : " (formal, nonreduced)") << '\n';
  os << "pi2 rank " << (s.rank() - theta.size()) << ", basis";
  for (std::size_t i = 0; i < s.rank(); ++i)
    if (!theta.contains(i)) os << " alpha_" << i + 1;
  os << '\n';
  for (const auto& r : rigidity_report(s, theta)) {
    os << "class " << r.class_ref.representative.str() << " size " << r.class_ref.members.size() << ": "
       << (r.theta_rigid ? "rigid" : "not rigid") << ", transitive=" << (r.w_theta_transitive ? "yes" : "no")
       << ", single length=" << (r.single_length ? "yes" : "no");
    if (r.witness) os << ", witness " << r.witness->first.str() << " / " << r.witness->second.str();
    os << '\n';
  }
  if (s.is_reduced()) {
    const Pi1Report p = pi1_report(s, theta, preset);
    os << "group " << to_string(preset) << ": pi1(U) = " << p.pi1_u.str() << ", pi1(U_Theta) = "
       << p.pi1_u_theta.str() << ", image of boundary = " << p.boundary_image.str()
       << (p.boundary_surjective ? " (surjective)" : " (not surjective)") << '\n';
  }
  if (spheres) {
    os << "spheres:\n";
    for (const auto& r : s.positive_roots()) {
      if (in_theta_span(theta, r)) continue;
      const SphereClass c = sphere_class(s, theta, r);
      os << "  " << std::left << std::setw(16) << r.str() << " [";
      for (std::size_t i = 0; i < c.coords.size(); ++i) os << (i ? "," : "") << c.coords[i].get_str();
      os << "]\n";
    }
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"flagtop: homotopy and invariant geometry of flag manifolds from root data"};
  app.require_subcommand(1);

  std::string kind, theta_text, format = "table", group = "simply-connected", output;
  bool spheres = false, dual_picture = false;

  auto* roots_cmd = app.add_subcommand("roots", "List the roots with lengths and duals");
  roots_cmd->add_option("kind", kind, "Root system, e.g. G2 or BC3")->required();
  roots_cmd->add_option("--format", format, "table or json");

  auto* iso_cmd = app.add_subcommand("isotropy", "Residue classes mod R_Theta");
  iso_cmd->add_option("kind", kind, "Root system")->required();
  iso_cmd->add_option("--theta", theta_text, "1-based simple-root indices, e.g. \"1,3\"");
  iso_cmd->add_option("--format", format, "table or json");

  auto* pi2_cmd = app.add_subcommand("pi2", "pi2 basis, rigidity of classes, pi1 data");
  pi2_cmd->add_option("kind", kind, "Root system")->required();
  pi2_cmd->add_option("--theta", theta_text, "1-based simple-root indices");
  pi2_cmd->add_flag("--spheres", spheres, "List homotopy coordinates of every sphere");
  pi2_cmd->add_option("--group", group, "simply-connected or adjoint");
  pi2_cmd->add_option("--format", format, "table or json");

  SurveyConfig survey;
  std::string families = "all";
  std::vector<std::string> listed;
  auto* verify_cmd = app.add_subcommand("verify", "Exhaustive survey of the structural theorems");
  verify_cmd->add_option("--families", families, "Comma separated families or 'all'");
  verify_cmd->add_option("--max-rank", survey.max_rank, "Largest rank surveyed");
  verify_cmd->add_option("--theta", listed, "Restrict to listed Theta subsets (repeatable)");
  verify_cmd->add_option("--jobs", survey.jobs, "Worker threads (FLAGTOP_JOBS overrides)");
  verify_cmd->add_option("--output,-o", output, "Write the report to a file");
  verify_cmd->add_option("--format", format, "table or json");

  auto* fig_cmd = app.add_subcommand("figure", "SVG picture of a rank-2 system coloured by residue class");
  fig_cmd->add_option("kind", kind, "Rank-2 root system")->required();
  fig_cmd->add_option("--theta", theta_text, "1-based simple-root indices");
  fig_cmd->add_flag("--dual", dual_picture, "Draw the dual system and its classes");
  fig_cmd->add_option("--output,-o", output, "SVG file (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const OutputFormat fmt = parse_format(format);
    if (*roots_cmd) {
      const RootSystem s = build(kind);
      write_output(output, fmt == OutputFormat::Json ? roots_json(s).dump(2) + "\n" : roots_table(s));
    } else if (*iso_cmd) {
      const RootSystem s = build(kind);
      const auto d = residue_classes(s, theta_for(s, theta_text));
      write_output(output, fmt == OutputFormat::Json ? to_json(d).dump(2) + "\n" : isotropy_table(s, d));
    } else if (*pi2_cmd) {
      const RootSystem s = build(kind);
      const ThetaSubset theta = theta_for(s, theta_text);
      GroupPreset preset;
      try {
        preset = parse_group_preset(group);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      if (fmt == OutputFormat::Json)
        write_output(output, pi2_report_json(s, theta, preset, spheres).dump(2) + "\n");
      else
        write_output(output, pi2_table(s, theta, preset, spheres));
    } else if (*verify_cmd) {
      try {
        survey.families = parse_families(families);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      if (!listed.empty()) {
        survey.theta_mode = ThetaMode::Listed;
        survey.listed_thetas = listed;
      }
      if (const char* env = std::getenv("FLAGTOP_JOBS")) {
        try {
          survey.jobs = std::stoi(env);
        } catch (const std::exception&) {
          throw UsageError("FLAGTOP_JOBS must be an integer");
        }
      }
      survey.format = fmt;
      survey.output = output;
      try {
        survey.validate();
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      const SurveyResult result = run_survey(survey);
      write_output(output, fmt == OutputFormat::Json ? survey_json(survey, result).dump(2) + "\n"
                                                     : survey_table(result));
      std::cerr << "flagtop verify: " << result.instances.size() << " instances, " << result.violations.size()
                << " violations, " << std::fixed << std::setprecision(3) << result.wall_seconds << " s\n";
      return result.ok() ? 0 : kExitViolation;
    } else if (*fig_cmd) {
      const RootSystem s = build(kind);
      if (s.rank() != 2) throw UsageError("figure needs a rank-2 system, got " + s.kind().name());
      write_output(output, render_figure(s, theta_for(s, theta_text), dual_picture));
    }
  } catch (const UsageError& e) {
    std::cerr << "flagtop: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "flagtop: " << e.what() << '\n';
    return kExitUsage;
  }
  return 0;
}
