#ifndef LIFTAUT_CLI_HPP
#define LIFTAUT_CLI_HPP

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "liftaut/casestudy.hpp"
#include "liftaut/lifting.hpp"
#include "liftaut/oracle.hpp"
#include "liftaut/presentation.hpp"
#include "liftaut/report.hpp"
#include "liftaut/todd_coxeter.hpp"

namespace liftaut::cli {

enum ExitCode : int { kOk = 0, kInputError = 1, kNoLift = 2, kMismatch = 3 };

struct RunConfig {
  std::string command;
  std::string presentation_path;
  std::string phi_path;
  bool existence_only = false;
  std::size_t max_cosets = 100'000;
  std::uint64_t lift_budget = OracleBudget{}.lift_candidates;
  std::uint64_t aut_budget = OracleBudget{}.aut_candidates;
  std::string format = "json";
  std::string out;
  std::int64_t p = 3;
  std::int64_t n = 4;
  /// Test hook: drop one solver lift before comparing with the oracle.
  bool inject_fault = false;

  OracleBudget budget() const { return {lift_budget, aut_budget}; }
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LiftError(ErrorCode::Config, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::shared_ptr<const LiftSetting> load_setting(const RunConfig& cfg) {
  const auto doc = parse_presentation_document(read_file(cfg.presentation_path));
  if (doc.central.z_words.empty())
    throw LiftError(ErrorCode::Config, cfg.presentation_path + ": no central: lines");
  auto engine = todd_coxeter(doc.presentation, cfg.max_cosets);
  return LiftSetting::create(doc.presentation, std::move(engine.group), doc.central);
}

inline LiftProblem load_problem(const RunConfig& cfg) {
  auto setting = load_setting(cfg);
  auto phi = parse_quotient_aut(read_file(cfg.phi_path), setting->presentation());
  return make_lift_problem(std::move(setting), std::move(phi));
}

class Output {
 public:
  Output(const RunConfig& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}
  bool json() const { return cfg_.format == "json"; }

  void emit(const std::string& text) {
    if (cfg_.out.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(cfg_.out);
    if (!f) throw LiftError(ErrorCode::Config, "cannot write " + cfg_.out);
    f << text;
  }
  void emit(const liftaut::json& j) { emit(j.dump(2) + "\n"); }

 private:
  const RunConfig& cfg_;
  std::ostream& out_;
};

inline int cmd_lifts(const RunConfig& cfg, std::ostream& out) {
  const auto problem = load_problem(cfg);
  Output o(cfg, out);
  if (cfg.command == "auto" && cfg.existence_only) {
    const bool exists = squarefree_existence(problem);
    if (o.json()) {
      liftaut::json j;
      j["kind"] = "existence";
      j["order_N"] = problem.setting->subgroup_order();
      j["lift_exists"] = exists;
      o.emit(j);
    } else {
      o.emit(std::string("lift exists: ") + (exists ? "yes" : "no") + "\n");
    }
    return exists ? kOk : kNoLift;
  }
  const auto report =
      cfg.command == "solve" ? solve_hom_lifts(problem) : solve_aut_lifts(problem);
  if (o.json())
    o.emit(lift_report_json(problem, report));
  else
    o.emit(lift_report_text(problem, report));
  return report.lifts.empty() ? kNoLift : kOk;
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto setting = load_setting(cfg);
  std::vector<QuotientAutSpec> phis;
  if (!cfg.phi_path.empty())
    phis.push_back(parse_quotient_aut(read_file(cfg.phi_path), setting->presentation()));
  else
    phis = bf_quotient_auts(setting->presentation(), setting->group(), setting->subgroup(),
                            cfg.budget());

  bool all_match = true;
  liftaut::json comparisons = liftaut::json::array();
  std::string text;
  for (const auto& phi : phis) {
    const auto problem = make_lift_problem(setting, phi);
    auto hom = solve_hom_lifts(problem);
    const auto aut = solve_aut_lifts(problem);
    if (cfg.inject_fault && !hom.lifts.empty()) hom.lifts.pop_back();
    const auto c = compare_reports(problem, hom, aut, cfg.budget());
    if (!c.match) {
      all_match = false;
      err << "mismatch:\n" << comparison_text(problem, c);
    }
    comparisons.push_back(comparison_json(problem, c));
    text += comparison_text(problem, c);
  }

  Output o(cfg, out);
  if (o.json()) {
    liftaut::json j;
    j["phi_count"] = phis.size();
    j["match"] = all_match;
    j["comparisons"] = comparisons;
    o.emit(j);
  } else {
    o.emit(text + std::to_string(phis.size()) + " phi(s), " +
           (all_match ? "all match" : "MISMATCH") + "\n");
  }
  return all_match ? kOk : kMismatch;
}

inline int cmd_demo(const RunConfig& cfg, std::ostream& out) {
  CaseStudyConfig cs;
  cs.p = cfg.p;
  cs.n = cfg.n;
  cs.max_cosets = cfg.max_cosets;
  cs.budget = cfg.budget();
  const auto report = run_case_study(cs);
  Output o(cfg, out);
  if (o.json())
    o.emit(case_study_json(report));
  else
    o.emit(case_study_text(report));
  return kOk;
}

}  // namespace detail

inline int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.command == "solve" || cfg.command == "auto") return detail::cmd_lifts(cfg, out);
    if (cfg.command == "verify") return detail::cmd_verify(cfg, out, err);
    if (cfg.command == "demo") return detail::cmd_demo(cfg, out);
    err << "error: unknown command " << cfg.command << '\n';
    return kInputError;
  } catch (const LiftError& e) {
    err << "error: " << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::AssertionFailed:
      case ErrorCode::CriterionMismatch:
      case ErrorCode::NotASolution:
        return kMismatch;
      default:
        return kInputError;
    }
  }
}

/// Parses argv-style arguments (args[0] is the program name) and executes.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Lift automorphisms of central quotients of finite presented groups", "liftaut"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--max-cosets", cfg.max_cosets, "Coset table limit")
        ->check(CLI::PositiveNumber);
    sub->add_option("--lift-budget", cfg.lift_budget, "Oracle lift candidate budget")
        ->check(CLI::PositiveNumber);
    sub->add_option("--aut-budget", cfg.aut_budget, "Oracle automorphism candidate budget")
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", cfg.out, "Write the report to this file");
  };

  auto* solve = app.add_subcommand("solve", "Homomorphic lifts of phi");
  solve->add_option("presentation", cfg.presentation_path)->required()->check(CLI::ExistingFile);
  solve->add_option("phi", cfg.phi_path)->required()->check(CLI::ExistingFile);
  add_common(solve);

  auto* aut = app.add_subcommand("auto", "Automorphic lifts of phi");
  aut->add_option("presentation", cfg.presentation_path)->required()->check(CLI::ExistingFile);
  aut->add_option("phi", cfg.phi_path)->required()->check(CLI::ExistingFile);
  aut->add_flag("--existence-only", cfg.existence_only,
                "Only decide existence (squarefree |N|)");
  add_common(aut);

  auto* verify = app.add_subcommand("verify", "Compare solver and brute force");
  verify->add_option("presentation", cfg.presentation_path)
      ->required()
      ->check(CLI::ExistingFile);
  verify->add_option("phi", cfg.phi_path, "Omit to check every automorphism of G/N")
      ->check(CLI::ExistingFile);
  verify->add_flag("--inject-fault", cfg.inject_fault)->group("");
  add_common(verify);

  auto* demo = app.add_subcommand("demo", "Metacyclic case study");
  demo->add_option("--p", cfg.p, "Odd prime");
  demo->add_option("--n", cfg.n, "Exponent, n >= 4");
  add_common(demo);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  return execute(cfg, out, err);
}

}  // namespace liftaut::cli

#endif  // LIFTAUT_CLI_HPP
