#include "ltu/cli.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "ltu/error.hpp"
#include "ltu/fuzz.hpp"
#include "ltu/io.hpp"
#include "ltu/oracle.hpp"
#include "ltu/pipeline.hpp"
#include "ltu/reduction.hpp"
#include "ltu/tu.hpp"

namespace ltu::cli {

namespace {

using io::json;

struct Config {
  bool json_output = false;
  int decimal = -1;
  std::string output;

  io::Format format() const {
    io::Format f;
    if (decimal >= 0) f.decimal_digits = decimal;
    return f;
  }
};

// Flattens a JSON document into "path = value" lines for the text mode.
void flatten(const json& j, const std::string& path, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out << path << " = ";
    if (j.is_string()) {
      out << j.get<std::string>();
    } else if (j.is_array()) {
      out << "[";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out << ", ";
        out << (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
      }
      out << "]";
    } else {
      out << j.dump();
    }
    out << "\n";
  }
}

void emit(const Config& cfg, const json& doc, std::ostream& out) {
  std::ostringstream text;
  if (cfg.json_output) {
    text << doc.dump(2) << "\n";
  } else {
    flatten(doc, "", text);
  }
  if (cfg.output.empty()) {
    out << text.str();
    return;
  }
  std::ofstream file(cfg.output);
  if (!file) throw Error(ErrorCode::ParseError, "cannot write " + cfg.output);
  file << text.str();
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAnEquilibrium:
    case ErrorCode::NotTU:
    case ErrorCode::IsTU:
    case ErrorCode::InputNotStable:
      return kNegative;
    case ErrorCode::BudgetExceeded:
    case ErrorCode::IterationLimit:
      return kInternal;
    default:
      return is_internal(code) ? kInternal : kInputError;
  }
}

LTUProblem load_problem(const std::string& path, OutputPolicy policy = OutputPolicy::AllowAny) {
  return io::problem_from_json(io::read_json_file(path), policy);
}

json solution_json(const Solution& s, std::size_t label, const io::Format& f) {
  return {{"label", label},
          {"enteringLabels", s.equilibrium.entering_labels},
          {"certificate", io::certificate_to_json(s.equilibrium.certificate, f)},
          {"outcome", io::outcome_to_json(s.outcome, f)},
          {"report", io::report_to_json(s.report, f)}};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact solver for matching problems with linearly transferable utility"};
  app.require_subcommand(1);
  Config cfg;
  auto common = [&cfg](CLI::App* sub) {
    sub->add_flag("--json", cfg.json_output, "Machine-readable JSON output");
    sub->add_option("--decimal", cfg.decimal, "Display rationals as decimals with N digits")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("-o,--output", cfg.output, "Write the result to a file");
  };

  std::string problem_path, second_path, third_path;
  std::size_t label = 0;
  bool all_labels = false;
  std::vector<std::size_t> quadruple;
  OracleCaps caps;
  FuzzOptions fuzz;
  bool no_oracle = false;
  std::function<int()> action;

  auto label_options = [&](CLI::App* sub) {
    auto* l = sub->add_option("--label", label, "Initial Lemke-Howson label (0-based)");
    sub->add_flag("--all-labels", all_labels, "Run Lemke-Howson from every label")->excludes(l);
  };

  auto* solve_cmd = app.add_subcommand("solve", "Solve a problem via the hide-and-seek game");
  solve_cmd->add_option("problem", problem_path)->required();
  label_options(solve_cmd);
  common(solve_cmd);
  solve_cmd->callback([&] {
    action = [&] {
      const LTUProblem p = load_problem(problem_path, OutputPolicy::RequirePositive);
      const auto f = cfg.format();
      if (!all_labels) {
        emit(cfg, solution_json(solve(p, label), label, f), out);
        return kOk;
      }
      json runs = json::array();
      const std::size_t labels = to_game(p).num_rows() + to_game(p).num_cols();
      for (std::size_t k = 0; k < labels; ++k) runs.push_back(solution_json(solve(p, k), k, f));
      emit(cfg, {{"runs", std::move(runs)}}, out);
      return kOk;
    };
  });

  auto* verify_cmd = app.add_subcommand("verify", "Check an outcome for stability");
  verify_cmd->add_option("problem", problem_path)->required();
  verify_cmd->add_option("outcome", second_path)->required();
  common(verify_cmd);
  verify_cmd->callback([&] {
    action = [&] {
      const LTUProblem p = load_problem(problem_path);
      const Outcome o = io::outcome_from_json(io::read_json_file(second_path), p);
      const StabilityReport r = verify_stable(p, o);
      emit(cfg, io::report_to_json(r, cfg.format()), out);
      return r.stable ? kOk : kNegative;
    };
  });

  auto* game_cmd = app.add_subcommand("to-game", "Emit the hide-and-seek game");
  game_cmd->add_option("problem", problem_path)->required();
  common(game_cmd);
  game_cmd->callback([&] {
    action = [&] {
      emit(cfg, io::game_to_json(to_game(load_problem(problem_path)), cfg.format()), out);
      return kOk;
    };
  });

  auto* from_eq_cmd = app.add_subcommand("from-eq", "Map an equilibrium profile to an outcome");
  from_eq_cmd->add_option("problem", problem_path)->required();
  from_eq_cmd->add_option("profile", second_path)->required();
  common(from_eq_cmd);
  from_eq_cmd->callback([&] {
    action = [&] {
      const LTUProblem p = load_problem(problem_path);
      const MixedProfile s = io::profile_from_json(io::read_json_file(second_path));
      const Outcome o = equilibrium_to_outcome(p, s);
      const auto f = cfg.format();
      emit(cfg,
           {{"outcome", io::outcome_to_json(o, f)},
            {"report", io::report_to_json(verify_stable(p, o), f)}},
           out);
      return kOk;
    };
  });

  auto* tu_cmd = app.add_subcommand("check-tu", "Decide the TU property");
  tu_cmd->add_option("problem", problem_path)->required();
  common(tu_cmd);
  tu_cmd->callback([&] {
    action = [&] {
      const LTUProblem p = load_problem(problem_path);
      emit(cfg, io::witness_to_json(check_tu(p), p, cfg.format()), out);
      return kOk;
    };
  });

  auto* rescale_cmd = app.add_subcommand("rescale-tu", "Rescale a TU problem to lambda = 1/2");
  rescale_cmd->add_option("problem", problem_path)->required();
  common(rescale_cmd);
  rescale_cmd->callback([&] {
    action = [&] {
      const LTUProblem p = load_problem(problem_path);
      const TuRescaling r = rescale_to_tu(p, check_tu(p));
      const auto f = cfg.format();
      emit(cfg,
           {{"a", io::to_json(r.a, f)},
            {"b", io::to_json(r.b, f)},
            {"phiTilde", io::to_json(r.phi_tilde, f)}},
           out);
      return kOk;
    };
  });

  auto* exchange_cmd = app.add_subcommand("exchange", "Swap matchings of two stable outcomes");
  exchange_cmd->add_option("problem", problem_path)->required();
  exchange_cmd->add_option("outcome1", second_path)->required();
  exchange_cmd->add_option("outcome2", third_path)->required();
  common(exchange_cmd);
  exchange_cmd->callback([&] {
    action = [&] {
      const LTUProblem p = load_problem(problem_path);
      const Outcome o1 = io::outcome_from_json(io::read_json_file(second_path), p);
      const Outcome o2 = io::outcome_from_json(io::read_json_file(third_path), p);
      const ExchangeReport r = exchange_test(p, o1, o2);
      const auto f = cfg.format();
      emit(cfg,
           {{"exchangeable", r.exchangeable()},
            {"mu2WithUv1", io::report_to_json(r.mu2_with_uv1, f)},
            {"mu1WithUv2", io::report_to_json(r.mu1_with_uv2, f)}},
           out);
      return r.exchangeable() ? kOk : kNegative;
    };
  });

  auto* ce_cmd = app.add_subcommand("counterexample", "Build two non-exchangeable stable outcomes");
  ce_cmd->add_option("problem", problem_path)->required();
  ce_cmd->add_option("--quadruple", quadruple, "Worker, worker, job, job indices (0-based)")
      ->expected(4);
  common(ce_cmd);
  ce_cmd->callback([&] {
    action = [&] {
      const LTUProblem p = load_problem(problem_path);
      Quadruple q;
      if (quadruple.empty()) {
        const TuWitness w = check_tu(p);
        if (w.is_tu) throw Error(ErrorCode::IsTU, "problem has the TU property");
        q = *w.quadruple;
      } else {
        q = {quadruple[0], quadruple[1], quadruple[2], quadruple[3]};
      }
      emit(cfg, io::counterexample_to_json(build_counterexample(p, q), cfg.format()), out);
      return kOk;
    };
  });

  auto* oracle_cmd = app.add_subcommand("oracle", "Enumerate all stable outcome patterns");
  oracle_cmd->add_option("problem", problem_path)->required();
  oracle_cmd->add_option("--max-cells", caps.max_cells, "Cap on |X||Y|");
  oracle_cmd->add_option("--max-types", caps.max_types, "Cap on |X|+|Y|");
  oracle_cmd->add_option("--threads", caps.threads, "Worker threads (0 = hardware)");
  common(oracle_cmd);
  oracle_cmd->callback([&] {
    action = [&] {
      emit(cfg, io::oracle_to_json(enumerate_stable(load_problem(problem_path), caps), cfg.format()),
           out);
      return kOk;
    };
  });

  auto* solve_m2o_cmd = app.add_subcommand("solve-m2o", "Solve a many-to-one problem");
  solve_m2o_cmd->add_option("problem", problem_path)->required();
  label_options(solve_m2o_cmd);
  common(solve_m2o_cmd);
  solve_m2o_cmd->callback([&] {
    action = [&] {
      const ManyToOneProblem p = io::m2o_problem_from_json(io::read_json_file(problem_path));
      const auto f = cfg.format();
      auto one = [&](std::size_t k) {
        const ManyToOneSolution s = solve_m2o(p, k);
        return json{{"label", k},
                    {"shift", io::to_json(s.shift, f)},
                    {"enteringLabels", s.equilibrium.entering_labels},
                    {"certificate", io::certificate_to_json(s.equilibrium.certificate, f)},
                    {"outcome", io::m2o_outcome_to_json(s.outcome, f)},
                    {"report", io::report_to_json(s.report, f)}};
      };
      if (!all_labels) {
        emit(cfg, one(label), out);
        return kOk;
      }
      json runs = json::array();
      const std::size_t labels = p.arrangements.size() + p.num_types();
      for (std::size_t k = 0; k < labels; ++k) runs.push_back(one(k));
      emit(cfg, {{"runs", std::move(runs)}}, out);
      return kOk;
    };
  });

  auto* verify_m2o_cmd = app.add_subcommand("verify-m2o", "Check a many-to-one outcome");
  verify_m2o_cmd->add_option("problem", problem_path)->required();
  verify_m2o_cmd->add_option("outcome", second_path)->required();
  common(verify_m2o_cmd);
  verify_m2o_cmd->callback([&] {
    action = [&] {
      const ManyToOneProblem p = io::m2o_problem_from_json(io::read_json_file(problem_path));
      const ManyToOneOutcome o = io::m2o_outcome_from_json(io::read_json_file(second_path), p);
      const StabilityReport r = verify_stable_m2o(p, o);
      emit(cfg, io::report_to_json(r, cfg.format()), out);
      return r.stable ? kOk : kNegative;
    };
  });

  auto* fuzz_cmd = app.add_subcommand("fuzz", "Random instances through the full pipeline");
  fuzz_cmd->add_option("--seed", fuzz.seed, "RNG seed");
  fuzz_cmd->add_option("--count", fuzz.count, "Number of instances");
  fuzz_cmd->add_flag("--no-oracle", no_oracle, "Skip the oracle cross-check");
  common(fuzz_cmd);
  fuzz_cmd->callback([&] {
    action = [&] {
      fuzz.oracle = !no_oracle;
      const FuzzReport r = run_fuzz(fuzz);
      json failures = json::array();
      for (const auto& f : r.failures) failures.push_back({{"instance", f.instance}, {"what", f.what}});
      emit(cfg,
           {{"seed", fuzz.seed},
            {"instances", r.instances},
            {"oracleChecked", r.oracle_checked},
            {"failures", std::move(failures)}},
           out);
      return r.failures.empty() ? kOk : kInternal;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    return action();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: Internal: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace ltu::cli
