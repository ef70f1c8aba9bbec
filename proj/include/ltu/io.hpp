#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include <json.hpp>

#include "ltu/game.hpp"
#include "ltu/gamesolve.hpp"
#include "ltu/model.hpp"
#include "ltu/oracle.hpp"
#include "ltu/stability.hpp"
#include "ltu/tu.hpp"

namespace ltu::io {

using nlohmann::json;

/// Rationals are written as "p/q" strings; `decimal_digits` switches to a
/// rounded decimal rendering meant for display only.
struct Format {
  std::optional<int> decimal_digits;
};

Rational rational_from_json(const json& j);
json to_json(const Rational& r, const Format& f = {});
json to_json(const Vec& v, const Format& f = {});
json to_json(const Matrix& m, const Format& f = {});

/// Problem file: workers, jobs and one of "pairs", "linear_constraints" or
/// "tax". All parse failures surface as Error(ParseError) or the relevant
/// validation error.
LTUProblem problem_from_json(const json& j, OutputPolicy policy = OutputPolicy::AllowAny);
json problem_to_json(const LTUProblem& p, const Format& f = {});

Outcome outcome_from_json(const json& j, const LTUProblem& p);
json outcome_to_json(const Outcome& o, const Format& f = {});

MixedProfile profile_from_json(const json& j);
json profile_to_json(const MixedProfile& s, const Format& f = {});

BimatrixGame game_from_json(const json& j);
json game_to_json(const BimatrixGame& g, const Format& f = {});

json certificate_to_json(const EquilibriumCertificate& c, const Format& f = {});
json report_to_json(const StabilityReport& r, const Format& f = {});

ManyToOneProblem m2o_problem_from_json(const json& j,
                                       OutputPolicy policy = OutputPolicy::AllowAny);
json m2o_problem_to_json(const ManyToOneProblem& p, const Format& f = {});
ManyToOneOutcome m2o_outcome_from_json(const json& j, const ManyToOneProblem& p);
json m2o_outcome_to_json(const ManyToOneOutcome& o, const Format& f = {});

/// Quadruples are reported with type ids.
json witness_to_json(const TuWitness& w, const LTUProblem& p, const Format& f = {});
json counterexample_to_json(const Counterexample& c, const Format& f = {});
json oracle_to_json(const std::vector<OracleEntry>& entries, const Format& f = {});

/// Reads and parses a JSON file; throws Error(ParseError) on failure.
json read_json_file(const std::filesystem::path& path);

}  // namespace ltu::io
