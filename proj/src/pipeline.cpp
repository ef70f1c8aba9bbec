#include "ltu/pipeline.hpp"

#include "ltu/error.hpp"
#include "ltu/reduction.hpp"

namespace ltu {

Solution solve(const LTUProblem& p, std::size_t label, const LemkeHowsonOptions& opts) {
  const BimatrixGame g = to_game(p);
  Solution s{lemke_howson(g, label, opts), {}, {}};
  s.outcome = equilibrium_to_outcome(p, s.equilibrium.certificate.profile);
  s.report = verify_stable(p, s.outcome);
  if (!s.report.stable) throw Error(ErrorCode::Internal, "solver produced an unstable outcome");
  return s;
}

ManyToOneSolution solve_m2o(const ManyToOneProblem& p, std::size_t label,
                            const LemkeHowsonOptions& opts) {
  auto [shifted, k] = normalize_outputs(p);
  const BimatrixGame g = to_game_n(shifted);
  ManyToOneSolution s{k, lemke_howson(g, label, opts), {}, {}};
  s.outcome = equilibrium_to_outcome_n(shifted, s.equilibrium.certificate.profile);
  for (auto& u : s.outcome.u) u -= k;
  s.report = verify_stable_m2o(p, s.outcome);
  if (!s.report.stable) throw Error(ErrorCode::Internal, "solver produced an unstable outcome");
  return s;
}

}  // namespace ltu
