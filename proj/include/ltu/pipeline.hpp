#pragma once

#include <vector>

#include "ltu/gamesolve.hpp"
#include "ltu/model.hpp"
#include "ltu/stability.hpp"

namespace ltu {

struct Solution {
  LemkeHowsonResult equilibrium;
  Outcome outcome;
  StabilityReport report;
};

/// to_game -> lemke_howson -> equilibrium_to_outcome -> verify_stable.
/// Throws Error(Internal) if the mapped outcome is rejected.
Solution solve(const LTUProblem& p, std::size_t label = 0,
               const LemkeHowsonOptions& opts = {});

struct ManyToOneSolution {
  Rational shift;  // K from normalize_outputs
  LemkeHowsonResult equilibrium;
  ManyToOneOutcome outcome;  // in the original problem's utilities
  StabilityReport report;
};

/// Shifts outputs to be positive if needed, solves the N-dimensional game and
/// maps the outcome back.
ManyToOneSolution solve_m2o(const ManyToOneProblem& p, std::size_t label = 0,
                            const LemkeHowsonOptions& opts = {});

}  // namespace ltu
