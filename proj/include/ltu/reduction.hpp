#pragma once

#include <utility>

#include "ltu/game.hpp"
#include "ltu/gamesolve.hpp"
#include "ltu/model.hpp"

namespace ltu {

/// Generalized hide-and-seek game of a one-to-one problem. Hider strategies
/// are the cells (x, y) in row-major order; seeker strategies are all rows x
/// followed by all columns y. Cell xy meets seeker row x with
///   loss  alpha = lambda / (n_x phi),        payoff beta  = 1 / (2 n_x phi)
/// and seeker column y with
///   loss  gamma = (1 - lambda) / (m_y phi),  payoff kappa = 1 / (2 m_y phi).
/// Throws NonpositiveOutput unless phi > 0 everywhere.
BimatrixGame to_game(const LTUProblem& p);

/// Hider strategy index of cell (x, y); seeker indices of row x and column y.
std::size_t cell_index(const LTUProblem& p, std::size_t x, std::size_t y);
std::size_t row_strategy(const LTUProblem& p, std::size_t x);
std::size_t col_strategy(const LTUProblem& p, std::size_t y);

/// p_xy = phi_xy mu_xy / (phi' mu),  q_x = n_x u_x / (n'u + m'v),
/// q_y = m_y v_y / (n'u + m'v). Throws DegenerateOutcome when either
/// normalizer is zero. The result is an equilibrium only when `o` is stable.
MixedProfile outcome_to_equilibrium(const LTUProblem& p, const Outcome& o);

/// mu_xy = p_xy / (2 phi_xy pi),  u_x = q_x / (2 n_x ell),  v_y = q_y / (2 m_y ell).
/// The profile is re-verified against to_game(p) first (NotAnEquilibrium);
/// a zero ell or pi raises ZeroValue.
Outcome equilibrium_to_outcome(const LTUProblem& p, const MixedProfile& s);

/// Shifts every arrangement output by K so all become positive: K = 0 when
/// they already are, otherwise K = 1 - min phi. Utilities of the shifted
/// problem are the original ones plus K.
std::pair<ManyToOneProblem, Rational> normalize_outputs(const ManyToOneProblem& p);

/// N-dimensional hide-and-seek game: rows are arrangements, columns types;
///   loss  alpha(x, a) = (sum of lambda over slots of x) / (n_x phi_a),
///   payoff beta(x, a) = M(x, a) / (n_x phi_a).
BimatrixGame to_game_n(const ManyToOneProblem& p);

/// p_a = phi_a mu_a / (phi' mu),  q_x = n_x u_x / (n'u).
MixedProfile outcome_to_equilibrium_n(const ManyToOneProblem& p, const ManyToOneOutcome& o);

/// mu_a = p_a / (phi_a pi),  u_x = q_x / (n_x ell). Re-verifies the profile.
ManyToOneOutcome equilibrium_to_outcome_n(const ManyToOneProblem& p, const MixedProfile& s);

}  // namespace ltu
