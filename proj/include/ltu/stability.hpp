#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ltu/model.hpp"

namespace ltu {

/// One failed stability condition with the exact values compared.
struct Violation {
  std::string condition;             // "1".."6", "nonnegative-*", or many-to-one names
  std::vector<std::size_t> indices;  // (x, y), (x), (y) or (a)
  Rational lhs;
  Rational rhs;

  bool operator==(const Violation&) const = default;
};

struct StabilityReport {
  bool stable = true;
  std::vector<Violation> violations;
};

/// Checks the one-to-one stability system exactly:
///   "1"  lambda u_x + (1-lambda) v_y >= phi/2 for every pair
///   "2"  sum_y mu(x,y) <= n_x          "3"  sum_x mu(x,y) <= m_y
///   "4"  mu(x,y) > 0  => pair constraint binds
///   "5"  u_x > 0      => row x saturated
///   "6"  v_y > 0      => column y saturated
/// plus "nonnegative-mu", "nonnegative-u", "nonnegative-v" for negative entries.
StabilityReport verify_stable(const LTUProblem& p, const Outcome& o);

struct BlockingPair {
  std::size_t x;
  std::size_t y;
  Rational deficit;  // phi/2 - (lambda u + (1-lambda) v) > 0

  bool operator==(const BlockingPair&) const = default;
};

/// Pairs violating condition "1", sorted by deficit descending then (x, y).
std::vector<BlockingPair> blocking_pairs(const LTUProblem& p, const Outcome& o);

/// Many-to-one stability: "feasibility" (sum_a M(x,a) mu_a == n_x, equality),
/// "no-block" (sum_i lambda_i u_{x_i} >= phi_a), "binding" (mu_a > 0 =>
/// equality), "nonnegative-mu" (mu_a >= 0).
StabilityReport verify_stable_m2o(const ManyToOneProblem& p, const ManyToOneOutcome& o);

}  // namespace ltu
