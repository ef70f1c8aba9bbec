#pragma once

#include <cstddef>
#include <vector>

#include "ltu/rational.hpp"

namespace ltu {

enum class Relation { LessEqual, Equal, GreaterEqual };

/// coeffs' x  (relation)  rhs
struct LinearConstraint {
  Vec coeffs;
  Relation relation;
  Rational rhs;
};

struct LinearSystem {
  std::size_t num_vars = 0;
  std::vector<LinearConstraint> constraints;
  /// Per-variable sign restriction; empty means every variable is free.
  std::vector<bool> nonnegative;

  bool is_nonnegative(std::size_t j) const { return !nonnegative.empty() && nonnegative[j]; }
  void add(Vec coeffs, Relation relation, Rational rhs) {
    constraints.push_back(LinearConstraint{std::move(coeffs), relation, std::move(rhs)});
  }
};

/// Either a feasible point or Farkas multipliers (one per constraint) proving
/// that no point exists; see verify_farkas for the certificate's meaning.
struct FeasibilityResult {
  bool feasible = false;
  Vec point;
  Vec farkas;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Vec point;
  Rational value;
  Vec farkas;  // set when Infeasible
};

/// Exact two-phase simplex with Bland's rule.
FeasibilityResult linear_feasibility(const LinearSystem& system);

/// Maximizes objective' x over the system.
LpResult maximize(const LinearSystem& system, const Vec& objective);

/// True when x satisfies every constraint and sign restriction exactly.
bool satisfies(const LinearSystem& system, const Vec& x);

/// Checks an infeasibility certificate y: y_k >= 0 on <= rows, y_k <= 0 on >=
/// rows, sum_k y_k a_k is 0 on free variables and >= 0 on nonnegative ones,
/// and sum_k y_k b_k < 0.
bool verify_farkas(const LinearSystem& system, const Vec& multipliers);

}  // namespace ltu
