#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ltu/rational.hpp"

namespace ltu {

/// One-to-one matching problem with linearly transferable utility. The pair
/// constraint is  lambda(x,y) * u_x + (1 - lambda(x,y)) * v_y = phi(x,y) / 2,
/// and reservation utilities are 0.
struct LTUProblem {
  std::vector<std::string> workers;  // X, file order
  std::vector<std::string> jobs;     // Y, file order
  Vec n;                             // mass per worker type
  Vec m;                             // mass per job type
  Matrix lambda;                     // |X| x |Y|, entries in (0,1)
  Matrix phi;                        // |X| x |Y|

  std::size_t num_workers() const { return workers.size(); }
  std::size_t num_jobs() const { return jobs.size(); }

  bool operator==(const LTUProblem&) const = default;
};

/// Matching masses plus utilities; every entry is nonnegative.
struct Outcome {
  Matrix mu;
  Vec u;
  Vec v;

  bool operator==(const Outcome&) const = default;
};

/// Canonical pair terms (lambda, phi) produced from alternative constraint forms.
struct PairTerms {
  Matrix lambda;
  Matrix phi;
};

enum class OutputPolicy { AllowAny, RequirePositive };

/// Checks every LTUProblem invariant and returns the problem unchanged.
/// Throws DimensionMismatch, LambdaOutOfRange, NonpositiveMass or, under
/// RequirePositive, NonpositiveOutput.
LTUProblem validate_problem(LTUProblem raw, OutputPolicy policy = OutputPolicy::AllowAny);

/// Canonicalizes a*u + b*v = c into lambda = a/(a+b), phi = 2c/(a+b).
PairTerms from_linear_constraints(const Matrix& a, const Matrix& b, const Matrix& c);

/// Wage-tax model: lambda = 1/(2 - tau), phi = 2(1 - tau) S / (2 - tau).
PairTerms from_tax_schedule(const Matrix& surplus, const Matrix& tau);

/// Re-expands canonical terms as (a, b, c) = (lambda, 1 - lambda, phi / 2).
struct LinearConstraints {
  Matrix a, b, c;
};
LinearConstraints to_linear_constraints(const PairTerms& terms);

/// Zero-filled outcome with dimensions matching `p`.
Outcome zero_outcome(const LTUProblem& p);

void check_dimensions(const LTUProblem& p, const Outcome& o);

// ---------------------------------------------------------------------------
// Many-to-one (arrangement) problems.

struct Arrangement {
  std::vector<std::optional<std::size_t>> slots;  // type index or vacant
  Vec lambda;                                     // per slot, 0 iff vacant
  Rational phi;

  bool operator==(const Arrangement&) const = default;
};

struct ManyToOneProblem {
  std::vector<std::string> types;
  Vec n;
  std::size_t arrangement_size = 0;  // N
  std::vector<Arrangement> arrangements;

  std::size_t num_types() const { return types.size(); }

  /// M(x, a): number of slots of arrangement `a` occupied by type `x`.
  std::size_t occupancy(std::size_t x, std::size_t a) const;

  /// Sum of lambda over the slots of `a` occupied by type `x`.
  Rational weight(std::size_t x, std::size_t a) const;

  bool operator==(const ManyToOneProblem&) const = default;
};

struct ManyToOneOutcome {
  Vec mu;  // per arrangement
  Vec u;   // per type

  bool operator==(const ManyToOneOutcome&) const = default;
};

/// Throws InvalidArrangement, NonpositiveMass, DimensionMismatch or, under
/// RequirePositive, NonpositiveOutput.
ManyToOneProblem validate_many_to_one(ManyToOneProblem raw,
                                      OutputPolicy policy = OutputPolicy::AllowAny);

void check_dimensions(const ManyToOneProblem& p, const ManyToOneOutcome& o);

// ---------------------------------------------------------------------------

/// A subproblem keeps lambda and phi on Xsub x Ysub but may change masses and
/// reservation utilities.
struct SubproblemSpec {
  LTUProblem parent;
  std::vector<std::size_t> xsub;
  std::vector<std::size_t> ysub;
  Vec n;
  Vec m;
  Vec u_reservation;
  Vec v_reservation;
};

}  // namespace ltu
