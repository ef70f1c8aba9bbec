#pragma once

#include <array>
#include <cstddef>
#include <optional>

#include "ltu/model.hpp"
#include "ltu/stability.hpp"

namespace ltu {

/// omega(x, y) = lambda / (1 - lambda); strictly positive.
Matrix omega(const LTUProblem& p);

/// Types (x, x', y, y').
struct Quadruple {
  std::size_t x, x2, y, y2;

  bool operator==(const Quadruple&) const = default;
};

/// omega(x,y) omega(x',y') / (omega(x',y) omega(x,y')).
Rational cross_ratio(const Matrix& omega, const Quadruple& q);

struct TuWitness {
  bool is_tu = false;
  std::optional<Quadruple> quadruple;  // when not TU
  Rational rho;                        // cross ratio at the quadruple (1 when TU)
  Vec a;                               // when TU: u~ = a u
  Vec b;                               // when TU: v~ = b v
};

/// Tests the cross ratio against the first worker and job type only, which is
/// equivalent to testing every quadruple. Reports the first failing (x, y) in
/// row-major order as the quadruple (0, x, 0, y).
TuWitness check_tu(const LTUProblem& p);

struct TuRescaling {
  Vec a;
  Vec b;
  Matrix phi_tilde;  // (a_x + b_y) phi / 2, so that a u + b v = phi_tilde
};

/// Throws NotTU unless the witness certifies the TU property.
TuRescaling rescale_to_tu(const LTUProblem& p, const TuWitness& witness);

/// Restriction of the parent to Xsub x Ysub with new masses, plus the
/// equivalent zero-reservation problem obtained by u <- u - u_res,
/// v <- v - v_res (phi/2 decreases by lambda u_res + (1 - lambda) v_res).
struct Subproblem {
  LTUProblem restricted;
  Vec u_reservation;
  Vec v_reservation;
  LTUProblem folded;
};

/// Throws EmptyTypeSet, DimensionMismatch or NonpositiveMass.
Subproblem make_subproblem(const SubproblemSpec& spec);

struct ExchangeReport {
  StabilityReport mu2_with_uv1;  // (mu', u, v)
  StabilityReport mu1_with_uv2;  // (mu, u', v')
  bool exchangeable() const { return mu2_with_uv1.stable && mu1_with_uv2.stable; }
};

/// Throws InputNotStable if either outcome fails verify_stable.
ExchangeReport exchange_test(const LTUProblem& p, const Outcome& o1, const Outcome& o2);

/// Effective rescaled outputs (11, 12, 21, 22) the counterexample aims for,
/// for a working cross ratio rho > 1.
std::array<Rational, 4> counterexample_targets(const Rational& rho);

struct Counterexample {
  Quadruple quadruple;         // as requested
  Rational rho;                // cross ratio at the requested quadruple
  Rational working_rho;        // > 1 after the optional job swap
  bool swapped_jobs = false;
  SubproblemSpec spec;         // 2x2, unit masses, with reservations
  LTUProblem folded;           // equivalent zero-reservation problem
  std::array<Rational, 4> scale;    // a1, a2, b1, b2 with u~ = a u, v~ = b v
  std::array<Rational, 4> targets;  // effective rescaled outputs 11, 12, 21, 22
  Outcome worker_side;              // mu12 = mu21 = 1, v = 0
  Outcome job_side;                 // mu11 = mu22 = 1, u = 0
  StabilityReport worker_side_report;
  StabilityReport job_side_report;
  ExchangeReport exchange;
};

/// Builds a 2x2 subproblem of `p` on the quadruple with two stable but
/// non-exchangeable outcomes. Outcomes are expressed in the folded problem's
/// utilities. Throws IsTU when the cross ratio is 1.
Counterexample build_counterexample(const LTUProblem& p, const Quadruple& q);

}  // namespace ltu
