#include "ltu/reduction.hpp"

#include <algorithm>

#include "ltu/error.hpp"

namespace ltu {

namespace {

void require_positive_outputs(const LTUProblem& p) {
  validate_problem(p, OutputPolicy::RequirePositive);
}

ExpectedValues verified_values(const BimatrixGame& g, const MixedProfile& s) {
  const auto check = is_equilibrium(g, s);
  if (!check.accepted()) {
    const auto& w = *check.witness;
    throw Error(ErrorCode::NotAnEquilibrium,
                std::string(w.player == Player::Hider ? "hider" : "seeker") + " strategy " +
                    std::to_string(w.strategy) + " improves on the profile (" +
                    to_string(w.deviation_value) + " vs " + to_string(w.current_value) + ")");
  }
  if (check.certificate->hider_loss == 0 || check.certificate->seeker_payoff == 0) {
    throw Error(ErrorCode::ZeroValue, "equilibrium of a reduced game has a zero value");
  }
  return ExpectedValues{check.certificate->hider_loss, check.certificate->seeker_payoff};
}

}  // namespace

std::size_t cell_index(const LTUProblem& p, std::size_t x, std::size_t y) {
  return x * p.num_jobs() + y;
}
std::size_t row_strategy(const LTUProblem&, std::size_t x) { return x; }
std::size_t col_strategy(const LTUProblem& p, std::size_t y) { return p.num_workers() + y; }

BimatrixGame to_game(const LTUProblem& p) {
  require_positive_outputs(p);
  const std::size_t nx = p.num_workers(), ny = p.num_jobs();
  BimatrixGame g;
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t y = 0; y < ny; ++y) g.rows.push_back(p.workers[x] + "," + p.jobs[y]);
  for (const auto& x : p.workers) g.cols.push_back("x:" + x);
  for (const auto& y : p.jobs) g.cols.push_back("y:" + y);
  g.loss = Matrix(nx * ny, nx + ny);
  g.payoff = Matrix(nx * ny, nx + ny);
  for (std::size_t x = 0; x < nx; ++x) {
    for (std::size_t y = 0; y < ny; ++y) {
      const std::size_t cell = cell_index(p, x, y);
      const Rational& phi = p.phi(x, y);
      const Rational& lambda = p.lambda(x, y);
      g.loss(cell, row_strategy(p, x)) = lambda / (p.n[x] * phi);
      g.payoff(cell, row_strategy(p, x)) = 1 / (2 * p.n[x] * phi);
      g.loss(cell, col_strategy(p, y)) = (1 - lambda) / (p.m[y] * phi);
      g.payoff(cell, col_strategy(p, y)) = 1 / (2 * p.m[y] * phi);
    }
  }
  return g;
}

MixedProfile outcome_to_equilibrium(const LTUProblem& p, const Outcome& o) {
  check_dimensions(p, o);
  const std::size_t nx = p.num_workers(), ny = p.num_jobs();
  Rational output = 0;
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t y = 0; y < ny; ++y) output += p.phi(x, y) * o.mu(x, y);
  const Rational utility = dot(p.n, o.u) + dot(p.m, o.v);
  if (output == 0 || utility == 0) {
    throw Error(ErrorCode::DegenerateOutcome, "total output or total utility is zero");
  }
  MixedProfile s{Vec(nx * ny), Vec(nx + ny)};
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t y = 0; y < ny; ++y)
      s.p[cell_index(p, x, y)] = p.phi(x, y) * o.mu(x, y) / output;
  for (std::size_t x = 0; x < nx; ++x) s.q[row_strategy(p, x)] = p.n[x] * o.u[x] / utility;
  for (std::size_t y = 0; y < ny; ++y) s.q[col_strategy(p, y)] = p.m[y] * o.v[y] / utility;
  return s;
}

Outcome equilibrium_to_outcome(const LTUProblem& p, const MixedProfile& s) {
  const BimatrixGame g = to_game(p);
  const ExpectedValues values = verified_values(g, s);
  Outcome o = zero_outcome(p);
  for (std::size_t x = 0; x < p.num_workers(); ++x)
    for (std::size_t y = 0; y < p.num_jobs(); ++y)
      o.mu(x, y) = s.p[cell_index(p, x, y)] / (2 * p.phi(x, y) * values.payoff);
  for (std::size_t x = 0; x < p.num_workers(); ++x)
    o.u[x] = s.q[row_strategy(p, x)] / (2 * p.n[x] * values.loss);
  for (std::size_t y = 0; y < p.num_jobs(); ++y)
    o.v[y] = s.q[col_strategy(p, y)] / (2 * p.m[y] * values.loss);
  return o;
}

std::pair<ManyToOneProblem, Rational> normalize_outputs(const ManyToOneProblem& p) {
  Rational k = 0;
  if (!p.arrangements.empty()) {
    Rational lowest = p.arrangements.front().phi;
    for (const auto& a : p.arrangements) lowest = std::min(lowest, a.phi);
    if (lowest <= 0) k = 1 - lowest;
  }
  ManyToOneProblem shifted = p;
  for (auto& a : shifted.arrangements) a.phi += k;
  return {std::move(shifted), k};
}

BimatrixGame to_game_n(const ManyToOneProblem& p) {
  validate_many_to_one(p, OutputPolicy::RequirePositive);
  const std::size_t na = p.arrangements.size(), nt = p.num_types();
  BimatrixGame g;
  for (const auto& arr : p.arrangements) {
    std::string label = "(";
    for (std::size_t i = 0; i < arr.slots.size(); ++i) {
      if (i) label += ",";
      label += arr.slots[i] ? p.types[*arr.slots[i]] : "0";
    }
    g.rows.push_back(label + ")");
  }
  g.cols = p.types;
  g.loss = Matrix(na, nt);
  g.payoff = Matrix(na, nt);
  for (std::size_t a = 0; a < na; ++a) {
    const Rational& phi = p.arrangements[a].phi;
    for (std::size_t x = 0; x < nt; ++x) {
      const std::size_t count = p.occupancy(x, a);
      if (count == 0) continue;
      g.loss(a, x) = p.weight(x, a) / (p.n[x] * phi);
      g.payoff(a, x) = Rational(count) / (p.n[x] * phi);
    }
  }
  return g;
}

MixedProfile outcome_to_equilibrium_n(const ManyToOneProblem& p, const ManyToOneOutcome& o) {
  check_dimensions(p, o);
  Rational output = 0;
  for (std::size_t a = 0; a < p.arrangements.size(); ++a) output += p.arrangements[a].phi * o.mu[a];
  const Rational utility = dot(p.n, o.u);
  if (output == 0 || utility == 0) {
    throw Error(ErrorCode::DegenerateOutcome, "total output or total utility is zero");
  }
  MixedProfile s{Vec(p.arrangements.size()), Vec(p.num_types())};
  for (std::size_t a = 0; a < p.arrangements.size(); ++a)
    s.p[a] = p.arrangements[a].phi * o.mu[a] / output;
  for (std::size_t x = 0; x < p.num_types(); ++x) s.q[x] = p.n[x] * o.u[x] / utility;
  return s;
}

ManyToOneOutcome equilibrium_to_outcome_n(const ManyToOneProblem& p, const MixedProfile& s) {
  const BimatrixGame g = to_game_n(p);
  const ExpectedValues values = verified_values(g, s);
  ManyToOneOutcome o{Vec(p.arrangements.size()), Vec(p.num_types())};
  for (std::size_t a = 0; a < p.arrangements.size(); ++a)
    o.mu[a] = s.p[a] / (p.arrangements[a].phi * values.payoff);
  for (std::size_t x = 0; x < p.num_types(); ++x) o.u[x] = s.q[x] / (p.n[x] * values.loss);
  return o;
}

}  // namespace ltu
