#include <doctest.h>

#include "ltu/gamesolve.hpp"
#include "ltu/oracle.hpp"
#include "ltu/reduction.hpp"
#include "ltu/stability.hpp"
#include "support.hpp"

using namespace ltu;
using namespace ltu::test;

TEST_CASE("to_game on the crossed example") {
  const LTUProblem p = crossed();
  const BimatrixGame g = to_game(p);
  CHECK(g.rows == std::vector<std::string>{"1,1", "1,2", "2,1", "2,2"});
  CHECK(g.cols == std::vector<std::string>{"x:1", "x:2", "y:1", "y:2"});
  const auto c11 = cell_index(p, 0, 0), c12 = cell_index(p, 0, 1);
  const auto x1 = row_strategy(p, 0), y1 = col_strategy(p, 0), y2 = col_strategy(p, 1);
  CHECK(g.loss(c11, x1) == q("1/2"));
  CHECK(g.payoff(c11, x1) == q("3/4"));
  CHECK(g.loss(c11, y1) == q("1"));
  CHECK(g.payoff(c11, y1) == q("3/4"));
  CHECK(g.loss(c12, x1) == q("1"));
  CHECK(g.loss(c12, y2) == q("1/2"));
  // Each cell is hit by exactly its row and its column.
  for (std::size_t r = 0; r < g.num_rows(); ++r) {
    std::size_t hits = 0;
    for (std::size_t c = 0; c < g.num_cols(); ++c) {
      CHECK((g.loss(r, c) > 0) == (g.payoff(r, c) > 0));
      hits += g.loss(r, c) > 0;
    }
    CHECK(hits == 2);
  }
}

TEST_CASE("to_game special cases") {
  const LTUProblem one = make_problem(mat({{"1/2"}}), mat({{"2"}}), vec({"1"}), vec({"1"}));
  const BimatrixGame g = to_game(one);
  CHECK(g.loss == mat({{"1/4", "1/4"}}));
  CHECK(g.payoff == mat({{"1/4", "1/4"}}));

  const LTUProblem zero = make_problem(mat({{"1/2"}}), mat({{"0"}}), vec({"1"}), vec({"1"}));
  CHECK(error_of([&] { to_game(zero); }) == ErrorCode::NonpositiveOutput);
}

TEST_CASE("unit-mass game with lambda = 1/2 has alpha = beta = gamma = kappa") {
  std::mt19937_64 rng(41);
  FuzzShape shape;
  shape.unit_masses = true;
  for (int i = 0; i < 50; ++i) {
    LTUProblem p = random_problem(rng, shape);
    for (std::size_t x = 0; x < p.num_workers(); ++x)
      for (std::size_t y = 0; y < p.num_jobs(); ++y) p.lambda(x, y) = q("1/2");
    const BimatrixGame g = to_game(p);
    for (std::size_t x = 0; x < p.num_workers(); ++x) {
      for (std::size_t y = 0; y < p.num_jobs(); ++y) {
        const auto c = cell_index(p, x, y);
        const Rational inv = 1 / (2 * p.phi(x, y));
        for (std::size_t s : {row_strategy(p, x), col_strategy(p, y)}) {
          CHECK(g.loss(c, s) == inv);
          CHECK(g.payoff(c, s) == inv);
        }
      }
    }
  }
}

TEST_CASE("outcome_to_equilibrium on the crossed example") {
  const LTUProblem p = crossed();
  CHECK(outcome_to_equilibrium(p, crossed_worker_side()) ==
        MixedProfile{vec({"2/5", "0", "0", "3/5"}), vec({"1/2", "1/2", "0", "0"})});
  CHECK(outcome_to_equilibrium(p, crossed_job_side()) ==
        MixedProfile{vec({"0", "2/5", "3/5", "0"}), vec({"0", "0", "1/2", "1/2"})});
  CHECK(error_of([&] { outcome_to_equilibrium(p, zero_outcome(p)); }) ==
        ErrorCode::DegenerateOutcome);

  const LTUProblem one = make_problem(mat({{"1/2"}}), mat({{"2"}}), vec({"1"}), vec({"1"}));
  const Outcome o{mat({{"1"}}), vec({"3/2"}), vec({"1/2"})};
  REQUIRE(verify_stable(one, o).stable);
  CHECK(outcome_to_equilibrium(one, o) == MixedProfile{vec({"1"}), vec({"3/4", "1/4"})});
}

TEST_CASE("equilibrium_to_outcome on the crossed example") {
  const LTUProblem p = crossed();
  CHECK(equilibrium_to_outcome(p, {vec({"2/5", "0", "0", "3/5"}), vec({"1/2", "1/2", "0", "0"})}) ==
        crossed_worker_side());
  const MixedProfile uniform{vec({"1/4", "1/4", "1/4", "1/4"}), vec({"1/4", "1/4", "1/4", "1/4"})};
  CHECK(error_of([&] { equilibrium_to_outcome(p, uniform); }) == ErrorCode::NotAnEquilibrium);
}

TEST_CASE("both maps are mutually inverse and preserve stability/equilibrium") {
  std::mt19937_64 rng(42);
  FuzzShape shape;
  shape.max_workers = 2;
  shape.max_jobs = 3;
  for (int i = 0; i < 40; ++i) {
    const LTUProblem p = random_problem(rng, shape);
    const BimatrixGame g = to_game(p);
    for (const auto& c : enumerate_equilibria(g, g.num_rows() + g.num_cols())) {
      const Outcome o = equilibrium_to_outcome(p, c.profile);
      CHECK(verify_stable(p, o).stable);
      CHECK(outcome_to_equilibrium(p, o) == c.profile);
      Rational phi_mu = 0;
      for (std::size_t x = 0; x < p.num_workers(); ++x)
        for (std::size_t y = 0; y < p.num_jobs(); ++y) phi_mu += p.phi(x, y) * o.mu(x, y);
      CHECK(c.seeker_payoff == 1 / (2 * phi_mu));
      CHECK(c.hider_loss == 1 / (2 * (dot(p.n, o.u) + dot(p.m, o.v))));
    }
    for (const auto& e : enumerate_stable(p)) {
      const MixedProfile s = outcome_to_equilibrium(p, e.outcome);
      CHECK(is_equilibrium(g, s).accepted());
      CHECK(equilibrium_to_outcome(p, s) == e.outcome);
    }
  }
}

TEST_CASE("normalize_outputs") {
  ManyToOneProblem p = roommate();
  auto [same, k0] = normalize_outputs(p);
  CHECK(k0 == 0);
  CHECK(same == p);

  p.arrangements[0].phi = -3;
  auto [shifted, k] = normalize_outputs(p);
  CHECK(k == 4);
  CHECK(shifted.arrangements[0].phi == 1);
  CHECK(shifted.arrangements[1].phi == 6);

  p.arrangements[0].phi = 0;
  auto [shifted0, k1] = normalize_outputs(p);
  CHECK(k1 == 1);
  CHECK(shifted0.arrangements[0].phi == 1);
  CHECK(shifted0.arrangements[1].phi == 3);
}

TEST_CASE("roommate game and maps") {
  const ManyToOneProblem p = roommate();
  const BimatrixGame g = to_game_n(p);
  CHECK(g.loss == mat({{"1"}, {"1/4"}}));
  CHECK(g.payoff == mat({{"1"}, {"1/2"}}));

  const ManyToOneOutcome o{vec({"0", "1"}), vec({"2"})};
  const MixedProfile s = outcome_to_equilibrium_n(p, o);
  CHECK(s == MixedProfile{vec({"0", "1"}), vec({"1"})});
  CHECK(is_equilibrium(g, s).accepted());
  CHECK(equilibrium_to_outcome_n(p, s) == o);

  const auto lh = lemke_howson(g, 0).certificate.profile;
  const ManyToOneOutcome back = equilibrium_to_outcome_n(p, lh);
  CHECK(back == o);
  CHECK(verify_stable_m2o(p, back).stable);
}

TEST_CASE("one-to-one problem encoded with arrangements gives the same outcomes") {
  std::mt19937_64 rng(43);
  FuzzShape shape;
  shape.max_workers = 2;
  shape.max_jobs = 2;
  shape.unit_masses = true;
  for (int i = 0; i < 25; ++i) {
    const LTUProblem p = random_problem(rng, shape);
    // Types are workers then jobs; singles have output 0, shifted to positive.
    ManyToOneProblem m;
    for (const auto& w : p.workers) m.types.push_back("x" + w);
    for (const auto& j : p.jobs) m.types.push_back("y" + j);
    m.n = p.n;
    m.n.insert(m.n.end(), p.m.begin(), p.m.end());
    m.arrangement_size = 2;
    for (std::size_t t = 0; t < m.types.size(); ++t)
      m.arrangements.push_back({{t, std::nullopt}, vec({"1", "0"}), q("0")});
    for (std::size_t x = 0; x < p.num_workers(); ++x) {
      for (std::size_t y = 0; y < p.num_jobs(); ++y) {
        m.arrangements.push_back({{x, p.num_workers() + y},
                                  Vec{p.lambda(x, y), 1 - p.lambda(x, y)},
                                  p.phi(x, y) / 2});
      }
    }
    m = validate_many_to_one(std::move(m));
    auto [shifted, k] = normalize_outputs(m);
    const BimatrixGame g = to_game_n(shifted);
    for (const auto& c : enumerate_equilibria(g, g.num_rows() + g.num_cols())) {
      ManyToOneOutcome mo = equilibrium_to_outcome_n(shifted, c.profile);
      for (auto& u : mo.u) u -= k;
      REQUIRE(verify_stable_m2o(m, mo).stable);
      Outcome o = zero_outcome(p);
      for (std::size_t x = 0; x < p.num_workers(); ++x) {
        o.u[x] = mo.u[x];
        for (std::size_t y = 0; y < p.num_jobs(); ++y)
          o.mu(x, y) = mo.mu[m.types.size() + x * p.num_jobs() + y];
      }
      for (std::size_t y = 0; y < p.num_jobs(); ++y) o.v[y] = mo.u[p.num_workers() + y];
      CHECK(verify_stable(p, o).stable);
    }
  }
}
