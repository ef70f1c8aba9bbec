#include <doctest.h>

#include "ltu/reduction.hpp"
#include "support.hpp"

using namespace ltu;
using namespace ltu::test;
using io::json;

TEST_CASE("problem files") {
  const LTUProblem p = io::problem_from_json(io::read_json_file(data_path("crossed.json")));
  CHECK(p == crossed());
  CHECK(io::problem_from_json(io::read_json_file(data_path("crossed_linear.json"))) == p);

  const LTUProblem t = io::problem_from_json(io::read_json_file(data_path("tax.json")));
  CHECK(t.lambda == mat({{"2/3", "4/5"}}));
  CHECK(t.phi == mat({{"2", "2"}}));
  CHECK(t.m == vec({"1", "2"}));
}

TEST_CASE("serialization round trip") {
  std::mt19937_64 rng(81);
  for (int i = 0; i < 100; ++i) {
    const LTUProblem p = random_problem(rng);
    const json j = io::problem_to_json(p);
    CHECK(io::problem_from_json(json::parse(j.dump())) == p);
    CHECK(io::problem_to_json(io::problem_from_json(j)).dump() == j.dump());

    Outcome o = zero_outcome(p);
    o.mu(0, 0) = frac(i, 7);
    o.u[0] = frac(-i, 3);
    CHECK(io::outcome_from_json(io::outcome_to_json(o), p) == o);

    const BimatrixGame g = to_game(p);
    const BimatrixGame back = io::game_from_json(io::game_to_json(g));
    CHECK(back.rows == g.rows);
    CHECK(back.cols == g.cols);
    CHECK(back.loss == g.loss);
    CHECK(back.payoff == g.payoff);
  }
  const ManyToOneProblem m = roommate();
  CHECK(io::m2o_problem_from_json(io::m2o_problem_to_json(m)) == m);
  CHECK(io::m2o_problem_from_json(io::read_json_file(data_path("roommate.json"))) == m);
  const ManyToOneOutcome mo{vec({"0", "1"}), vec({"2"})};
  CHECK(io::m2o_outcome_from_json(io::m2o_outcome_to_json(mo), m) == mo);
  const MixedProfile s{vec({"1/3", "2/3"}), vec({"1"})};
  CHECK(io::profile_from_json(io::profile_to_json(s)) == s);
}

TEST_CASE("malformed problem files") {
  const json good = io::problem_to_json(crossed());
  auto code = [](const json& j) { return error_of([&] { io::problem_from_json(j); }); };

  json j = good;
  j["pairs"].erase(3);
  CHECK(code(j) == ErrorCode::DimensionMismatch);

  j = good;
  j["pairs"][3]["y"] = "1";
  CHECK(code(j) == ErrorCode::DimensionMismatch);

  j = good;
  j["pairs"][0]["x"] = "nobody";
  CHECK(code(j) == ErrorCode::DimensionMismatch);

  j = good;
  j["pairs"][0]["lambda"] = 0.5;
  CHECK(code(j) == ErrorCode::ParseError);

  j = good;
  j["pairs"][0]["lambda"] = "1/0";
  CHECK(code(j) == ErrorCode::ParseError);

  j = good;
  j["pairs"][0]["lambda"] = "3/2";
  CHECK(code(j) == ErrorCode::LambdaOutOfRange);

  j = good;
  j["workers"][0]["mass"] = "-1";
  CHECK(code(j) == ErrorCode::NonpositiveMass);

  j = good;
  j["workers"][1]["id"] = "1";
  CHECK(code(j) == ErrorCode::DimensionMismatch);

  j = good;
  j.erase("jobs");
  CHECK(code(j) == ErrorCode::ParseError);

  j = good;
  j["tax"] = json::array();
  CHECK(code(j) == ErrorCode::ParseError);

  j = good;
  j["pairs"][0]["phi"] = "0";
  CHECK(code(j) != ErrorCode::NonpositiveOutput);
  CHECK(error_of([&] { io::problem_from_json(j, OutputPolicy::RequirePositive); }) ==
        ErrorCode::NonpositiveOutput);

  CHECK(error_of([] { io::read_json_file(data_path("missing.json")); }) == ErrorCode::ParseError);
}

TEST_CASE("outcome dimensions are checked") {
  const LTUProblem p = crossed();
  json o = io::outcome_to_json(crossed_worker_side());
  o["v"].push_back("1");
  CHECK(error_of([&] { io::outcome_from_json(o, p); }) == ErrorCode::DimensionMismatch);
  o = io::outcome_to_json(crossed_worker_side());
  o["mu"][1].erase(1);
  CHECK(error_of([&] { io::outcome_from_json(o, p); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("decimal display") {
  io::Format f;
  f.decimal_digits = 4;
  CHECK(io::to_json(q("2/3"), f) == "0.6667");
  CHECK(io::to_json(q("2/3")) == "2/3");
}

TEST_CASE("witness uses type ids") {
  const LTUProblem p = crossed();
  const json w = io::witness_to_json(check_tu(p), p);
  CHECK(w["isTU"] == false);
  CHECK(w["rho"] == "1/4");
  CHECK(w["quadruple"] == json::array({"1", "2", "1", "2"}));
}
