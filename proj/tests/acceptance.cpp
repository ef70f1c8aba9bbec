// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "ltu/error.hpp"
#include "ltu/fuzz.hpp"
#include "ltu/gamesolve.hpp"
#include "ltu/io.hpp"
#include "ltu/oracle.hpp"
#include "ltu/pipeline.hpp"
#include "ltu/reduction.hpp"
#include "ltu/stability.hpp"
#include "ltu/tu.hpp"

using namespace ltu;

namespace {

constexpr std::uint64_t kSeed = 20240601;
constexpr std::size_t kCorpus = 1000;     // round trip, existence
constexpr std::size_t kOracleCorpus = 100;  // enumeration + oracle per instance
constexpr std::size_t kTuCorpus = 100;

std::string data(const std::string& name) { return std::string(LTU_DATA_DIR) + "/" + name; }

std::vector<LTUProblem> corpus(std::size_t count) {
  std::mt19937_64 rng(kSeed);
  std::vector<LTUProblem> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_problem(rng));
  return out;
}

Rational phi_mu(const LTUProblem& p, const Outcome& o) {
  Rational total = 0;
  for (std::size_t x = 0; x < p.num_workers(); ++x)
    for (std::size_t y = 0; y < p.num_jobs(); ++y) total += p.phi(x, y) * o.mu(x, y);
  return total;
}

// Checks the closing value identities at a mapped (equilibrium, outcome) pair.
bool value_identities(const LTUProblem& p, const BimatrixGame& g, const MixedProfile& s,
                      const Outcome& o) {
  const ExpectedValues ev = expected_values(g, s);
  return ev.payoff == 1 / (2 * phi_mu(p, o)) &&
         ev.loss == 1 / (2 * (dot(p.n, o.u) + dot(p.m, o.v)));
}

struct Tally {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first;

  void check(bool ok, const std::string& what) {
    ++checked;
    if (!ok && failed++ == 0) first = what;
  }
  bool ok() const { return failed == 0; }
  std::string summary() const {
    std::ostringstream s;
    s << checked << " checks, " << failed << " failures";
    if (failed) s << " (first: " << first << ")";
    return s.str();
  }
};

struct Result {
  bool pass;
  std::string detail;
};

// Shared between criteria 2 and 4.
Tally identity_tally;

Result crossed() {
  const auto t0 = std::chrono::steady_clock::now();
  const LTUProblem p = io::problem_from_json(io::read_json_file(data("crossed_linear.json")));
  const Outcome worker_side = io::outcome_from_json(io::read_json_file(data("crossed_worker_side.json")), p);
  const Outcome job_side = io::outcome_from_json(io::read_json_file(data("crossed_job_side.json")), p);
  const Outcome mixed = io::outcome_from_json(io::read_json_file(data("crossed_mixed.json")), p);
  Tally t;
  t.check(p.lambda == io::problem_from_json(io::read_json_file(data("crossed.json"))).lambda,
          "canonical lambda");
  const auto entries = enumerate_stable(p);
  auto found = [&](const Outcome& o) {
    return std::any_of(entries.begin(), entries.end(), [&](const OracleEntry& e) {
      return e.pattern == induced_pattern(o) && e.outcome == o;
    });
  };
  t.check(found(worker_side), "oracle worker_side pattern");
  t.check(found(job_side), "oracle job_side pattern");
  t.check(verify_stable(p, worker_side).stable, "worker_side stable");
  t.check(verify_stable(p, job_side).stable, "job_side stable");
  const auto bad = verify_stable(p, mixed);
  t.check(!bad.stable && bad.violations.size() == 1 &&
              bad.violations[0].indices == std::vector<std::size_t>{0, 1},
          "mixed rejected at pair 12");
  t.check(!exchange_test(p, worker_side, job_side).exchangeable(), "exchange fails");
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  t.check(secs < 1.0, "runtime");
  std::ostringstream d;
  d << t.summary() << ", " << secs << " s";
  return {t.ok(), d.str()};
}

Result round_trip(const std::vector<LTUProblem>& problems) {
  Tally t;
  for (std::size_t i = 0; i < problems.size(); ++i) {
    const LTUProblem& p = problems[i];
    const BimatrixGame g = to_game(p);
    const std::string tag = "instance " + std::to_string(i);
    try {
      for (std::size_t label = 0; label < g.num_rows() + g.num_cols(); ++label) {
        const MixedProfile s = lemke_howson(g, label).certificate.profile;
        const Outcome o = equilibrium_to_outcome(p, s);
        if (!verify_stable(p, o).stable) {
          t.check(false, tag + " unverified outcome");
          continue;
        }
        t.check(outcome_to_equilibrium(p, o) == s, tag + " profile round trip");
        t.check(equilibrium_to_outcome(p, outcome_to_equilibrium(p, o)) == o,
                tag + " outcome round trip");
        identity_tally.check(value_identities(p, g, s, o), tag + " value identities");
      }
    } catch (const Error& e) {
      t.check(false, tag + ": " + e.what());
    }
  }
  return {t.ok(), std::to_string(problems.size()) + " instances, all labels; " + t.summary()};
}

Result forward_backward(const std::vector<LTUProblem>& problems) {
  Tally t;
  for (std::size_t i = 0; i < problems.size(); ++i) {
    const LTUProblem& p = problems[i];
    const BimatrixGame g = to_game(p);
    const std::string tag = "instance " + std::to_string(i);
    try {
      for (const auto& c : enumerate_equilibria(g, g.num_rows() + g.num_cols())) {
        const Outcome o = equilibrium_to_outcome(p, c.profile);
        t.check(verify_stable(p, o).stable, tag + " equilibrium image unstable");
        identity_tally.check(value_identities(p, g, c.profile, o), tag + " value identities");
      }
      for (const auto& e : enumerate_stable(p)) {
        const MixedProfile s = outcome_to_equilibrium(p, e.outcome);
        t.check(is_equilibrium(g, s).accepted(), tag + " oracle image not an equilibrium");
        identity_tally.check(value_identities(p, g, s, e.outcome), tag + " value identities");
      }
    } catch (const Error& e) {
      t.check(false, tag + ": " + e.what());
    }
  }
  return {t.ok(), std::to_string(problems.size()) + " instances; " + t.summary()};
}

Result value_identity() { return {identity_tally.ok() && identity_tally.checked > 0, identity_tally.summary()}; }

Result existence(const std::vector<LTUProblem>& problems) {
  Tally t;
  for (std::size_t i = 0; i < problems.size(); ++i) {
    try {
      const Solution s = solve(problems[i]);
      t.check(s.report.stable, "instance " + std::to_string(i));
    } catch (const Error& e) {
      t.check(false, "instance " + std::to_string(i) + ": " + e.what());
    }
  }
  return {t.ok(), std::to_string(problems.size()) + " instances; " + t.summary()};
}

Result von_neumann() {
  std::mt19937_64 rng(kSeed + 6);
  FuzzShape shape;
  shape.unit_masses = true;
  Tally equal, literal;
  Rational observed, expected;
  for (int i = 0; i < 200; ++i) {
    LTUProblem p = random_tu_problem(rng, shape);
    for (std::size_t x = 0; x < p.num_workers(); ++x)
      for (std::size_t y = 0; y < p.num_jobs(); ++y) p.lambda(x, y) = Rational(1, 2);
    const BimatrixGame g = to_game(p);
    for (std::size_t x = 0; x < p.num_workers(); ++x) {
      for (std::size_t y = 0; y < p.num_jobs(); ++y) {
        const std::size_t c = cell_index(p, x, y), sx = row_strategy(p, x), sy = col_strategy(p, y);
        equal.check(g.loss(c, sx) == g.payoff(c, sx) && g.payoff(c, sx) == g.loss(c, sy) &&
                        g.loss(c, sy) == g.payoff(c, sy),
                    "alpha = beta = gamma = kappa");
        const bool hit = g.loss(c, sx) == 1 / p.phi(x, y);
        if (!hit && literal.failed == 0) {
          observed = g.loss(c, sx);
          expected = 1 / p.phi(x, y);
        }
        literal.check(hit, "alpha = 1/phi");
      }
    }
  }
  std::ostringstream d;
  d << "alpha = beta = gamma = kappa: " << equal.summary() << "; equal to 1/phi: " << literal.summary();
  if (!literal.ok()) {
    d << "; e.g. alpha = " << to_string(observed) << " where 1/phi = " << to_string(expected)
      << " (the payoff formulas give 1/(2 phi) at lambda = 1/2, n = m = 1)";
  }
  return {equal.ok() && literal.ok(), d.str()};
}

Result exchangeability(const std::vector<LTUProblem>& problems) {
  Tally tu, nontu;
  std::mt19937_64 rng(kSeed + 7);
  for (std::size_t i = 0; i < kTuCorpus; ++i) {
    const LTUProblem p = random_tu_problem(rng);
    const std::string tag = "TU instance " + std::to_string(i);
    const TuWitness w = check_tu(p);
    if (!w.is_tu) {
      tu.check(false, tag + " not detected as TU");
      continue;
    }
    const TuRescaling r = rescale_to_tu(p, w);
    const auto entries = enumerate_stable(p);
    tu.check(!entries.empty(), tag + " has no stable outcome");
    for (const auto& a : entries) {
      Rational ta = 0, tb = 0;
      for (std::size_t x = 0; x < p.num_workers(); ++x)
        for (std::size_t y = 0; y < p.num_jobs(); ++y) ta += r.phi_tilde(x, y) * a.outcome.mu(x, y);
      for (const auto& b : entries) {
        tu.check(exchange_test(p, a.outcome, b.outcome).exchangeable(), tag + " swap unstable");
        for (std::size_t x = 0; x < p.num_workers(); ++x)
          for (std::size_t y = 0; y < p.num_jobs(); ++y)
            tb += r.phi_tilde(x, y) * b.outcome.mu(x, y);
        tu.check(ta == tb, tag + " rescaled totals differ");
        tb = 0;
      }
    }
  }
  std::size_t non_tu = 0;
  for (std::size_t i = 0; i < problems.size(); ++i) {
    const TuWitness w = check_tu(problems[i]);
    if (w.is_tu) continue;
    ++non_tu;
    const std::string tag = "instance " + std::to_string(i);
    try {
      const Counterexample ce = build_counterexample(problems[i], *w.quadruple);
      nontu.check(verify_stable(ce.folded, ce.worker_side).stable, tag + " worker_side unstable");
      nontu.check(verify_stable(ce.folded, ce.job_side).stable, tag + " job_side unstable");
      nontu.check(!exchange_test(ce.folded, ce.worker_side, ce.job_side).exchangeable(), tag + " exchangeable");
    } catch (const Error& e) {
      nontu.check(false, tag + ": " + e.what());
    }
  }
  const bool targets = counterexample_targets(4) == std::array<Rational, 4>{3, 1, 3, 2};
  std::ostringstream d;
  d << kTuCorpus << " TU instances: " << tu.summary() << "; " << non_tu
    << " non-TU instances: " << nontu.summary() << "; rho = 4 targets (3, 1, 3, 2): "
    << (targets ? "yes" : "no");
  return {tu.ok() && nontu.ok() && targets && non_tu > 0, d.str()};
}

Result many_to_one() {
  Tally t;
  const ManyToOneProblem room = io::m2o_problem_from_json(io::read_json_file(data("roommate.json")));
  const BimatrixGame g = to_game_n(room);
  const MixedProfile s = lemke_howson(g, 0).certificate.profile;
  const ManyToOneOutcome o = equilibrium_to_outcome_n(room, s);
  t.check(o.mu == Vec{0, 1} && o.u == Vec{2}, "roommate outcome");
  t.check(verify_stable_m2o(room, o).stable, "roommate verified");

  // Shift invariance on variants with nonpositive outputs.
  for (const auto& [single, pair] : std::vector<std::pair<Rational, Rational>>{
           {Rational(-1), Rational(2)}, {Rational(0), Rational(3)}, {Rational(-5), Rational(-1)},
           {Rational(1, 2), Rational(2)}, {Rational(-3), Rational(-7)}}) {
    ManyToOneProblem p = room;
    p.arrangements[0].phi = single;
    p.arrangements[1].phi = pair;
    const auto [shifted, k] = normalize_outputs(p);
    for (std::size_t label = 0; label < 3; ++label) {
      const ManyToOneSolution sol = solve_m2o(p, label);
      ManyToOneOutcome lifted = sol.outcome;
      for (auto& u : lifted.u) u += k;
      const ManyToOneOutcome direct =
          equilibrium_to_outcome_n(shifted, sol.equilibrium.certificate.profile);
      t.check(verify_stable_m2o(p, sol.outcome).stable, "original outcome stable");
      t.check(lifted == direct, "utilities differ by exactly K");
      t.check(verify_stable_m2o(shifted, lifted).stable, "shifted outcome stable");
      for (std::size_t a = 0; a < p.arrangements.size(); ++a)
        t.check((sol.outcome.mu[a] > 0) == (direct.mu[a] > 0), "support preserved");
    }
  }
  return {t.ok(), t.summary()};
}

Result performance() {
  std::mt19937_64 rng(kSeed + 9);
  FuzzShape big;
  big.max_workers = big.max_jobs = 10;
  LTUProblem p;
  do p = random_problem(rng, big);
  while (p.num_workers() != 10 || p.num_jobs() != 10);
  auto t0 = std::chrono::steady_clock::now();
  const Solution s = solve(p);
  const double lh = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  FuzzShape small;
  LTUProblem q;
  do q = random_problem(rng, small);
  while (q.num_workers() != 3 || q.num_jobs() != 3);
  t0 = std::chrono::steady_clock::now();
  const auto entries = enumerate_stable(q);
  const double oracle = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  std::ostringstream d;
  d << "LH 10x10 (game " << to_game(p).num_rows() << "x" << to_game(p).num_cols() << ", "
    << s.equilibrium.entering_labels.size() << " pivots): " << lh << " s; oracle 3x3 ("
    << entries.size() << " feasible patterns): " << oracle << " s";
  return {s.report.stable && lh < 1.0 && oracle < 60.0, d.str()};
}

}  // namespace

int main() {
  const auto problems = corpus(kCorpus);
  const std::vector<LTUProblem> oracle_problems(problems.begin(),
                                                problems.begin() + static_cast<std::ptrdiff_t>(kOracleCorpus));
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria{
      {"AC1 crossed 2x2 reproduction", crossed},
      {"AC2 round trip", [&] { return round_trip(problems); }},
      {"AC3 forward/backward", [&] { return forward_backward(oracle_problems); }},
      {"AC4 value identities", value_identity},
      {"AC5 existence", [&] { return existence(problems); }},
      {"AC6 von Neumann specialization", von_neumann},
      {"AC7 exchangeability", [&] { return exchangeability(problems); }},
      {"AC8 many-to-one", many_to_one},
      {"AC9 performance", performance},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    Result r;
    try {
      r = fn();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    failures += !r.pass;
    std::cout << (r.pass ? "PASS " : "FAIL ") << name << ": " << r.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
