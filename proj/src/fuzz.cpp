#include "ltu/fuzz.hpp"

#include <algorithm>

#include "ltu/error.hpp"
#include "ltu/oracle.hpp"
#include "ltu/pipeline.hpp"
#include "ltu/reduction.hpp"

namespace ltu {

namespace {

long draw(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

Rational ratio(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Positive k/d with d <= den and value <= max.
Rational positive(std::mt19937_64& rng, long max, long den) {
  const long d = draw(rng, 1, den);
  return ratio(draw(rng, 1, max * d), d);
}

LTUProblem skeleton(std::mt19937_64& rng, const FuzzShape& shape) {
  LTUProblem p;
  const auto nx = static_cast<std::size_t>(draw(rng, 1, static_cast<long>(shape.max_workers)));
  const auto ny = static_cast<std::size_t>(draw(rng, 1, static_cast<long>(shape.max_jobs)));
  for (std::size_t x = 0; x < nx; ++x) {
    p.workers.push_back("x" + std::to_string(x + 1));
    p.n.push_back(shape.unit_masses ? Rational(1) : positive(rng, 3, 2));
  }
  for (std::size_t y = 0; y < ny; ++y) {
    p.jobs.push_back("y" + std::to_string(y + 1));
    p.m.push_back(shape.unit_masses ? Rational(1) : positive(rng, 3, 2));
  }
  p.lambda = Matrix(nx, ny);
  p.phi = Matrix(nx, ny);
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t y = 0; y < ny; ++y) p.phi(x, y) = positive(rng, shape.phi_max, shape.phi_den);
  return p;
}

}  // namespace

LTUProblem random_problem(std::mt19937_64& rng, const FuzzShape& shape) {
  LTUProblem p = skeleton(rng, shape);
  for (std::size_t x = 0; x < p.num_workers(); ++x) {
    for (std::size_t y = 0; y < p.num_jobs(); ++y) {
      const long d = draw(rng, 2, shape.lambda_den);
      p.lambda(x, y) = ratio(draw(rng, 1, d - 1), d);
    }
  }
  return validate_problem(std::move(p), OutputPolicy::RequirePositive);
}

LTUProblem random_tu_problem(std::mt19937_64& rng, const FuzzShape& shape) {
  LTUProblem p = skeleton(rng, shape);
  Vec a, b;
  for (std::size_t x = 0; x < p.num_workers(); ++x) a.push_back(positive(rng, 4, 3));
  for (std::size_t y = 0; y < p.num_jobs(); ++y) b.push_back(positive(rng, 4, 3));
  for (std::size_t x = 0; x < p.num_workers(); ++x)
    for (std::size_t y = 0; y < p.num_jobs(); ++y) p.lambda(x, y) = a[x] / (a[x] + b[y]);
  return validate_problem(std::move(p), OutputPolicy::RequirePositive);
}

FuzzReport run_fuzz(const FuzzOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  FuzzReport report;
  for (std::size_t i = 0; i < opts.count; ++i) {
    const LTUProblem p = random_problem(rng, opts.shape);
    ++report.instances;
    auto fail = [&](std::string what) { report.failures.push_back({i, std::move(what)}); };
    try {
      const Solution s = solve(p);
      const MixedProfile& profile = s.equilibrium.certificate.profile;
      if (outcome_to_equilibrium(p, s.outcome) != profile) {
        fail("outcome -> equilibrium does not return the solver profile");
      }
      if (equilibrium_to_outcome(p, outcome_to_equilibrium(p, s.outcome)) != s.outcome) {
        fail("equilibrium -> outcome round trip is not the identity");
      }
      if (opts.oracle) {
        const auto entries = enumerate_stable(p);
        const auto pattern = induced_pattern(s.outcome);
        ++report.oracle_checked;
        if (std::none_of(entries.begin(), entries.end(),
                         [&](const OracleEntry& e) { return e.pattern == pattern; })) {
          fail("solver outcome pattern missing from oracle output");
        }
      }
    } catch (const Error& e) {
      fail(std::string(error_name(e.code())) + ": " + e.what());
    }
  }
  return report;
}

}  // namespace ltu
