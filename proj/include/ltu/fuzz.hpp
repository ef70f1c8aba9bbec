#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ltu/model.hpp"

namespace ltu {

/// Random instance shape. lambda = k/d with d <= lambda_den; phi = k/d with
/// d <= phi_den and phi <= phi_max; masses k/d with k <= 3, d <= 2.
struct FuzzShape {
  std::size_t max_workers = 3;
  std::size_t max_jobs = 3;
  long lambda_den = 20;
  long phi_max = 10;
  long phi_den = 10;
  bool unit_masses = false;
};

LTUProblem random_problem(std::mt19937_64& rng, const FuzzShape& shape = {});

/// lambda_xy = a_x / (a_x + b_y) for random positive a, b, so every cross
/// ratio is 1.
LTUProblem random_tu_problem(std::mt19937_64& rng, const FuzzShape& shape = {});

struct FuzzOptions {
  std::uint64_t seed = 1;
  std::size_t count = 100;
  bool oracle = true;  // cross-check against enumerate_stable
  FuzzShape shape;
};

struct FuzzFailure {
  std::size_t instance;
  std::string what;
};

struct FuzzReport {
  std::size_t instances = 0;
  std::size_t oracle_checked = 0;
  std::vector<FuzzFailure> failures;
};

/// Runs the solver pipeline on random instances: solve from label 0, verify,
/// round-trip both maps, and (optionally) look the outcome's pattern up in
/// the oracle output. Every discrepancy is recorded, nothing is thrown.
FuzzReport run_fuzz(const FuzzOptions& opts);

}  // namespace ltu
