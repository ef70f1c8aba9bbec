#include "ltu/stability.hpp"

#include <algorithm>
#include <tuple>

namespace ltu {

namespace {

Rational pair_value(const LTUProblem& p, const Outcome& o, std::size_t x, std::size_t y) {
  const Rational& l = p.lambda(x, y);
  return l * o.u[x] + (1 - l) * o.v[y];
}

void add(StabilityReport& report, std::string condition, std::vector<std::size_t> indices,
         Rational lhs, Rational rhs) {
  report.stable = false;
  report.violations.push_back(
      Violation{std::move(condition), std::move(indices), std::move(lhs), std::move(rhs)});
}

}  // namespace

StabilityReport verify_stable(const LTUProblem& p, const Outcome& o) {
  check_dimensions(p, o);
  StabilityReport report;
  const std::size_t nx = p.num_workers(), ny = p.num_jobs();

  for (std::size_t x = 0; x < nx; ++x) {
    for (std::size_t y = 0; y < ny; ++y) {
      if (o.mu(x, y) < 0) add(report, "nonnegative-mu", {x, y}, o.mu(x, y), 0);
    }
  }
  for (std::size_t x = 0; x < nx; ++x) {
    if (o.u[x] < 0) add(report, "nonnegative-u", {x}, o.u[x], 0);
  }
  for (std::size_t y = 0; y < ny; ++y) {
    if (o.v[y] < 0) add(report, "nonnegative-v", {y}, o.v[y], 0);
  }

  for (std::size_t x = 0; x < nx; ++x) {
    for (std::size_t y = 0; y < ny; ++y) {
      const Rational lhs = pair_value(p, o, x, y);
      const Rational rhs = p.phi(x, y) / 2;
      if (lhs < rhs) add(report, "1", {x, y}, lhs, rhs);
    }
  }

  const Vec rows = o.mu.row_sums();
  const Vec cols = o.mu.col_sums();
  for (std::size_t x = 0; x < nx; ++x) {
    if (rows[x] > p.n[x]) add(report, "2", {x}, rows[x], p.n[x]);
  }
  for (std::size_t y = 0; y < ny; ++y) {
    if (cols[y] > p.m[y]) add(report, "3", {y}, cols[y], p.m[y]);
  }

  for (std::size_t x = 0; x < nx; ++x) {
    for (std::size_t y = 0; y < ny; ++y) {
      if (o.mu(x, y) <= 0) continue;
      const Rational lhs = pair_value(p, o, x, y);
      const Rational rhs = p.phi(x, y) / 2;
      if (lhs != rhs) add(report, "4", {x, y}, lhs, rhs);
    }
  }

  for (std::size_t x = 0; x < nx; ++x) {
    if (o.u[x] > 0 && rows[x] != p.n[x]) add(report, "5", {x}, rows[x], p.n[x]);
  }
  for (std::size_t y = 0; y < ny; ++y) {
    if (o.v[y] > 0 && cols[y] != p.m[y]) add(report, "6", {y}, cols[y], p.m[y]);
  }
  return report;
}

std::vector<BlockingPair> blocking_pairs(const LTUProblem& p, const Outcome& o) {
  check_dimensions(p, o);
  std::vector<BlockingPair> out;
  for (std::size_t x = 0; x < p.num_workers(); ++x) {
    for (std::size_t y = 0; y < p.num_jobs(); ++y) {
      Rational deficit = p.phi(x, y) / 2 - pair_value(p, o, x, y);
      if (deficit > 0) out.push_back(BlockingPair{x, y, std::move(deficit)});
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const BlockingPair& a, const BlockingPair& b) {
    if (a.deficit != b.deficit) return a.deficit > b.deficit;
    return std::tie(a.x, a.y) < std::tie(b.x, b.y);
  });
  return out;
}

StabilityReport verify_stable_m2o(const ManyToOneProblem& p, const ManyToOneOutcome& o) {
  check_dimensions(p, o);
  StabilityReport report;
  const std::size_t na = p.arrangements.size();

  for (std::size_t a = 0; a < na; ++a) {
    if (o.mu[a] < 0) add(report, "nonnegative-mu", {a}, o.mu[a], 0);
  }
  for (std::size_t x = 0; x < p.num_types(); ++x) {
    Rational used = 0;
    for (std::size_t a = 0; a < na; ++a) used += p.occupancy(x, a) * o.mu[a];
    if (used != p.n[x]) add(report, "feasibility", {x}, used, p.n[x]);
  }
  for (std::size_t a = 0; a < na; ++a) {
    const auto& arr = p.arrangements[a];
    Rational lhs = 0;
    for (std::size_t i = 0; i < arr.slots.size(); ++i) {
      if (arr.slots[i]) lhs += arr.lambda[i] * o.u[*arr.slots[i]];
    }
    if (lhs < arr.phi) add(report, "no-block", {a}, lhs, arr.phi);
    if (o.mu[a] > 0 && lhs != arr.phi) add(report, "binding", {a}, lhs, arr.phi);
  }
  return report;
}

}  // namespace ltu
