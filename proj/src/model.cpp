#include "ltu/model.hpp"

#include <set>
#include <utility>

#include "ltu/error.hpp"

namespace ltu {

namespace {

std::string pair_name(const LTUProblem& p, std::size_t x, std::size_t y) {
  return "(" + p.workers[x] + "," + p.jobs[y] + ")";
}

void check_unique(const std::vector<std::string>& ids, const char* what) {
  std::set<std::string> seen;
  for (const auto& id : ids) {
    if (!seen.insert(id).second) {
      throw Error(ErrorCode::DimensionMismatch, std::string("duplicate ") + what + " id " + id);
    }
  }
}

void check_same_shape(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "coefficient arrays differ in shape");
  }
}

}  // namespace

LTUProblem validate_problem(LTUProblem raw, OutputPolicy policy) {
  const std::size_t nx = raw.workers.size();
  const std::size_t ny = raw.jobs.size();
  if (nx == 0 || ny == 0) {
    throw Error(ErrorCode::DimensionMismatch, "need at least one worker and one job type");
  }
  check_unique(raw.workers, "worker");
  check_unique(raw.jobs, "job");
  if (raw.n.size() != nx || raw.m.size() != ny || raw.lambda.rows() != nx ||
      raw.lambda.cols() != ny || raw.phi.rows() != nx || raw.phi.cols() != ny) {
    throw Error(ErrorCode::DimensionMismatch, "mass or pair arrays do not match type lists");
  }
  for (std::size_t x = 0; x < nx; ++x) {
    if (raw.n[x] <= 0) {
      throw Error(ErrorCode::NonpositiveMass, "worker " + raw.workers[x] + " has mass " +
                                                  to_string(raw.n[x]));
    }
  }
  for (std::size_t y = 0; y < ny; ++y) {
    if (raw.m[y] <= 0) {
      throw Error(ErrorCode::NonpositiveMass,
                  "job " + raw.jobs[y] + " has mass " + to_string(raw.m[y]));
    }
  }
  for (std::size_t x = 0; x < nx; ++x) {
    for (std::size_t y = 0; y < ny; ++y) {
      const Rational& l = raw.lambda(x, y);
      if (l <= 0 || l >= 1) {
        throw Error(ErrorCode::LambdaOutOfRange,
                    "lambda" + pair_name(raw, x, y) + " = " + to_string(l) + " not in (0,1)");
      }
      if (policy == OutputPolicy::RequirePositive && raw.phi(x, y) <= 0) {
        throw Error(ErrorCode::NonpositiveOutput,
                    "phi" + pair_name(raw, x, y) + " = " + to_string(raw.phi(x, y)));
      }
    }
  }
  return raw;
}

PairTerms from_linear_constraints(const Matrix& a, const Matrix& b, const Matrix& c) {
  check_same_shape(a, b);
  check_same_shape(a, c);
  PairTerms out{Matrix(a.rows(), a.cols()), Matrix(a.rows(), a.cols())};
  for (std::size_t x = 0; x < a.rows(); ++x) {
    for (std::size_t y = 0; y < a.cols(); ++y) {
      if (a(x, y) <= 0 || b(x, y) <= 0) {
        throw Error(ErrorCode::NonpositiveCoefficient,
                    "coefficients at pair " + std::to_string(x) + "," + std::to_string(y) +
                        " must be positive");
      }
      const Rational total = a(x, y) + b(x, y);
      out.lambda(x, y) = a(x, y) / total;
      out.phi(x, y) = 2 * c(x, y) / total;
    }
  }
  return out;
}

PairTerms from_tax_schedule(const Matrix& surplus, const Matrix& tau) {
  check_same_shape(surplus, tau);
  PairTerms out{Matrix(tau.rows(), tau.cols()), Matrix(tau.rows(), tau.cols())};
  for (std::size_t x = 0; x < tau.rows(); ++x) {
    for (std::size_t y = 0; y < tau.cols(); ++y) {
      const Rational& t = tau(x, y);
      if (t < 0 || t >= 1) {
        throw Error(ErrorCode::TaxOutOfRange, "tax rate " + to_string(t) + " not in [0,1)");
      }
      out.lambda(x, y) = 1 / (2 - t);
      out.phi(x, y) = 2 * (1 - t) * surplus(x, y) / (2 - t);
    }
  }
  return out;
}

LinearConstraints to_linear_constraints(const PairTerms& terms) {
  const std::size_t r = terms.lambda.rows(), c = terms.lambda.cols();
  LinearConstraints out{Matrix(r, c), Matrix(r, c), Matrix(r, c)};
  for (std::size_t x = 0; x < r; ++x) {
    for (std::size_t y = 0; y < c; ++y) {
      out.a(x, y) = terms.lambda(x, y);
      out.b(x, y) = 1 - terms.lambda(x, y);
      out.c(x, y) = terms.phi(x, y) / 2;
    }
  }
  return out;
}

Outcome zero_outcome(const LTUProblem& p) {
  return Outcome{Matrix(p.num_workers(), p.num_jobs()), Vec(p.num_workers()), Vec(p.num_jobs())};
}

void check_dimensions(const LTUProblem& p, const Outcome& o) {
  if (o.mu.rows() != p.num_workers() || o.mu.cols() != p.num_jobs() ||
      o.u.size() != p.num_workers() || o.v.size() != p.num_jobs()) {
    throw Error(ErrorCode::DimensionMismatch, "outcome dimensions do not match the problem");
  }
}

std::size_t ManyToOneProblem::occupancy(std::size_t x, std::size_t a) const {
  std::size_t count = 0;
  for (const auto& slot : arrangements[a].slots) {
    if (slot && *slot == x) ++count;
  }
  return count;
}

Rational ManyToOneProblem::weight(std::size_t x, std::size_t a) const {
  Rational w = 0;
  const auto& arr = arrangements[a];
  for (std::size_t i = 0; i < arr.slots.size(); ++i) {
    if (arr.slots[i] && *arr.slots[i] == x) w += arr.lambda[i];
  }
  return w;
}

ManyToOneProblem validate_many_to_one(ManyToOneProblem raw, OutputPolicy policy) {
  const std::size_t nt = raw.types.size();
  if (nt == 0) throw Error(ErrorCode::DimensionMismatch, "need at least one type");
  check_unique(raw.types, "type");
  if (raw.n.size() != nt) throw Error(ErrorCode::DimensionMismatch, "mass list length");
  if (raw.arrangement_size == 0) {
    throw Error(ErrorCode::InvalidArrangement, "arrangement size N must be positive");
  }
  for (std::size_t x = 0; x < nt; ++x) {
    if (raw.n[x] <= 0) {
      throw Error(ErrorCode::NonpositiveMass, "type " + raw.types[x] + " has mass " +
                                                  to_string(raw.n[x]));
    }
  }

  std::vector<bool> has_single(nt, false);
  for (std::size_t a = 0; a < raw.arrangements.size(); ++a) {
    const auto& arr = raw.arrangements[a];
    const std::string where = "arrangement " + std::to_string(a);
    if (arr.slots.size() != raw.arrangement_size || arr.lambda.size() != raw.arrangement_size) {
      throw Error(ErrorCode::InvalidArrangement, where + " does not have N slots");
    }
    Rational total = 0;
    std::size_t occupied = 0;
    for (std::size_t i = 0; i < arr.slots.size(); ++i) {
      const auto& slot = arr.slots[i];
      if (slot && *slot >= nt) throw Error(ErrorCode::InvalidArrangement, where + ": bad type");
      if (arr.lambda[i] < 0) throw Error(ErrorCode::InvalidArrangement, where + ": negative weight");
      if ((arr.lambda[i] == 0) != !slot.has_value()) {
        throw Error(ErrorCode::InvalidArrangement,
                    where + ": weight must be zero exactly on vacant slots");
      }
      total += arr.lambda[i];
      if (slot) ++occupied;
    }
    if (occupied == 0) throw Error(ErrorCode::InvalidArrangement, where + " is empty");
    if (total != 1) throw Error(ErrorCode::InvalidArrangement, where + ": weights must sum to 1");
    if (occupied == 1) {
      for (const auto& slot : arr.slots) {
        if (slot) has_single[*slot] = true;
      }
    }
    if (policy == OutputPolicy::RequirePositive && arr.phi <= 0) {
      throw Error(ErrorCode::NonpositiveOutput, where + " has output " + to_string(arr.phi));
    }
  }
  for (std::size_t x = 0; x < nt; ++x) {
    if (!has_single[x]) {
      throw Error(ErrorCode::InvalidArrangement,
                  "type " + raw.types[x] + " has no arrangement where it is single");
    }
  }
  return raw;
}

void check_dimensions(const ManyToOneProblem& p, const ManyToOneOutcome& o) {
  if (o.mu.size() != p.arrangements.size() || o.u.size() != p.num_types()) {
    throw Error(ErrorCode::DimensionMismatch, "outcome dimensions do not match the problem");
  }
}

}  // namespace ltu
