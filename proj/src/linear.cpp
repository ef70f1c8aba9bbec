#include "ltu/linear.hpp"

#include <optional>
#include <utility>

#include "ltu/error.hpp"

namespace ltu {

namespace {

// Standard-form tableau  A z = b, z >= 0, b >= 0, with one artificial per row.
// Column layout: structural (x+ and, for free variables, x-), slacks,
// artificials.
class Simplex {
 public:
  explicit Simplex(const LinearSystem& sys) : sys_(sys) {
    for (const auto& c : sys.constraints) {
      if (c.coeffs.size() != sys.num_vars) {
        throw Error(ErrorCode::DimensionMismatch, "constraint length differs from variable count");
      }
    }
    if (!sys.nonnegative.empty() && sys.nonnegative.size() != sys.num_vars) {
      throw Error(ErrorCode::DimensionMismatch, "sign restriction list length");
    }
    for (std::size_t j = 0; j < sys.num_vars; ++j) {
      plus_col_.push_back(ncols_++);
      minus_col_.push_back(sys.is_nonnegative(j) ? npos : ncols_++);
    }
    const std::size_t rows = sys.constraints.size();
    for (std::size_t k = 0; k < rows; ++k) {
      slack_col_.push_back(sys.constraints[k].relation == Relation::Equal ? npos : ncols_++);
    }
    first_artificial_ = ncols_;
    ncols_ += rows;

    a_ = Matrix(rows, ncols_);
    b_.resize(rows);
    sign_.resize(rows);
    basis_.resize(rows);
    for (std::size_t k = 0; k < rows; ++k) {
      const auto& c = sys.constraints[k];
      const int s = c.rhs < 0 ? -1 : 1;
      sign_[k] = s;
      for (std::size_t j = 0; j < sys.num_vars; ++j) {
        if (c.coeffs[j] == 0) continue;
        a_(k, plus_col_[j]) = s * c.coeffs[j];
        if (minus_col_[j] != npos) a_(k, minus_col_[j]) = -s * c.coeffs[j];
      }
      if (slack_col_[k] != npos) {
        a_(k, slack_col_[k]) = c.relation == Relation::LessEqual ? s : -s;
      }
      a_(k, first_artificial_ + k) = 1;
      b_[k] = s * c.rhs;
      basis_[k] = first_artificial_ + k;
    }
  }

  // Phase 1. Returns true when feasible; otherwise fills `farkas`.
  bool phase_one(Vec& farkas) {
    Vec cost(ncols_);
    for (std::size_t j = first_artificial_; j < ncols_; ++j) cost[j] = 1;
    run(cost, /*allow_artificial=*/true);
    Rational infeasibility = 0;
    for (std::size_t r = 0; r < rows(); ++r)
      if (basis_[r] >= first_artificial_) infeasibility += b_[r];
    if (infeasibility > 0) {
      // Duals y_r = c_B B^-1 read from the artificial columns.
      const Vec reduced = reduced_costs(cost);
      farkas.assign(rows(), 0);
      for (std::size_t k = 0; k < rows(); ++k) {
        const Rational y = 1 - reduced[first_artificial_ + k];
        farkas[k] = -y * sign_[k];
      }
      return false;
    }
    drive_out_artificials();
    return true;
  }

  // Phase 2 on the feasible basis; returns false if unbounded.
  bool phase_two(const Vec& objective) {
    Vec cost(ncols_);
    for (std::size_t j = 0; j < sys_.num_vars; ++j) {
      cost[plus_col_[j]] = -objective[j];
      if (minus_col_[j] != npos) cost[minus_col_[j]] = objective[j];
    }
    return run(cost, /*allow_artificial=*/false);
  }

  Vec point() const {
    Vec z(ncols_);
    for (std::size_t r = 0; r < rows(); ++r) z[basis_[r]] = b_[r];
    Vec x(sys_.num_vars);
    for (std::size_t j = 0; j < sys_.num_vars; ++j) {
      x[j] = z[plus_col_[j]];
      if (minus_col_[j] != npos) x[j] -= z[minus_col_[j]];
    }
    return x;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t rows() const { return b_.size(); }

  Vec reduced_costs(const Vec& cost) const {
    Vec d = cost;
    for (std::size_t r = 0; r < rows(); ++r) {
      const Rational& cb = cost[basis_[r]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j < ncols_; ++j)
        if (a_(r, j) != 0) d[j] -= cb * a_(r, j);
    }
    return d;
  }

  // Minimizes cost' z with Bland's rule. Returns false on an unbounded ray.
  bool run(const Vec& cost, bool allow_artificial) {
    Vec d = reduced_costs(cost);
    const std::size_t limit = allow_artificial ? ncols_ : first_artificial_;
    while (true) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < limit; ++j) {
        if (d[j] < 0) {
          entering = j;
          break;
        }
      }
      if (!entering) return true;
      const std::size_t c = *entering;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t r = 0; r < rows(); ++r) {
        if (a_(r, c) <= 0) continue;
        Rational ratio = b_[r] / a_(r, c);
        if (!leave || ratio < best || (ratio == best && basis_[r] < basis_[*leave])) {
          leave = r;
          best = std::move(ratio);
        }
      }
      if (!leave) return false;
      pivot(*leave, c);
      const Rational f = d[c];
      for (std::size_t j = 0; j < ncols_; ++j)
        if (a_(*leave, j) != 0) d[j] -= f * a_(*leave, j);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = 1 / a_(r, c);
    for (std::size_t j = 0; j < ncols_; ++j)
      if (a_(r, j) != 0) a_(r, j) *= inv;
    b_[r] *= inv;
    for (std::size_t i = 0; i < rows(); ++i) {
      if (i == r || a_(i, c) == 0) continue;
      const Rational f = a_(i, c);
      for (std::size_t j = 0; j < ncols_; ++j)
        if (a_(r, j) != 0) a_(i, j) -= f * a_(r, j);
      b_[i] -= f * b_[r];
    }
    basis_[r] = c;
  }

  // Artificials left basic at level zero are pivoted out where the row has a
  // nonzero non-artificial entry; rows without one are redundant and keep
  // their artificial (phase 2 never lets artificials enter).
  void drive_out_artificials() {
    for (std::size_t r = 0; r < rows(); ++r) {
      if (basis_[r] < first_artificial_) continue;
      for (std::size_t j = 0; j < first_artificial_; ++j) {
        if (a_(r, j) != 0) {
          pivot(r, j);
          break;
        }
      }
    }
  }

  const LinearSystem& sys_;
  std::size_t ncols_ = 0;
  std::size_t first_artificial_ = 0;
  std::vector<std::size_t> plus_col_, minus_col_, slack_col_;
  Matrix a_;
  Vec b_;
  std::vector<int> sign_;
  std::vector<std::size_t> basis_;
};

}  // namespace

FeasibilityResult linear_feasibility(const LinearSystem& system) {
  Simplex simplex(system);
  FeasibilityResult out;
  if (!simplex.phase_one(out.farkas)) return out;
  out.feasible = true;
  out.point = simplex.point();
  return out;
}

LpResult maximize(const LinearSystem& system, const Vec& objective) {
  if (objective.size() != system.num_vars) {
    throw Error(ErrorCode::DimensionMismatch, "objective length differs from variable count");
  }
  Simplex simplex(system);
  LpResult out;
  if (!simplex.phase_one(out.farkas)) {
    out.status = LpStatus::Infeasible;
    return out;
  }
  if (!simplex.phase_two(objective)) {
    out.status = LpStatus::Unbounded;
    out.point = simplex.point();
    return out;
  }
  out.status = LpStatus::Optimal;
  out.point = simplex.point();
  out.value = dot(objective, out.point);
  return out;
}

bool satisfies(const LinearSystem& system, const Vec& x) {
  if (x.size() != system.num_vars) return false;
  for (std::size_t j = 0; j < system.num_vars; ++j)
    if (system.is_nonnegative(j) && x[j] < 0) return false;
  for (const auto& c : system.constraints) {
    const Rational lhs = dot(c.coeffs, x);
    switch (c.relation) {
      case Relation::LessEqual:
        if (lhs > c.rhs) return false;
        break;
      case Relation::Equal:
        if (lhs != c.rhs) return false;
        break;
      case Relation::GreaterEqual:
        if (lhs < c.rhs) return false;
        break;
    }
  }
  return true;
}

bool verify_farkas(const LinearSystem& system, const Vec& multipliers) {
  if (multipliers.size() != system.constraints.size()) return false;
  Vec combo(system.num_vars);
  Rational bound = 0;
  for (std::size_t k = 0; k < multipliers.size(); ++k) {
    const auto& c = system.constraints[k];
    const Rational& y = multipliers[k];
    if (c.relation == Relation::LessEqual && y < 0) return false;
    if (c.relation == Relation::GreaterEqual && y > 0) return false;
    for (std::size_t j = 0; j < system.num_vars; ++j) combo[j] += y * c.coeffs[j];
    bound += y * c.rhs;
  }
  for (std::size_t j = 0; j < system.num_vars; ++j) {
    if (system.is_nonnegative(j) ? combo[j] < 0 : combo[j] != 0) return false;
  }
  return bound < 0;
}

}  // namespace ltu
