#include "ltu/tu.hpp"

#include <set>

#include "ltu/error.hpp"

namespace ltu {

Matrix omega(const LTUProblem& p) {
  Matrix w(p.num_workers(), p.num_jobs());
  for (std::size_t x = 0; x < p.num_workers(); ++x)
    for (std::size_t y = 0; y < p.num_jobs(); ++y)
      w(x, y) = p.lambda(x, y) / (1 - p.lambda(x, y));
  return w;
}

Rational cross_ratio(const Matrix& w, const Quadruple& q) {
  return w(q.x, q.y) * w(q.x2, q.y2) / (w(q.x2, q.y) * w(q.x, q.y2));
}

TuWitness check_tu(const LTUProblem& p) {
  const Matrix w = omega(p);
  TuWitness out;
  for (std::size_t x = 1; x < p.num_workers(); ++x) {
    for (std::size_t y = 1; y < p.num_jobs(); ++y) {
      const Quadruple q{0, x, 0, y};
      Rational rho = cross_ratio(w, q);
      if (rho != 1) {
        out.quadruple = q;
        out.rho = std::move(rho);
        return out;
      }
    }
  }
  out.is_tu = true;
  out.rho = 1;
  for (std::size_t x = 0; x < p.num_workers(); ++x) out.a.push_back(w(x, 0) / w(0, 0));
  for (std::size_t y = 0; y < p.num_jobs(); ++y) out.b.push_back(1 / w(0, y));
  return out;
}

TuRescaling rescale_to_tu(const LTUProblem& p, const TuWitness& witness) {
  if (!witness.is_tu || witness.a.size() != p.num_workers() || witness.b.size() != p.num_jobs()) {
    throw Error(ErrorCode::NotTU, "problem does not have the TU property");
  }
  TuRescaling out{witness.a, witness.b, Matrix(p.num_workers(), p.num_jobs())};
  for (std::size_t x = 0; x < p.num_workers(); ++x) {
    for (std::size_t y = 0; y < p.num_jobs(); ++y) {
      const Rational total = out.a[x] + out.b[y];
      if (out.a[x] <= 0 || out.b[y] <= 0 || out.a[x] / total != p.lambda(x, y)) {
        throw Error(ErrorCode::NotTU, "scalings do not reproduce lambda");
      }
      out.phi_tilde(x, y) = total * p.phi(x, y) / 2;
    }
  }
  return out;
}

namespace {

void check_subset(const std::vector<std::size_t>& sub, std::size_t size, const char* what) {
  if (sub.empty()) throw Error(ErrorCode::EmptyTypeSet, std::string("empty ") + what + " set");
  std::set<std::size_t> seen;
  for (std::size_t i : sub) {
    if (i >= size || !seen.insert(i).second) {
      throw Error(ErrorCode::DimensionMismatch, std::string("bad ") + what + " index");
    }
  }
}

Vec reservations_or_zero(const Vec& given, std::size_t size) {
  if (given.empty()) return Vec(size);
  if (given.size() != size) throw Error(ErrorCode::DimensionMismatch, "reservation list length");
  return given;
}

}  // namespace

Subproblem make_subproblem(const SubproblemSpec& spec) {
  const LTUProblem& parent = spec.parent;
  check_subset(spec.xsub, parent.num_workers(), "worker");
  check_subset(spec.ysub, parent.num_jobs(), "job");
  const std::size_t nx = spec.xsub.size(), ny = spec.ysub.size();

  LTUProblem r;
  for (std::size_t x : spec.xsub) r.workers.push_back(parent.workers[x]);
  for (std::size_t y : spec.ysub) r.jobs.push_back(parent.jobs[y]);
  r.n = spec.n;
  r.m = spec.m;
  r.lambda = Matrix(nx, ny);
  r.phi = Matrix(nx, ny);
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t j = 0; j < ny; ++j) {
      r.lambda(i, j) = parent.lambda(spec.xsub[i], spec.ysub[j]);
      r.phi(i, j) = parent.phi(spec.xsub[i], spec.ysub[j]);
    }
  }
  r = validate_problem(std::move(r));

  Subproblem out{r, reservations_or_zero(spec.u_reservation, nx),
                 reservations_or_zero(spec.v_reservation, ny), r};
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t j = 0; j < ny; ++j) {
      const Rational& l = r.lambda(i, j);
      out.folded.phi(i, j) =
          r.phi(i, j) - 2 * l * out.u_reservation[i] - 2 * (1 - l) * out.v_reservation[j];
    }
  }
  return out;
}

ExchangeReport exchange_test(const LTUProblem& p, const Outcome& o1, const Outcome& o2) {
  if (!verify_stable(p, o1).stable || !verify_stable(p, o2).stable) {
    throw Error(ErrorCode::InputNotStable, "exchange test needs two stable outcomes");
  }
  ExchangeReport out;
  out.mu2_with_uv1 = verify_stable(p, Outcome{o2.mu, o1.u, o1.v});
  out.mu1_with_uv2 = verify_stable(p, Outcome{o1.mu, o2.u, o2.v});
  return out;
}

std::array<Rational, 4> counterexample_targets(const Rational& rho) {
  if (rho > 2) return {1 + rho / 2, Rational(1), 1 + rho / 2, 1 + rho / 4};
  const Rational high = (1 + rho) / 2;
  return {high, Rational(1), high, (3 + rho) / 4};
}

Counterexample build_counterexample(const LTUProblem& p, const Quadruple& q) {
  if (q.x >= p.num_workers() || q.x2 >= p.num_workers() || q.y >= p.num_jobs() ||
      q.y2 >= p.num_jobs() || q.x == q.x2 || q.y == q.y2) {
    throw Error(ErrorCode::DimensionMismatch, "quadruple needs two distinct workers and jobs");
  }
  const Matrix w = omega(p);
  Counterexample ce;
  ce.quadruple = q;
  ce.rho = cross_ratio(w, q);
  if (ce.rho == 1) throw Error(ErrorCode::IsTU, "cross ratio is 1 at the quadruple");

  // Work with job order (y1, y2) such that the cross ratio exceeds 1.
  ce.swapped_jobs = ce.rho < 1;
  const std::size_t x1 = q.x, x2 = q.x2;
  const std::size_t y1 = ce.swapped_jobs ? q.y2 : q.y;
  const std::size_t y2 = ce.swapped_jobs ? q.y : q.y2;
  ce.working_rho = ce.swapped_jobs ? 1 / ce.rho : ce.rho;
  const Rational& rho = ce.working_rho;

  const std::array<std::size_t, 2> xs{x1, x2}, ys{y1, y2};
  // Rescaling u~1 = (w11/w21) u1, u~2 = u2, v~1 = v1/w21, v~2 = v2/w22. Pair
  // xy is divided by (1 - lambda) d_y with d = (w21, w22).
  const Rational a1 = w(x1, y1) / w(x2, y1), a2 = 1;
  const Rational b1 = 1 / w(x2, y1), b2 = 1 / w(x2, y2);
  const std::array<Rational, 2> a{a1, a2}, b{b1, b2}, d{w(x2, y1), w(x2, y2)};
  ce.scale = {a1, a2, b1, b2};
  ce.targets = counterexample_targets(rho);

  // Unknown reservations (r1, r2, s1, s2) in rescaled units:
  //   c_xy r_x + s_y = phi~_xy - target_xy
  Matrix sys(4, 4);
  Vec rhs(4);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      const std::size_t row = 2 * i + j;
      const std::size_t x = xs[i], y = ys[j];
      const Rational coeff = w(x, y) / (d[j] * a[i]);
      const Rational phi_tilde = p.phi(x, y) / (2 * (1 - p.lambda(x, y)) * d[j]);
      sys(row, i) = coeff;
      sys(row, 2 + j) = 1;
      rhs[row] = phi_tilde - ce.targets[row];
    }
  }
  Vec res;
  if (!solve_square(sys, rhs, res)) {
    throw Error(ErrorCode::Internal, "reservation system is singular");
  }

  ce.spec.parent = p;
  ce.spec.xsub = {x1, x2};
  ce.spec.ysub = {y1, y2};
  ce.spec.n = {1, 1};
  ce.spec.m = {1, 1};
  ce.spec.u_reservation = {res[0] / a1, res[1] / a2};
  ce.spec.v_reservation = {res[2] / b1, res[3] / b2};
  ce.folded = make_subproblem(ce.spec).folded;

  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      const Rational expected =
          2 * ce.targets[2 * i + j] * (1 - ce.folded.lambda(i, j)) * d[j];
      if (ce.folded.phi(i, j) != expected) {
        throw Error(ErrorCode::Internal, "folded outputs miss the rescaled targets");
      }
    }
  }

  const auto& t = ce.targets;
  ce.worker_side = zero_outcome(ce.folded);
  ce.worker_side.mu(0, 1) = 1;
  ce.worker_side.mu(1, 0) = 1;
  ce.worker_side.u[0] = rho * t[1] / a1;
  ce.worker_side.u[1] = t[2] / a2;

  ce.job_side = zero_outcome(ce.folded);
  ce.job_side.mu(0, 0) = 1;
  ce.job_side.mu(1, 1) = 1;
  ce.job_side.v[0] = t[2] / b1;
  ce.job_side.v[1] = t[3] / b2;

  ce.worker_side_report = verify_stable(ce.folded, ce.worker_side);
  ce.job_side_report = verify_stable(ce.folded, ce.job_side);
  if (!ce.worker_side_report.stable || !ce.job_side_report.stable) {
    throw Error(ErrorCode::Internal, "counterexample outcome failed verification");
  }
  ce.exchange = exchange_test(ce.folded, ce.worker_side, ce.job_side);
  if (ce.exchange.exchangeable()) {
    throw Error(ErrorCode::Internal, "counterexample outcomes turned out exchangeable");
  }
  return ce;
}

}  // namespace ltu
