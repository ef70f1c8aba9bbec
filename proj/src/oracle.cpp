#include "ltu/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <thread>

#include "ltu/error.hpp"
#include "ltu/stability.hpp"

namespace ltu {

namespace {

struct Layout {
  std::vector<std::size_t> cell_var;  // per cell (row-major), npos if not in pattern
  std::vector<std::size_t> row_var;
  std::vector<std::size_t> col_var;
  std::size_t num_vars = 0;
};

constexpr std::size_t npos = static_cast<std::size_t>(-1);

Layout layout_of(const LTUProblem& p, const ComplementarityPattern& pattern) {
  const std::size_t nx = p.num_workers(), ny = p.num_jobs();
  Layout l{std::vector<std::size_t>(nx * ny, npos), std::vector<std::size_t>(nx, npos),
           std::vector<std::size_t>(ny, npos), 0};
  for (const auto& [x, y] : pattern.cells) l.cell_var[x * ny + y] = l.num_vars++;
  for (std::size_t x : pattern.rows) l.row_var[x] = l.num_vars++;
  for (std::size_t y : pattern.cols) l.col_var[y] = l.num_vars++;
  return l;
}

Outcome outcome_from_point(const LTUProblem& p, const Layout& l, const Vec& z) {
  Outcome o = zero_outcome(p);
  const std::size_t ny = p.num_jobs();
  for (std::size_t c = 0; c < l.cell_var.size(); ++c)
    if (l.cell_var[c] != npos) o.mu(c / ny, c % ny) = z[l.cell_var[c]];
  for (std::size_t x = 0; x < l.row_var.size(); ++x)
    if (l.row_var[x] != npos) o.u[x] = z[l.row_var[x]];
  for (std::size_t y = 0; y < l.col_var.size(); ++y)
    if (l.col_var[y] != npos) o.v[y] = z[l.col_var[y]];
  return o;
}

ComplementarityPattern decode(std::uint64_t mask, std::size_t nx, std::size_t ny) {
  ComplementarityPattern pattern;
  const std::size_t cells = nx * ny;
  for (std::size_t c = 0; c < cells; ++c)
    if (mask >> c & 1U) pattern.cells.emplace_back(c / ny, c % ny);
  for (std::size_t x = 0; x < nx; ++x)
    if (mask >> (cells + x) & 1U) pattern.rows.push_back(x);
  for (std::size_t y = 0; y < ny; ++y)
    if (mask >> (cells + nx + y) & 1U) pattern.cols.push_back(y);
  return pattern;
}

// A positive-utility row must hold some mass, and likewise for columns.
bool coverable(const ComplementarityPattern& pattern) {
  for (std::size_t x : pattern.rows) {
    if (std::none_of(pattern.cells.begin(), pattern.cells.end(),
                     [x](const auto& c) { return c.first == x; }))
      return false;
  }
  for (std::size_t y : pattern.cols) {
    if (std::none_of(pattern.cells.begin(), pattern.cells.end(),
                     [y](const auto& c) { return c.second == y; }))
      return false;
  }
  return true;
}

// Finds a feasible point of `sys` that is strictly positive in as many
// variables as possible: repeatedly maximizes sum of min(z_j, 1) over the
// variables still at zero, then averages the collected points.
Vec positive_representative(const LinearSystem& sys, Vec first) {
  const std::size_t k = sys.num_vars;
  std::vector<Vec> points{first};
  std::vector<bool> positive(k, false);
  for (std::size_t j = 0; j < k; ++j) positive[j] = first[j] > 0;

  while (true) {
    std::vector<std::size_t> pending;
    for (std::size_t j = 0; j < k; ++j)
      if (!positive[j]) pending.push_back(j);
    if (pending.empty()) break;

    LinearSystem ext = sys;
    ext.num_vars = k + pending.size();
    ext.nonnegative.assign(ext.num_vars, true);
    for (auto& c : ext.constraints) c.coeffs.resize(ext.num_vars);
    Vec objective(ext.num_vars);
    for (std::size_t t = 0; t < pending.size(); ++t) {
      Vec below(ext.num_vars);
      below[k + t] = 1;
      below[pending[t]] = -1;
      ext.add(below, Relation::LessEqual, 0);
      Vec cap(ext.num_vars);
      cap[k + t] = 1;
      ext.add(cap, Relation::LessEqual, 1);
      objective[k + t] = 1;
    }
    const LpResult lp = maximize(ext, objective);
    if (lp.status != LpStatus::Optimal) {
      throw Error(ErrorCode::Internal, "representative search lost feasibility");
    }
    if (lp.value == 0) break;
    Vec z(lp.point.begin(), lp.point.begin() + static_cast<std::ptrdiff_t>(k));
    for (std::size_t j = 0; j < k; ++j)
      if (z[j] > 0) positive[j] = true;
    points.push_back(std::move(z));
  }

  Vec avg(k);
  for (const auto& pt : points)
    for (std::size_t j = 0; j < k; ++j) avg[j] += pt[j];
  const Rational count(static_cast<unsigned long>(points.size()));
  for (auto& a : avg) a /= count;
  return avg;
}

std::optional<OracleEntry> solve_pattern(const LTUProblem& p, ComplementarityPattern pattern) {
  const LinearSystem sys = pattern_system(p, pattern);
  const FeasibilityResult feas = linear_feasibility(sys);
  if (!feas.feasible) return std::nullopt;

  const Layout l = layout_of(p, pattern);
  const Vec z = positive_representative(sys, feas.point);
  if (!satisfies(sys, z)) throw Error(ErrorCode::Internal, "oracle point violates its pattern");
  OracleEntry entry{std::move(pattern), outcome_from_point(p, l, z), {}};
  if (!verify_stable(p, entry.outcome).stable) {
    throw Error(ErrorCode::Internal, "oracle representative is not stable");
  }
  for (std::size_t x = 0; x < p.num_workers(); ++x) {
    for (std::size_t y = 0; y < p.num_jobs(); ++y) {
      const Rational lhs = p.lambda(x, y) * entry.outcome.u[x] +
                           (1 - p.lambda(x, y)) * entry.outcome.v[y];
      if (lhs * 2 == p.phi(x, y)) entry.binding.emplace_back(x, y);
    }
  }
  return entry;
}

}  // namespace

ComplementarityPattern induced_pattern(const Outcome& o) {
  ComplementarityPattern pattern;
  for (std::size_t x = 0; x < o.mu.rows(); ++x)
    for (std::size_t y = 0; y < o.mu.cols(); ++y)
      if (o.mu(x, y) > 0) pattern.cells.emplace_back(x, y);
  for (std::size_t x = 0; x < o.u.size(); ++x)
    if (o.u[x] > 0) pattern.rows.push_back(x);
  for (std::size_t y = 0; y < o.v.size(); ++y)
    if (o.v[y] > 0) pattern.cols.push_back(y);
  return pattern;
}

LinearSystem pattern_system(const LTUProblem& p, const ComplementarityPattern& pattern) {
  const Layout l = layout_of(p, pattern);
  const std::size_t nx = p.num_workers(), ny = p.num_jobs();
  LinearSystem sys;
  sys.num_vars = l.num_vars;
  sys.nonnegative.assign(l.num_vars, true);

  // Pair constraints: >= everywhere, equality on pattern cells.
  for (std::size_t x = 0; x < nx; ++x) {
    for (std::size_t y = 0; y < ny; ++y) {
      Vec row(l.num_vars);
      if (l.row_var[x] != npos) row[l.row_var[x]] = p.lambda(x, y);
      if (l.col_var[y] != npos) row[l.col_var[y]] = 1 - p.lambda(x, y);
      const bool binds = l.cell_var[x * ny + y] != npos;
      sys.add(std::move(row), binds ? Relation::Equal : Relation::GreaterEqual, p.phi(x, y) / 2);
    }
  }
  // Capacities: <= everywhere, saturated on positive-utility rows/columns.
  for (std::size_t x = 0; x < nx; ++x) {
    Vec row(l.num_vars);
    for (std::size_t y = 0; y < ny; ++y)
      if (l.cell_var[x * ny + y] != npos) row[l.cell_var[x * ny + y]] = 1;
    sys.add(std::move(row), l.row_var[x] != npos ? Relation::Equal : Relation::LessEqual, p.n[x]);
  }
  for (std::size_t y = 0; y < ny; ++y) {
    Vec row(l.num_vars);
    for (std::size_t x = 0; x < nx; ++x)
      if (l.cell_var[x * ny + y] != npos) row[l.cell_var[x * ny + y]] = 1;
    sys.add(std::move(row), l.col_var[y] != npos ? Relation::Equal : Relation::LessEqual, p.m[y]);
  }
  return sys;
}

std::vector<OracleEntry> enumerate_stable(const LTUProblem& p, const OracleCaps& caps) {
  const std::size_t nx = p.num_workers(), ny = p.num_jobs();
  if (nx * ny > caps.max_cells || nx + ny > caps.max_types) {
    throw Error(ErrorCode::CapExceeded, std::to_string(nx) + "x" + std::to_string(ny) +
                                            " exceeds the oracle size caps");
  }
  const std::uint64_t total = std::uint64_t{1} << (nx * ny + nx + ny);

  std::size_t workers = caps.threads ? caps.threads : std::thread::hardware_concurrency();
  workers = std::clamp<std::size_t>(workers, 1, 64);
  if (total < 256) workers = 1;

  // Strided assignment keeps the load balanced; merged by mask afterwards.
  std::vector<std::vector<std::pair<std::uint64_t, OracleEntry>>> found(workers);
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](std::size_t w) {
    try {
      for (std::uint64_t mask = w; mask < total; mask += workers) {
        auto pattern = decode(mask, nx, ny);
        if (!coverable(pattern)) continue;
        if (auto entry = solve_pattern(p, std::move(pattern))) {
          found[w].emplace_back(mask, std::move(*entry));
        }
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::vector<std::pair<std::uint64_t, OracleEntry>> merged;
  for (auto& part : found)
    for (auto& item : part) merged.push_back(std::move(item));
  std::sort(merged.begin(), merged.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<OracleEntry> out;
  out.reserve(merged.size());
  for (auto& [_, entry] : merged) out.push_back(std::move(entry));
  return out;
}

}  // namespace ltu
