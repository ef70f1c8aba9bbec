#include "ltu/gamesolve.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <tuple>
#include <utility>

#include "ltu/error.hpp"

namespace ltu {

namespace {

void check_profile(const BimatrixGame& g, const MixedProfile& s) {
  if (g.loss.rows() != g.num_rows() || g.loss.cols() != g.num_cols() ||
      g.payoff.rows() != g.num_rows() || g.payoff.cols() != g.num_cols()) {
    throw Error(ErrorCode::DimensionMismatch, "game matrices do not match strategy labels");
  }
  if (s.p.size() != g.num_rows() || s.q.size() != g.num_cols()) {
    throw Error(ErrorCode::DimensionMismatch, "profile does not match game dimensions");
  }
  auto is_distribution = [](const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x >= 0; }) &&
           sum(v) == 1;
  };
  if (!is_distribution(s.p) || !is_distribution(s.q)) {
    throw Error(ErrorCode::InvalidProfile, "p and q must be nonnegative and sum to 1");
  }
}

// (loss * q)_i for every row.
Vec row_losses(const BimatrixGame& g, const Vec& q) {
  Vec out(g.num_rows());
  for (std::size_t i = 0; i < g.num_rows(); ++i)
    for (std::size_t j = 0; j < g.num_cols(); ++j)
      if (q[j] != 0) out[i] += g.loss(i, j) * q[j];
  return out;
}

// (payoff' * p)_j for every column.
Vec col_payoffs(const BimatrixGame& g, const Vec& p) {
  Vec out(g.num_cols());
  for (std::size_t i = 0; i < g.num_rows(); ++i) {
    if (p[i] == 0) continue;
    for (std::size_t j = 0; j < g.num_cols(); ++j) out[j] += g.payoff(i, j) * p[i];
  }
  return out;
}

std::vector<std::size_t> support_of(const Vec& v) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out.push_back(i);
  return out;
}

// Dictionary for one best-response polytope  M z + s = 1, z, s >= 0. Columns
// are indexed by label; `slack_labels` lists the initially basic labels in
// row order, whose columns hold the basis inverse for the lexicographic rule.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t labels) : coef_(rows, labels), rhs_(rows, 1), basis_(rows) {}

  Rational& at(std::size_t r, std::size_t label) { return coef_(r, label); }
  void set_basic(std::size_t r, std::size_t label) {
    basis_[r] = label;
    slack_labels_.push_back(label);
  }

  std::size_t rows() const { return rhs_.size(); }
  std::size_t basic(std::size_t r) const { return basis_[r]; }
  const Rational& rhs(std::size_t r) const { return rhs_[r]; }

  // Lexicographic minimum ratio row for entering column `c`, or nullopt on a ray.
  std::optional<std::size_t> ratio_test(std::size_t c) const {
    std::optional<std::size_t> best;
    for (std::size_t r = 0; r < rows(); ++r) {
      if (coef_(r, c) <= 0) continue;
      if (!best || lex_less(r, *best, c)) best = r;
    }
    return best;
  }

  // Pivots `c` into row `r`; returns the label that left the basis.
  std::size_t pivot(std::size_t r, std::size_t c) {
    const std::size_t leaving = basis_[r];
    const Rational inv = 1 / coef_(r, c);
    for (std::size_t k = 0; k < coef_.cols(); ++k)
      if (coef_(r, k) != 0) coef_(r, k) *= inv;
    rhs_[r] *= inv;
    for (std::size_t i = 0; i < rows(); ++i) {
      if (i == r || coef_(i, c) == 0) continue;
      const Rational f = coef_(i, c);
      for (std::size_t k = 0; k < coef_.cols(); ++k)
        if (coef_(r, k) != 0) coef_(i, k) -= f * coef_(r, k);
      rhs_[i] -= f * rhs_[r];
    }
    basis_[r] = c;
    return leaving;
  }

 private:
  bool lex_less(std::size_t a, std::size_t b, std::size_t c) const {
    // Compare rows a and b of [rhs | B^-1] scaled by 1/coef(., c).
    const Rational& da = coef_(a, c);
    const Rational& db = coef_(b, c);
    auto cmp = [&](const Rational& xa, const Rational& xb) {
      const Rational lhs = xa * db;
      const Rational rhs = xb * da;
      return lhs < rhs ? -1 : (rhs < lhs ? 1 : 0);
    };
    if (int r = cmp(rhs_[a], rhs_[b]); r != 0) return r < 0;
    for (std::size_t label : slack_labels_) {
      if (int r = cmp(coef_(a, label), coef_(b, label)); r != 0) return r < 0;
    }
    return false;
  }

  Matrix coef_;
  Vec rhs_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> slack_labels_;
};

}  // namespace

ExpectedValues expected_values(const BimatrixGame& g, const MixedProfile& s) {
  if (s.p.size() != g.num_rows() || s.q.size() != g.num_cols() ||
      g.loss.rows() != g.num_rows() || g.loss.cols() != g.num_cols() ||
      g.payoff.rows() != g.num_rows() || g.payoff.cols() != g.num_cols()) {
    throw Error(ErrorCode::DimensionMismatch, "profile does not match game dimensions");
  }
  ExpectedValues out;
  out.loss = dot(s.p, row_losses(g, s.q));
  out.payoff = dot(s.q, col_payoffs(g, s.p));
  return out;
}

EquilibriumCheck is_equilibrium(const BimatrixGame& g, const MixedProfile& s) {
  check_profile(g, s);
  const Vec losses = row_losses(g, s.q);
  const Vec payoffs = col_payoffs(g, s.p);
  const Rational ell = dot(s.p, losses);
  const Rational pi = dot(s.q, payoffs);

  EquilibriumCheck out;
  const auto best_row = std::min_element(losses.begin(), losses.end());
  if (*best_row < ell) {
    out.witness = Deviation{Player::Hider, static_cast<std::size_t>(best_row - losses.begin()),
                            *best_row, ell};
    return out;
  }
  const auto best_col = std::max_element(payoffs.begin(), payoffs.end());
  if (*best_col > pi) {
    out.witness = Deviation{Player::Seeker, static_cast<std::size_t>(best_col - payoffs.begin()),
                            *best_col, pi};
    return out;
  }
  out.certificate =
      EquilibriumCertificate{s, ell, pi, support_of(s.p), support_of(s.q)};
  return out;
}

LemkeHowsonResult lemke_howson(const BimatrixGame& g, std::size_t initial_label,
                               const LemkeHowsonOptions& options) {
  const std::size_t m = g.num_rows(), n = g.num_cols();
  if (m == 0 || n == 0 || g.loss.rows() != m || g.loss.cols() != n || g.payoff.rows() != m ||
      g.payoff.cols() != n) {
    throw Error(ErrorCode::DimensionMismatch, "malformed game");
  }
  if (initial_label >= m + n) {
    throw Error(ErrorCode::DimensionMismatch,
                "initial label " + std::to_string(initial_label) + " out of range");
  }

  // Hider utility is -loss; shift both utilities to be strictly positive.
  Rational max_loss = g.loss(0, 0), min_payoff = g.payoff(0, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      max_loss = std::max(max_loss, g.loss(i, j));
      min_payoff = std::min(min_payoff, g.payoff(i, j));
    }
  }
  const Rational hider_shift = max_loss + 1;
  const Rational seeker_shift = 1 - min_payoff;

  // x-tableau: payoff' x + s = 1 (rows = seeker strategies). Labels i < m are
  // x_i, labels m + j are slacks s_j.
  Tableau xt(n, m + n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) xt.at(j, i) = g.payoff(i, j) + seeker_shift;
    xt.at(j, m + j) = 1;
    xt.set_basic(j, m + j);
  }
  // y-tableau: A y + r = 1 (rows = hider strategies). Labels i < m are
  // slacks r_i, labels m + j are y_j.
  Tableau yt(m, m + n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) yt.at(i, m + j) = hider_shift - g.loss(i, j);
    yt.at(i, i) = 1;
    yt.set_basic(i, i);
  }

  LemkeHowsonResult result;
  std::size_t entering = initial_label;
  bool in_x = initial_label < m;
  for (std::size_t pivots = 0;; ++pivots) {
    if (pivots >= options.max_pivots) {
      throw Error(ErrorCode::IterationLimit,
                  "no equilibrium after " + std::to_string(options.max_pivots) + " pivots");
    }
    Tableau& t = in_x ? xt : yt;
    const auto row = t.ratio_test(entering);
    result.entering_labels.push_back(entering);
    if (!row) {
      std::string trace;
      for (std::size_t l : result.entering_labels) trace += " " + std::to_string(l);
      throw Error(ErrorCode::RayTermination, "unbounded edge; entering labels:" + trace);
    }
    const std::size_t leaving = t.pivot(*row, entering);
    if (leaving == initial_label) break;
    entering = leaving;
    in_x = !in_x;
  }

  Vec x(m), y(n);
  for (std::size_t r = 0; r < xt.rows(); ++r)
    if (xt.basic(r) < m) x[xt.basic(r)] = xt.rhs(r);
  for (std::size_t r = 0; r < yt.rows(); ++r)
    if (yt.basic(r) >= m) y[yt.basic(r) - m] = yt.rhs(r);
  const Rational sx = sum(x), sy = sum(y);
  if (sx == 0 || sy == 0) throw Error(ErrorCode::Internal, "Lemke-Howson ended at the origin");
  for (auto& v : x) v /= sx;
  for (auto& v : y) v /= sy;

  auto check = is_equilibrium(g, MixedProfile{std::move(x), std::move(y)});
  if (!check.accepted()) {
    throw Error(ErrorCode::Internal, "Lemke-Howson endpoint failed the equilibrium check");
  }
  result.certificate = std::move(*check.certificate);
  return result;
}

namespace {

struct Vertex {
  Vec point;  // probabilities, without the value coordinate
  std::set<std::size_t> labels;
};

std::size_t binomial_capped(std::size_t n, std::size_t k, std::size_t cap) {
  k = std::min(k, n - k);
  // Exact C(n, k) with early exit once it exceeds cap.
  unsigned __int128 acc = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > cap) return cap + 1;
  }
  return static_cast<std::size_t>(acc);
}

// Calls `visit` with every k-subset of {0..n-1} in lexicographic order.
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& visit) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Vertices of  { (z, w) : z >= 0, sum z = 1, sense * (w - (W z)_k) >= 0 },
// where W is `weights` (k x d). Constraint k < weights.rows() carries label
// `row_label(k)`, constraint z_j >= 0 carries `zero_label(j)`.
template <typename RowLabel, typename ZeroLabel>
std::vector<Vertex> polytope_vertices(const Matrix& weights, bool value_is_lower_bound,
                                      RowLabel row_label, ZeroLabel zero_label) {
  const std::size_t k = weights.rows(), d = weights.cols();
  std::map<Vec, Vertex> found;
  for_each_subset(k + d, d, [&](const std::vector<std::size_t>& tight) {
    Matrix a(d + 1, d + 1);
    Vec b(d + 1);
    for (std::size_t j = 0; j < d; ++j) a(0, j) = 1;
    b[0] = 1;
    for (std::size_t t = 0; t < d; ++t) {
      const std::size_t c = tight[t];
      if (c < k) {
        for (std::size_t j = 0; j < d; ++j) a(t + 1, j) = weights(c, j);
        a(t + 1, d) = -1;
      } else {
        a(t + 1, c - k) = 1;
      }
    }
    Vec sol;
    if (!solve_square(std::move(a), std::move(b), sol)) return;
    for (std::size_t j = 0; j < d; ++j)
      if (sol[j] < 0) return;
    const Rational& value = sol[d];
    Vertex vx;
    vx.point.assign(sol.begin(), sol.begin() + static_cast<std::ptrdiff_t>(d));
    for (std::size_t c = 0; c < k; ++c) {
      Rational wz = 0;
      for (std::size_t j = 0; j < d; ++j) wz += weights(c, j) * vx.point[j];
      // Hider side: value <= (Wz)_c for all c. Seeker side: value >= (Wz)_c.
      if (value_is_lower_bound ? wz < value : wz > value) return;
      if (wz == value) vx.labels.insert(row_label(c));
    }
    for (std::size_t j = 0; j < d; ++j)
      if (vx.point[j] == 0) vx.labels.insert(zero_label(j));
    auto key = vx.point;
    found.try_emplace(std::move(key), std::move(vx));
  });
  std::vector<Vertex> out;
  out.reserve(found.size());
  for (auto& [_, vx] : found) out.push_back(std::move(vx));
  return out;
}

}  // namespace

std::vector<EquilibriumCertificate> enumerate_equilibria(const BimatrixGame& g,
                                                         std::size_t max_support_size,
                                                         const EnumerationOptions& options) {
  const std::size_t m = g.num_rows(), n = g.num_cols();
  if (m == 0 || n == 0 || g.loss.rows() != m || g.loss.cols() != n || g.payoff.rows() != m ||
      g.payoff.cols() != n) {
    throw Error(ErrorCode::DimensionMismatch, "malformed game");
  }
  const std::size_t bases = binomial_capped(m + n, n, options.budget);
  if (bases > options.budget / 2) {
    throw Error(ErrorCode::BudgetExceeded,
                "vertex enumeration needs more than " + std::to_string(options.budget) +
                    " candidate bases");
  }

  // Seeker mixes q: hider's best-response rows carry labels 0..m-1, unplayed
  // columns carry m+j.
  const std::vector<Vertex> q_vertices = polytope_vertices(
      g.loss, /*value_is_lower_bound=*/true, [](std::size_t i) { return i; },
      [m](std::size_t j) { return m + j; });
  // Hider mixes p: seeker's best-response columns carry m+j, unplayed rows i.
  Matrix payoff_t(n, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) payoff_t(j, i) = g.payoff(i, j);
  const std::vector<Vertex> p_vertices = polytope_vertices(
      payoff_t, /*value_is_lower_bound=*/false, [m](std::size_t j) { return m + j; },
      [](std::size_t i) { return i; });

  std::vector<EquilibriumCertificate> out;
  for (const auto& pv : p_vertices) {
    const auto p_support = support_of(pv.point);
    if (p_support.size() > max_support_size) continue;
    for (const auto& qv : q_vertices) {
      const auto q_support = support_of(qv.point);
      if (q_support.size() > max_support_size) continue;
      bool complete = true;
      for (std::size_t l = 0; l < m + n && complete; ++l) {
        complete = pv.labels.count(l) || qv.labels.count(l);
      }
      if (!complete) continue;
      auto check = is_equilibrium(g, MixedProfile{pv.point, qv.point});
      if (!check.accepted()) {
        throw Error(ErrorCode::Internal, "completely labeled vertex pair is not an equilibrium");
      }
      out.push_back(std::move(*check.certificate));
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tie(a.hider_support, a.seeker_support, a.profile.p, a.profile.q) <
           std::tie(b.hider_support, b.seeker_support, b.profile.p, b.profile.q);
  });
  return out;
}

}  // namespace ltu
