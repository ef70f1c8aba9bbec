#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ltu/linear.hpp"
#include "ltu/model.hpp"

namespace ltu {

/// Which parts of the stability system are linearized as active: pairs in
/// `cells` may carry mass and must bind; rows in `rows` / columns in `cols`
/// may have positive utility and must be saturated. Everything else is zero.
struct ComplementarityPattern {
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;

  auto operator<=>(const ComplementarityPattern&) const = default;
};

/// Pattern realized by an outcome: supports of mu, u and v.
ComplementarityPattern induced_pattern(const Outcome& o);

/// The linear system of a pattern over variables (mu on cells, u on rows, v on
/// cols), in that order, all nonnegative.
LinearSystem pattern_system(const LTUProblem& p, const ComplementarityPattern& pattern);

struct OracleCaps {
  std::size_t max_cells = 9;  // |X| * |Y|
  std::size_t max_types = 8;  // |X| + |Y|
  std::size_t threads = 0;    // 0 = hardware concurrency
};

struct OracleEntry {
  ComplementarityPattern pattern;
  Outcome outcome;
  std::vector<std::pair<std::size_t, std::size_t>> binding;  // pairs where condition "1" is tight
};

/// Every feasible complementarity pattern of `p` with one representative
/// stable outcome each, in pattern enumeration order. The representative makes
/// as many of the pattern's free variables strictly positive as the pattern's
/// feasible set allows. Throws CapExceeded above the size caps.
std::vector<OracleEntry> enumerate_stable(const LTUProblem& p, const OracleCaps& caps = {});

}  // namespace ltu
