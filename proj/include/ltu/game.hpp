#pragma once

#include <string>
#include <vector>

#include "ltu/rational.hpp"

namespace ltu {

/// Two-player game in hider/seeker form. Row strategies belong to the hider,
/// who minimizes `loss`; column strategies belong to the seeker, who maximizes
/// `payoff`.
struct BimatrixGame {
  std::vector<std::string> rows;
  std::vector<std::string> cols;
  Matrix loss;
  Matrix payoff;

  std::size_t num_rows() const { return rows.size(); }
  std::size_t num_cols() const { return cols.size(); }
};

/// p over rows, q over cols.
struct MixedProfile {
  Vec p;
  Vec q;

  bool operator==(const MixedProfile&) const = default;
};

}  // namespace ltu
