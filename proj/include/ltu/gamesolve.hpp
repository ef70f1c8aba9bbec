#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ltu/game.hpp"

namespace ltu {

struct ExpectedValues {
  Rational loss;    // hider's expected loss  p' * loss * q
  Rational payoff;  // seeker's expected payoff p' * payoff * q
};

ExpectedValues expected_values(const BimatrixGame& g, const MixedProfile& s);

/// Exact proof that a profile is a Nash equilibrium: every supported strategy
/// attains the equilibrium value and no unsupported one does better.
struct EquilibriumCertificate {
  MixedProfile profile;
  Rational hider_loss;
  Rational seeker_payoff;
  std::vector<std::size_t> hider_support;
  std::vector<std::size_t> seeker_support;
};

enum class Player { Hider, Seeker };

/// An improving pure deviation.
struct Deviation {
  Player player;
  std::size_t strategy;
  Rational deviation_value;  // value of the pure strategy
  Rational current_value;    // value of the profile
};

struct EquilibriumCheck {
  std::optional<EquilibriumCertificate> certificate;
  std::optional<Deviation> witness;

  bool accepted() const { return certificate.has_value(); }
};

/// Checks pure deviations for both players (sufficient by linearity). Throws
/// DimensionMismatch on wrong lengths and InvalidProfile when p or q is not a
/// probability vector.
EquilibriumCheck is_equilibrium(const BimatrixGame& g, const MixedProfile& s);

struct LemkeHowsonOptions {
  std::size_t max_pivots = 1'000'000;
};

struct LemkeHowsonResult {
  EquilibriumCertificate certificate;
  std::vector<std::size_t> entering_labels;  // label of every entering variable, in order
};

/// Lemke-Howson complementary pivoting from the missing label `initial_label`
/// (0..rows-1 for hider strategies, rows..rows+cols-1 for seeker strategies),
/// with a lexicographic minimum-ratio rule. Throws RayTermination or
/// IterationLimit; the returned certificate is validated against the original
/// (unshifted) matrices.
LemkeHowsonResult lemke_howson(const BimatrixGame& g, std::size_t initial_label,
                               const LemkeHowsonOptions& options = {});

struct EnumerationOptions {
  std::size_t budget = 1'000'000;
};

/// All extreme equilibria whose supports have at most `max_support_size`
/// strategies per player, deduplicated and ordered lexicographically by
/// (hider support, seeker support, p, q). Throws BudgetExceeded when the
/// number of candidate vertex bases exceeds `options.budget`.
std::vector<EquilibriumCertificate> enumerate_equilibria(const BimatrixGame& g,
                                                         std::size_t max_support_size,
                                                         const EnumerationOptions& options = {});

}  // namespace ltu
