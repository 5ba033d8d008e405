#pragma once

// The one-step simplification maps S (general) and S_inf (circle kept at
// infinity) on level data, and their iterated closures.

#include "stokes/level_datum.hpp"

#include <vector>

namespace stokes {

enum class StepCase {
  Minimal,           // no simplifying step exists
  BelowOne,          // max level < 1; general mode only
  BetweenOneAndTwo,  // 1 < max level < 2
};

const char* to_string(StepCase c);

struct StepDescriptor {
  StepCase kind = StepCase::Minimal;
  Rational scale = 1;
  Integer ram_before = 1;
  Integer ram_after = 1;
  // A BelowOne step lands at finite distance; the next step starts by
  // moving back to infinity.
  bool passes_through_finite = false;

  friend bool operator==(const StepDescriptor&, const StepDescriptor&) = default;
};

struct StepResult {
  LevelDatum datum;
  StepDescriptor step;
};

/// With k the top level, r the ramification and s = k r:
///   k > 2 or empty      -> fixed (Minimal)
///   1 < k < 2           -> scale by r / (s - r)
///   k < 1, general      -> scale by r / (r - s)
///   k < 1, infinity     -> fixed (Minimal)
/// Scaled levels are re-filtered, so integers drop out.
StepResult step(const LevelDatum& datum, Mode mode);

struct SimplificationTrace {
  Mode mode = Mode::General;
  std::vector<LevelDatum> states;     // never empty
  std::vector<StepDescriptor> steps;  // states.size() - 1 entries

  const LevelDatum& final_state() const { return states.back(); }
};

/// Applies `step` until it reports Minimal. Terminates because every
/// non-minimal step strictly lowers the ramification.
SimplificationTrace simplify_fully(const LevelDatum& datum, Mode mode);

/// Whether the general-mode simplification reaches the empty datum.
bool is_tamable(const LevelDatum& datum);

/// Closed form of the full general-mode simplification of {s/r}:
/// empty when r = +-1 mod s, otherwise {s/k} with 1 < k < s/2 and
/// r = +-k mod s. Requires gcd(s, r) = 1 and r >= 2; throws InvalidInput
/// otherwise.
LevelDatum single_level_full(const Integer& s, const Integer& r);

}  // namespace stokes
