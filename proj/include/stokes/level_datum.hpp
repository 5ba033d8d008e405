#pragma once

// Level data of Stokes circles: construction by the common-denominator
// filtration, validation, and the numeric invariants (ramification, balance,
// minimality).

#include "stokes/error.hpp"
#include "stokes/rational.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace stokes {

/// Strictly decreasing finite set of positive exponents.
class ExponentSet {
 public:
  ExponentSet() = default;
  /// Sorts decreasingly. Throws InvalidInput on non-positive or repeated entries.
  static ExponentSet from(std::vector<Rational> exponents);

  std::span<const Rational> values() const noexcept { return values_; }
  bool empty() const noexcept { return values_.empty(); }

 private:
  std::vector<Rational> values_;
};

enum class LevelViolation { NonPositive, Duplicate, IntegerLevel, FiltrationStall };

const char* to_string(LevelViolation v);

class InvalidLevelDatum : public InvalidInput {
 public:
  InvalidLevelDatum(LevelViolation violation, std::size_t index, const std::string& what)
      : InvalidInput(what), violation_(violation), index_(index) {}

  LevelViolation violation() const noexcept { return violation_; }
  /// Position of the offending entry in the decreasingly sorted list.
  std::size_t index() const noexcept { return index_; }

 private:
  LevelViolation violation_;
  std::size_t index_;
};

/// A level datum k_0 > k_1 > ... > k_p: positive non-integer rationals whose
/// running lcm of denominators strictly increases. Possibly empty.
class LevelDatum {
 public:
  LevelDatum() = default;

  /// Sorts decreasingly and checks every invariant, reporting the first
  /// violation as InvalidLevelDatum.
  static LevelDatum validate(std::vector<Rational> levels);

  std::span<const Rational> levels() const noexcept { return levels_; }
  bool empty() const noexcept { return levels_.empty(); }
  std::size_t size() const noexcept { return levels_.size(); }
  const Rational& operator[](std::size_t i) const { return levels_[i]; }

  friend bool operator==(const LevelDatum&, const LevelDatum&) = default;

 private:
  friend LevelDatum levels_from_exponents(const ExponentSet& exponents);
  explicit LevelDatum(std::vector<Rational> levels) : levels_(std::move(levels)) {}

  std::vector<Rational> levels_;
};

/// Keeps the first non-integer exponent, then every exponent that strictly
/// increases the lcm of the denominators kept so far.
LevelDatum levels_from_exponents(const ExponentSet& exponents);

/// Lcm of the level denominators; 1 for the empty datum.
Integer ramification(const LevelDatum& datum);

/// L = {s_0/r, ..., s_p/r} with r the ramification.
struct CommonDenominatorForm {
  Integer ram;
  std::vector<Integer> numerators;

  friend bool operator==(const CommonDenominatorForm&, const CommonDenominatorForm&) = default;
};

CommonDenominatorForm common_denominator_form(const LevelDatum& datum);

/// B = sum_i (g_{i-1} - g_i) s_i - r^2 + 1 with g_{-1} = r and
/// g_i = gcd(s_0, ..., s_i, r). Zero for the empty datum.
///
/// B is the expected dimension of the elementary wild character variety and
/// is always even; an odd value throws InvariantError.
Integer balance(const LevelDatum& datum);

/// Number of loops of the one-vertex diagram, balance / 2.
Integer loops(const LevelDatum& datum);

/// Multiplies every level by `rho` and re-runs the filtration, so levels that
/// become integers or stop refining the denominators are dropped.
/// Throws InvalidInput unless rho > 0.
LevelDatum scale_refilter(const LevelDatum& datum, const Rational& rho);

std::optional<Rational> max_level(const LevelDatum& datum);

enum class Mode { General, Infinity };

const char* to_string(Mode mode);

/// General: empty or max level > 2. Infinity: empty, max < 1, or max > 2.
bool is_minimal(const LevelDatum& datum, Mode mode);

/// Ramification ascending, then levels in decreasing lexicographic order.
/// Used wherever a deterministic listing of data is needed.
bool canonical_less(const LevelDatum& a, const LevelDatum& b);

}  // namespace stokes
