#pragma once

// Exhaustive generation of level data of fixed ramification, and the finite
// search for minimal level data at infinity with a given number of loops.

#include "stokes/level_datum.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace stokes {

/// Open interval (lo, hi) of rationals; lo < hi is required.
struct OpenInterval {
  Rational lo;
  Rational hi;
};

struct GenerationLimits {
  std::optional<std::size_t> max_levels;
  // Drop a branch as soon as its partial balance exceeds this value. Sound
  // because every further level adds a positive amount.
  std::optional<std::int64_t> prune_balance_above;
};

/// All level data with ramification exactly `r` whose top level lies in
/// `max_range`, in decreasing lexicographic order.
///
/// Levels are written s_i / r; the gcd chain g_i = gcd(g_{i-1}, s_i) with
/// g_{-1} = r must strictly decrease and end at 1. For r = 1 the only datum
/// is the empty one, returned iff `max_range` is empty (it has no top level).
/// Throws InvalidInput for r < 1, an empty or inverted interval, or r >= 2
/// without an interval (the set would be infinite).
std::vector<LevelDatum> level_data_with_ram(std::int64_t r, const std::optional<OpenInterval>& max_range,
                                            const GenerationLimits& limits = {});

struct SearchBudget {
  std::int64_t max_ram = 2;
  std::optional<std::size_t> max_levels;
  std::optional<std::int64_t> prune_balance_above;
};

/// Search bounds that make minimal_for_loops(n) complete: shadows have
/// ramification below 6n, and balance pruning at 2n.
SearchBudget default_budget(std::int64_t n);

/// Every minimal-at-infinity level datum with balance 2n, ordered by
/// canonical_less. Works through the Fourier shadows L' (top level in (1, 2),
/// same balance) and maps each back with one infinity-mode step.
/// Throws InvalidInput for n < 0.
std::vector<LevelDatum> minimal_for_loops(std::int64_t n);
std::vector<LevelDatum> minimal_for_loops(std::int64_t n, const SearchBudget& budget);

struct TableRow {
  std::int64_t loops = 0;
  std::vector<LevelDatum> data;
  std::size_t count = 0;
};

std::vector<TableRow> minimal_table(std::int64_t max_loops);

}  // namespace stokes
