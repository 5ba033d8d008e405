#include "stokes/enumerate.hpp"

#include "stokes/error.hpp"
#include "stokes/simplify.hpp"

#include <algorithm>
#include <numeric>

namespace stokes {

namespace {

// Generator state stays in machine integers: every numerator is a loop index
// bounded by the (checked) top of the range.
constexpr std::int64_t kMaxRam = 1'000'000;
constexpr std::int64_t kMaxNumerator = std::int64_t{1} << 40;

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if (a % b != 0 && (a < 0) != (b < 0)) --q;
  return q;
}

class Generator {
 public:
  Generator(std::int64_t r, const GenerationLimits& limits, std::vector<LevelDatum>& out)
      : r_(r), limits_(limits), out_(out) {}

  void run(std::int64_t s0_min, std::int64_t s0_max) {
    for (std::int64_t s0 = s0_max; s0 >= s0_min; --s0) {
      std::int64_t g = std::gcd(s0, r_);
      if (g == r_) continue;  // integer level
      numerators_.assign(1, s0);
      descend(g, (r_ - g) * s0 - (r_ * r_ - 1));
    }
  }

 private:
  void descend(std::int64_t g, std::int64_t partial) {
    if (limits_.prune_balance_above && partial > *limits_.prune_balance_above) return;
    if (g == 1) {
      emit();
      return;
    }
    if (limits_.max_levels && numerators_.size() >= *limits_.max_levels) return;
    for (std::int64_t s = numerators_.back() - 1; s >= 1; --s) {
      std::int64_t next = std::gcd(g, s);
      if (next == g) continue;
      numerators_.push_back(s);
      descend(next, partial + (g - next) * s);
      numerators_.pop_back();
    }
  }

  void emit() {
    std::vector<Rational> levels;
    levels.reserve(numerators_.size());
    for (std::int64_t s : numerators_) levels.emplace_back(Integer(s), Integer(r_));
    out_.push_back(LevelDatum::validate(std::move(levels)));
  }

  std::int64_t r_;
  const GenerationLimits& limits_;
  std::vector<LevelDatum>& out_;
  std::vector<std::int64_t> numerators_;
};

}  // namespace

std::vector<LevelDatum> level_data_with_ram(std::int64_t r, const std::optional<OpenInterval>& max_range,
                                            const GenerationLimits& limits) {
  if (r < 1) throw InvalidInput("ramification must be positive");
  if (r > kMaxRam) throw InvalidInput("ramification " + std::to_string(r) + " is too large to enumerate");
  if (max_range && !(max_range->lo < max_range->hi)) throw InvalidInput("empty or inverted level range");
  if (r == 1) {
    if (max_range) return {};
    return {LevelDatum()};
  }
  if (!max_range) throw InvalidInput("an upper bound on the top level is required for r >= 2");

  Integer rr(r);
  Rational lo = max_range->lo * Rational(rr);
  Rational hi = max_range->hi * Rational(rr);
  Integer s0_min = floor_div(lo.num(), lo.den()) + 1;
  Integer s0_max = -floor_div(-hi.num(), hi.den()) - 1;  // ceil(hi) - 1
  if (s0_min < 1) s0_min = 1;
  std::vector<LevelDatum> out;
  if (s0_max < s0_min) return out;
  if (s0_max > kMaxNumerator) throw InvalidInput("level range is too wide to enumerate");

  Generator(r, limits, out).run(static_cast<std::int64_t>(s0_min), static_cast<std::int64_t>(s0_max));
  return out;
}

SearchBudget default_budget(std::int64_t n) {
  SearchBudget budget;
  budget.max_ram = 6 * n - 1;
  budget.prune_balance_above = 2 * n;
  return budget;
}

std::vector<LevelDatum> minimal_for_loops(std::int64_t n) {
  return minimal_for_loops(n, default_budget(n));
}

std::vector<LevelDatum> minimal_for_loops(std::int64_t n, const SearchBudget& budget) {
  if (n < 0) throw InvalidInput("number of loops must be non-negative");
  // The ramification bound presumes a nonempty datum; B = 0 only for the
  // empty one.
  if (n == 0) return {LevelDatum()};

  const Integer target = 2 * n;
  const OpenInterval shadow_range{Rational(1), Rational(2)};
  const GenerationLimits limits{budget.max_levels, budget.prune_balance_above};
  std::vector<LevelDatum> found;
  for (std::int64_t r = 2; r <= budget.max_ram; ++r) {
    for (const LevelDatum& shadow : level_data_with_ram(r, shadow_range, limits)) {
      if (balance(shadow) != target) continue;
      LevelDatum image = step(shadow, Mode::Infinity).datum;
      // A shadow whose top level maps to an integer can land on a
      // non-minimal datum; the minimal datum it belongs to has a different
      // shadow, which the search also visits.
      if (!is_minimal(image, Mode::Infinity) || image.empty()) continue;
      if (!(*max_level(image) > Rational(2))) throw InvariantError("minimal image with top level below 1");
      found.push_back(std::move(image));
    }
  }
  std::sort(found.begin(), found.end(), canonical_less);
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

std::vector<TableRow> minimal_table(std::int64_t max_loops) {
  if (max_loops < 0) throw InvalidInput("number of loops must be non-negative");
  std::vector<TableRow> rows;
  for (std::int64_t n = 0; n <= max_loops; ++n) {
    TableRow row{n, minimal_for_loops(n), 0};
    row.count = row.data.size();
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace stokes
