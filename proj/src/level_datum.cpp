#include "stokes/level_datum.hpp"

#include <algorithm>
#include <functional>

namespace stokes {

namespace {

void sort_decreasing(std::vector<Rational>& values) {
  std::sort(values.begin(), values.end(), std::greater<>());
}

}  // namespace

ExponentSet ExponentSet::from(std::vector<Rational> exponents) {
  sort_decreasing(exponents);
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i].sign() <= 0)
      throw InvalidInput("exponent " + exponents[i].str() + " is not positive");
    if (i > 0 && exponents[i] == exponents[i - 1])
      throw InvalidInput("exponent " + exponents[i].str() + " appears twice");
  }
  ExponentSet set;
  set.values_ = std::move(exponents);
  return set;
}

const char* to_string(LevelViolation v) {
  switch (v) {
    case LevelViolation::NonPositive: return "non-positive level";
    case LevelViolation::Duplicate: return "duplicate level";
    case LevelViolation::IntegerLevel: return "integer level";
    case LevelViolation::FiltrationStall: return "denominator filtration does not increase";
  }
  return "?";
}

LevelDatum LevelDatum::validate(std::vector<Rational> levels) {
  sort_decreasing(levels);
  Integer running = 1;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const Rational& k = levels[i];
    auto fail = [&](LevelViolation v) {
      throw InvalidLevelDatum(v, i, std::string(to_string(v)) + " " + k.str() + " at index " + std::to_string(i));
    };
    if (k.sign() <= 0) fail(LevelViolation::NonPositive);
    if (i > 0 && k == levels[i - 1]) fail(LevelViolation::Duplicate);
    if (k.is_integer()) fail(LevelViolation::IntegerLevel);
    Integer next = lcm(running, k.den());
    if (next == running) fail(LevelViolation::FiltrationStall);
    running = std::move(next);
  }
  return LevelDatum(std::move(levels));
}

LevelDatum levels_from_exponents(const ExponentSet& exponents) {
  std::vector<Rational> kept;
  Integer running = 1;
  for (const Rational& k : exponents.values()) {
    Integer next = lcm(running, k.den());
    if (next > running) {
      kept.push_back(k);
      running = std::move(next);
    }
  }
  return LevelDatum(std::move(kept));
}

Integer ramification(const LevelDatum& datum) {
  Integer r = 1;
  for (const Rational& k : datum.levels()) r = lcm(r, k.den());
  return r;
}

CommonDenominatorForm common_denominator_form(const LevelDatum& datum) {
  CommonDenominatorForm form{ramification(datum), {}};
  form.numerators.reserve(datum.size());
  for (const Rational& k : datum.levels()) form.numerators.push_back(k.num() * (form.ram / k.den()));
  return form;
}

Integer balance(const LevelDatum& datum) {
  if (datum.empty()) return 0;
  CommonDenominatorForm form = common_denominator_form(datum);
  Integer g = form.ram;
  Integer b = 0;
  for (const Integer& s : form.numerators) {
    Integer next = gcd(g, s);
    b += (g - next) * s;
    g = std::move(next);
  }
  b -= form.ram * form.ram - 1;
  if (b % 2 != 0) throw InvariantError("odd balance " + b.str() + " for a level datum");
  return b;
}

Integer loops(const LevelDatum& datum) {
  return balance(datum) / 2;
}

LevelDatum scale_refilter(const LevelDatum& datum, const Rational& rho) {
  if (rho.sign() <= 0) throw InvalidInput("scale factor " + rho.str() + " is not positive");
  std::vector<Rational> scaled;
  scaled.reserve(datum.size());
  for (const Rational& k : datum.levels()) scaled.push_back(k * rho);
  return levels_from_exponents(ExponentSet::from(std::move(scaled)));
}

std::optional<Rational> max_level(const LevelDatum& datum) {
  if (datum.empty()) return std::nullopt;
  return datum[0];
}

const char* to_string(Mode mode) {
  return mode == Mode::General ? "general" : "infinity";
}

bool is_minimal(const LevelDatum& datum, Mode mode) {
  if (datum.empty()) return true;
  const Rational& k = datum[0];
  if (k > Rational(2)) return true;
  return mode == Mode::Infinity && k < Rational(1);
}

bool canonical_less(const LevelDatum& a, const LevelDatum& b) {
  Integer ra = ramification(a);
  Integer rb = ramification(b);
  if (ra != rb) return ra < rb;
  return std::lexicographical_compare(a.levels().begin(), a.levels().end(), b.levels().begin(),
                                      b.levels().end(), std::greater<>());
}

}  // namespace stokes
