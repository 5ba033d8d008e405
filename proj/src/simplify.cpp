#include "stokes/simplify.hpp"

#include "stokes/error.hpp"

namespace stokes {

const char* to_string(StepCase c) {
  switch (c) {
    case StepCase::Minimal: return "Minimal";
    case StepCase::BelowOne: return "BelowOne";
    case StepCase::BetweenOneAndTwo: return "BetweenOneAndTwo";
  }
  return "?";
}

StepResult step(const LevelDatum& datum, Mode mode) {
  StepResult result{datum, {}};
  Integer r = ramification(datum);
  result.step.ram_before = r;
  result.step.ram_after = r;
  if (is_minimal(datum, mode)) return result;

  const Rational& k = datum[0];
  Integer s = k.num() * (r / k.den());
  if (k > Rational(1)) {
    result.step.kind = StepCase::BetweenOneAndTwo;
    result.step.scale = Rational(r, s - r);
  } else {
    result.step.kind = StepCase::BelowOne;
    result.step.scale = Rational(r, r - s);
    result.step.passes_through_finite = true;
  }
  result.datum = scale_refilter(datum, result.step.scale);
  result.step.ram_after = ramification(result.datum);
  if (result.step.ram_after >= r)
    throw InvariantError("simplifying step did not lower the ramification");
  return result;
}

SimplificationTrace simplify_fully(const LevelDatum& datum, Mode mode) {
  SimplificationTrace trace;
  trace.mode = mode;
  trace.states.push_back(datum);
  for (;;) {
    StepResult next = step(trace.states.back(), mode);
    if (next.step.kind == StepCase::Minimal) break;
    trace.states.push_back(std::move(next.datum));
    trace.steps.push_back(std::move(next.step));
  }
  return trace;
}

bool is_tamable(const LevelDatum& datum) {
  return simplify_fully(datum, Mode::General).final_state().empty();
}

LevelDatum single_level_full(const Integer& s, const Integer& r) {
  if (s < 1 || r < 2) throw InvalidInput("single_level_full needs s >= 1 and r >= 2");
  if (gcd(s, r) != 1) throw InvalidInput("single_level_full needs gcd(s, r) = 1");
  Integer residue = r % s;
  if (residue == 1 % s || residue == (s - 1) % s) return {};
  // residue != s/2 since gcd(s, r) = 1, so exactly one of residue and
  // s - residue lies below s/2.
  Integer k = 2 * residue < s ? residue : s - residue;
  return LevelDatum::validate({Rational(s, k)});
}

}  // namespace stokes
