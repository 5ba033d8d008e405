#include "stokes/circle.hpp"

#include "stokes/error.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace stokes {

std::string Location::str() const {
  switch (kind_) {
    case Kind::Infinity: return "inf";
    case Kind::SymbolicFinite: return "?";
    case Kind::Finite: return point_.str();
  }
  return "?";
}

Location parse_location(std::string_view text, std::size_t offset) {
  if (text == "inf" || text == "∞") return Location::infinity();
  if (text == "?") return Location::symbolic();
  return Location::at(parse_complex(text, offset));
}

StokesCircle::StokesCircle(Location location, std::vector<Term> terms)
    : location_(std::move(location)), terms_(std::move(terms)) {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].exponent.sign() <= 0)
      throw InvalidInput("circle exponent " + terms_[i].exponent.str() + " is not positive");
    if (i > 0 && !(terms_[i].exponent < terms_[i - 1].exponent))
      throw InvalidInput("circle exponents must be strictly decreasing");
    if (terms_[i].coefficient.is_zero())
      throw InvalidInput("circle term z^" + terms_[i].exponent.str() + " has a zero coefficient");
  }
}

void check_consistent(const FormalInvariants& f) {
  if (f.ram < 1) throw InvalidInput("ramification must be positive");
  if (f.irr < 0) throw InvalidInput("irregularity must be non-negative");
  if (f.ram != ramification(f.levels))
    throw InvalidInput("ramification " + f.ram.str() + " differs from the ramification " +
                       ramification(f.levels).str() + " of the levels");
  if (f.irr == 0) {
    if (!f.levels.empty()) throw InvalidInput("a tame circle has no levels");
  } else {
    Rational slope = f.slope();
    if (!f.levels.empty() && slope < f.levels[0])
      throw InvalidInput("slope " + slope.str() + " is below the top level");
    if (!slope.is_integer() && slope != f.levels[0])
      throw InvalidInput("non-integer slope " + slope.str() + " must be the top level");
  }
  if (f.location.is_infinity() && f.linear) {
    Rational slope = f.slope();
    if (!f.linear->is_zero() && slope < Rational(1))
      throw InvalidInput("a linear term forces slope >= 1");
    if (f.linear->is_zero() && slope == Rational(1))
      throw InvalidInput("slope 1 at infinity requires a nonzero linear term");
  }
}

FormalInvariants invariants_of(const StokesCircle& circle) {
  FormalInvariants f;
  f.location = circle.location();
  std::vector<Rational> exponents;
  exponents.reserve(circle.terms().size());
  for (const Term& t : circle.terms()) {
    f.ram = lcm(f.ram, t.exponent.den());
    exponents.push_back(t.exponent);
  }
  if (!circle.is_tame()) {
    const Rational& top = circle.terms().front().exponent;
    f.irr = top.num() * (f.ram / top.den());
  }
  f.levels = levels_from_exponents(ExponentSet::from(std::move(exponents)));
  if (circle.location().is_infinity()) {
    Complex linear;
    for (const Term& t : circle.terms())
      if (t.exponent == Rational(1)) linear = t.coefficient;
    f.linear = linear;
  }
  return f;
}

StokesCircle witness_circle(const LevelDatum& datum, const Location& location) {
  std::vector<Term> terms;
  for (const Rational& k : datum.levels()) terms.push_back({k, Complex{Rational(1), Rational(0)}});
  return StokesCircle(location, std::move(terms));
}

StokesCircle twist(const StokesCircle& circle, std::span<const Term> by) {
  for (std::size_t i = 0; i < by.size(); ++i) {
    if (!by[i].exponent.is_integer() || by[i].exponent.sign() <= 0)
      throw InvalidInput("twist exponent " + by[i].exponent.str() + " is not a positive integer");
    if (i > 0 && !(by[i].exponent < by[i - 1].exponent))
      throw InvalidInput("twist exponents must be strictly decreasing");
    if (by[i].coefficient.is_zero()) throw InvalidInput("twist term has a zero coefficient");
  }
  std::map<Rational, Complex, std::greater<>> sum;
  for (const Term& t : circle.terms()) sum[t.exponent] = t.coefficient;
  for (const Term& t : by) {
    auto [it, inserted] = sum.try_emplace(t.exponent, t.coefficient);
    if (!inserted) it->second = it->second + t.coefficient;
  }
  std::vector<Term> terms;
  for (auto& [k, c] : sum)
    if (!c.is_zero()) terms.push_back({k, c});
  return StokesCircle(circle.location(), std::move(terms));
}

StokesCircle moebius_relocate(const StokesCircle& circle, const Location& target) {
  return StokesCircle(target, std::vector<Term>(circle.terms().begin(), circle.terms().end()));
}

FourierCase fourier_case(const FormalInvariants& f) {
  check_consistent(f);
  if (f.location.is_infinity()) {
    if (f.slope() > Rational(1)) return FourierCase::SlopeAboveOneAtInfinity;
    if (f.levels.empty()) return FourierCase::LinearAtInfinity;
    return FourierCase::SlopeAtMostOneAtInfinity;
  }
  return f.irr == 0 ? FourierCase::TameFinite : FourierCase::WildFinite;
}

namespace {

// Exponents that matter for the transform: the leading one (even when it is
// an integer) together with the levels.
LevelDatum scaled_levels(const FormalInvariants& f, const Rational& top, const Rational& rho) {
  std::vector<Rational> exponents;
  exponents.push_back(top * rho);
  for (const Rational& k : f.levels.levels())
    if (k != top) exponents.push_back(k * rho);
  return levels_from_exponents(ExponentSet::from(std::move(exponents)));
}

Location finite_from_linear(const std::optional<Complex>& linear) {
  return linear ? Location::at(*linear) : Location::symbolic();
}

}  // namespace

FormalInvariants fourier_shadow(const FormalInvariants& f) {
  FormalInvariants out;
  switch (fourier_case(f)) {
    case FourierCase::LinearAtInfinity: {
      // <az> goes to the tame circle at a; slope 0 means a = 0.
      out.location = f.irr == 0 ? Location::at({}) : finite_from_linear(f.linear);
      return out;
    }
    case FourierCase::SlopeAtMostOneAtInfinity: {
      // The sub-linear part has slope equal to the top level.
      const Integer& r = f.ram;
      Integer s = f.levels[0].num() * (r / f.levels[0].den());
      out.location = f.slope() < Rational(1) ? Location::at({}) : finite_from_linear(f.linear);
      out.ram = r - s;
      out.irr = s;
      out.levels = scale_refilter(f.levels, Rational(r, r - s));
      return out;
    }
    case FourierCase::SlopeAboveOneAtInfinity: {
      const Integer& r = f.ram;
      const Integer& s = f.irr;
      out.location = Location::infinity();
      out.ram = s - r;
      out.irr = s;
      out.levels = scaled_levels(f, f.slope(), Rational(r, s - r));
      return out;
    }
    case FourierCase::WildFinite: {
      const Integer& r = f.ram;
      const Integer& s = f.irr;
      out.location = Location::infinity();
      out.ram = r + s;
      out.levels = scaled_levels(f, f.slope(), Rational(r, r + s));
      if (f.location.kind() == Location::Kind::Finite) {
        out.linear = -f.location.point();
        out.irr = out.linear->is_zero() ? s : r + s;
      } else {
        // Unknown a is taken generic (nonzero), so -az leads.
        out.irr = r + s;
      }
      return out;
    }
    case FourierCase::TameFinite: {
      out.location = Location::infinity();
      if (f.location.kind() == Location::Kind::Finite) {
        out.linear = -f.location.point();
        out.irr = out.linear->is_zero() ? 0 : 1;
      } else {
        out.irr = 1;
      }
      return out;
    }
  }
  throw InvariantError("unhandled Fourier case");
}

bool fourier_involution_check(const FormalInvariants& f) {
  if (fourier_case(f) != FourierCase::SlopeAboveOneAtInfinity)
    throw InvalidInput("involution check needs a circle at infinity of slope > 1");
  FormalInvariants twice = fourier_shadow(fourier_shadow(f));
  return twice.ram == f.ram && twice.irr == f.irr && twice.levels == f.levels;
}

}  // namespace stokes
