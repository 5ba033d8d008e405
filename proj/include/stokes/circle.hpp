#pragma once

// Stokes circles as located Puiseux polynomials, their formal invariants, and
// the action of twists, Moebius maps and the Fourier transform on them.

#include "stokes/level_datum.hpp"
#include "stokes/rational.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace stokes {

/// A point of the projective line. `SymbolicFinite` stands for a finite point
/// whose coordinate is not tracked.
class Location {
 public:
  enum class Kind { Infinity, Finite, SymbolicFinite };

  static Location infinity() { return Location(Kind::Infinity, {}); }
  static Location at(Complex point) { return Location(Kind::Finite, std::move(point)); }
  static Location symbolic() { return Location(Kind::SymbolicFinite, {}); }

  Kind kind() const noexcept { return kind_; }
  bool is_infinity() const noexcept { return kind_ == Kind::Infinity; }
  /// Only meaningful for Kind::Finite.
  const Complex& point() const noexcept { return point_; }

  /// "inf", "?" for symbolic, or the complex coordinate.
  std::string str() const;

  friend bool operator==(const Location&, const Location&) = default;

 private:
  Location(Kind kind, Complex point) : kind_(kind), point_(std::move(point)) {}

  Kind kind_;
  Complex point_;
};

/// Accepts "inf", "∞", "?" or a Gaussian rational.
Location parse_location(std::string_view text, std::size_t offset = 0);

/// coefficient * z_loc^(-exponent) in the local coordinate at the location.
struct Term {
  Rational exponent;
  Complex coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

class StokesCircle {
 public:
  /// The tame circle <0> at `location`.
  explicit StokesCircle(Location location) : location_(std::move(location)) {}

  /// Terms must have positive, strictly decreasing exponents and nonzero
  /// coefficients; throws InvalidInput otherwise.
  StokesCircle(Location location, std::vector<Term> terms);

  const Location& location() const noexcept { return location_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  bool is_tame() const noexcept { return terms_.empty(); }

  friend bool operator==(const StokesCircle&, const StokesCircle&) = default;

 private:
  Location location_;
  std::vector<Term> terms_;
};

/// Location, ramification, irregularity and level datum of a circle.
///
/// For circles at infinity `linear` holds the coefficient of the z^1 term when
/// it is known; it decides where the Fourier transform lands when the slope
/// is at most one.
struct FormalInvariants {
  Location location = Location::infinity();
  Integer ram = 1;
  Integer irr = 0;
  LevelDatum levels;
  std::optional<Complex> linear;

  Rational slope() const { return Rational(irr, ram); }

  friend bool operator==(const FormalInvariants&, const FormalInvariants&) = default;
};

/// Throws InvalidInput unless the invariants could come from an actual
/// circle: ram equals the ramification of the levels, a tame circle has no
/// levels, and a non-integer slope is the top level.
void check_consistent(const FormalInvariants& f);

FormalInvariants invariants_of(const StokesCircle& circle);

/// One term z^{-k} with coefficient 1 per level k.
StokesCircle witness_circle(const LevelDatum& datum, const Location& location);

/// Adds an unramified polynomial at the circle's own location. Coefficients
/// summing to zero cancel. Throws InvalidInput on a non-integer exponent,
/// unsorted exponents or a zero coefficient.
StokesCircle twist(const StokesCircle& circle, std::span<const Term> by);

/// Moves the circle to `target`. Coefficients are carried over verbatim; only
/// the invariants (ram, irr, slope, levels) are meaningful afterwards.
StokesCircle moebius_relocate(const StokesCircle& circle, const Location& target);

enum class FourierCase {
  LinearAtInfinity = 1,       // <az> at infinity
  SlopeAtMostOneAtInfinity,   // <az + q> at infinity, q != 0 of slope < 1
  SlopeAboveOneAtInfinity,
  WildFinite,
  TameFinite,
};

/// Exactly one case applies to every consistent input.
FourierCase fourier_case(const FormalInvariants& f);

/// The invariants of the Fourier transform of any circle with invariants `f`.
FormalInvariants fourier_shadow(const FormalInvariants& f);

/// For `f` at infinity with slope > 1: whether applying the shadow twice gives
/// back ram, irr and levels. Throws InvalidInput on other inputs.
bool fourier_involution_check(const FormalInvariants& f);

}  // namespace stokes
