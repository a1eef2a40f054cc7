#pragma once

#include "elliptic_tilt/lattice.hpp"
#include "elliptic_tilt/laurent.hpp"

#include <compare>
#include <optional>
#include <string>

namespace elliptic_tilt {

/// Q together with +infinity, the codomain of slope-like functions.
class ExtendedRational
{
public:
   static ExtendedRational finite(const Rational& value) { return ExtendedRational(value); }
   static ExtendedRational infinity() { return ExtendedRational(); }

   bool is_infinite() const { return !value_.has_value(); }
   /// Precondition: !is_infinite().
   const Rational& value() const { return *value_; }

   bool operator==(const ExtendedRational& other) const;
   std::strong_ordering operator<=>(const ExtendedRational& other) const;

private:
   ExtendedRational() = default;
   explicit ExtendedRational(const Rational& v) : value_(v) {}
   std::optional<Rational> value_;
};

std::string to_string(const ExtendedRational& value);

/// a10 / a00, +inf when a00 = 0.
ExtendedRational slope_mu_f(const ChernMatrix& m);
/// a01 / a00, +inf when a00 = 0.
ExtendedRational slope_mu_star(const ChernMatrix& m);
/// omega^2 ch1 / ch0 = 4hts mu* + 2hs^2 mu_f, +inf when a00 = 0.
ExtendedRational slope_mu_omega(const ChernMatrix& m, const Polarization& pol, const GeometryParams& geo);
/// (omega ch2 - omega^3 ch0 / 6) / omega^2 ch1, +inf when omega^2 ch1 = 0
/// (including the 0/0 case of zero-dimensional sheaves).
ExtendedRational tilt_slope(const ChernMatrix& m, const Polarization& pol, const GeometryParams& geo);

/// Reduced central charge along t s = alpha as Laurent polynomials in s:
///   re = 2 h alpha a01 + h a10 s^2
///   im = alpha a02 s^-1 + (2 h a11 - h alpha a00) s
/// Re is normalised as half of omega^2 ch1.
struct ReducedCharge
{
   LaurentPoly re;
   LaurentPoly im;
   Rational alpha;
   std::int64_t h = 1;

   bool is_zero() const { return re.is_zero() && im.is_zero(); }
   ReducedCharge operator+(const ReducedCharge& other) const;
   ReducedCharge operator-(const ReducedCharge& other) const;
   bool operator==(const ReducedCharge&) const = default;
};

ReducedCharge reduced_charge(const ChernMatrix& m, const Rational& alpha, const GeometryParams& geo);

/// An exact complex number re + i im.
struct ComplexRational
{
   Rational re;
   Rational im;
   bool operator==(const ComplexRational&) const = default;
};

/// The reduced charge at a single polarisation (t, s), not restricted to a
/// hyperbola: (2hts a01 + hs^2 a10) + i (t a02 + 2hs a11 - hts^2 a00).
ComplexRational pointwise_charge(const ChernMatrix& m, const Polarization& pol, const GeometryParams& geo);

/// Slope-stability weak charge -omega^2 ch1 + i ch0.
ComplexRational z_slope(const ChernMatrix& m, const Polarization& pol, const GeometryParams& geo);

/// b10 + i (2 b11 - alpha b00), reading m as (b_ij).
ComplexRational z_alpha(const ChernMatrix& m, const Rational& alpha);

struct Eq12Sides
{
   Rational lhs;  // omega_bar^2 ch1(E), from the intersection table
   Rational rhs;  // 2h (lambda^2/alpha)(2 b11 - alpha b00), b = ch(Phi(E)[1])
   bool holds() const { return lhs == rhs; }
};

Eq12Sides eq12_sides(const ChernMatrix& m, const Rational& alpha, const Rational& lambda,
                     const GeometryParams& geo);
bool eq12_check(const ChernMatrix& m, const Rational& alpha, const Rational& lambda,
                const GeometryParams& geo);

/// (omega^2 ch1)^2 - 2 omega^3 ch0 . omega ch2.
Rational discriminant(const ChernMatrix& m, const Polarization& pol, const GeometryParams& geo);

}  // namespace elliptic_tilt
