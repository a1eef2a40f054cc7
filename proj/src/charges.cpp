#include "elliptic_tilt/charges.hpp"

namespace elliptic_tilt {

namespace {

Rational q(std::int64_t v) { return Rational(Integer(static_cast<long>(v))); }

ExtendedRational ratio_or_infinity(const Rational& num, const Rational& den)
{
   if (sgn(den) == 0) return ExtendedRational::infinity();
   return ExtendedRational::finite(num / den);
}

}  // namespace

bool ExtendedRational::operator==(const ExtendedRational& other) const
{
   if (is_infinite() || other.is_infinite()) return is_infinite() == other.is_infinite();
   return *value_ == *other.value_;
}

std::strong_ordering ExtendedRational::operator<=>(const ExtendedRational& other) const
{
   if (is_infinite() && other.is_infinite()) return std::strong_ordering::equal;
   if (is_infinite()) return std::strong_ordering::greater;
   if (other.is_infinite()) return std::strong_ordering::less;
   int c = cmp(*value_, *other.value_);
   return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string to_string(const ExtendedRational& value)
{
   return value.is_infinite() ? std::string("+inf") : to_string(value.value());
}

ExtendedRational slope_mu_f(const ChernMatrix& m) { return ratio_or_infinity(q(m.a10()), q(m.a00())); }

ExtendedRational slope_mu_star(const ChernMatrix& m) { return ratio_or_infinity(q(m.a01()), q(m.a00())); }

ExtendedRational slope_mu_omega(const ChernMatrix& m, const Polarization& pol, const GeometryParams& geo)
{
   const IntersectionNumbers n = intersection_numbers(m, pol, geo);
   return ratio_or_infinity(n.omega2_ch1, n.ch0);
}

ExtendedRational tilt_slope(const ChernMatrix& m, const Polarization& pol, const GeometryParams& geo)
{
   const IntersectionNumbers n = intersection_numbers(m, pol, geo);
   return ratio_or_infinity(n.omega_ch2 - n.omega3 / 6 * n.ch0, n.omega2_ch1);
}

ReducedCharge ReducedCharge::operator+(const ReducedCharge& other) const
{
   return ReducedCharge{re + other.re, im + other.im, alpha, h};
}

ReducedCharge ReducedCharge::operator-(const ReducedCharge& other) const
{
   return ReducedCharge{re - other.re, im - other.im, alpha, h};
}

ReducedCharge reduced_charge(const ChernMatrix& m, const Rational& alpha, const GeometryParams& geo)
{
   require_positive(alpha, "alpha");
   geo.validate();
   const Rational h = q(geo.h);
   ReducedCharge z;
   z.alpha = alpha;
   z.h = geo.h;
   z.re.add_term(2 * h * alpha * q(m.a01()), 0);
   z.re.add_term(h * q(m.a10()), 2);
   z.im.add_term(alpha * q(m.a02()), -1);
   z.im.add_term(2 * h * q(m.a11()) - h * alpha * q(m.a00()), 1);
   return z;
}

ComplexRational pointwise_charge(const ChernMatrix& m, const Polarization& pol, const GeometryParams& geo)
{
   const IntersectionNumbers n = intersection_numbers(m, pol, geo);
   return ComplexRational{n.omega2_ch1 / 2, n.omega_ch2 - n.omega3 / 6 * n.ch0};
}

ComplexRational z_slope(const ChernMatrix& m, const Polarization& pol, const GeometryParams& geo)
{
   const IntersectionNumbers n = intersection_numbers(m, pol, geo);
   return ComplexRational{-n.omega2_ch1, n.ch0};
}

ComplexRational z_alpha(const ChernMatrix& m, const Rational& alpha)
{
   require_positive(alpha, "alpha");
   return ComplexRational{q(m.a10()), 2 * q(m.a11()) - alpha * q(m.a00())};
}

Eq12Sides eq12_sides(const ChernMatrix& m, const Rational& alpha, const Rational& lambda,
                     const GeometryParams& geo)
{
   const Polarization bar = Polarization::reference(alpha, lambda);
   const ChernMatrix b = shift(fm_transform(m), 1);
   Eq12Sides sides;
   sides.lhs = intersection_numbers(m, bar, geo).omega2_ch1;
   sides.rhs = 2 * q(geo.h) * (lambda * lambda / alpha) * (2 * q(b.a11()) - alpha * q(b.a00()));
   return sides;
}

bool eq12_check(const ChernMatrix& m, const Rational& alpha, const Rational& lambda,
                const GeometryParams& geo)
{
   return eq12_sides(m, alpha, lambda, geo).holds();
}

Rational discriminant(const ChernMatrix& m, const Polarization& pol, const GeometryParams& geo)
{
   const IntersectionNumbers n = intersection_numbers(m, pol, geo);
   return n.omega2_ch1 * n.omega2_ch1 - 2 * n.omega3 * n.ch0 * n.omega_ch2;
}

}  // namespace elliptic_tilt
