#include "elliptic_tilt/lattice.hpp"

#include <stdexcept>
#include <string>

namespace elliptic_tilt {

namespace {

using Entry = ChernMatrix::Entry;

Entry checked_add(Entry a, Entry b)
{
   Entry r;
   if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Chern matrix entry overflow");
   return r;
}

Entry checked_sub(Entry a, Entry b)
{
   Entry r;
   if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("Chern matrix entry overflow");
   return r;
}

Entry checked_mul(Entry a, Entry b)
{
   Entry r;
   if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Chern matrix entry overflow");
   return r;
}

Rational q(Entry v) { return Rational(Integer(static_cast<long>(v))); }

}  // namespace

ChernMatrix ChernMatrix::operator+(const ChernMatrix& other) const
{
   std::array<Entry, 6> out{};
   for (std::size_t k = 0; k < 6; ++k) out[k] = checked_add(entries_[k], other.entries_[k]);
   return ChernMatrix(out);
}

ChernMatrix ChernMatrix::operator-(const ChernMatrix& other) const
{
   std::array<Entry, 6> out{};
   for (std::size_t k = 0; k < 6; ++k) out[k] = checked_sub(entries_[k], other.entries_[k]);
   return ChernMatrix(out);
}

ChernMatrix ChernMatrix::operator-() const { return scaled(-1); }

ChernMatrix ChernMatrix::scaled(Entry factor) const
{
   std::array<Entry, 6> out{};
   for (std::size_t k = 0; k < 6; ++k) out[k] = checked_mul(entries_[k], factor);
   return ChernMatrix(out);
}

void GeometryParams::validate() const
{
   if (h < 1) throw std::invalid_argument("h must be a positive integer, got " + std::to_string(h));
   if (c < 1) throw std::invalid_argument("c must be a positive integer, got " + std::to_string(c));
}

void Polarization::validate() const
{
   require_positive(t, "t");
   require_positive(s, "s");
}

Polarization Polarization::on_hyperbola(const Rational& alpha, const Rational& s)
{
   require_positive(alpha, "alpha");
   require_positive(s, "s");
   return Polarization{Rational(alpha / s), s};
}

Polarization Polarization::reference(const Rational& alpha, const Rational& lambda)
{
   require_positive(alpha, "alpha");
   require_positive(lambda, "lambda");
   return Polarization{Rational(lambda / alpha), lambda};
}

ChernMatrix fm_transform(const ChernMatrix& m)
{
   return ChernMatrix(m.a10(), m.a11(), m.a12(),
                      checked_mul(m.a00(), -1), checked_mul(m.a01(), -1), checked_mul(m.a02(), -1));
}

ChernMatrix shift(const ChernMatrix& m, std::int64_t n)
{
   return (n % 2 == 0) ? m : -m;
}

IntersectionNumbers intersection_numbers(const ChernMatrix& m, const Polarization& pol,
                                         const GeometryParams& geo)
{
   pol.validate();
   geo.validate();
   const Rational h = q(geo.h);
   const Rational& t = pol.t;
   const Rational& s = pol.s;
   const Rational a01 = q(m.a01()), a02 = q(m.a02()), a10 = q(m.a10()), a11 = q(m.a11());

   IntersectionNumbers out;
   out.omega3 = 6 * h * t * s * s;
   out.omega2_ch1 = 4 * h * t * s * a01 + 2 * h * s * s * a10;
   out.omega_ch2 = t * a02 + 2 * h * s * a11;
   out.omega_ch1_sq = 2 * h * t * a01 * a01 + 4 * h * s * a01 * a10;
   out.HD_ch01 = 2 * h * a01;
   out.D2_ch10 = 2 * h * a10;
   out.D_ch11 = 2 * h * a11;
   out.H_ch02 = a02;
   out.ch0 = q(m.a00());
   out.ch3 = q(m.a12());
   return out;
}

}  // namespace elliptic_tilt
