#pragma once

#include "elliptic_tilt/rational.hpp"

#include <array>
#include <compare>
#include <cstdint>

namespace elliptic_tilt {

/// Chern character ch(E) = sum a_ij d_ij in the basis d_ij = e_i (x) f_j of
/// A*(C x S).  Row i is the curve degree, column j the surface degree:
///
///     ( a00 a01 a02 )      a00 = ch0,  a12 = ch3
///     ( a10 a11 a12 )
///
/// Entries are exact integers.  Arithmetic is overflow-checked and throws
/// std::overflow_error rather than wrapping.
class ChernMatrix
{
public:
   using Entry = std::int64_t;

   constexpr ChernMatrix() = default;
   constexpr ChernMatrix(Entry a00, Entry a01, Entry a02, Entry a10, Entry a11, Entry a12)
      : entries_{a00, a01, a02, a10, a11, a12}
   {
   }
   explicit constexpr ChernMatrix(const std::array<Entry, 6>& flat) : entries_(flat) {}

   constexpr Entry operator()(int row, int col) const { return entries_[row * 3 + col]; }
   constexpr Entry a00() const { return entries_[0]; }
   constexpr Entry a01() const { return entries_[1]; }
   constexpr Entry a02() const { return entries_[2]; }
   constexpr Entry a10() const { return entries_[3]; }
   constexpr Entry a11() const { return entries_[4]; }
   constexpr Entry a12() const { return entries_[5]; }

   /// Row-major flat view: a00, a01, a02, a10, a11, a12.
   constexpr const std::array<Entry, 6>& flat() const { return entries_; }

   constexpr bool is_zero() const
   {
      for (Entry e : entries_)
         if (e != 0) return false;
      return true;
   }

   ChernMatrix operator+(const ChernMatrix& other) const;
   ChernMatrix operator-(const ChernMatrix& other) const;
   ChernMatrix operator-() const;
   ChernMatrix scaled(Entry factor) const;

   constexpr bool operator==(const ChernMatrix&) const = default;
   constexpr auto operator<=>(const ChernMatrix&) const = default;

private:
   std::array<Entry, 6> entries_{};
};

/// H_S^2 = 2h on the K3 factor; c is the least positive fiber degree.
struct GeometryParams
{
   std::int64_t h = 1;
   std::int64_t c = 1;

   /// Throws std::invalid_argument unless h >= 1 and c >= 1.
   void validate() const;
};

/// The polarisation omega = t H + s D with H = d10, D = d01.
struct Polarization
{
   Rational t;
   Rational s;

   /// Throws std::invalid_argument unless t > 0 and s > 0.
   void validate() const;

   /// Point on the hyperbola t s = alpha.
   static Polarization on_hyperbola(const Rational& alpha, const Rational& s);
   /// The reference class (lambda/alpha) H + lambda D.
   static Polarization reference(const Rational& alpha, const Rational& lambda);
};

struct IntersectionNumbers
{
   Rational omega3;        // 6 h t s^2
   Rational omega2_ch1;    // 4 h t s a01 + 2 h s^2 a10
   Rational omega_ch2;     // t a02 + 2 h s a11
   Rational omega_ch1_sq;  // 2 h t a01^2 + 4 h s a01 a10
   Rational HD_ch01;       // 2 h a01
   Rational D2_ch10;       // 2 h a10
   Rational D_ch11;        // 2 h a11
   Rational H_ch02;        // a02
   Rational ch0;           // a00
   Rational ch3;           // a12

   bool operator==(const IntersectionNumbers&) const = default;
};

/// Cohomological action of the relative Fourier-Mukai transform:
/// rows are swapped and the new bottom row negated.
ChernMatrix fm_transform(const ChernMatrix& m);

/// ch(E[n]) = (-1)^n ch(E).
ChernMatrix shift(const ChernMatrix& m, std::int64_t n);

IntersectionNumbers intersection_numbers(const ChernMatrix& m, const Polarization& pol,
                                         const GeometryParams& geo);

}  // namespace elliptic_tilt
