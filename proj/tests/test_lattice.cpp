#include "support.hpp"

#include <doctest.h>

#include <limits>
#include <stdexcept>

using namespace elliptic_tilt;
using testing_support::Gen;

TEST_CASE("fm_transform swaps rows and negates the new bottom row")
{
   CHECK(fm_transform({1, 0, 0, 0, 0, 0}) == ChernMatrix{0, 0, 0, -1, 0, 0});
   CHECK(fm_transform({0, 0, 0, 0, 0, 1}) == ChernMatrix{0, 0, 1, 0, 0, 0});
   CHECK(fm_transform(fm_transform({1, 2, 3, 4, 5, 6})) == ChernMatrix{-1, -2, -3, -4, -5, -6});
}

TEST_CASE("shift by n multiplies by (-1)^n")
{
   CHECK(shift({1, 0, 0, 0, 0, 0}, 1) == ChernMatrix{-1, 0, 0, 0, 0, 0});
   CHECK(shift({1, 0, 0, 0, 0, 0}, 2) == ChernMatrix{1, 0, 0, 0, 0, 0});
   CHECK(shift({0, 1, 0, 0, 0, 1}, -1) == ChernMatrix{0, -1, 0, 0, 0, -1});
   CHECK(shift({3, 1, 4, 1, 5, 9}, -4) == ChernMatrix{3, 1, 4, 1, 5, 9});
}

TEST_CASE("intersection numbers at sample points")
{
   const GeometryParams geo{1, 1};
   CHECK(intersection_numbers({0, 1, 0, 0, 0, 0}, {1, 1}, geo).omega2_ch1 == 4);
   CHECK(intersection_numbers({0, 0, 0, 1, 0, 0}, {1, 1}, geo).omega2_ch1 == 2);
   CHECK(intersection_numbers({7, -3, 2, 0, 9, 1}, {2, 3}, geo).omega3 == 108);

   const auto n = intersection_numbers({1, 2, 3, 4, 5, 6}, {Rational(1, 2), 3}, {2, 1});
   CHECK(n.omega_ch2 == Rational(3, 2) + 60);
   CHECK(n.omega_ch1_sq == 2 * 2 * Rational(1, 2) * 4 + 4 * 2 * 3 * 2 * 4);
   CHECK(n.HD_ch01 == 8);
   CHECK(n.D2_ch10 == 16);
   CHECK(n.D_ch11 == 20);
   CHECK(n.H_ch02 == 3);
   CHECK(n.ch0 == 1);
   CHECK(n.ch3 == 6);
}

TEST_CASE("invalid parameters are rejected")
{
   CHECK_THROWS_AS(intersection_numbers({}, {0, 1}, {}), std::invalid_argument);
   CHECK_THROWS_AS(intersection_numbers({}, {1, -1}, {}), std::invalid_argument);
   CHECK_THROWS_AS(intersection_numbers({}, {1, 1}, {0, 1}), std::invalid_argument);
   CHECK_THROWS_AS(intersection_numbers({}, {1, 1}, {1, 0}), std::invalid_argument);
   CHECK_THROWS_AS(Polarization::on_hyperbola(0, 1), std::invalid_argument);
}

TEST_CASE("overflow is reported, not wrapped")
{
   constexpr auto big = std::numeric_limits<std::int64_t>::max();
   const ChernMatrix m{big, 0, 0, 0, 0, 0};
   CHECK_THROWS_AS(m + m, std::overflow_error);
   CHECK_THROWS_AS(m.scaled(2), std::overflow_error);
   const ChernMatrix low{std::numeric_limits<std::int64_t>::min(), 0, 0, 0, 0, 0};
   CHECK_THROWS_AS(-low, std::overflow_error);
   CHECK_THROWS_AS(fm_transform({std::numeric_limits<std::int64_t>::min(), 0, 0, 0, 0, 0}), std::overflow_error);
}

TEST_CASE("polarization helpers")
{
   const auto p = Polarization::on_hyperbola(Rational(3, 2), 6);
   CHECK(p.t * p.s == Rational(3, 2));
   const auto r = Polarization::reference(2, 3);
   CHECK(r.t == Rational(3, 2));
   CHECK(r.s == 3);
}

TEST_CASE("property: lattice invariants on random matrices")
{
   Gen gen(0x1a771ce);
   for (int i = 0; i < 2000; ++i)
   {
      const ChernMatrix m = gen.matrix(1000000);
      const ChernMatrix n = gen.matrix(1000000);
      CHECK(fm_transform(fm_transform(m)) == -m);
      CHECK(fm_transform(m + n) == fm_transform(m) + fm_transform(n));

      const std::int64_t k = gen.integer(-7, 7);
      CHECK(shift(m, k) == (k % 2 == 0 ? m : -m));

      const Polarization pol{gen.positive_rational(), gen.positive_rational()};
      const GeometryParams geo{gen.integer(1, 5), 1};
      const auto im = intersection_numbers(m, pol, geo);
      const auto in = intersection_numbers(n, pol, geo);
      const auto isum = intersection_numbers(m + n, pol, geo);
      CHECK(im.omega3 == in.omega3);
      CHECK(isum.omega2_ch1 == im.omega2_ch1 + in.omega2_ch1);
   }
}
