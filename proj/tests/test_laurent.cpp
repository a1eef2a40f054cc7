#include "support.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace elliptic_tilt;
using testing_support::Gen;

namespace {

LaurentPoly mono(const Rational& c, int e) { return LaurentPoly::monomial(c, e); }

/// Sign of p on a fine rational grid across (lo, hi), endpoints excluded.
bool constant_sign_between(const LaurentPoly& p, const Rational& lo, const Rational& hi, int points, int& sign_out)
{
   sign_out = 0;
   for (int k = 1; k <= points; ++k)
   {
      const Rational s = lo + (hi - lo) * k / (points + 1);
      const int sg = sgn(eval(p, s));
      if (sg == 0) return false;
      if (sign_out == 0) sign_out = sg;
      else if (sg != sign_out) return false;
   }
   return true;
}

}  // namespace

TEST_CASE("arithmetic")
{
   CHECK(arith(mono(2, 2), mono(-2, 2), ArithOp::add).is_zero());
   CHECK(arith(mono(1, -1), mono(1, 1), ArithOp::mul) == LaurentPoly::constant(1));
   CHECK(arith(mono(2, 1) + mono(1, 0), mono(1, -1), ArithOp::mul) == mono(2, 0) + mono(1, -1));
   CHECK(arith(mono(3, 4), {}, ArithOp::neg) == mono(-3, 4));
   CHECK(arith(mono(3, 4), mono(1, 4), ArithOp::sub) == mono(2, 4));
   CHECK((mono(3, 2) * Rational(0)).is_zero());
}

TEST_CASE("coefficients and degrees")
{
   const LaurentPoly p = mono(5, 3) + mono(-1, -2);
   CHECK(p.max_exponent() == 3);
   CHECK(p.min_exponent() == -2);
   CHECK(p.leading_coefficient() == 5);
   CHECK(p.coefficient(0) == 0);
   CHECK_THROWS_AS(LaurentPoly{}.max_exponent(), std::logic_error);
}

TEST_CASE("eval")
{
   CHECK(eval(mono(2, 3) - mono(2, -1), 1) == 0);
   CHECK(eval({}, 5) == 0);
   CHECK(eval(mono(1, 2) + mono(1, -1), 2) == Rational(9, 2));
   CHECK_THROWS_AS(eval(mono(1, 1), 0), std::invalid_argument);
   CHECK_THROWS_AS(eval(mono(1, 1), -1), std::invalid_argument);
}

TEST_CASE("asymptotic_sign")
{
   CHECK(asymptotic_sign(mono(-3, 2) + mono(100, 1)) == -1);
   CHECK(asymptotic_sign({}) == 0);
   CHECK(asymptotic_sign(mono(1, -1)) == 1);
}

TEST_CASE("positive_roots")
{
   SUBCASE("single exact root")
   {
      const auto roots = positive_roots(mono(2, 3) - mono(2, -1));
      REQUIRE(roots.size() == 1);
      CHECK(roots[0].exact);
      CHECK(roots[0].lo == 1);
   }
   SUBCASE("no real roots") { CHECK(positive_roots(mono(1, 2) + mono(1, 0)).empty()); }
   SUBCASE("two simple roots")
   {
      const auto roots = positive_roots(mono(1, 2) - mono(3, 1) + mono(2, 0));
      REQUIRE(roots.size() == 2);
      CHECK(roots[0].lo == 1);
      CHECK(roots[1].lo == 2);
   }
   SUBCASE("irrational root is bracketed to the requested width")
   {
      const Rational width(1, 1000);
      const auto roots = positive_roots(mono(1, 2) - mono(2, 0), width);
      REQUIRE(roots.size() == 1);
      CHECK_FALSE(roots[0].exact);
      CHECK(roots[0].hi - roots[0].lo <= width);
      CHECK(roots[0].lo * roots[0].lo < 2);
      CHECK(roots[0].hi * roots[0].hi > 2);
      CHECK(roots[0].sign_lo == -roots[0].sign_hi);
   }
   SUBCASE("double root is found with its multiplicity")
   {
      // (s - 3)^2 (s + 1) s^-4
      const LaurentPoly p = (mono(1, 1) - mono(3, 0)) * (mono(1, 1) - mono(3, 0)) * (mono(1, 1) + mono(1, 0)) * mono(1, -4);
      const auto roots = positive_roots(p);
      REQUIRE(roots.size() == 1);
      CHECK(roots[0].exact);
      CHECK(roots[0].lo == 3);
      CHECK(roots[0].multiplicity == 2);
   }
   SUBCASE("rational root with nontrivial denominator")
   {
      const auto roots = positive_roots(mono(3, 1) - mono(2, 0));
      REQUIRE(roots.size() == 1);
      CHECK(roots[0].exact);
      CHECK(roots[0].lo == Rational(2, 3));
   }
   SUBCASE("close irrational roots stay separated")
   {
      const LaurentPoly p = (mono(1, 2) - mono(2, 0)) * (mono(1, 2) - mono(Rational(20001, 10000), 0));
      const auto roots = positive_roots(p);
      REQUIRE(roots.size() == 2);
      CHECK(roots[0].hi <= roots[1].lo);
   }
   CHECK_THROWS_AS(positive_roots({}), std::invalid_argument);
}

TEST_CASE("property: ring laws")
{
   Gen gen(20240611);
   for (int i = 0; i < 300; ++i)
   {
      const LaurentPoly p = gen.laurent(-3, 3, 4, 9);
      const LaurentPoly q = gen.laurent(-3, 3, 4, 9);
      const LaurentPoly r = gen.laurent(-3, 3, 4, 9);
      CHECK((p * q) * r == p * (q * r));
      CHECK(p * (q + r) == p * q + p * r);
      CHECK(-(-p) == p);
      CHECK(p + q == q + p);
      CHECK((p - p).is_zero());
   }
}

TEST_CASE("property: sign settles at the asymptotic threshold")
{
   Gen gen(77);
   for (int i = 0; i < 300; ++i)
   {
      const LaurentPoly p = gen.laurent(-4, 4, 5, 50);
      if (p.is_zero()) continue;
      const Rational S = asymptotic_threshold(p);
      CHECK(sgn(eval(p, S)) == asymptotic_sign(p));
      CHECK(sgn(eval(p, 2 * S)) == asymptotic_sign(p));
      for (const auto& root : positive_roots(p)) CHECK(root.hi < cauchy_bound(p) + 1);
   }
}

TEST_CASE("property: constant sign between certified roots")
{
   Gen gen(4242);
   for (int i = 0; i < 80; ++i)
   {
      // Products of linear factors with small positive roots make crossings likely.
      LaurentPoly p = LaurentPoly::constant(gen.positive_rational(5, 3));
      const int factors = static_cast<int>(gen.integer(1, 4));
      for (int k = 0; k < factors; ++k)
      {
         const Rational root = gen.positive_rational(8, 3);
         if (gen.coin()) p = p * (mono(1, 1) - LaurentPoly::constant(root));
         else p = p * (mono(1, 2) - LaurentPoly::constant(root));
      }
      p = p * mono(1, static_cast<int>(gen.integer(-3, 1)));
      const auto roots = positive_roots(p, Rational(1, 1000));

      std::vector<Rational> cuts{0};
      for (const auto& r : roots)
      {
         cuts.push_back(r.lo);
         cuts.push_back(r.hi);
      }
      cuts.push_back(cauchy_bound(p) + 1);
      // Between the hi of one root and the lo of the next the sign is constant.
      for (std::size_t k = 0; k + 1 < cuts.size(); k += 2)
      {
         int sg = 0;
         CHECK(constant_sign_between(p, cuts[k], cuts[k + 1], 40, sg));
      }
      for (std::size_t k = 0; k + 1 < roots.size(); ++k) CHECK(roots[k].hi <= roots[k + 1].lo);
   }
}
