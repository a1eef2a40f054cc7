#include "support.hpp"

#include "elliptic_tilt/io.hpp"

#include <doctest.h>

using namespace elliptic_tilt;
using namespace elliptic_tilt::io;
using testing_support::Gen;

TEST_CASE("rational parsing")
{
   CHECK(parse_rational("3") == 3);
   CHECK(parse_rational("-6/4") == Rational(-3, 2));
   CHECK(parse_rational("0.125") == Rational(1, 8));
   CHECK(parse_rational("-2.5") == Rational(-5, 2));
   CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
   CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
   CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
   CHECK(to_string(parse_rational("6/3")) == "2");
   CHECK(to_string(Rational(-1, 2)) == "-1/2");
}

TEST_CASE("matrix text form")
{
   CHECK(parse_matrix("1,0,0;0,0,0") == ChernMatrix{1, 0, 0, 0, 0, 0});
   CHECK(parse_matrix(" -1, 2 ,3 ; 4,-5,6 ") == ChernMatrix{-1, 2, 3, 4, -5, 6});
   CHECK(format_matrix({0, 0, 0, -1, 0, 0}) == "0,0,0;-1,0,0");
   CHECK_THROWS_AS(parse_matrix("1,2;3,4"), ParseError);
   CHECK_THROWS_AS(parse_matrix("1,2,3,4;5,6,7"), ParseError);
   CHECK_THROWS_AS(parse_matrix("1,2,3"), ParseError);
   CHECK_THROWS_AS(parse_matrix("1,2,x;3,4,5"), ParseError);
   CHECK_THROWS_AS(parse_matrix("1,2,3;4,5,6;7,8,9"), ParseError);
   CHECK_THROWS_AS(parse_matrix("99999999999999999999,0,0;0,0,0"), ParseError);
}

TEST_CASE("matrix JSON form")
{
   CHECK(matrix_to_json({1, 2, 3, 4, 5, 6}).dump() == R"({"m":[[1,2,3],[4,5,6]]})");
   CHECK(matrix_from_json(json::parse(R"({"m":[[1,2,3],[4,5,-6]]})")) == ChernMatrix{1, 2, 3, 4, 5, -6});
   CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"m":[[1,2,3]]})")), ParseError);
   CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"m":[[1,2,3],[4,5,6.5]]})")), ParseError);
   CHECK_THROWS_AS(matrix_from_json(json::parse(R"([1,2])")), ParseError);
}

TEST_CASE("Laurent text and JSON forms")
{
   const LaurentPoly p = LaurentPoly::monomial(2, 3) - LaurentPoly::monomial(2, -1);
   CHECK(format_laurent(p) == "2*s^3 - 2*s^-1");
   CHECK(parse_laurent("2*s^3 - 2*s^-1") == p);
   CHECK(format_laurent({}) == "0");
   CHECK(parse_laurent("0").is_zero());
   CHECK(parse_laurent("s") == LaurentPoly::monomial(1, 1));
   CHECK(parse_laurent("-s^2 + 3") == LaurentPoly::monomial(-1, 2) + LaurentPoly::constant(3));
   CHECK(parse_laurent("-1/2*s") == LaurentPoly::monomial(Rational(-1, 2), 1));
   CHECK(format_laurent(LaurentPoly::monomial(Rational(-3, 4), 0)) == "-3/4*s^0");
   CHECK_THROWS_AS(parse_laurent("2s"), ParseError);
   CHECK_THROWS_AS(parse_laurent("s^x"), ParseError);
   CHECK_THROWS_AS(parse_laurent("1 +"), ParseError);
   CHECK_THROWS_AS(parse_laurent(""), ParseError);

   CHECK(laurent_to_json(p).dump() == R"({"terms":[[3,"2"],[-1,"-2"]]})");
   CHECK(laurent_from_json(laurent_to_json(p)) == p);
   CHECK_THROWS_AS(laurent_from_json(json::parse(R"({"terms":[[1,2]]})")), ParseError);
}

TEST_CASE("root and report JSON")
{
   RootCertificate exact{1, 1, true, 1, 0, 0};
   CHECK(root_to_json(exact).dump() == R"({"exact":"1","multiplicity":1})");
   RootCertificate interval{Rational(1, 2), Rational(3, 4), false, 2, -1, 1};
   CHECK(root_to_json(interval).dump() == R"({"interval":["1/2","3/4"],"multiplicity":2,"signs":[-1,1]})");
   CHECK(format_root(interval) == "s in (1/2, 3/4) [multiplicity 2]");

   const WallReport r = wall_locus({0, 1, 0, 0, 1, 0}, {0, 0, 1, 1, 0, 0}, 1, {});
   const json j = wall_report_to_json(r);
   CHECK(j.at("roots").size() == 1);
   CHECK(j.at("safe_s") == "3");
   CHECK(j.at("cross") == laurent_to_json(r.cross));
}

TEST_CASE("property: emitted forms round-trip byte for byte")
{
   Gen gen(0x10);
   for (int i = 0; i < 1000; ++i)
   {
      const ChernMatrix m = gen.matrix(1000000000);
      const std::string text = format_matrix(m);
      CHECK(format_matrix(parse_matrix(text)) == text);
      const std::string js = matrix_to_json(m).dump();
      CHECK(matrix_to_json(matrix_from_json(json::parse(js))).dump() == js);

      const LaurentPoly p = gen.laurent(-5, 5, 4, 1000);
      const std::string ptext = format_laurent(p);
      CHECK(format_laurent(parse_laurent(ptext)) == ptext);
      const std::string pjs = laurent_to_json(p).dump();
      CHECK(laurent_to_json(laurent_from_json(json::parse(pjs))).dump() == pjs);
   }
}
