#include "elliptic_tilt/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace elliptic_tilt {

namespace {

bool all_digits(std::string_view s)
{
   if (s.empty()) return false;
   for (char ch : s)
      if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
   return true;
}

Integer parse_integer(std::string_view s, std::string_view whole)
{
   bool negative = false;
   if (!s.empty() && (s.front() == '-' || s.front() == '+'))
   {
      negative = s.front() == '-';
      s.remove_prefix(1);
   }
   if (!all_digits(s))
      throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
   Integer value(std::string(s), 10);
   return negative ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
   while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
   while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
   if (text.empty()) throw std::invalid_argument("empty rational");

   if (auto slash = text.find('/'); slash != std::string_view::npos)
   {
      Integer num = parse_integer(text.substr(0, slash), text);
      std::string_view den_text = text.substr(slash + 1);
      if (!all_digits(den_text))
         throw std::invalid_argument("malformed denominator in '" + std::string(text) + "'");
      Integer den(std::string(den_text), 10);
      if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
      Rational r(num, den);
      r.canonicalize();
      return r;
   }

   if (auto dot = text.find('.'); dot != std::string_view::npos)
   {
      std::string_view int_part = text.substr(0, dot);
      std::string_view frac_part = text.substr(dot + 1);
      if (!frac_part.empty() && !all_digits(frac_part))
         throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
      bool negative = !int_part.empty() && int_part.front() == '-';
      std::string_view int_digits = int_part;
      if (!int_digits.empty() && (int_digits.front() == '-' || int_digits.front() == '+'))
         int_digits.remove_prefix(1);
      if (int_digits.empty() && frac_part.empty())
         throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
      if (!int_digits.empty() && !all_digits(int_digits))
         throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
      std::string digits = std::string(int_digits) + std::string(frac_part);
      Integer num(digits.empty() ? std::string("0") : digits, 10);
      Integer den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_part.size());
      Rational r(negative ? Integer(-num) : num, den);
      r.canonicalize();
      return r;
   }

   return Rational(parse_integer(text, text));
}

std::string to_string(const Rational& value)
{
   return value.get_str(10);
}

void require_positive(const Rational& value, std::string_view what)
{
   if (sgn(value) <= 0)
      throw std::invalid_argument(std::string(what) + " must be positive, got " + to_string(value));
}

Rational abs_value(const Rational& value)
{
   Rational r = value;
   if (sgn(r) < 0) r = -r;
   return r;
}

}  // namespace elliptic_tilt
