#pragma once

#include "elliptic_tilt/rational.hpp"

#include <map>
#include <vector>

namespace elliptic_tilt {

/// Exact Laurent polynomial in one variable s over Q.  Stored sparsely;
/// a zero coefficient is never kept, so two equal polynomials always
/// have identical term maps.
class LaurentPoly
{
public:
   using Terms = std::map<int, Rational>;

   LaurentPoly() = default;
   static LaurentPoly monomial(const Rational& coefficient, int exponent);
   static LaurentPoly constant(const Rational& value) { return monomial(value, 0); }

   const Terms& terms() const { return terms_; }
   bool is_zero() const { return terms_.empty(); }
   Rational coefficient(int exponent) const;

   /// Largest / smallest exponent with a nonzero coefficient.  Zero
   /// polynomial: std::logic_error.
   int max_exponent() const;
   int min_exponent() const;
   Rational leading_coefficient() const;

   /// Adds c s^e in place, dropping the term if it cancels.
   LaurentPoly& add_term(const Rational& coefficient, int exponent);

   LaurentPoly operator+(const LaurentPoly& other) const;
   LaurentPoly operator-(const LaurentPoly& other) const;
   LaurentPoly operator*(const LaurentPoly& other) const;
   LaurentPoly operator*(const Rational& scalar) const;
   LaurentPoly operator-() const;

   bool operator==(const LaurentPoly&) const = default;

private:
   Terms terms_;
};

enum class ArithOp { add, sub, mul, neg };

/// neg ignores q.
LaurentPoly arith(const LaurentPoly& p, const LaurentPoly& q, ArithOp op);

/// Exact value at s0 > 0; std::invalid_argument otherwise.
Rational eval(const LaurentPoly& p, const Rational& s0);

/// Sign of the highest-exponent coefficient; 0 only for the zero polynomial.
int asymptotic_sign(const LaurentPoly& p);

/// Cauchy bound 1 + max |a_i / a_n| of the polynomial s^k p(s) with negative
/// exponents cleared.  Every positive root of p is strictly below it.
/// Zero polynomial: std::invalid_argument.
Rational cauchy_bound(const LaurentPoly& p);

/// One plus the Cauchy bound: sign(eval(p, s)) == asymptotic_sign(p) for all s
/// at or beyond this value.
Rational asymptotic_threshold(const LaurentPoly& p);

/// A certified positive root.  Either exact (lo == hi == root) or an open
/// interval (lo, hi) holding exactly one root of the square-free part, with
/// that part taking signs sign_lo, sign_hi (opposite, nonzero) at the ends.
struct RootCertificate
{
   Rational lo;
   Rational hi;
   bool exact = false;
   int multiplicity = 1;
   int sign_lo = 0;
   int sign_hi = 0;

   bool operator==(const RootCertificate&) const = default;
};

inline Rational default_root_width() { return Rational(1, 1000000); }

/// All roots in (0, inf), ascending, each refined to width <= `width`.
/// Rational roots are reported exactly whenever the leading coefficient of
/// the primitive square-free factor is small enough to enumerate divisors.
/// Zero polynomial: std::invalid_argument.
std::vector<RootCertificate> positive_roots(const LaurentPoly& p,
                                            const Rational& width = default_root_width());

}  // namespace elliptic_tilt
