#include "elliptic_tilt/laurent.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace elliptic_tilt {

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly LaurentPoly::monomial(const Rational& coefficient, int exponent)
{
   LaurentPoly p;
   p.add_term(coefficient, exponent);
   return p;
}

Rational LaurentPoly::coefficient(int exponent) const
{
   auto it = terms_.find(exponent);
   return it == terms_.end() ? Rational(0) : it->second;
}

int LaurentPoly::max_exponent() const
{
   if (terms_.empty()) throw std::logic_error("max_exponent of the zero polynomial");
   return terms_.rbegin()->first;
}

int LaurentPoly::min_exponent() const
{
   if (terms_.empty()) throw std::logic_error("min_exponent of the zero polynomial");
   return terms_.begin()->first;
}

Rational LaurentPoly::leading_coefficient() const
{
   if (terms_.empty()) return Rational(0);
   return terms_.rbegin()->second;
}

LaurentPoly& LaurentPoly::add_term(const Rational& coefficient, int exponent)
{
   if (sgn(coefficient) == 0) return *this;
   auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
   if (!inserted)
   {
      it->second += coefficient;
      if (sgn(it->second) == 0) terms_.erase(it);
   }
   return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& other) const
{
   LaurentPoly out = *this;
   for (const auto& [e, c] : other.terms_) out.add_term(c, e);
   return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& other) const
{
   LaurentPoly out = *this;
   for (const auto& [e, c] : other.terms_) out.add_term(-c, e);
   return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const
{
   LaurentPoly out;
   for (const auto& [e1, c1] : terms_)
      for (const auto& [e2, c2] : other.terms_) out.add_term(c1 * c2, e1 + e2);
   return out;
}

LaurentPoly LaurentPoly::operator*(const Rational& scalar) const
{
   LaurentPoly out;
   if (sgn(scalar) == 0) return out;
   for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * scalar);
   return out;
}

LaurentPoly LaurentPoly::operator-() const { return *this * Rational(-1); }

LaurentPoly arith(const LaurentPoly& p, const LaurentPoly& q, ArithOp op)
{
   switch (op)
   {
   case ArithOp::add: return p + q;
   case ArithOp::sub: return p - q;
   case ArithOp::mul: return p * q;
   case ArithOp::neg: return -p;
   }
   throw std::invalid_argument("unknown arithmetic operation");
}

Rational eval(const LaurentPoly& p, const Rational& s0)
{
   if (sgn(s0) <= 0) throw std::invalid_argument("eval requires s > 0, got " + to_string(s0));
   Rational sum = 0;
   for (const auto& [e, c] : p.terms())
   {
      Rational power = 1;
      mpz_pow_ui(power.get_num_mpz_t(), s0.get_num_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
      mpz_pow_ui(power.get_den_mpz_t(), s0.get_den_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
      if (e < 0) power = 1 / power;
      sum += c * power;
   }
   return sum;
}

int asymptotic_sign(const LaurentPoly& p)
{
   return p.is_zero() ? 0 : sgn(p.leading_coefficient());
}

Rational cauchy_bound(const LaurentPoly& p)
{
   if (p.is_zero()) throw std::invalid_argument("Cauchy bound of the zero polynomial");
   const Rational lead = abs_value(p.leading_coefficient());
   Rational worst = 0;
   for (const auto& [e, c] : p.terms())
   {
      if (e == p.max_exponent()) continue;
      Rational ratio = abs_value(c) / lead;
      if (ratio > worst) worst = ratio;
   }
   return 1 + worst;
}

Rational asymptotic_threshold(const LaurentPoly& p) { return 1 + cauchy_bound(p); }

// ---------------------------------------------------------------------------
// Dense univariate polynomials over Q, used only for root isolation.

namespace {

/// Coefficients in ascending degree; no trailing zeros; empty means zero.
struct Dense
{
   std::vector<Rational> c;

   int degree() const { return static_cast<int>(c.size()) - 1; }
   bool is_zero() const { return c.empty(); }
   const Rational& lead() const { return c.back(); }

   void trim()
   {
      while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
   }
};

Dense from_laurent(const LaurentPoly& p)
{
   Dense d;
   const int shift = p.min_exponent();
   d.c.assign(static_cast<std::size_t>(p.max_exponent() - shift + 1), Rational(0));
   for (const auto& [e, coeff] : p.terms()) d.c[static_cast<std::size_t>(e - shift)] = coeff;
   return d;
}

Rational horner(const Dense& f, const Rational& x)
{
   Rational acc = 0;
   for (auto it = f.c.rbegin(); it != f.c.rend(); ++it) acc = acc * x + *it;
   return acc;
}

int sign_at(const Dense& f, const Rational& x) { return sgn(horner(f, x)); }

Dense derivative(const Dense& f)
{
   Dense d;
   for (std::size_t k = 1; k < f.c.size(); ++k) d.c.push_back(f.c[k] * static_cast<long>(k));
   d.trim();
   return d;
}

Dense sub(const Dense& a, const Dense& b)
{
   Dense r;
   r.c.assign(std::max(a.c.size(), b.c.size()), Rational(0));
   for (std::size_t k = 0; k < a.c.size(); ++k) r.c[k] += a.c[k];
   for (std::size_t k = 0; k < b.c.size(); ++k) r.c[k] -= b.c[k];
   r.trim();
   return r;
}

Dense negate(Dense a)
{
   for (auto& x : a.c) x = -x;
   return a;
}

/// Euclidean division a = q b + r.
std::pair<Dense, Dense> divmod(const Dense& a, const Dense& b)
{
   if (b.is_zero()) throw std::logic_error("polynomial division by zero");
   Dense r = a;
   Dense q;
   if (a.degree() < b.degree()) return {q, r};
   q.c.assign(static_cast<std::size_t>(a.degree() - b.degree() + 1), Rational(0));
   while (!r.is_zero() && r.degree() >= b.degree())
   {
      const int shift = r.degree() - b.degree();
      Rational factor = r.lead() / b.lead();
      q.c[static_cast<std::size_t>(shift)] = factor;
      for (std::size_t k = 0; k < b.c.size(); ++k) r.c[k + static_cast<std::size_t>(shift)] -= factor * b.c[k];
      r.trim();
   }
   q.trim();
   return {q, r};
}

Dense monic(Dense a)
{
   if (a.is_zero()) return a;
   Rational lead = a.lead();
   for (auto& x : a.c) x /= lead;
   return a;
}

Dense gcd(Dense a, Dense b)
{
   while (!b.is_zero())
   {
      Dense r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
   }
   return monic(std::move(a));
}

/// Yun's square-free decomposition: f = prod factor_i^i up to a constant.
std::vector<std::pair<Dense, int>> squarefree_decomposition(const Dense& f)
{
   std::vector<std::pair<Dense, int>> out;
   const Dense fp = derivative(f);
   const Dense a0 = gcd(f, fp);
   Dense b = divmod(f, a0).first;
   Dense c = divmod(fp, a0).first;
   Dense d = sub(c, derivative(b));
   int i = 1;
   while (b.degree() > 0)
   {
      Dense a = gcd(b, d);
      if (a.degree() > 0) out.emplace_back(a, i);
      b = divmod(b, a).first;
      c = divmod(d, a).first;
      d = sub(c, derivative(b));
      ++i;
   }
   return out;
}

std::vector<Dense> sturm_sequence(const Dense& f)
{
   std::vector<Dense> seq{f, derivative(f)};
   while (!seq.back().is_zero() && seq.back().degree() > 0)
   {
      Dense r = divmod(seq[seq.size() - 2], seq.back()).second;
      if (r.is_zero()) break;
      seq.push_back(negate(std::move(r)));
   }
   if (seq.back().is_zero()) seq.pop_back();
   return seq;
}

int sign_variations(const std::vector<Dense>& seq, const Rational& x)
{
   int count = 0;
   int last = 0;
   for (const auto& p : seq)
   {
      int sg = sign_at(p, x);
      if (sg == 0) continue;
      if (last != 0 && sg != last) ++count;
      last = sg;
   }
   return count;
}

/// Distinct roots of square-free f in (a, b], a and b not roots.
int count_roots(const std::vector<Dense>& seq, const Rational& a, const Rational& b)
{
   return sign_variations(seq, a) - sign_variations(seq, b);
}

Dense primitive_integer(const Dense& f)
{
   Integer lcm_den = 1;
   for (const auto& x : f.c) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den_mpz_t());
   Dense g;
   Integer content = 0;
   for (const auto& x : f.c)
   {
      Rational y = x * lcm_den;
      g.c.push_back(y);
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), y.get_num_mpz_t());
   }
   for (auto& y : g.c) y /= content;
   return g;
}

// Bounded so that trial division stays cheap.
constexpr unsigned long kMaxDivisorSearch = 10'000'000'000UL;

std::vector<Integer> divisors(const Integer& n)
{
   std::vector<Integer> small, large;
   Integer m = abs(n);
   for (Integer d = 1; d * d <= m; ++d)
   {
      if (m % d == 0)
      {
         small.push_back(d);
         if (d * d != m) large.push_back(m / d);
      }
   }
   small.insert(small.end(), large.rbegin(), large.rend());
   return small;
}

struct Isolating
{
   Rational lo, hi;
   bool exact = false;
   int multiplicity = 1;
   std::size_t factor = 0;
};

/// Halves (lo, hi) keeping the sign change; may land exactly on the root.
void bisect_once(const Dense& f, Isolating& iso)
{
   Rational mid = (iso.lo + iso.hi) / 2;
   int sm = sign_at(f, mid);
   if (sm == 0)
   {
      iso.lo = iso.hi = mid;
      iso.exact = true;
      return;
   }
   if (sm == sign_at(f, iso.lo))
      iso.lo = mid;
   else
      iso.hi = mid;
}

void try_exact_rational(const Dense& f, Isolating& iso)
{
   const Dense g = primitive_integer(f);
   Integer lead = abs(g.lead().get_num());
   if (lead > kMaxDivisorSearch) return;
   const Rational needed(1, lead + 1);
   while (!iso.exact && iso.hi - iso.lo >= needed) bisect_once(f, iso);
   if (iso.exact) return;
   for (const Integer& q : divisors(lead))
   {
      Rational scaled_lo = iso.lo * q;
      Integer p;
      mpz_fdiv_q(p.get_mpz_t(), scaled_lo.get_num_mpz_t(), scaled_lo.get_den_mpz_t());
      p += 1;  // smallest integer strictly above lo*q
      Rational candidate(p, q);
      candidate.canonicalize();
      if (candidate >= iso.hi) continue;
      if (sign_at(f, candidate) == 0)
      {
         iso.lo = iso.hi = candidate;
         iso.exact = true;
         return;
      }
   }
}

}  // namespace

std::vector<RootCertificate> positive_roots(const LaurentPoly& p, const Rational& width)
{
   if (p.is_zero()) throw std::invalid_argument("positive_roots of the zero polynomial: every point is a root");
   require_positive(width, "root isolation width");

   Dense cleared = from_laurent(p);
   std::size_t zeros = 0;
   while (zeros < cleared.c.size() && sgn(cleared.c[zeros]) == 0) ++zeros;
   cleared.c.erase(cleared.c.begin(), cleared.c.begin() + static_cast<std::ptrdiff_t>(zeros));
   if (cleared.degree() < 1) return {};

   const Rational upper = cauchy_bound(p);
   std::vector<Dense> factors;
   std::vector<Isolating> found;

   for (auto& [factor_poly, multiplicity] : squarefree_decomposition(cleared))
   {
      Dense f = factor_poly;
      std::vector<Dense> seq = sturm_sequence(f);
      struct Pending { Rational lo, hi; int count; };
      std::vector<Pending> stack;
      int total = count_roots(seq, Rational(0), upper);
      if (total > 0) stack.push_back({Rational(0), upper, total});

      while (!stack.empty())
      {
         Pending cur = stack.back();
         stack.pop_back();
         if (cur.count == 0) continue;
         if (cur.count == 1)
         {
            Isolating iso{cur.lo, cur.hi, false, multiplicity, factors.size()};
            found.push_back(iso);
            continue;
         }
         Rational mid = (cur.lo + cur.hi) / 2;
         if (sign_at(f, mid) == 0)
         {
            found.push_back(Isolating{mid, mid, true, multiplicity, factors.size()});
            // Deflate so the midpoint stops being a root of the working factor.
            Dense linear;
            linear.c = {-mid, Rational(1)};
            f = divmod(f, linear).first;
            seq = sturm_sequence(f);
            if (f.degree() < 1) { stack.clear(); break; }
            stack.push_back({cur.lo, cur.hi, cur.count - 1});
            continue;
         }
         int left = count_roots(seq, cur.lo, mid);
         stack.push_back({mid, cur.hi, cur.count - left});
         stack.push_back({cur.lo, mid, left});
      }
      // Later bisections use the deflated factor, which has the same
      // remaining roots as the original one.
      factors.push_back(f);
   }

   for (auto& iso : found)
      if (!iso.exact) try_exact_rational(factors[iso.factor], iso);

   // Roots of distinct square-free factors differ; refine until disjoint.
   auto clash = [](const Isolating& a, const Isolating& b) {
      if (a.exact && b.exact) return false;
      if (a.exact) return b.lo < a.lo && a.lo < b.hi;
      if (b.exact) return a.lo < b.lo && b.lo < a.hi;
      return a.lo < b.hi && b.lo < a.hi;
   };
   for (bool overlapping = true; overlapping;)
   {
      overlapping = false;
      for (std::size_t i = 0; i < found.size(); ++i)
         for (std::size_t j = i + 1; j < found.size(); ++j)
         {
            if (!clash(found[i], found[j])) continue;
            overlapping = true;
            if (!found[i].exact) bisect_once(factors[found[i].factor], found[i]);
            if (!found[j].exact) bisect_once(factors[found[j].factor], found[j]);
         }
   }

   std::vector<RootCertificate> out;
   for (auto& iso : found)
   {
      while (!iso.exact && iso.hi - iso.lo > width) bisect_once(factors[iso.factor], iso);
      RootCertificate cert;
      cert.lo = iso.lo;
      cert.hi = iso.hi;
      cert.exact = iso.exact;
      cert.multiplicity = iso.multiplicity;
      if (!iso.exact)
      {
         cert.sign_lo = sign_at(factors[iso.factor], iso.lo);
         cert.sign_hi = sign_at(factors[iso.factor], iso.hi);
      }
      out.push_back(cert);
   }
   std::sort(out.begin(), out.end(), [](const RootCertificate& a, const RootCertificate& b) { return a.lo < b.lo; });
   return out;
}

}  // namespace elliptic_tilt
