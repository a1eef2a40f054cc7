#pragma once

#include "elliptic_tilt/charges.hpp"
#include "elliptic_tilt/lattice.hpp"
#include "elliptic_tilt/laurent.hpp"
#include "elliptic_tilt/patterns.hpp"
#include "elliptic_tilt/phases.hpp"

#include <cstdint>
#include <random>

namespace testing_support {

using namespace elliptic_tilt;

/// Deterministic generators for property tests.
class Gen
{
public:
   explicit Gen(std::uint64_t seed) : engine_(seed) {}

   std::int64_t integer(std::int64_t lo, std::int64_t hi)
   {
      return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
   }

   bool coin() { return integer(0, 1) == 1; }

   Rational positive_rational(std::int64_t max_num = 20, std::int64_t max_den = 12)
   {
      Rational r(integer(1, max_num), integer(1, max_den));
      r.canonicalize();
      return r;
   }

   Rational rational(std::int64_t max_num = 20, std::int64_t max_den = 12)
   {
      Rational r(integer(-max_num, max_num), integer(1, max_den));
      r.canonicalize();
      return r;
   }

   ChernMatrix matrix(std::int64_t bound)
   {
      return {integer(-bound, bound), integer(-bound, bound), integer(-bound, bound),
              integer(-bound, bound), integer(-bound, bound), integer(-bound, bound)};
   }

   /// Matrix whose charge along t s = alpha is admissible; negating a
   /// nonzero charge always lands in the admissible region.
   ChernMatrix admissible_matrix(std::int64_t bound, const Rational& alpha, const GeometryParams& geo)
   {
      ChernMatrix m = matrix(bound);
      return is_admissible(reduced_charge(m, alpha, geo)) ? m : -m;
   }

   /// Random entry satisfying one cell constraint, nonzero where the sign is
   /// prescribed.
   std::int64_t entry(EntryConstraint c, std::int64_t bound)
   {
      switch (c)
      {
      case EntryConstraint::blank:
      case EntryConstraint::zero: return 0;
      case EntryConstraint::positive: return integer(1, bound);
      case EntryConstraint::negative: return -integer(1, bound);
      case EntryConstraint::unconstrained: return integer(-bound, bound);
      }
      return 0;
   }

   ChernMatrix conforming(PatternCell cell, std::int64_t bound)
   {
      const CellTable& table = constraint_table(cell);
      std::array<std::int64_t, 6> flat{};
      for (std::size_t k = 0; k < 6; ++k) flat[k] = entry(table[k], bound);
      return ChernMatrix(flat);
   }

   PatternCell cell() { return kAllCells[static_cast<std::size_t>(integer(0, 11))]; }

   LaurentPoly laurent(int min_exp, int max_exp, int terms, std::int64_t coeff_bound)
   {
      LaurentPoly p;
      for (int k = 0; k < terms; ++k)
      {
         Rational c(integer(-coeff_bound, coeff_bound), integer(1, 4));
         c.canonicalize();
         p.add_term(c, static_cast<int>(integer(min_exp, max_exp)));
      }
      return p;
   }

   std::mt19937_64& engine() { return engine_; }

private:
   std::mt19937_64 engine_;
};

}  // namespace testing_support
