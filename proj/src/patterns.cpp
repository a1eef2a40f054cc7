#include "elliptic_tilt/patterns.hpp"

#include <stdexcept>

namespace elliptic_tilt {

namespace {

using E = EntryConstraint;
constexpr E _ = E::blank;
constexpr E P = E::positive;
constexpr E N = E::negative;
constexpr E Z = E::zero;
constexpr E S = E::unconstrained;

//                                   a00 a01 a02  a10 a11 a12
constexpr std::array<CellTable, 12> kTables = {{
   {_, _, _, _, _, P},  // C0
   {_, _, P, _, _, P},  // C1_{0,+}
   {_, _, P, _, _, Z},  // C1_{0,0}
   {_, _, P, _, _, N},  // C1_{0,-}
   {_, _, S, _, P, S},  // C1_1
   {_, P, S, _, P, S},  // C2_{1,+}
   {_, P, S, _, Z, S},  // C2_{1,0}
   {_, P, S, _, N, S},  // C2_{1,-}
   {_, S, S, P, S, S},  // C2_{2,+}
   {P, S, S, P, S, S},  // C3_{2,+}
   {P, S, S, Z, S, S},  // C3_{2,0}
   {P, S, S, N, S, S},  // C3_{2,-}
}};

constexpr std::array<const char*, 12> kNames = {
   "C0",       "C1_{0,+}", "C1_{0,0}", "C1_{0,-}", "C1_1",     "C2_{1,+}",
   "C2_{1,0}", "C2_{1,-}", "C2_{2,+}", "C3_{2,+}", "C3_{2,0}", "C3_{2,-}",
};

std::size_t index_of(PatternCell cell) { return static_cast<std::size_t>(cell); }

bool entry_ok(EntryConstraint c, std::int64_t v)
{
   switch (c)
   {
   case E::blank:
   case E::zero: return v == 0;
   case E::positive: return v > 0;
   case E::negative: return v < 0;
   case E::unconstrained: return true;
   }
   return false;
}

void require_level(int level)
{
   if (level < 1 || level > kLadderLevels)
      throw std::invalid_argument("ladder level must be in [1, " + std::to_string(kLadderLevels) + "], got " +
                                  std::to_string(level));
}

}  // namespace

const CellTable& constraint_table(PatternCell cell) { return kTables[index_of(cell)]; }

std::string cell_name(PatternCell cell) { return kNames[index_of(cell)]; }

std::optional<PatternCell> parse_cell_name(std::string_view name)
{
   for (std::size_t k = 0; k < kNames.size(); ++k)
      if (name == kNames[k]) return kAllCells[k];
   return std::nullopt;
}

bool satisfies(const ChernMatrix& m, PatternCell cell)
{
   const CellTable& table = constraint_table(cell);
   for (std::size_t k = 0; k < 6; ++k)
      if (!entry_ok(table[k], m.flat()[k])) return false;
   return true;
}

std::vector<PatternCell> classify(const ChernMatrix& m)
{
   std::vector<PatternCell> out;
   for (PatternCell cell : kAllCells)
      if (satisfies(m, cell)) out.push_back(cell);
   return out;
}

int wit_index(PatternCell cell)
{
   switch (cell)
   {
   case PatternCell::C0:
   case PatternCell::C1_0_plus:
   case PatternCell::C1_1:
   case PatternCell::C2_1_plus:
   case PatternCell::C2_2_plus:
   case PatternCell::C3_2_plus: return 0;
   default: return 1;
   }
}

CellImage fm_cell_image(PatternCell cell)
{
   using C = PatternCell;
   auto partner = [](C c) {
      switch (c)
      {
      case C::C0: return C::C1_0_zero;
      case C::C1_0_zero: return C::C0;
      case C::C1_0_plus: return C::C1_0_minus;
      case C::C1_0_minus: return C::C1_0_plus;
      case C::C1_1: return C::C2_1_zero;
      case C::C2_1_zero: return C::C1_1;
      case C::C2_1_plus: return C::C2_1_minus;
      case C::C2_1_minus: return C::C2_1_plus;
      case C::C2_2_plus: return C::C3_2_zero;
      case C::C3_2_zero: return C::C2_2_plus;
      case C::C3_2_plus: return C::C3_2_minus;
      case C::C3_2_minus: return C::C3_2_plus;
      }
      throw std::logic_error("unknown cell");
   };
   return CellImage{partner(cell), wit_index(cell)};
}

std::vector<PatternCell> ladder_cells(int level)
{
   require_level(level);
   return {kAllCells.begin(), kAllCells.begin() + level};
}

bool ladder_membership(const ChernMatrix& m, int level)
{
   require_level(level);
   if (m.is_zero()) return true;
   // Each cell's constraint set is closed under addition, so a decomposition
   // uses every cell at most once.  Given the set of cells used, the six
   // positions decouple: a position is reachable iff some used cell leaves it
   // free, or the sum of P (>= 1) positive and N (<= -1) negative parts can
   // hit the entry.
   const unsigned subsets = 1U << level;
   for (unsigned mask = 1; mask < subsets; ++mask)
   {
      bool feasible = true;
      for (std::size_t pos = 0; pos < 6 && feasible; ++pos)
      {
         int positives = 0, negatives = 0;
         bool free_slot = false;
         for (int k = 0; k < level; ++k)
         {
            if (!(mask & (1U << k))) continue;
            switch (kTables[static_cast<std::size_t>(k)][pos])
            {
            case E::positive: ++positives; break;
            case E::negative: ++negatives; break;
            case E::unconstrained: free_slot = true; break;
            default: break;
            }
         }
         if (free_slot) continue;
         const std::int64_t v = m.flat()[pos];
         if (positives > 0 && negatives > 0) continue;
         if (positives > 0) feasible = v >= positives;
         else if (negatives > 0) feasible = v <= -negatives;
         else feasible = v == 0;
      }
      if (feasible) return true;
   }
   return false;
}

std::optional<int> ladder_level(const ChernMatrix& m)
{
   for (int level = 1; level <= kLadderLevels; ++level)
      if (ladder_membership(m, level)) return level;
   return std::nullopt;
}

Rational entry_bound_s0(std::int64_t rank, const Rational& mu_star_max, const Rational& t0, std::int64_t c)
{
   if (rank < 1) throw std::invalid_argument("rank must be >= 1");
   if (c < 1) throw std::invalid_argument("c must be >= 1");
   require_positive(t0, "t0");
   return 2 * t0 * Rational(Integer(static_cast<long>(rank))) * mu_star_max / Rational(Integer(static_cast<long>(c)));
}

HeartBound limit_heart_bound(std::int64_t rank, const Rational& mu_star_extreme, const Rational& alpha,
                             std::int64_t c, BoundVariant variant)
{
   if (rank < 1) throw std::invalid_argument("rank must be >= 1");
   if (c < 1) throw std::invalid_argument("c must be >= 1");
   require_positive(alpha, "alpha");
   HeartBound out;
   out.s_squared = 2 * alpha * abs_value(mu_star_extreme) * Rational(Integer(static_cast<long>(rank))) /
                   Rational(Integer(static_cast<long>(c)));
   out.strict = variant == BoundVariant::torsion_class;
   return out;
}

}  // namespace elliptic_tilt
