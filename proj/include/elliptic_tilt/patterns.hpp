#pragma once

#include "elliptic_tilt/lattice.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace elliptic_tilt {

/// The twelve sign-pattern cells of the Fourier-Mukai picture.  Columns of
/// the picture are (C0), (C1_0_*), (C1_1), (C2_1_*), (C2_2_plus), (C3_2_*);
/// the first cell of each column is WIT0, the others WIT1.
enum class PatternCell
{
   C0,
   C1_0_plus,
   C1_0_zero,
   C1_0_minus,
   C1_1,
   C2_1_plus,
   C2_1_zero,
   C2_1_minus,
   C2_2_plus,
   C3_2_plus,
   C3_2_zero,
   C3_2_minus,
};

inline constexpr std::array<PatternCell, 12> kAllCells = {
   PatternCell::C0,        PatternCell::C1_0_plus, PatternCell::C1_0_zero, PatternCell::C1_0_minus,
   PatternCell::C1_1,      PatternCell::C2_1_plus, PatternCell::C2_1_zero, PatternCell::C2_1_minus,
   PatternCell::C2_2_plus, PatternCell::C3_2_plus, PatternCell::C3_2_zero, PatternCell::C3_2_minus,
};

/// What a cell demands of one matrix position.  `blank` and `zero` both force
/// the entry to vanish; they are kept apart to mirror the diagrams, where a
/// blank box and an explicit '0' sign mean different things categorically.
enum class EntryConstraint { blank, positive, negative, zero, unconstrained };

using CellTable = std::array<EntryConstraint, 6>;  // row-major a00..a12

const CellTable& constraint_table(PatternCell cell);

/// "C0", "C1_{0,+}", ..., "C3_{2,-}".
std::string cell_name(PatternCell cell);
std::optional<PatternCell> parse_cell_name(std::string_view name);

bool satisfies(const ChernMatrix& m, PatternCell cell);

/// Every cell whose sign table m satisfies.  This is a Chern-level necessary
/// condition only; it never certifies that a sheaf lies in the category.
std::vector<PatternCell> classify(const ChernMatrix& m);

struct CellImage
{
   PatternCell cell;
   int wit_index;  // WIT index of the source cell: 0 or 1

   bool operator==(const CellImage&) const = default;
};

/// The cell paired with `cell` under Phi.  A WIT1 source needs the extra
/// shift [1] on the transformed Chern matrix.
CellImage fm_cell_image(PatternCell cell);
int wit_index(PatternCell cell);

/// Number of levels in the nested torsion-class ladder; level k adds the
/// k-th cell of kAllCells.
inline constexpr int kLadderLevels = 12;

/// Cells generating the level-k torsion class, k in [1, kLadderLevels].
std::vector<PatternCell> ladder_cells(int level);

/// Whether m is a finite sum of matrices, each satisfying some cell of the
/// given level (the zero matrix is the empty sum).  Decided exactly.
bool ladder_membership(const ChernMatrix& m, int level);

/// Smallest level containing m, if any.
std::optional<int> ladder_level(const ChernMatrix& m);

/// s0 = 2 t0 rk mu*_max / c.
Rational entry_bound_s0(std::int64_t rank, const Rational& mu_star_max, const Rational& t0, std::int64_t c);

enum class BoundVariant { torsion_free_class, torsion_class };

struct HeartBound
{
   Rational s_squared;  // 2 alpha |mu*| rk / c
   bool strict = false;  // s^2 > bound (torsion class) vs s^2 >= bound

   bool operator==(const HeartBound&) const = default;
};

HeartBound limit_heart_bound(std::int64_t rank, const Rational& mu_star_extreme, const Rational& alpha,
                             std::int64_t c, BoundVariant variant);

}  // namespace elliptic_tilt
