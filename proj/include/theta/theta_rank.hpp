#pragma once

#include <variant>

#include "theta/families.hpp"
#include "theta/symbol.hpp"

// Theta-rank of unipotent characters from symbol removals, per-tower first
// occurrences, and the named witness constructors (Steinberg, cuspidal, and
// the existence-proposition symbols).

namespace theta {

enum class World { SpO, U };

enum class Tower {
    OPlusOfSp,
    OMinusOfSp,
    SpOfOPlus,
    SpOfOMinus,
    USameParity,
    UOppositeParity,
    SpOfOOdd,
};

// The two single-entry removals on the transposed symbol, evaluated on the
// representative with both rows non-empty:
//   drop_top_first(a;b)    = (b1..bm2 ; a2..am1)   -- removes a1
//   drop_bottom_first(a;b) = (b2..bm2 ; a1..am1)   -- removes b1
Symbol drop_top_first(const Symbol& both_rows_rep);
Symbol drop_bottom_first(const Symbol& both_rows_rep);

// Theta-rank of the symbol: min over the two removals of 2*rank (SpO world)
// or rank_u (U world); in the U world the defect-0 stratum additionally
// admits the same-parity-tower occurrence obtained by peeling the largest
// top part of upsilon (see first_occurrence).  Invariant under equivalence
// and transpose.  Throws std::domain_error if the symbol lies in no family
// of the requested world.
Int theta_rank_symbol(World world, const Symbol& s);

// Theta-rank of a unipotent character label (world chosen by its family).
Int theta_rank(const UnipotentChar& c);

// Dimension of the smallest partner group of the tower whose theta
// correspondence contains the character.  Tower must match the family
// (OPlus/OMinusOfSp for Sp, SpOfOPlus/OMinus for even orthogonal, SpOfOOdd
// for odd orthogonal, USameParity/UOppositeParity for unitary).
Int first_occurrence(const UnipotentChar& c, Tower tower);

// The towers applicable to a family, minimum-first order not implied.
std::vector<Tower> towers_of(FamilyKind kind);

// Minimum of first_occurrence over the towers of the character's family;
// for even orthogonal characters the sgn twist (the transposed symbol) is
// included, for odd orthogonal both sgn flags.  Equals theta_rank.
Int min_first_occurrence(const UnipotentChar& c);

// Steinberg character of the series member of rank n (dimension n for
// unitary series).  For even orthogonal series the sgn partner is the
// transposed symbol.  n >= 1 except Sp which allows n = 0.
UnipotentChar steinberg_symbol(Series series, Int n);

// Cuspidal unipotent character with parameter d: Sp_{2d(d+1)},
// O^eps_{2d^2} (eps fixed by the parity of d; d >= 1), O_{2d(d+1)+1},
// U_{d(d+1)/2}.  Theta-ranks 2d^2, 2d(d-1), 2d^2, d(d-1)/2.
UnipotentChar cuspidal_symbol(Series series, Int d);

struct OrthoSympDatum;  // defined in lusztig_datum.hpp
struct UnitaryDatum;

// A character (or modified-Lusztig datum, when no unipotent character
// attains the value) of the series member of rank n with theta-rank
// exactly k.  Throws std::domain_error for inadmissible k.  Every witness
// validates its own theta-rank at construction.
using Witness = std::variant<UnipotentChar, OrthoSympDatum, UnitaryDatum>;
Witness witness_symbol(Series series, Int n, Int k);

std::string to_string(Tower tower);
Tower parse_tower(FamilyKind kind, std::string_view text);

}  // namespace theta
