#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "theta/symbol.hpp"

// Classification of symbols into the series attached to the finite
// symplectic, even/odd orthogonal, and unitary groups, and enumeration of
// every reduced symbol (equivalently every unipotent character label) of a
// family at a given rank.

namespace theta {

enum class FamilyKind { Sp, OPlusEven, OMinusEven, OOdd, U };

// For Sp/O kinds n is the symbol rank; for U it is the dimension (the value
// of rank_u).
struct GroupFamily {
    FamilyKind kind;
    Int n;

    friend bool operator==(const GroupFamily&, const GroupFamily&) = default;
};

// A unipotent character label: symbol plus, for odd orthogonal groups only,
// the sgn flag distinguishing the two characters sharing one symbol.
struct UnipotentChar {
    GroupFamily family;
    Symbol lambda;
    bool sgn = false;

    friend bool operator==(const UnipotentChar&, const UnipotentChar&) = default;
};

// Witt-tower series; the tower index n maps to the group dimension.
enum class Series { Sp, OPlus, OMinus, OOdd, UEven, UOdd };

// Sp -> 2n, O+ -> 2n, O- -> 2n+2, O odd -> 2n+1, U even -> 2n, U odd -> 2n+1.
Int dimension_of(Series series, Int witt_index);

FamilyKind family_kind_of(Series series);

// The symbol family of the tower member at a Witt index: the O- tower
// member at index n has symbol rank n + 1, unitary members are keyed by
// dimension, all others by the index itself.
GroupFamily family_at_witt_index(Series series, Int witt_index);

// The defect test for membership: def = 1 mod 4 (Sp), 0 (O+), 2 (O-),
// 3 (O odd); for U, even and non-negative or odd and negative.
bool defect_admissible(FamilyKind kind, Int defect);

// True iff the symbol lies in the series of the family (rank or rank_u
// matches n and the defect condition holds).
bool member(const GroupFamily& family, const Symbol& s);

// The family a symbol belongs to.  Every symbol lies in exactly one of the
// four Sp/O families; it lies in a U family iff its defect is admissible.
GroupFamily spo_family_of(const Symbol& s);
bool in_some_unitary_family(const Symbol& s);

// Degenerate even-orthogonal symbols equal to their own transpose label a
// single symbol for the pair {rho, rho sgn}; they are enumerated once.
bool is_self_transpose(const Symbol& s);

// Enumeration ceiling (default 30, overridable via THETA_MAX_RANK).
Int enumeration_ceiling();

// Admissible defects of the family ordered by the size of their rank
// contribution, positive sign first.
std::vector<Int> admissible_defects(const GroupFamily& family);

// All partitions of m, descending lexicographic order: (m), (m-1,1), ...
std::vector<Partition> partitions_of(Int m);

// All bipartitions of m: |top| from m down to 0, each side in descending
// lexicographic order.
std::vector<Bipartition> bipartitions_of(Int m);

// Exactly the reduced symbols of the family, deterministic order
// (defect-major, then by bipartition).  Throws std::domain_error when
// family.n exceeds the enumeration ceiling.
std::vector<Symbol> enumerate_symbols(const GroupFamily& family);

// One character per symbol, except two (sgn = false/true) for odd
// orthogonal families.
std::vector<UnipotentChar> enumerate_unipotent(const GroupFamily& family);

// Family literal grammar: "sp:2", "o+:4", "o-:3", "oodd:2", "u:5".
GroupFamily parse_family(std::string_view text);
std::string to_string(const GroupFamily& family);
std::string to_string(FamilyKind kind);

}  // namespace theta
