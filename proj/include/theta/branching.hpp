#pragma once

#include <variant>
#include <vector>

#include "theta/families.hpp"
#include "theta/lusztig_datum.hpp"
#include "theta/symbol.hpp"

// Parabolic-induction branching on unipotent symbols: one Witt step adds one
// box to upsilon at fixed defect (dimension step 2 for unitary families).

namespace theta {

// All characters one Witt step up whose upsilon contains the character's
// upsilon: exactly the add-a-box extensions in either partition, any row
// including a new one.  The sgn flag propagates unchanged.
std::vector<UnipotentChar> successors(const UnipotentChar& c);

// Transitive closure to rank (dimension for U) m, deduplicated,
// deterministic order.  m must be reachable: m >= n and, for unitary
// families, m = n mod 2.
std::vector<UnipotentChar> induced_set(const UnipotentChar& c, Int m);

// min over induced_set of theta_rank; equals theta_rank(c) (checked, not
// assumed).
Int min_theta_over_induced(const UnipotentChar& c, Int m);

// The tower-case split of the minimizing-successor construction: case A
// towers add the box to the first top-row entry, case B to the first
// bottom-row entry.
enum class SuccessorCase { A, B };

// The successor adding 1 to a1 (case A) or b1 (case B) of the class
// representative; preserves theta-rank when the case matches the tower
// achieving the character's theta-rank minimum.
UnipotentChar distinguished_successor(const UnipotentChar& c, SuccessorCase which);

// The case of the tower achieving the theta-rank minimum for this
// character (ties resolve to A; odd orthogonal characters delegate to the
// transposed symplectic symbol, which swaps the rows).
SuccessorCase minimizing_case(const UnipotentChar& c);

// Datum-level branching: the rank and the (+)-component advance by one Witt
// step; for unitary data the first slot is the distinguished one (created
// from an implicit zero slot when absent).
std::vector<OrthoSympDatum> datum_successors(const OrthoSympDatum& d);
std::vector<UnitaryDatum> datum_successors(const UnitaryDatum& d);

}  // namespace theta
