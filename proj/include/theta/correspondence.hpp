#pragma once

#include <optional>
#include <string>

#include "theta/families.hpp"
#include "theta/symbol.hpp"
#include "theta/theta_rank.hpp"

// The explicit symbol-level sub-correspondence of the theta correspondence:
// the image of a source symbol is obtained by swapping the rows of its
// upsilon bipartition and merging in one extra part tau, at the defect the
// tower prescribes.

namespace theta {

// I  : O+ even <-> Sp        (tau joins the top row)
// II : O- even <-> Sp        (tau joins the bottom row)
// III: U <-> U, same parity  (tau joins the top row)
// IV : U <-> U, opposite     (tau joins the bottom row)
enum class PairCase { I, II, III, IV };

struct UnderlineImage {
    Symbol lambda;  // the partner symbol in the target family
    Int tau;        // |Y(lambda)| - |Y(lambda_prime)|, >= 0
    Int defect;     // defect of lambda
    GroupFamily target;
};

// The tower defect of the partner of a source symbol of defect d:
//   I:   1 - d      II:  -1 - d
//   III: 1 - d  (0 -> 0)   IV:  -1 - d
// Involutive in every case.
Int partner_defect(PairCase c, Int source_defect);

// The source family of lambda_prime under the case, resolved from its
// defect; throws if the symbol fits neither side of the case.
GroupFamily source_family(PairCase c, const Symbol& lambda_prime);
FamilyKind target_kind(PairCase c, const GroupFamily& source);

// Image of lambda_prime at the target rank (dimension for unitary cases).
// Throws std::domain_error when the target is below the first tau >= 0
// point or off the tower's parity grid.
UnderlineImage underline_theta(PairCase c, const Symbol& lambda_prime, Int target);

// Dimension of the target group of the minimal (tau = 0) image.
Int underline_theta_minimal_target(PairCase c, const Symbol& lambda_prime);

// Smallest source-group dimension, over the towers of the symbol's family,
// whose image at the symbol's own rank contains it.  Equals
// theta_rank_symbol (the calibration identity).
Int underline_theta_rank(World world, const Symbol& s);

// The tau = 0 preimage candidates of s in the given case (s as target):
// source symbols verified by the forward map; used by underline_theta_rank
// and the calibration suite.
std::optional<Symbol> underline_theta_preimage(PairCase c, const Symbol& s, Int tau);

PairCase parse_pair_case(std::string_view text);
std::string to_string(PairCase c);

}  // namespace theta
