#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "theta/families.hpp"
#include "theta/symbol.hpp"

// Data model for the modified Lusztig correspondence: enough of a general
// irreducible character to evaluate its theta-rank.  The correspondence
// itself (Deligne-Lusztig theory) is not computed; a datum is input data.

namespace theta {

// (n_minus, lambda_minus) and (n_plus, lambda_plus) are the symbol data at
// the eigenvalues -1 and +1; the slack n - n_minus - n_plus is the rank of
// the component at the other eigenvalues, whose internal structure never
// enters the formulas.
//
// Defect conditions: for Sp, lambda_minus has even defect (even-orthogonal
// type) and lambda_plus defect = 1 mod 4 (Sp type); for even orthogonal
// both are even; for odd orthogonal both are = 1 mod 4 (Sp type).
struct OrthoSympDatum {
    FamilyKind family;  // Sp, OPlusEven, OMinusEven, or OOdd
    Int n;
    Int n_minus;
    Int n_plus;
    Symbol lambda_minus;
    Symbol lambda_plus;
    bool sgn = false;  // meaningful for OOdd only

    friend bool operator==(const OrthoSympDatum&, const OrthoSympDatum&) = default;
};

// Unitary datum: the unipotent slots at the q+1 eigenvalues of order
// dividing q+1.  Only slots with n_1j > 0 are stored; at least one implicit
// zero slot always exists (q+1 >= 3), so the candidate value n is always in
// the minimum.  rest = n - sum(n_1j) is the dimension carried by the
// remaining eigenvalues.
struct UnitaryDatum {
    struct Slot {
        Int n;          // positive
        Symbol lambda;  // in S_{U_n}

        friend bool operator==(const Slot&, const Slot&) = default;
    };

    Int n;
    std::vector<Slot> slots;
    Int rest = 0;

    friend bool operator==(const UnitaryDatum&, const UnitaryDatum&) = default;
};

// Validating constructors; rank-0 symbol slots may be given as any rank-0
// symbol and are canonicalized to the defect the slot's family requires.
// Throw std::domain_error on invariant violations.
OrthoSympDatum make_ortho_symp_datum(FamilyKind family, Int n, Int n_minus, Int n_plus,
                                     Symbol lambda_minus, Symbol lambda_plus,
                                     bool sgn = false);
UnitaryDatum make_unitary_datum(Int n, std::vector<UnitaryDatum::Slot> slots);

// Theta-rank from the datum:
//   Sp:      min{2n - 2n+ + Th(lambda+), 2n - 2n- + Th(lambda-) + 1}
//   O even / O odd: the same minimum without the +1
//   U:       min{n, min over slots of n - n_1j + Th(lambda_1j)}
Int theta_rank_so(const OrthoSympDatum& d);
Int theta_rank_u(const UnitaryDatum& d);

// sgn twist: transpose both symbols (even orthogonal) or toggle the flag
// (odd orthogonal).  chi twist: swap the two eigenvalue components.  Both
// are involutions defined for orthogonal families only and preserve
// theta_rank_so.
OrthoSympDatum twist_sgn(const OrthoSympDatum& d);
OrthoSympDatum twist_chi(const OrthoSympDatum& d);

// The datum of a unipotent character: everything concentrated at
// eigenvalue +1 (through the transpose for odd orthogonal groups).
std::variant<OrthoSympDatum, UnitaryDatum> embed_unipotent(const UnipotentChar& c);

// The canonical rank-0 symbol of each slot type: [|] for even-orthogonal
// slots, [0|] for Sp-type slots.
Symbol zero_rank_symbol(bool sp_type);

// JSON wire format (see the CLI): parse/serialize round-trip.
std::variant<OrthoSympDatum, UnitaryDatum> parse_datum_json(const std::string& text);
std::string datum_to_json(const OrthoSympDatum& d);
std::string datum_to_json(const UnitaryDatum& d);

}  // namespace theta
