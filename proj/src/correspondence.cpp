#include "theta/correspondence.hpp"

#include <algorithm>

namespace theta {

namespace {

Int mod4(Int d)
{
    Int r = d % 4;
    return r < 0 ? r + 4 : r;
}

bool tau_row_is_top(PairCase c) { return c == PairCase::I || c == PairCase::III; }
bool unitary_case(PairCase c) { return c == PairCase::III || c == PairCase::IV; }

Partition merge_part(const Partition& p, Int extra)
{
    if (extra == 0) return p;
    std::vector<Int> parts = p.parts();
    parts.insert(std::upper_bound(parts.begin(), parts.end(), extra, std::greater<>()),
                 extra);
    return Partition(std::move(parts));
}

// Remove one part equal to tau from p; nullopt if absent.
std::optional<Partition> remove_part(const Partition& p, Int tau)
{
    if (tau == 0) return p;
    std::vector<Int> parts = p.parts();
    auto it = std::find(parts.begin(), parts.end(), tau);
    if (it == parts.end()) return std::nullopt;
    parts.erase(it);
    return Partition(std::move(parts));
}

// Dimension of the group a target symbol of the given family rank lives in.
// All partner groups of the cases are even-dimensional on the Sp/O side
// (2 * symbol rank); unitary dimensions are the rank_u value itself.
Int dimension_of_target(FamilyKind kind, Int target)
{
    return kind == FamilyKind::U ? target : 2 * target;
}

}  // namespace

Int partner_defect(PairCase c, Int d)
{
    switch (c) {
        case PairCase::I: return 1 - d;
        case PairCase::II: return -1 - d;
        case PairCase::III: return d == 0 ? 0 : 1 - d;
        case PairCase::IV: return -1 - d;
    }
    throw std::logic_error("unreachable");
}

GroupFamily source_family(PairCase c, const Symbol& s)
{
    const Int d = defect(s);
    switch (c) {
        case PairCase::I:
            if (mod4(d) == 0) return GroupFamily{FamilyKind::OPlusEven, rank(s)};
            if (mod4(d) == 1) return GroupFamily{FamilyKind::Sp, rank(s)};
            break;
        case PairCase::II:
            if (mod4(d) == 2) return GroupFamily{FamilyKind::OMinusEven, rank(s)};
            if (mod4(d) == 1) return GroupFamily{FamilyKind::Sp, rank(s)};
            break;
        case PairCase::III:
        case PairCase::IV:
            if (in_some_unitary_family(s)) return GroupFamily{FamilyKind::U, rank_u(s)};
            break;
    }
    throw std::domain_error("symbol " + to_string(s) + " is on neither side of case "
                            + to_string(c));
}

FamilyKind target_kind(PairCase c, const GroupFamily& source)
{
    switch (c) {
        case PairCase::I:
            return source.kind == FamilyKind::Sp ? FamilyKind::OPlusEven : FamilyKind::Sp;
        case PairCase::II:
            return source.kind == FamilyKind::Sp ? FamilyKind::OMinusEven : FamilyKind::Sp;
        case PairCase::III:
        case PairCase::IV:
            return FamilyKind::U;
    }
    throw std::logic_error("unreachable");
}

UnderlineImage underline_theta(PairCase c, const Symbol& lambda_prime, Int target)
{
    const GroupFamily source = source_family(c, lambda_prime);
    const FamilyKind tkind = target_kind(c, source);
    const Int d_target = partner_defect(c, defect(lambda_prime));
    if (!defect_admissible(tkind, d_target))
        throw std::logic_error("partner defect fell outside the target family");

    const Bipartition source_upsilon = upsilon(lambda_prime);
    Int image_boxes;  // |Y| of the image at this target
    if (tkind == FamilyKind::U) {
        const Int spread = target - rank_u_defect_term(d_target);
        if (spread < 0 || spread % 2 != 0)
            throw std::domain_error("target dimension is off this tower's grid");
        image_boxes = spread / 2;
    } else {
        image_boxes = target - rank_defect_term(d_target);
    }
    const Int tau = image_boxes - source_upsilon.sum();
    if (tau < 0)
        throw std::domain_error("target is below the first occurrence of "
                                + to_string(lambda_prime) + " in this tower");

    Bipartition image{source_upsilon.bottom, source_upsilon.top};
    if (tau_row_is_top(c)) image.top = merge_part(image.top, tau);
    else image.bottom = merge_part(image.bottom, tau);

    Symbol lambda = upsilon_inverse(image, d_target);
    const GroupFamily target_family{tkind, target};
    if (!member(target_family, lambda))
        throw std::logic_error("underline-theta image failed family membership");
    return UnderlineImage{std::move(lambda), tau, d_target, target_family};
}

Int underline_theta_minimal_target(PairCase c, const Symbol& lambda_prime)
{
    const GroupFamily source = source_family(c, lambda_prime);
    const FamilyKind tkind = target_kind(c, source);
    const Int d_target = partner_defect(c, defect(lambda_prime));
    const Int boxes = upsilon(lambda_prime).sum();
    if (tkind == FamilyKind::U) return rank_u_defect_term(d_target) + 2 * boxes;
    return dimension_of_target(tkind, rank_defect_term(d_target) + boxes);
}

std::optional<Symbol> underline_theta_preimage(PairCase c, const Symbol& s, Int tau)
{
    // s as the image: peel tau from the designated row, swap back.
    const Int d_source = partner_defect(c, defect(s));
    const Bipartition image = upsilon(s);
    std::optional<Partition> peeled;
    Bipartition source_upsilon;
    if (tau_row_is_top(c)) {
        peeled = remove_part(image.top, tau);
        if (!peeled) return std::nullopt;
        source_upsilon = Bipartition{image.bottom, *peeled};
    } else {
        peeled = remove_part(image.bottom, tau);
        if (!peeled) return std::nullopt;
        source_upsilon = Bipartition{*peeled, image.top};
    }
    Symbol candidate = upsilon_inverse(source_upsilon, d_source);
    // Confirm by the forward map.
    const Int target_size = unitary_case(c) ? rank_u(s) : rank(s);
    UnderlineImage forward = underline_theta(c, candidate, target_size);
    if (!equivalent(forward.lambda, s) || forward.tau != tau) return std::nullopt;
    return candidate;
}

namespace {

// Cases in which a symbol participates as a target, with the source symbol
// orientation handled by the caller.
std::vector<PairCase> cases_of(World world, const Symbol& s)
{
    if (world == World::U) return {PairCase::III, PairCase::IV};
    switch (spo_family_of(s).kind) {
        case FamilyKind::Sp: return {PairCase::I, PairCase::II};
        case FamilyKind::OPlusEven: return {PairCase::I};
        case FamilyKind::OMinusEven: return {PairCase::II};
        default: return {};  // odd orthogonal delegates through the transpose
    }
}

// Smallest source dimension whose image contains s, over the given case.
std::optional<Int> reverse_minimum(PairCase c, const Symbol& s)
{
    const Int d_source = partner_defect(c, defect(s));
    const Bipartition image = upsilon(s);
    const Partition& designated = tau_row_is_top(c) ? image.top : image.bottom;
    std::vector<Int> taus{0};
    for (Int part : designated.parts()) taus.push_back(part);
    std::optional<Int> best;
    for (Int tau : taus) {
        const std::optional<Symbol> src = underline_theta_preimage(c, s, tau);
        if (!src) continue;
        const Int boxes = image.sum() - tau;
        const Int dim = unitary_case(c)
                            ? rank_u_defect_term(d_source) + 2 * boxes
                            : 2 * (rank_defect_term(d_source) + boxes);
        best = best ? std::min(*best, dim) : dim;
    }
    return best;
}

}  // namespace

Int underline_theta_rank(World world, const Symbol& s)
{
    if (world == World::U && !in_some_unitary_family(s))
        throw std::domain_error("symbol lies in no unitary family");
    if (world == World::SpO && spo_family_of(s).kind == FamilyKind::OOdd)
        return underline_theta_rank(world, transpose(s));

    std::vector<Symbol> orientations{s};
    if (world == World::SpO) {
        const FamilyKind kind = spo_family_of(s).kind;
        // The even-orthogonal theta-rank minimizes over the sgn twist,
        // which is the transposed symbol.
        if (kind == FamilyKind::OPlusEven || kind == FamilyKind::OMinusEven)
            orientations.push_back(transpose(s));
    }

    std::optional<Int> best;
    for (const Symbol& target : orientations)
        for (PairCase c : cases_of(world, target))
            if (auto dim = reverse_minimum(c, target))
                best = best ? std::min(*best, *dim) : *dim;
    if (!best)
        throw std::domain_error("symbol " + to_string(s)
                                + " is in no underline-theta image");
    return *best;
}

PairCase parse_pair_case(std::string_view text)
{
    if (text == "I" || text == "i" || text == "1") return PairCase::I;
    if (text == "II" || text == "ii" || text == "2") return PairCase::II;
    if (text == "III" || text == "iii" || text == "3") return PairCase::III;
    if (text == "IV" || text == "iv" || text == "4") return PairCase::IV;
    throw std::invalid_argument("pair case must be one of I, II, III, IV");
}

std::string to_string(PairCase c)
{
    switch (c) {
        case PairCase::I: return "I";
        case PairCase::II: return "II";
        case PairCase::III: return "III";
        case PairCase::IV: return "IV";
    }
    throw std::logic_error("unreachable");
}

}  // namespace theta
