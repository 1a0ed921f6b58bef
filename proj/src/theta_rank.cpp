#include "theta/theta_rank.hpp"

#include <algorithm>
#include <numeric>

#include "theta/lusztig_datum.hpp"

namespace theta {

namespace {

std::vector<Int> drop_front(const BetaSet& r)
{
    return {r.entries().begin() + 1, r.entries().end()};
}

std::vector<Int> all_of(const BetaSet& r)
{
    return r.entries();
}

}  // namespace

Symbol drop_top_first(const Symbol& rep)
{
    return Symbol{BetaSet(all_of(rep.bottom)), BetaSet(drop_front(rep.top))};
}

Symbol drop_bottom_first(const Symbol& rep)
{
    return Symbol{BetaSet(drop_front(rep.bottom)), BetaSet(all_of(rep.top))};
}

namespace {

// Same-parity-tower first occurrence of a defect-0 unitary symbol.  The two
// removals of a defect-0 symbol both have defect +-1, hence odd rank_u, and
// only describe the opposite-parity tower; the same-parity occurrence peels
// the largest top part of upsilon (the tau part of the sub-correspondence),
// reaching dimension 2(|Y| - part).  With an empty top row nothing peels
// and the first image point is the symbol's own dimension 2|Y|.
Int unitary_same_parity_defect0(const Symbol& s)
{
    const Bipartition b = upsilon(s);
    const Int top_first = b.top.empty() ? 0 : b.top.parts()[0];
    return 2 * (b.sum() - top_first);
}

struct RemovalValues {
    Int top_first;     // value of the removal dropping a1
    Int bottom_first;  // value of the removal dropping b1
};

RemovalValues removal_values(World world, const Symbol& s)
{
    const Symbol rep = both_rows_representative(s);
    const Symbol r1 = drop_top_first(rep);
    const Symbol r2 = drop_bottom_first(rep);
    if (world == World::SpO) return {2 * rank(r1), 2 * rank(r2)};
    return {rank_u(r1), rank_u(r2)};
}

}  // namespace

Int theta_rank_symbol(World world, const Symbol& s)
{
    if (world == World::U && !in_some_unitary_family(s))
        throw std::domain_error("symbol " + to_string(s)
                                + " lies in no unitary family (bad defect sign)");
    const RemovalValues v = removal_values(world, s);
    Int best = std::min(v.top_first, v.bottom_first);
    if (world == World::U && defect(s) == 0)
        best = std::min(best, unitary_same_parity_defect0(s));
    return best;
}

Int theta_rank(const UnipotentChar& c)
{
    return theta_rank_symbol(c.family.kind == FamilyKind::U ? World::U : World::SpO,
                             c.lambda);
}

std::vector<Tower> towers_of(FamilyKind kind)
{
    switch (kind) {
        case FamilyKind::Sp: return {Tower::OPlusOfSp, Tower::OMinusOfSp};
        case FamilyKind::OPlusEven: return {Tower::SpOfOPlus};
        case FamilyKind::OMinusEven: return {Tower::SpOfOMinus};
        case FamilyKind::OOdd: return {Tower::SpOfOOdd};
        case FamilyKind::U: return {Tower::USameParity, Tower::UOppositeParity};
    }
    throw std::logic_error("unreachable");
}

Int first_occurrence(const UnipotentChar& c, Tower tower)
{
    const FamilyKind kind = c.family.kind;
    auto incompatible = [&] {
        return std::domain_error("tower " + to_string(tower)
                                 + " is not a tower of family " + to_string(kind));
    };
    switch (kind) {
        case FamilyKind::Sp: {
            const RemovalValues v = removal_values(World::SpO, c.lambda);
            if (tower == Tower::OPlusOfSp) return v.top_first;
            if (tower == Tower::OMinusOfSp) return v.bottom_first;
            throw incompatible();
        }
        case FamilyKind::OPlusEven: {
            if (tower != Tower::SpOfOPlus) throw incompatible();
            return removal_values(World::SpO, c.lambda).top_first;
        }
        case FamilyKind::OMinusEven: {
            if (tower != Tower::SpOfOMinus) throw incompatible();
            return removal_values(World::SpO, c.lambda).bottom_first;
        }
        case FamilyKind::OOdd: {
            // Through the transposed symbol, a symplectic unipotent: the
            // plain character takes the O+ tower removal, the sgn twin the
            // O- one.
            if (tower != Tower::SpOfOOdd) throw incompatible();
            const RemovalValues v = removal_values(World::SpO, transpose(c.lambda));
            return c.sgn ? v.bottom_first : v.top_first;
        }
        case FamilyKind::U: {
            const Int d = defect(c.lambda);
            const RemovalValues v = removal_values(World::U, c.lambda);
            if (tower == Tower::USameParity)
                return d == 0 ? unitary_same_parity_defect0(c.lambda) : v.top_first;
            if (tower == Tower::UOppositeParity)
                return d == 0 ? std::min(v.top_first, v.bottom_first) : v.bottom_first;
            throw incompatible();
        }
    }
    throw std::logic_error("unreachable");
}

Int min_first_occurrence(const UnipotentChar& c)
{
    Int best = -1;
    auto consider = [&](Int v) { best = best < 0 ? v : std::min(best, v); };
    switch (c.family.kind) {
        case FamilyKind::Sp:
        case FamilyKind::U:
            for (Tower t : towers_of(c.family.kind)) consider(first_occurrence(c, t));
            break;
        case FamilyKind::OPlusEven:
        case FamilyKind::OMinusEven: {
            const Tower t = towers_of(c.family.kind)[0];
            consider(first_occurrence(c, t));
            UnipotentChar sgn_twin{c.family, transpose(c.lambda), false};
            consider(first_occurrence(sgn_twin, t));
            break;
        }
        case FamilyKind::OOdd:
            for (bool flag : {false, true})
                consider(first_occurrence(UnipotentChar{c.family, c.lambda, flag},
                                          Tower::SpOfOOdd));
            break;
    }
    return best;
}

namespace {

std::vector<Int> run_down(Int from, Int to)  // from, from-1, ..., to (empty if from < to)
{
    std::vector<Int> v;
    for (Int x = from; x >= to; --x) v.push_back(x);
    return v;
}

std::vector<Int> head_then_run(Int head, Int from, Int to)  // head, from, ..., to
{
    std::vector<Int> v{head};
    for (Int x = from; x >= to; --x) v.push_back(x);
    return v;
}

Symbol make_symbol(std::vector<Int> top, std::vector<Int> bottom)
{
    return Symbol{BetaSet(std::move(top)), BetaSet(std::move(bottom))};
}

UnipotentChar checked_char(GroupFamily family, Symbol s, bool sgn = false)
{
    if (!member(family, s))
        throw std::logic_error("constructed symbol " + to_string(s)
                               + " is not a member of " + to_string(family));
    return UnipotentChar{family, std::move(s), sgn};
}

}  // namespace

UnipotentChar steinberg_symbol(Series series, Int n)
{
    if (n < (series == Series::Sp ? 0 : 1))
        throw std::domain_error("Steinberg parameter out of range");
    switch (series) {
        case Series::Sp:
            return checked_char({FamilyKind::Sp, n},
                                make_symbol(run_down(n, 0), run_down(n, 1)));
        case Series::OPlus:
            return checked_char({FamilyKind::OPlusEven, n},
                                make_symbol(run_down(n, 1), run_down(n - 1, 0)));
        case Series::OMinus:
            return checked_char({FamilyKind::OMinusEven, n},
                                make_symbol(run_down(n, 0), run_down(n - 1, 1)));
        case Series::OOdd:
            return checked_char({FamilyKind::OOdd, n},
                                make_symbol(run_down(n, 1), run_down(n, 0)));
        case Series::UEven:
            if (n % 2 != 0) throw std::domain_error("even unitary series needs even n");
            return checked_char({FamilyKind::U, n},
                                make_symbol(run_down(n / 2 - 1, 0), run_down(n / 2, 1)));
        case Series::UOdd:
            if (n % 2 == 0) throw std::domain_error("odd unitary series needs odd n");
            return checked_char(
                {FamilyKind::U, n},
                make_symbol(run_down((n - 1) / 2, 1), run_down((n - 1) / 2, 0)));
    }
    throw std::logic_error("unreachable");
}

UnipotentChar cuspidal_symbol(Series series, Int d)
{
    auto single_row = [](Int top_from, bool on_top) {
        return on_top ? make_symbol(run_down(top_from, 0), {})
                      : make_symbol({}, run_down(top_from, 0));
    };
    switch (series) {
        case Series::Sp: {
            if (d < 0) throw std::domain_error("cuspidal parameter out of range");
            // defect 2d+1 if that is 1 mod 4 (d even), else -(2d+1).
            return checked_char({FamilyKind::Sp, d * (d + 1)},
                                single_row(2 * d, d % 2 == 0));
        }
        case Series::OPlus:
        case Series::OMinus: {
            if (d < 1) throw std::domain_error("even orthogonal cuspidal needs d >= 1");
            const bool plus = d % 2 == 0;
            if (plus != (series == Series::OPlus))
                throw std::domain_error(
                    "cuspidal sign mismatch: epsilon = + exactly for even d");
            return checked_char(
                {plus ? FamilyKind::OPlusEven : FamilyKind::OMinusEven, d * d},
                single_row(2 * d - 1, true));
        }
        case Series::OOdd: {
            if (d < 0) throw std::domain_error("cuspidal parameter out of range");
            return checked_char({FamilyKind::OOdd, d * (d + 1)},
                                single_row(2 * d, d % 2 != 0));
        }
        case Series::UEven:
        case Series::UOdd: {
            if (d < 0) throw std::domain_error("cuspidal parameter out of range");
            const Int dim = d * (d + 1) / 2;
            if ((dim % 2 == 0) != (series == Series::UEven))
                throw std::domain_error("cuspidal unitary dimension parity mismatch");
            return checked_char({FamilyKind::U, dim}, single_row(d - 1, d % 2 == 0));
        }
    }
    throw std::logic_error("unreachable");
}

namespace {

Witness checked_witness(Witness w, Int k)
{
    const Int got = std::visit(
        [](const auto& x) -> Int {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, UnipotentChar>) return theta_rank(x);
            else if constexpr (std::is_same_v<T, OrthoSympDatum>) return theta_rank_so(x);
            else return theta_rank_u(x);
        },
        w);
    if (got != k)
        throw std::logic_error("witness theta-rank validation failed: expected "
                               + std::to_string(k) + ", got " + std::to_string(got));
    return w;
}

// The torus datum (no eigenvalue +-1 component): theta-rank 2n.
OrthoSympDatum torus_datum(FamilyKind family, Int n)
{
    const bool sp_slots = family == FamilyKind::OOdd;
    return make_ortho_symp_datum(family, n, 0, 0, zero_rank_symbol(sp_slots),
                                 zero_rank_symbol(family == FamilyKind::Sp || sp_slots));
}

Witness witness_sp(Int n, Int k)
{
    if (k % 2 != 0) {
        // Pseudo-unipotent datum concentrated at eigenvalue -1.
        if (k > 2 * n - 1) throw std::domain_error("odd k admits no witness beyond 2n-1");
        const auto even_part =
            std::get<UnipotentChar>(witness_symbol(Series::OPlus, n, k - 1));
        return make_ortho_symp_datum(FamilyKind::Sp, n, n, 0, even_part.lambda,
                                     zero_rank_symbol(true));
    }
    if (k == 2 * n) return steinberg_symbol(Series::Sp, n);
    return checked_char({FamilyKind::Sp, n},
                        make_symbol(head_then_run(n, k / 2, 1), run_down(k / 2 - 1, 0)));
}

Witness witness_oplus(Int n, Int k)
{
    if (k % 2 != 0) throw std::domain_error("orthogonal theta-ranks are even");
    if (k == 2 * n) return torus_datum(FamilyKind::OPlusEven, n);
    return checked_char({FamilyKind::OPlusEven, n},
                        make_symbol(head_then_run(n, k / 2, 1), run_down(k / 2, 0)));
}

Witness witness_ominus(Int n, Int k)
{
    if (k % 2 != 0) throw std::domain_error("orthogonal theta-ranks are even");
    if (k == 2 * n) return torus_datum(FamilyKind::OMinusEven, n);
    if (k == 0)
        return checked_char({FamilyKind::OMinusEven, n}, make_symbol({n, 0}, {}));
    if (k == 2 * n - 2) return steinberg_symbol(Series::OMinus, n);
    return checked_char({FamilyKind::OMinusEven, n},
                        make_symbol(head_then_run(n - 1, k / 2, 1),
                                    run_down(k / 2 - 2, 0)));
}

Witness witness_oodd(Int n, Int k)
{
    if (k % 2 != 0) throw std::domain_error("orthogonal theta-ranks are even");
    // Transpose of the symplectic witness (Cor. on the sgn/transpose class).
    Witness sp = witness_sp(n, k);
    const auto& c = std::get<UnipotentChar>(sp);
    return checked_char({FamilyKind::OOdd, n}, transpose(c.lambda));
}

Witness witness_unitary(Int n, Int k)
{
    if (n <= 1) {
        if (k != 0) throw std::domain_error("U_0 and U_1 admit only theta-rank 0");
        return checked_char({FamilyKind::U, n},
                            n == 0 ? make_symbol({}, {}) : make_symbol({}, {0}));
    }
    if (k == n) return make_unitary_datum(n, {});
    if (k == n - 1)
        return steinberg_symbol(n % 2 == 0 ? Series::UEven : Series::UOdd, n);
    if ((n + k) % 2 == 0) {
        if (n % 2 == 0)
            return checked_char({FamilyKind::U, n},
                                make_symbol(head_then_run(n / 2, k / 2, 1),
                                            run_down(k / 2, 0)));
        // defect-2 symbol whose same-parity removal lands exactly at k and
        // whose opposite removal lands at n + 1
        std::vector<Int> top_parts;
        if (n - k - 2 > 0) top_parts.push_back((n - k - 2) / 2);
        std::vector<Int> bottom_parts(static_cast<std::size_t>((k - 1) / 2), 1);
        return checked_char({FamilyKind::U, n},
                            upsilon_inverse(Bipartition{Partition(std::move(top_parts)),
                                                        Partition(std::move(bottom_parts))},
                                            2));
    }
    if (n % 2 == 0)
        return checked_char({FamilyKind::U, n},
                            make_symbol(run_down((k - 1) / 2, 0),
                                        head_then_run(n / 2, (k - 1) / 2, 1)));
    return checked_char({FamilyKind::U, n},
                        make_symbol(run_down(k / 2 - 1, 0),
                                    head_then_run((n - 1) / 2, k / 2, 1)));
}

}  // namespace

Witness witness_symbol(Series series, Int n, Int k)
{
    if (n < 0 || k < 0) throw std::domain_error("witness parameters must be non-negative");
    const FamilyKind kind = family_kind_of(series);
    const Int max_k = kind == FamilyKind::U ? (n <= 1 ? 0 : n) : 2 * n;
    if (k > max_k)
        throw std::domain_error("theta-rank " + std::to_string(k)
                                + " is not attained at this rank");
    Witness w = [&] {
        switch (kind) {
            case FamilyKind::Sp: return witness_sp(n, k);
            case FamilyKind::OPlusEven: return witness_oplus(n, k);
            case FamilyKind::OMinusEven: return witness_ominus(n, k);
            case FamilyKind::OOdd: return witness_oodd(n, k);
            case FamilyKind::U: return witness_unitary(n, k);
        }
        throw std::logic_error("unreachable");
    }();
    return checked_witness(std::move(w), k);
}

std::string to_string(Tower tower)
{
    switch (tower) {
        case Tower::OPlusOfSp: return "o+";
        case Tower::OMinusOfSp: return "o-";
        case Tower::SpOfOPlus:
        case Tower::SpOfOMinus:
        case Tower::SpOfOOdd: return "sp";
        case Tower::USameParity: return "same";
        case Tower::UOppositeParity: return "opposite";
    }
    throw std::logic_error("unreachable");
}

Tower parse_tower(FamilyKind kind, std::string_view text)
{
    switch (kind) {
        case FamilyKind::Sp:
            if (text == "o+") return Tower::OPlusOfSp;
            if (text == "o-") return Tower::OMinusOfSp;
            break;
        case FamilyKind::OPlusEven:
            if (text == "sp") return Tower::SpOfOPlus;
            break;
        case FamilyKind::OMinusEven:
            if (text == "sp") return Tower::SpOfOMinus;
            break;
        case FamilyKind::OOdd:
            if (text == "sp") return Tower::SpOfOOdd;
            break;
        case FamilyKind::U:
            if (text == "same") return Tower::USameParity;
            if (text == "opposite") return Tower::UOppositeParity;
            break;
    }
    throw std::invalid_argument("tower '" + std::string(text)
                                + "' does not belong to family " + to_string(kind));
}

}  // namespace theta
