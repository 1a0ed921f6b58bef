#include "theta/branching.hpp"

#include <algorithm>
#include <set>

#include "theta/theta_rank.hpp"

namespace theta {

namespace {

// One-box extensions of a partition: bump any row with room, or append 1.
std::vector<Partition> add_one_box(const Partition& p)
{
    std::vector<Partition> out;
    const auto& parts = p.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i == 0 || parts[i - 1] > parts[i]) {
            std::vector<Int> grown = parts;
            ++grown[i];
            out.emplace_back(std::move(grown));
        }
    }
    std::vector<Int> appended = parts;
    appended.push_back(1);
    out.emplace_back(std::move(appended));
    return out;
}

Int witt_step(FamilyKind kind) { return kind == FamilyKind::U ? 2 : 1; }

}  // namespace

std::vector<UnipotentChar> successors(const UnipotentChar& c)
{
    const Int d = defect(c.lambda);
    const Bipartition b = upsilon(c.lambda);
    const GroupFamily next{c.family.kind, c.family.n + witt_step(c.family.kind)};
    std::vector<UnipotentChar> out;
    for (const Partition& top : add_one_box(b.top))
        out.push_back({next, upsilon_inverse({top, b.bottom}, d), c.sgn});
    for (const Partition& bottom : add_one_box(b.bottom))
        out.push_back({next, upsilon_inverse({b.top, bottom}, d), c.sgn});
    return out;
}

std::vector<UnipotentChar> induced_set(const UnipotentChar& c, Int m)
{
    const Int step = witt_step(c.family.kind);
    if (m < c.family.n) throw std::domain_error("target rank below the character's rank");
    if ((m - c.family.n) % step != 0)
        throw std::domain_error("target is not on the family's Witt ladder");

    std::vector<UnipotentChar> frontier{c};
    for (Int r = c.family.n; r < m; r += step) {
        std::set<std::pair<std::string, bool>> seen;
        std::vector<UnipotentChar> next;
        for (const UnipotentChar& cur : frontier)
            for (UnipotentChar& s : successors(cur))
                if (seen.emplace(to_string(s.lambda), s.sgn).second)
                    next.push_back(std::move(s));
        frontier = std::move(next);
    }
    return frontier;
}

Int min_theta_over_induced(const UnipotentChar& c, Int m)
{
    Int best = -1;
    for (const UnipotentChar& x : induced_set(c, m)) {
        const Int t = theta_rank(x);
        best = best < 0 ? t : std::min(best, t);
    }
    return best;
}

UnipotentChar distinguished_successor(const UnipotentChar& c, SuccessorCase which)
{
    const Symbol rep = both_rows_representative(c.lambda);
    std::vector<Int> top = rep.top.entries();
    std::vector<Int> bottom = rep.bottom.entries();
    if (which == SuccessorCase::A) ++top[0];
    else ++bottom[0];
    const GroupFamily next{c.family.kind, c.family.n + witt_step(c.family.kind)};
    return {next, normalize(Symbol{BetaSet(std::move(top)), BetaSet(std::move(bottom))}),
            c.sgn};
}

SuccessorCase minimizing_case(const UnipotentChar& c)
{
    // Bumping a1 preserves the drop-a1 removal value (and, at defect 0 in
    // the unitary world, the same-parity peel); bumping b1 preserves the
    // drop-b1 value.  The theta-rank survives along the row achieving it.
    const Symbol rep = both_rows_representative(c.lambda);
    const Symbol r1 = drop_top_first(rep);
    const Symbol r2 = drop_bottom_first(rep);
    if (c.family.kind == FamilyKind::U) {
        Int a_side = rank_u(r1);
        if (defect(c.lambda) == 0) {
            const Bipartition b = upsilon(c.lambda);
            const Int first = b.top.empty() ? 0 : b.top.parts()[0];
            a_side = std::min(a_side, 2 * (b.sum() - first));
        }
        return a_side <= rank_u(r2) ? SuccessorCase::A : SuccessorCase::B;
    }
    return rank(r1) <= rank(r2) ? SuccessorCase::A : SuccessorCase::B;
}

std::vector<OrthoSympDatum> datum_successors(const OrthoSympDatum& d)
{
    UnipotentChar plus{spo_family_of(d.lambda_plus), d.lambda_plus, false};
    std::vector<OrthoSympDatum> out;
    for (const UnipotentChar& s : successors(plus))
        out.push_back(make_ortho_symp_datum(d.family, d.n + 1, d.n_minus, d.n_plus + 1,
                                            d.lambda_minus, s.lambda, d.sgn));
    return out;
}

std::vector<UnitaryDatum> datum_successors(const UnitaryDatum& d)
{
    UnitaryDatum::Slot first =
        d.slots.empty() ? UnitaryDatum::Slot{0, Symbol{}} : d.slots[0];
    UnipotentChar slot_char{GroupFamily{FamilyKind::U, first.n}, first.lambda, false};
    std::vector<UnitaryDatum> out;
    for (const UnipotentChar& s : successors(slot_char)) {
        std::vector<UnitaryDatum::Slot> slots = d.slots;
        if (slots.empty()) slots.push_back({first.n + 2, s.lambda});
        else slots[0] = {first.n + 2, s.lambda};
        out.push_back(make_unitary_datum(d.n + 2, std::move(slots)));
    }
    return out;
}

}  // namespace theta
