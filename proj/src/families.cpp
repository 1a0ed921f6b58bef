#include "theta/families.hpp"

#include <algorithm>
#include <cstdlib>

namespace theta {

Int dimension_of(Series series, Int n)
{
    switch (series) {
        case Series::Sp: return 2 * n;
        case Series::OPlus: return 2 * n;
        case Series::OMinus: return 2 * n + 2;
        case Series::OOdd: return 2 * n + 1;
        case Series::UEven: return 2 * n;
        case Series::UOdd: return 2 * n + 1;
    }
    throw std::logic_error("unreachable");
}

FamilyKind family_kind_of(Series series)
{
    switch (series) {
        case Series::Sp: return FamilyKind::Sp;
        case Series::OPlus: return FamilyKind::OPlusEven;
        case Series::OMinus: return FamilyKind::OMinusEven;
        case Series::OOdd: return FamilyKind::OOdd;
        case Series::UEven:
        case Series::UOdd: return FamilyKind::U;
    }
    throw std::logic_error("unreachable");
}

GroupFamily family_at_witt_index(Series series, Int witt_index)
{
    if (witt_index < 0) throw std::domain_error("Witt index is negative");
    switch (series) {
        case Series::OMinus: return {FamilyKind::OMinusEven, witt_index + 1};
        case Series::UEven:
        case Series::UOdd: return {FamilyKind::U, dimension_of(series, witt_index)};
        default: return {family_kind_of(series), witt_index};
    }
}

namespace {

Int mod4(Int d)
{
    Int r = d % 4;
    return r < 0 ? r + 4 : r;
}

}  // namespace

bool defect_admissible(FamilyKind kind, Int d)
{
    switch (kind) {
        case FamilyKind::Sp: return mod4(d) == 1;
        case FamilyKind::OPlusEven: return mod4(d) == 0;
        case FamilyKind::OMinusEven: return mod4(d) == 2;
        case FamilyKind::OOdd: return mod4(d) == 3;
        case FamilyKind::U: return (d % 2 == 0 && d >= 0) || (d % 2 != 0 && d < 0);
    }
    throw std::logic_error("unreachable");
}

bool member(const GroupFamily& family, const Symbol& s)
{
    if (!defect_admissible(family.kind, defect(s))) return false;
    const Int size = family.kind == FamilyKind::U ? rank_u(s) : rank(s);
    return size == family.n;
}

GroupFamily spo_family_of(const Symbol& s)
{
    const Int n = rank(s);
    switch (mod4(defect(s))) {
        case 0: return GroupFamily{FamilyKind::OPlusEven, n};
        case 1: return GroupFamily{FamilyKind::Sp, n};
        case 2: return GroupFamily{FamilyKind::OMinusEven, n};
        default: return GroupFamily{FamilyKind::OOdd, n};
    }
}

bool in_some_unitary_family(const Symbol& s)
{
    return defect_admissible(FamilyKind::U, defect(s));
}

bool is_self_transpose(const Symbol& s)
{
    return equivalent(s, transpose(s));
}

Int enumeration_ceiling()
{
    static const Int ceiling = [] {
        if (const char* env = std::getenv("THETA_MAX_RANK")) {
            const long v = std::strtol(env, nullptr, 10);
            if (v > 0) return static_cast<Int>(v);
        }
        return Int{30};
    }();
    return ceiling;
}

std::vector<Int> admissible_defects(const GroupFamily& family)
{
    std::vector<Int> defects;
    auto term = [&](Int d) {
        return family.kind == FamilyKind::U ? rank_u_defect_term(d) : rank_defect_term(d);
    };
    for (Int a = 0; term(a) <= family.n || term(-a) <= family.n; ++a) {
        if (defect_admissible(family.kind, a) && term(a) <= family.n)
            defects.push_back(a);
        if (a > 0 && defect_admissible(family.kind, -a) && term(-a) <= family.n)
            defects.push_back(-a);
    }
    return defects;
}

std::vector<Partition> partitions_of(Int m)
{
    std::vector<Partition> out;
    std::vector<Int> current;
    // Descending lexicographic: largest first part first.
    auto rec = [&](auto&& self, Int remaining, Int cap) -> void {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (Int part = std::min(cap, remaining); part >= 1; --part) {
            current.push_back(part);
            self(self, remaining - part, part);
            current.pop_back();
        }
    };
    rec(rec, m, m);
    return out;
}

std::vector<Bipartition> bipartitions_of(Int m)
{
    std::vector<Bipartition> out;
    for (Int k = m; k >= 0; --k) {
        for (const Partition& top : partitions_of(k))
            for (const Partition& bottom : partitions_of(m - k))
                out.push_back(Bipartition{top, bottom});
    }
    return out;
}

std::vector<Symbol> enumerate_symbols(const GroupFamily& family)
{
    if (family.n > enumeration_ceiling())
        throw std::domain_error("family rank exceeds the enumeration ceiling");
    if (family.n < 0) throw std::domain_error("family rank is negative");
    std::vector<Symbol> out;
    for (Int d : admissible_defects(family)) {
        Int slack = family.n
                    - (family.kind == FamilyKind::U ? rank_u_defect_term(d)
                                                    : rank_defect_term(d));
        if (family.kind == FamilyKind::U) {
            if (slack % 2 != 0) continue;  // dimension parity of the stratum
            slack /= 2;
        }
        for (const Bipartition& b : bipartitions_of(slack))
            out.push_back(upsilon_inverse(b, d));
    }
    return out;
}

std::vector<UnipotentChar> enumerate_unipotent(const GroupFamily& family)
{
    std::vector<UnipotentChar> out;
    for (const Symbol& s : enumerate_symbols(family)) {
        out.push_back(UnipotentChar{family, s, false});
        if (family.kind == FamilyKind::OOdd)
            out.push_back(UnipotentChar{family, s, true});
    }
    return out;
}

GroupFamily parse_family(std::string_view text)
{
    const std::size_t colon = text.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("family literal must look like sp:2, o+:4, u:5");
    const std::string_view name = text.substr(0, colon);
    const std::string_view num = text.substr(colon + 1);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string_view::npos)
        throw std::invalid_argument("family rank must be a non-negative integer, got '"
                                    + std::string(num) + "'");
    Int n = 0;
    for (char c : num) {
        n = n * 10 + (c - '0');
        if (n > 1'000'000'000)
            throw std::invalid_argument("family rank exceeds 10^9");
    }
    FamilyKind kind;
    if (name == "sp") kind = FamilyKind::Sp;
    else if (name == "o+") kind = FamilyKind::OPlusEven;
    else if (name == "o-") kind = FamilyKind::OMinusEven;
    else if (name == "oodd") kind = FamilyKind::OOdd;
    else if (name == "u") kind = FamilyKind::U;
    else
        throw std::invalid_argument("unknown family '" + std::string(name)
                                    + "' (expected sp, o+, o-, oodd, u)");
    return GroupFamily{kind, n};
}

std::string to_string(FamilyKind kind)
{
    switch (kind) {
        case FamilyKind::Sp: return "sp";
        case FamilyKind::OPlusEven: return "o+";
        case FamilyKind::OMinusEven: return "o-";
        case FamilyKind::OOdd: return "oodd";
        case FamilyKind::U: return "u";
    }
    throw std::logic_error("unreachable");
}

std::string to_string(const GroupFamily& family)
{
    return to_string(family.kind) + ":" + std::to_string(family.n);
}

}  // namespace theta
