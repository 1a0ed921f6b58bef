// Acceptance suite: one check per criterion, exact integer comparisons,
// one pass/fail line each.  Run with no arguments for all criteria or with
// a criterion number.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "theta/branching.hpp"
#include "theta/correspondence.hpp"
#include "theta/lusztig_datum.hpp"
#include "theta/theta_rank.hpp"
#include "theta/verify.hpp"

using namespace theta;

namespace {

struct Outcome {
    long long cases = 0;
    std::vector<std::string> failures;

    void check(bool ok, const std::string& what)
    {
        ++cases;
        if (!ok && failures.size() < 8) failures.push_back(what);
        if (!ok && failures.size() == 8) failures.push_back("...");
    }
    template <typename A, typename B>
    void equal(const A& expected, const B& got, const std::string& what)
    {
        check(expected == got,
              what + ": expected " + std::to_string(expected) + ", got "
                  + std::to_string(got));
    }
};

World world_of(FamilyKind kind)
{
    return kind == FamilyKind::U ? World::U : World::SpO;
}

std::vector<GroupFamily> families_up_to(Int max_n)
{
    std::vector<GroupFamily> out;
    for (FamilyKind kind : {FamilyKind::Sp, FamilyKind::OPlusEven, FamilyKind::OMinusEven,
                            FamilyKind::OOdd, FamilyKind::U})
        for (Int n = 0; n <= max_n; ++n) out.push_back({kind, n});
    return out;
}

// 1. Steinberg theta-ranks, n = 1..20.
Outcome criterion_steinberg()
{
    Outcome o;
    for (Int n = 1; n <= 20; ++n) {
        o.equal(2 * n, theta_rank(steinberg_symbol(Series::Sp, n)),
                "sp:" + std::to_string(n));
        o.equal(2 * n - 2, theta_rank(steinberg_symbol(Series::OPlus, n)),
                "o+:" + std::to_string(n));
        o.equal(2 * n - 2, theta_rank(steinberg_symbol(Series::OMinus, n)),
                "o-:" + std::to_string(n));
        for (bool sgn : {false, true}) {
            UnipotentChar c = steinberg_symbol(Series::OOdd, n);
            c.sgn = sgn;
            o.equal(2 * n, theta_rank(c), "oodd:" + std::to_string(n));
        }
        o.equal(n - 1,
                theta_rank(steinberg_symbol(n % 2 == 0 ? Series::UEven : Series::UOdd, n)),
                "u:" + std::to_string(n));
    }
    return o;
}

// 2. Cuspidal theta-ranks, d = 0..5.
Outcome criterion_cuspidal()
{
    Outcome o;
    for (Int d = 0; d <= 5; ++d) {
        o.equal(2 * d * d, theta_rank(cuspidal_symbol(Series::Sp, d)),
                "cuspidal sp d=" + std::to_string(d));
        o.equal(2 * d * d, theta_rank(cuspidal_symbol(Series::OOdd, d)),
                "cuspidal oodd d=" + std::to_string(d));
        if (d >= 1) {
            const Series eps = d % 2 == 0 ? Series::OPlus : Series::OMinus;
            o.equal(2 * d * (d - 1), theta_rank(cuspidal_symbol(eps, d)),
                    "cuspidal even orthogonal d=" + std::to_string(d));
        }
        const Int dim = d * (d + 1) / 2;
        o.equal(d * (d - 1) / 2,
                theta_rank(cuspidal_symbol(dim % 2 == 0 ? Series::UEven : Series::UOdd, d)),
                "cuspidal u d=" + std::to_string(d));
    }
    return o;
}

// 3. Parity and range: Sp/O rank <= 7, U dimension <= 10.
Outcome criterion_parity_range()
{
    Outcome o;
    for (const GroupFamily& f : families_up_to(7)) {
        if (f.kind == FamilyKind::U) continue;
        for (const Symbol& s : enumerate_symbols(f)) {
            const Int t = theta_rank_symbol(World::SpO, s);
            o.check(t % 2 == 0, to_string(f) + " " + to_string(s) + " parity");
            o.check(0 <= t && t <= 2 * f.n, to_string(f) + " " + to_string(s) + " range");
        }
    }
    for (Int n = 0; n <= 10; ++n)
        for (const Symbol& s : enumerate_symbols({FamilyKind::U, n})) {
            const Int t = theta_rank_symbol(World::U, s);
            o.check(0 <= t && t <= n, "u:" + std::to_string(n) + " " + to_string(s));
        }
    return o;
}

// 4. Classification: Lemma on maximal theta-rank (rank <= 6) and the
// unitary maximum (1 <= n <= 10).
Outcome criterion_classification()
{
    Outcome o;
    for (Int n = 0; n <= 6; ++n) {
        for (FamilyKind kind : {FamilyKind::Sp, FamilyKind::OOdd}) {
            std::set<std::string> extremal;
            for (const Symbol& s : enumerate_symbols({kind, n}))
                if (theta_rank_symbol(World::SpO, s) == 2 * n)
                    extremal.insert(to_string(s));
            std::set<std::string> expected;
            if (kind == FamilyKind::Sp)
                expected = {to_string(steinberg_symbol(Series::Sp, n).lambda)};
            else
                expected = {n == 0 ? std::string("[|0]")
                                   : to_string(steinberg_symbol(Series::OOdd, n).lambda)};
            o.check(extremal == expected,
                    to_string(kind) + ":" + std::to_string(n) + " extremal set");
        }
        Int oplus_extremal = 0, ominus_extremal = 0;
        for (const Symbol& s : enumerate_symbols({FamilyKind::OPlusEven, n}))
            if (theta_rank_symbol(World::SpO, s) == 2 * n) ++oplus_extremal;
        for (const Symbol& s : enumerate_symbols({FamilyKind::OMinusEven, n}))
            if (theta_rank_symbol(World::SpO, s) == 2 * n) ++ominus_extremal;
        o.equal(n == 0 ? 1 : 0, oplus_extremal, "o+:" + std::to_string(n));
        o.equal(Int{0}, ominus_extremal, "o-:" + std::to_string(n));
    }
    for (Int n = 1; n <= 10; ++n)
        for (const Symbol& s : enumerate_symbols({FamilyKind::U, n}))
            o.check(theta_rank_symbol(World::U, s) != n,
                    "u:" + std::to_string(n) + " " + to_string(s));
    return o;
}

// 5. Existence: admissible k attained (witness validates), inadmissible k
// not attained on the unipotent layer, n <= 8.
Outcome criterion_existence()
{
    Outcome o;
    for (Int n = 0; n <= 8; ++n) {
        const std::vector<std::pair<Series, FamilyKind>> plans{
            {Series::Sp, FamilyKind::Sp},
            {Series::OPlus, FamilyKind::OPlusEven},
            {Series::OMinus, FamilyKind::OMinusEven},
            {Series::OOdd, FamilyKind::OOdd},
            {n % 2 == 0 ? Series::UEven : Series::UOdd, FamilyKind::U}};
        for (const auto& [series, kind] : plans) {
            std::set<Int> admissible;
            if (kind == FamilyKind::U) {
                for (Int k = 0; k <= (n <= 1 ? 0 : n); ++k) admissible.insert(k);
            } else if (kind == FamilyKind::Sp) {
                for (Int k = 0; k <= 2 * n; ++k) admissible.insert(k);
            } else {
                for (Int k = 0; k <= 2 * n; k += 2) admissible.insert(k);
            }
            for (Int k : admissible) {
                try {
                    witness_symbol(series, n, k);  // validates its own theta-rank
                    ++o.cases;
                } catch (const std::exception& e) {
                    o.check(false, to_string(kind) + ":" + std::to_string(n)
                                       + " k=" + std::to_string(k) + ": " + e.what());
                }
            }
            for (Int k = 0; k <= 2 * n + 2; ++k) {
                if (admissible.count(k)) continue;
                bool rejected = false;
                try {
                    witness_symbol(series, n, k);
                } catch (const std::domain_error&) {
                    rejected = true;
                }
                o.check(rejected, to_string(kind) + ":" + std::to_string(n)
                                      + " inadmissible k=" + std::to_string(k));
            }
            // unipotent layer: attained set
            std::set<Int> attained;
            for (const UnipotentChar& c : enumerate_unipotent({kind, n}))
                attained.insert(theta_rank(c));
            std::set<Int> expected;
            switch (kind) {
                case FamilyKind::Sp:
                case FamilyKind::OOdd:
                    for (Int k = 0; k <= 2 * n; k += 2) expected.insert(k);
                    break;
                case FamilyKind::OPlusEven:
                    if (n == 0) expected = {0};
                    else
                        for (Int k = 0; k <= 2 * n - 2; k += 2) expected.insert(k);
                    break;
                case FamilyKind::OMinusEven:
                    if (n > 0)
                        for (Int k = 0; k <= 2 * n - 2; k += 2) expected.insert(k);
                    break;
                case FamilyKind::U:
                    for (Int k = 0; k < std::max<Int>(n, 1); ++k) expected.insert(k);
                    break;
            }
            o.check(attained == expected,
                    to_string(kind) + ":" + std::to_string(n) + " unipotent layer");
        }
    }
    return o;
}

// 6. Pseudo-unipotent formula: odd theta-ranks from eigenvalue -1 data.
Outcome criterion_pseudo_unipotent()
{
    Outcome o;
    for (Int n = 1; n <= 6; ++n)
        for (FamilyKind kind : {FamilyKind::OPlusEven, FamilyKind::OMinusEven})
            for (const Symbol& minus : enumerate_symbols({kind, n})) {
                const OrthoSympDatum d = make_ortho_symp_datum(
                    FamilyKind::Sp, n, n, 0, minus, zero_rank_symbol(true));
                const Int t = theta_rank_so(d);
                const Int expected =
                    std::min(2 * n, theta_rank_symbol(World::SpO, minus) + 1);
                o.equal(expected, t, "pseudo-unipotent over " + to_string(minus));
                if (expected < 2 * n) o.check(t % 2 == 1, to_string(minus) + " odd");
            }
    for (Int n = 1; n <= 20; ++n) {
        const OrthoSympDatum d = make_ortho_symp_datum(
            FamilyKind::Sp, n, n, 0, Symbol{BetaSet({n}), BetaSet({0})},
            zero_rank_symbol(true));
        o.equal(Int{1}, theta_rank_so(d), "degree (q^n+1)/2, n=" + std::to_string(n));
    }
    return o;
}

// 7. Branching laws, rank <= 6.
Outcome criterion_branching()
{
    Outcome o;
    // The {0,2} jump law holds in the symplectic/orthogonal families.  The
    // two unitary towers have opposite parities, so the theta-rank minimum
    // can hop between them: unitary jumps are monotone in {0,1,2} and the
    // odd jump is real (Steinberg U_3 has a successor of theta-rank 3).
    for (const GroupFamily& f : families_up_to(6))
        for (const UnipotentChar& c : enumerate_unipotent(f)) {
            const Int t = theta_rank(c);
            for (const UnipotentChar& s : successors(c)) {
                const Int jump = theta_rank(s) - t;
                if (f.kind == FamilyKind::U)
                    o.check(jump == 0 || jump == 1 || jump == 2,
                            "jump " + to_string(c.lambda) + " -> "
                                + to_string(s.lambda));
                else
                    o.check(jump == 0 || jump == 2,
                            "jump " + to_string(c.lambda) + " -> "
                                + to_string(s.lambda));
            }
            const UnipotentChar best = distinguished_successor(c, minimizing_case(c));
            o.equal(t, theta_rank(best), "distinguished " + to_string(c.lambda));
        }
    const Int step_bound = 3;
    for (const GroupFamily& f : families_up_to(5))
        for (const UnipotentChar& c : enumerate_unipotent(f)) {
            const Int step = f.kind == FamilyKind::U ? 2 : 1;
            for (Int extra = 1; extra <= step_bound; ++extra)
                o.equal(theta_rank(c), min_theta_over_induced(c, f.n + extra * step),
                        "min law " + to_string(c.lambda) + " +" + std::to_string(extra));
        }
    return o;
}

// 8. Tower consistency and the tower-sum bound.
Outcome criterion_towers()
{
    Outcome o;
    for (const GroupFamily& f : families_up_to(6))
        for (const UnipotentChar& c : enumerate_unipotent(f))
            o.equal(theta_rank(c), min_first_occurrence(c),
                    "towers " + to_string(f) + " " + to_string(c.lambda));
    for (Int n = 0; n <= 7; ++n)
        for (const UnipotentChar& c : enumerate_unipotent({FamilyKind::Sp, n})) {
            const Int sum = first_occurrence(c, Tower::OPlusOfSp)
                            + first_occurrence(c, Tower::OMinusOfSp);
            o.check(sum <= 4 * n + 2, "tower sum " + to_string(c.lambda));
        }
    return o;
}

// 9. Underline-theta calibration, rank/dimension <= 5.
Outcome criterion_underline()
{
    Outcome o;
    for (const GroupFamily& f : families_up_to(5)) {
        const World w = world_of(f.kind);
        for (const Symbol& s : enumerate_symbols(f))
            o.equal(theta_rank_symbol(w, s), underline_theta_rank(w, s),
                    "underline rank " + to_string(f) + " " + to_string(s));
    }
    // forward maps have tau = 0 at their minimal admissible target, and
    // every tower first occurrence is realized by the sub-correspondence
    // (the opposite-parity tower of a defect-0 unitary symbol is only
    // dominated; its first occurrence lies outside the sub-relation).
    for (const GroupFamily& f : families_up_to(5)) {
        for (const UnipotentChar& c : enumerate_unipotent(f)) {
            struct TowerCase {
                Tower tower;
                PairCase pc;
                Symbol target;
            };
            std::vector<TowerCase> checks;
            switch (f.kind) {
                case FamilyKind::Sp:
                    checks = {{Tower::OPlusOfSp, PairCase::I, c.lambda},
                              {Tower::OMinusOfSp, PairCase::II, c.lambda}};
                    break;
                case FamilyKind::OPlusEven:
                    checks = {{Tower::SpOfOPlus, PairCase::I, c.lambda}};
                    break;
                case FamilyKind::OMinusEven:
                    checks = {{Tower::SpOfOMinus, PairCase::II, c.lambda}};
                    break;
                case FamilyKind::OOdd:
                    checks = {{Tower::SpOfOOdd, c.sgn ? PairCase::II : PairCase::I,
                               transpose(c.lambda)}};
                    break;
                case FamilyKind::U:
                    checks = {{Tower::USameParity, PairCase::III, c.lambda},
                              {Tower::UOppositeParity, PairCase::IV, c.lambda}};
                    break;
            }
            for (const TowerCase& tc : checks) {
                // tau = 0 at the minimal forward target of this symbol
                const GroupFamily sf = source_family(tc.pc, tc.target);
                const FamilyKind tk = target_kind(tc.pc, sf);
                const Int minimal = underline_theta_minimal_target(tc.pc, tc.target);
                const Int target_param = tk == FamilyKind::U ? minimal : minimal / 2;
                o.equal(Int{0}, underline_theta(tc.pc, tc.target, target_param).tau,
                        "tau at minimal target " + to_string(tc.target));
                // the tower first occurrence is realized in reverse
                const Int fo = first_occurrence(c, tc.tower);
                Int realized = -1;
                const Bipartition img = upsilon(tc.target);
                const Partition& row =
                    (tc.pc == PairCase::I || tc.pc == PairCase::III) ? img.top
                                                                     : img.bottom;
                std::vector<Int> taus{0};
                for (Int part : row.parts()) taus.push_back(part);
                for (Int tau : taus) {
                    if (auto src = underline_theta_preimage(tc.pc, tc.target, tau)) {
                        const GroupFamily source = source_family(tc.pc, *src);
                        const Int dim = source.kind == FamilyKind::U
                                            ? rank_u(*src)
                                            : 2 * rank(*src);
                        realized = realized < 0 ? dim : std::min(realized, dim);
                    }
                }
                if (f.kind == FamilyKind::U && defect(c.lambda) == 0
                    && tc.tower == Tower::UOppositeParity) {
                    o.check(realized >= fo,
                            "underline dominates " + to_string(c.lambda));
                } else {
                    o.equal(fo, realized,
                            "tower occurrence " + to_string(f) + " "
                                + to_string(c.lambda));
                }
            }
        }
    }
    // the cuspidal pair, exactly
    const UnderlineImage img =
        underline_theta(PairCase::I, parse_symbol("[|3,2,1,0]"), 6);
    o.check(to_string(img.lambda) == "[4,3,2,1,0|]" && img.tau == 0,
            "cuspidal O+_8 <-> Sp_12");
    return o;
}

// 10. Structural identities, full enumeration rank <= 6 plus 10^4 random
// symbols with a fixed seed.
Outcome criterion_structural()
{
    Outcome o;
    std::vector<Symbol> pool;
    for (const GroupFamily& f : families_up_to(6))
        for (Symbol& s : enumerate_symbols(f)) pool.push_back(std::move(s));
    std::mt19937 rng(0xC0FFEE);
    std::uniform_int_distribution<Int> row_len(0, 12);
    std::uniform_int_distribution<Int> entry(0, 40);
    auto random_row = [&] {
        std::set<Int, std::greater<>> values;
        const Int len = row_len(rng);
        while (static_cast<Int>(values.size()) < len) values.insert(entry(rng));
        return BetaSet(std::vector<Int>(values.begin(), values.end()));
    };
    for (int i = 0; i < 10000; ++i) pool.push_back(Symbol{random_row(), random_row()});

    auto closed_form = [](const Symbol& s) {
        Int sum2 = 0;
        for (Int e : s.top.entries()) sum2 += 2 * e;
        for (Int e : s.bottom.entries()) sum2 += 2 * e;
        const Int m1 = static_cast<Int>(s.top.size());
        const Int m2 = static_cast<Int>(s.bottom.size());
        const Int d = m1 - m2;
        return sum2 + ((d < 0 ? -d : d) - (m1 + m2) * (m1 + m2 - 2)) / 2;
    };
    for (const Symbol& s : pool) {
        o.equal(upsilon(s).sum() + rank_defect_term(defect(s)), rank(s),
                "rank identity " + to_string(s));
        o.equal(closed_form(s), rank_u(s), "rank_u closed form " + to_string(s));
        o.check(upsilon_inverse(upsilon(s), defect(s)) == normalize(s),
                "upsilon round trip " + to_string(s));
        const Int t = theta_rank_symbol(World::SpO, s);
        Symbol e = s;
        for (int k = 0; k < 3; ++k) {
            e = expand(e);
            o.equal(t, theta_rank_symbol(World::SpO, e),
                    "theta under expansion " + to_string(s));
        }
        o.equal(t, theta_rank_symbol(World::SpO, transpose(s)),
                "theta under transpose " + to_string(s));
        if (in_some_unitary_family(s)) {
            const Int tu = theta_rank_symbol(World::U, s);
            o.equal(tu, theta_rank_symbol(World::U, expand(s)),
                    "unitary theta under expansion " + to_string(s));
        }
    }
    // twist invariance on data built over the enumerated symbols
    for (Int n = 0; n <= 3; ++n)
        for (FamilyKind kind : {FamilyKind::OPlusEven, FamilyKind::OMinusEven})
            for (const Symbol& minus : enumerate_symbols({kind, n}))
                for (FamilyKind family :
                     {FamilyKind::OPlusEven, FamilyKind::OMinusEven}) {
                    const OrthoSympDatum d = make_ortho_symp_datum(
                        family, n + 1, n, 0, minus, zero_rank_symbol(false));
                    const Int t = theta_rank_so(d);
                    o.equal(t, theta_rank_so(twist_sgn(d)), "sgn " + to_string(minus));
                    o.equal(t, theta_rank_so(twist_chi(d)), "chi " + to_string(minus));
                }
    return o;
}

// 11. Counting against the independent oracle, n <= 8.
Outcome criterion_counting()
{
    Outcome o;
    for (const GroupFamily& f : families_up_to(8))
        o.equal(counting_oracle(f), static_cast<Int>(enumerate_symbols(f).size()),
                "count " + to_string(f));
    o.equal(Int{6}, static_cast<Int>(enumerate_symbols({FamilyKind::Sp, 2}).size()),
            "sp:2 spot value");
    return o;
}

struct Criterion {
    int number;
    const char* name;
    double budget_seconds;
    std::function<Outcome()> fn;
};

const std::vector<Criterion>& criteria()
{
    static const std::vector<Criterion> list = {
        {1, "steinberg-theta-ranks", 1.0, criterion_steinberg},
        {2, "cuspidal-theta-ranks", 1.0, criterion_cuspidal},
        {3, "parity-and-range", 5.0, criterion_parity_range},
        {4, "maximal-theta-classification", 5.0, criterion_classification},
        {5, "existence-of-every-rank", 10.0, criterion_existence},
        {6, "pseudo-unipotent-formula", 5.0, criterion_pseudo_unipotent},
        {7, "branching-laws", 30.0, criterion_branching},
        {8, "tower-consistency", 5.0, criterion_towers},
        {9, "underline-theta-calibration", 10.0, criterion_underline},
        {10, "structural-identities", 10.0, criterion_structural},
        {11, "counting", 1.0, criterion_counting},
    };
    return list;
}

bool run_criterion(const Criterion& c)
{
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = c.fn();
    } catch (const std::exception& e) {
        o.check(false, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = seconds <= c.budget_seconds;
    const bool pass = o.failures.empty() && in_budget;
    std::printf("%s criterion-%d %s (%lld checks, %.2fs, budget %.0fs)\n",
                pass ? "PASS" : "FAIL", c.number, c.name, o.cases, seconds,
                c.budget_seconds);
    for (const std::string& f : o.failures) std::printf("  %s\n", f.c_str());
    if (!in_budget) std::printf("  exceeded the runtime budget\n");
    return pass;
}

}  // namespace

int main(int argc, char** argv)
{
    bool all_pass = true;
    if (argc > 1) {
        const int wanted = std::atoi(argv[1]);
        bool found = false;
        for (const Criterion& c : criteria())
            if (c.number == wanted) {
                found = true;
                all_pass = run_criterion(c);
            }
        if (!found) {
            std::fprintf(stderr, "unknown criterion %d\n", wanted);
            return 2;
        }
        return all_pass ? 0 : 1;
    }
    for (const Criterion& c : criteria()) all_pass = run_criterion(c) && all_pass;
    return all_pass ? 0 : 1;
}
