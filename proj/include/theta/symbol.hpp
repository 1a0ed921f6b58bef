#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Exact arithmetic on symbols: ordered pairs of strictly decreasing rows of
// non-negative integers, up to the shift-and-append-zero equivalence.  All
// values are immutable once built and every operation is pure.

namespace theta {

using Int = std::int64_t;

// A strictly decreasing row of non-negative integers (possibly empty).
class BetaSet {
public:
    BetaSet() = default;
    // Throws std::invalid_argument unless entries are strictly decreasing,
    // non-negative, and within the desk-scale limits (entries <= 1e9,
    // length <= 1e6).
    explicit BetaSet(std::vector<Int> entries);
    BetaSet(std::initializer_list<Int> entries)
        : BetaSet(std::vector<Int>(entries))
    {
    }

    const std::vector<Int>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    Int operator[](std::size_t i) const { return entries_[i]; }

    friend bool operator==(const BetaSet&, const BetaSet&) = default;

private:
    std::vector<Int> entries_;
};

// Ordered pair of beta-sets.  defect() is signed; equality is structural,
// use equivalent() for the shift equivalence.
struct Symbol {
    BetaSet top;
    BetaSet bottom;

    friend bool operator==(const Symbol&, const Symbol&) = default;
};

// Weakly decreasing positive parts; trailing zeros are not stored.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<Int> parts);  // throws on invalid shape

    const std::vector<Int>& parts() const { return parts_; }
    std::size_t size() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    Int sum() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend bool operator<(const Partition& a, const Partition& b)
    {
        return a.parts_ < b.parts_;
    }

private:
    std::vector<Int> parts_;
};

struct Bipartition {
    Partition top;
    Partition bottom;

    Int sum() const { return top.sum() + bottom.sum(); }

    friend bool operator==(const Bipartition&, const Bipartition&) = default;
    friend bool operator<(const Bipartition& a, const Bipartition& b)
    {
        if (a.top.parts() != b.top.parts()) return a.top < b.top;
        return a.bottom < b.bottom;
    }
};

// Canonical reduced representative: while both rows contain 0, drop the two
// zeros and decrement every remaining entry.  Idempotent.
Symbol normalize(const Symbol& s);

// One application of the defining shift: both rows +1, append 0 to each.
Symbol expand(const Symbol& s);

// Representative of the class of s with both rows non-empty (the reduced
// form, expanded once if a row is empty).
Symbol both_rows_representative(const Symbol& s);

Int defect(const Symbol& s);   // m1 - m2, signed
Int rank(const Symbol& s);     // sum(entries) - floor(((m1+m2-1)/2)^2)
Int rank_u(const Symbol& s);   // 2|Y(s)| + |def|(|def|+1)/2

Symbol transpose(const Symbol& s);

// Staircase subtraction, rowwise; zero parts are dropped.
Bipartition upsilon(const Symbol& s);

// Inverse of upsilon at a fixed defect: minimal row lengths, zero-pad, add
// staircases.  The result is always reduced.
Symbol upsilon_inverse(const Bipartition& b, Int defect);

bool equivalent(const Symbol& a, const Symbol& b);

// The quadratic defect term of the rank formulas:
//   rank   = |Y| + (d^2-1)/4 (d odd)  or  |Y| + d^2/4 (d even)
//   rank_u = 2|Y| + |d|(|d|+1)/2
Int rank_defect_term(Int defect);
Int rank_u_defect_term(Int defect);

// Text grammar "[a1,a2,...|b1,b2,...]"; empty rows written as nothing;
// whitespace insignificant.  Entries must be strictly decreasing as written.
// Throws std::invalid_argument naming the offending token.
Symbol parse_symbol(std::string_view text);
std::string to_string(const Symbol& s);
std::string to_string(const Partition& p);
std::string to_string(const Bipartition& b);

}  // namespace theta
