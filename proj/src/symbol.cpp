#include "theta/symbol.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace theta {

namespace {

constexpr Int kMaxEntry = 1'000'000'000;
constexpr std::size_t kMaxRow = 1'000'000;

void check_row(const std::vector<Int>& entries)
{
    if (entries.size() > kMaxRow)
        throw std::invalid_argument("beta-set longer than 10^6 entries");
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i] < 0)
            throw std::invalid_argument("beta-set entry is negative");
        if (entries[i] > kMaxEntry)
            throw std::invalid_argument("beta-set entry exceeds 10^9");
        if (i > 0 && entries[i - 1] <= entries[i])
            throw std::invalid_argument(
                "beta-set entries must be strictly decreasing (repeats rejected)");
    }
}

Int row_sum(const BetaSet& r)
{
    return std::accumulate(r.entries().begin(), r.entries().end(), Int{0});
}

}  // namespace

BetaSet::BetaSet(std::vector<Int> entries) : entries_(std::move(entries))
{
    check_row(entries_);
}

Partition::Partition(std::vector<Int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Int Partition::sum() const
{
    return std::accumulate(parts_.begin(), parts_.end(), Int{0});
}

Symbol normalize(const Symbol& s)
{
    std::vector<Int> top = s.top.entries();
    std::vector<Int> bottom = s.bottom.entries();
    // Rows are decreasing, so a 0 can only sit at the back.
    Int shift = 0;
    while (!top.empty() && !bottom.empty() && top.back() == shift
           && bottom.back() == shift) {
        top.pop_back();
        bottom.pop_back();
        ++shift;
    }
    for (Int& e : top) e -= shift;
    for (Int& e : bottom) e -= shift;
    return Symbol{BetaSet(std::move(top)), BetaSet(std::move(bottom))};
}

Symbol expand(const Symbol& s)
{
    std::vector<Int> top, bottom;
    top.reserve(s.top.size() + 1);
    bottom.reserve(s.bottom.size() + 1);
    for (Int e : s.top.entries()) top.push_back(e + 1);
    top.push_back(0);
    for (Int e : s.bottom.entries()) bottom.push_back(e + 1);
    bottom.push_back(0);
    return Symbol{BetaSet(std::move(top)), BetaSet(std::move(bottom))};
}

Symbol both_rows_representative(const Symbol& s)
{
    Symbol r = normalize(s);
    if (r.top.empty() || r.bottom.empty()) r = expand(r);
    return r;
}

Int defect(const Symbol& s)
{
    return static_cast<Int>(s.top.size()) - static_cast<Int>(s.bottom.size());
}

Int rank(const Symbol& s)
{
    const Int m = static_cast<Int>(s.top.size() + s.bottom.size());
    // floor(((m-1)/2)^2) with exact integers: ((m-1)^2) / 4 rounded down.
    const Int q = (m - 1) * (m - 1) / 4;
    return row_sum(s.top) + row_sum(s.bottom) - q;
}

Int rank_defect_term(Int d)
{
    if (d % 2 == 0) return d * d / 4;
    return (d * d - 1) / 4;
}

Int rank_u_defect_term(Int d)
{
    const Int a = d < 0 ? -d : d;
    return a * (a + 1) / 2;
}

Int rank_u(const Symbol& s)
{
    return 2 * upsilon(s).sum() + rank_u_defect_term(defect(s));
}

Symbol transpose(const Symbol& s)
{
    return Symbol{s.bottom, s.top};
}

namespace {

Partition row_upsilon(const BetaSet& r)
{
    const Int m = static_cast<Int>(r.size());
    std::vector<Int> parts;
    for (Int i = 0; i < m; ++i) {
        const Int part = r[static_cast<std::size_t>(i)] - (m - 1 - i);
        if (part > 0) parts.push_back(part);
    }
    return Partition(std::move(parts));
}

BetaSet row_upsilon_inverse(const Partition& p, Int m)
{
    std::vector<Int> entries;
    entries.reserve(static_cast<std::size_t>(m));
    for (Int i = 0; i < m; ++i) {
        const Int part =
            i < static_cast<Int>(p.size()) ? p.parts()[static_cast<std::size_t>(i)] : 0;
        entries.push_back(part + (m - 1 - i));
    }
    return BetaSet(std::move(entries));
}

}  // namespace

Bipartition upsilon(const Symbol& s)
{
    return Bipartition{row_upsilon(s.top), row_upsilon(s.bottom)};
}

Symbol upsilon_inverse(const Bipartition& b, Int d)
{
    const Int lt = static_cast<Int>(b.top.size());
    const Int lb = static_cast<Int>(b.bottom.size());
    // Minimal m1 >= lt, m2 >= lb with m1 - m2 = d.
    Int m2 = std::max<Int>({lb, lt - d, -d, 0});
    Int m1 = m2 + d;
    return Symbol{row_upsilon_inverse(b.top, m1), row_upsilon_inverse(b.bottom, m2)};
}

bool equivalent(const Symbol& a, const Symbol& b)
{
    return normalize(a) == normalize(b);
}

namespace {

std::vector<Int> parse_row(std::string_view text, std::string_view what)
{
    std::vector<Int> entries;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    while (i < text.size()) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw std::invalid_argument("unexpected token '" + std::string(1, text[i])
                                        + "' in " + std::string(what));
        Int value = 0;
        std::size_t digits = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            value = value * 10 + (text[i] - '0');
            if (++digits > 10 || value > kMaxEntry)
                throw std::invalid_argument("entry exceeds 10^9 in " + std::string(what));
            ++i;
        }
        entries.push_back(value);
        skip_ws();
        if (i < text.size()) {
            if (text[i] != ',')
                throw std::invalid_argument("expected ',' in " + std::string(what));
            ++i;
            skip_ws();
            if (i == text.size())
                throw std::invalid_argument("trailing ',' in " + std::string(what));
        }
    }
    return entries;
}

}  // namespace

Symbol parse_symbol(std::string_view text)
{
    std::size_t first = 0, last = text.size();
    while (first < last && std::isspace(static_cast<unsigned char>(text[first]))) ++first;
    while (last > first && std::isspace(static_cast<unsigned char>(text[last - 1]))) --last;
    text = text.substr(first, last - first);
    if (text.size() < 3 || text.front() != '[' || text.back() != ']')
        throw std::invalid_argument("symbol must be of the form [a,...|b,...]");
    text = text.substr(1, text.size() - 2);
    const std::size_t bar = text.find('|');
    if (bar == std::string_view::npos)
        throw std::invalid_argument("symbol is missing the '|' row separator");
    if (text.find('|', bar + 1) != std::string_view::npos)
        throw std::invalid_argument("symbol has more than one '|'");
    return Symbol{BetaSet(parse_row(text.substr(0, bar), "top row")),
                  BetaSet(parse_row(text.substr(bar + 1), "bottom row"))};
}

namespace {

void print_row(std::ostringstream& out, const BetaSet& r)
{
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i > 0) out << ',';
        out << r[i];
    }
}

}  // namespace

std::string to_string(const Symbol& s)
{
    std::ostringstream out;
    out << '[';
    print_row(out, s.top);
    out << '|';
    print_row(out, s.bottom);
    out << ']';
    return out.str();
}

std::string to_string(const Partition& p)
{
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i > 0) out << ',';
        out << p.parts()[i];
    }
    out << ')';
    return out.str();
}

std::string to_string(const Bipartition& b)
{
    return to_string(b.top) + ";" + to_string(b.bottom);
}

}  // namespace theta
