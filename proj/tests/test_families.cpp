#include <doctest.h>

#include <set>

#include "theta/families.hpp"

using namespace theta;

namespace {

Symbol sym(const char* text) { return parse_symbol(text); }

std::set<std::string> names(const std::vector<Symbol>& v)
{
    std::set<std::string> out;
    for (const Symbol& s : v) out.insert(to_string(s));
    return out;
}

}  // namespace

TEST_CASE("family literals")
{
    CHECK(parse_family("sp:2") == GroupFamily{FamilyKind::Sp, 2});
    CHECK(parse_family("o+:4") == GroupFamily{FamilyKind::OPlusEven, 4});
    CHECK(parse_family("o-:3") == GroupFamily{FamilyKind::OMinusEven, 3});
    CHECK(parse_family("oodd:2") == GroupFamily{FamilyKind::OOdd, 2});
    CHECK(parse_family("u:5") == GroupFamily{FamilyKind::U, 5});
    CHECK(to_string(parse_family("o-:3")) == "o-:3");
    CHECK_THROWS_AS(parse_family("sp"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("x:1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("sp:-1"), std::invalid_argument);
}

TEST_CASE("membership")
{
    CHECK(member({FamilyKind::Sp, 2}, sym("[2,1,0|2,1]")));
    CHECK(member({FamilyKind::U, 1}, sym("[|0]")));
    CHECK(!member({FamilyKind::U, 1}, sym("[0|]")));  // defect +1 is odd positive
    CHECK(member({FamilyKind::OPlusEven, 4}, sym("[|3,2,1,0]")));
    CHECK(!member({FamilyKind::OPlusEven, 4}, sym("[2,1,0|2,1]")));
    CHECK(member({FamilyKind::OOdd, 2}, sym("[2,1,0|]")));
}

TEST_CASE("witt dimensions")
{
    CHECK(dimension_of(Series::Sp, 3) == 6);
    CHECK(dimension_of(Series::OPlus, 3) == 6);
    CHECK(dimension_of(Series::OMinus, 3) == 8);
    CHECK(dimension_of(Series::OOdd, 3) == 7);
    CHECK(dimension_of(Series::UEven, 3) == 6);
    CHECK(dimension_of(Series::UOdd, 3) == 7);
}

TEST_CASE("witt index to family")
{
    // the O- tower member at index 0 is the group O-_2, symbol rank 1
    const GroupFamily f = family_at_witt_index(Series::OMinus, 0);
    CHECK(f == GroupFamily{FamilyKind::OMinusEven, 1});
    CHECK(enumerate_unipotent(f).size() == 2);
    CHECK(family_at_witt_index(Series::Sp, 3) == GroupFamily{FamilyKind::Sp, 3});
    CHECK(family_at_witt_index(Series::UOdd, 2) == GroupFamily{FamilyKind::U, 5});
    CHECK_THROWS_AS(family_at_witt_index(Series::Sp, -1), std::domain_error);
}

TEST_CASE("enumerate sp:2")
{
    const auto symbols = enumerate_symbols({FamilyKind::Sp, 2});
    CHECK(symbols.size() == 6);  // p2(2) at defect 1 plus p2(0) at defect -3
    for (const Symbol& s : symbols) CHECK(member({FamilyKind::Sp, 2}, s));
}

TEST_CASE("enumerate o+:1")
{
    CHECK(names(enumerate_symbols({FamilyKind::OPlusEven, 1}))
          == std::set<std::string>{"[1|0]", "[0|1]"});
}

TEST_CASE("enumerate u:3")
{
    // the reduced class of [0|2,0] is [|1]
    CHECK(names(enumerate_symbols({FamilyKind::U, 3}))
          == std::set<std::string>{"[1,0|]", "[1|1,0]", "[|1]"});
}

TEST_CASE("enumerate characters")
{
    CHECK(enumerate_unipotent({FamilyKind::OOdd, 1}).size() == 4);
    CHECK(enumerate_unipotent({FamilyKind::Sp, 0}).size() == 1);
    CHECK(enumerate_unipotent({FamilyKind::OMinusEven, 1}).size() == 2);
}

TEST_CASE("enumeration is deterministic and reduced")
{
    const auto a = enumerate_symbols({FamilyKind::OMinusEven, 4});
    const auto b = enumerate_symbols({FamilyKind::OMinusEven, 4});
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i] == b[i]);
        CHECK(a[i] == normalize(a[i]));
    }
}

TEST_CASE("enumeration ceiling")
{
    CHECK_THROWS_AS(enumerate_symbols({FamilyKind::Sp, 31}), std::domain_error);
}

TEST_CASE("bipartition counts")
{
    CHECK(bipartitions_of(0).size() == 1);
    CHECK(bipartitions_of(1).size() == 2);
    CHECK(bipartitions_of(2).size() == 5);
    CHECK(bipartitions_of(3).size() == 10);
    CHECK(bipartitions_of(7).size() == 110);
}
