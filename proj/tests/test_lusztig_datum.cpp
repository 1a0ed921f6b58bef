#include <doctest.h>

#include "theta/lusztig_datum.hpp"
#include "theta/theta_rank.hpp"

using namespace theta;

namespace {

Symbol sym(const char* text) { return parse_symbol(text); }

}  // namespace

TEST_CASE("datum invariants")
{
    CHECK_THROWS_AS(make_ortho_symp_datum(FamilyKind::Sp, 2, 2, 1, sym("[2,0|]"),
                                          sym("[1|]")),
                    std::domain_error);  // n- + n+ > n
    CHECK_THROWS_AS(make_ortho_symp_datum(FamilyKind::Sp, 3, 2, 0, sym("[1|]"),
                                          sym("[0|]")),
                    std::domain_error);  // lambda_minus must have even defect
    CHECK_THROWS_AS(make_ortho_symp_datum(FamilyKind::Sp, 3, 2, 1, sym("[2,0|]"),
                                          sym("[1|0]")),
                    std::domain_error);  // lambda_plus must be Sp type
    // rank-0 slots are canonicalized, so the wire form [|] is accepted
    const OrthoSympDatum d =
        make_ortho_symp_datum(FamilyKind::Sp, 3, 3, 0, sym("[3|0]"), sym("[|]"));
    CHECK(d.lambda_plus == sym("[0|]"));
}

TEST_CASE("theta ranks from Prop 0307 data")
{
    for (Int n = 1; n <= 20; ++n) {
        // the two characters of degree (q^n + 1)/2
        const OrthoSympDatum d = make_ortho_symp_datum(
            FamilyKind::Sp, n, n, 0, Symbol{BetaSet({n}), BetaSet({0})},
            zero_rank_symbol(true));
        CHECK(theta_rank_so(d) == 1);
    }
    // reduces to the unipotent Steinberg value
    const UnipotentChar st = steinberg_symbol(Series::Sp, 3);
    const OrthoSympDatum d = make_ortho_symp_datum(FamilyKind::Sp, 3, 0, 3,
                                                   zero_rank_symbol(false), st.lambda);
    CHECK(theta_rank_so(d) == 6);
    // a torus datum of an even orthogonal group
    const OrthoSympDatum torus = make_ortho_symp_datum(
        FamilyKind::OMinusEven, 4, 0, 0, zero_rank_symbol(false), zero_rank_symbol(false));
    CHECK(theta_rank_so(torus) == 8);
}

TEST_CASE("theta ranks from Prop 0311 data")
{
    CHECK(theta_rank_u(make_unitary_datum(5, {})) == 5);
    CHECK(theta_rank_u(make_unitary_datum(3, {{3, sym("[1|1,0]")}})) == 2);
    CHECK(theta_rank_u(make_unitary_datum(
              5, {{2, sym("[0|1]")}, {2, sym("[1|0]")}})) == 3);
    CHECK_THROWS_AS(make_unitary_datum(3, {{4, sym("[2|0]")}}), std::domain_error);
    CHECK_THROWS_AS(make_unitary_datum(3, {{2, sym("[1|1,0]")}}), std::domain_error);
}

TEST_CASE("twists")
{
    const OrthoSympDatum d = make_ortho_symp_datum(
        FamilyKind::OPlusEven, 2, 1, 0, sym("[1|0]"), sym("[|]"));
    const OrthoSympDatum s = twist_sgn(d);
    CHECK(s.lambda_minus == sym("[0|1]"));
    CHECK(twist_sgn(s) == d);
    const OrthoSympDatum x = twist_chi(d);
    CHECK(x.n_minus == 0);
    CHECK(x.n_plus == 1);
    CHECK(twist_chi(x) == d);
    CHECK(theta_rank_so(s) == theta_rank_so(d));
    CHECK(theta_rank_so(x) == theta_rank_so(d));

    const OrthoSympDatum oodd = make_ortho_symp_datum(
        FamilyKind::OOdd, 1, 0, 1, sym("[0|]"), sym("[1|]"), false);
    CHECK(twist_sgn(oodd).sgn == true);
    CHECK(twist_sgn(twist_sgn(oodd)) == oodd);

    const OrthoSympDatum sp = make_ortho_symp_datum(FamilyKind::Sp, 1, 0, 1,
                                                    sym("[|]"), sym("[1|]"));
    CHECK_THROWS_AS(twist_sgn(sp), std::domain_error);
    CHECK_THROWS_AS(twist_chi(sp), std::domain_error);
}

TEST_CASE("embedding unipotent characters")
{
    const UnipotentChar st = steinberg_symbol(Series::Sp, 2);
    const auto d = embed_unipotent(st);
    CHECK(theta_rank_so(std::get<OrthoSympDatum>(d)) == 4);

    const UnipotentChar oodd = steinberg_symbol(Series::OOdd, 2);
    const auto od = std::get<OrthoSympDatum>(embed_unipotent(oodd));
    CHECK(od.lambda_plus == transpose(oodd.lambda));
    CHECK(theta_rank_so(od) == 4);

    const UnipotentChar trivial{{FamilyKind::U, 4}, sym("[2|0]")};
    CHECK(theta_rank_u(std::get<UnitaryDatum>(embed_unipotent(trivial))) == 0);
}

TEST_CASE("datum JSON round trip")
{
    const std::string text =
        R"({"family":"sp","n":3,"nMinus":3,"nPlus":0,"lambdaMinus":"[3|0]","lambdaPlus":"[|]","sgn":false})";
    const auto parsed = parse_datum_json(text);
    const auto& d = std::get<OrthoSympDatum>(parsed);
    CHECK(d.n == 3);
    CHECK(theta_rank_so(d) == 1);
    const auto round = parse_datum_json(datum_to_json(d));
    CHECK(std::get<OrthoSympDatum>(round) == d);

    const std::string utext =
        R"({"family":"u","n":5,"slots":[{"n":2,"lambda":"[0|1]"}],"rest":3})";
    const auto uparsed = parse_datum_json(utext);
    const auto& u = std::get<UnitaryDatum>(uparsed);
    CHECK(u.rest == 3);
    CHECK(theta_rank_u(u) == 4);
    CHECK(std::get<UnitaryDatum>(parse_datum_json(datum_to_json(u))) == u);

    CHECK_THROWS_AS(parse_datum_json("{"), std::invalid_argument);
    CHECK_THROWS_AS(
        parse_datum_json(R"({"family":"u","n":5,"slots":[],"rest":4})"),
        std::domain_error);
}
