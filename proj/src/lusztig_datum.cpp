#include "theta/lusztig_datum.hpp"

#include <algorithm>

#include <json.hpp>

#include "theta/theta_rank.hpp"

namespace theta {

namespace {

using Json = nlohmann::ordered_json;

bool is_sp_type(Int d) { return ((d % 4) + 4) % 4 == 1; }
bool is_even_defect(Int d) { return d % 2 == 0; }

// A rank-0 slot carries no information; accept any rank-0 symbol and
// canonicalize it to the defect the slot type requires.
Symbol canonicalize_slot(Symbol s, Int expected_rank, bool sp_type, const char* what)
{
    if (rank(s) != expected_rank)
        throw std::domain_error(std::string(what) + " has rank "
                                + std::to_string(rank(s)) + ", expected "
                                + std::to_string(expected_rank));
    // A rank-0 symbol carries no partition data; canonicalize its defect.
    if (expected_rank == 0) return zero_rank_symbol(sp_type);
    const Int d = defect(s);
    const bool ok = sp_type ? is_sp_type(d) : is_even_defect(d);
    if (!ok)
        throw std::domain_error(std::string(what) + " has defect "
                                + std::to_string(d) + ", wrong type for this slot");
    return s;
}

}  // namespace

Symbol zero_rank_symbol(bool sp_type)
{
    if (sp_type) return Symbol{BetaSet(std::vector<Int>{0}), BetaSet{}};
    return Symbol{};
}

OrthoSympDatum make_ortho_symp_datum(FamilyKind family, Int n, Int n_minus, Int n_plus,
                                     Symbol lambda_minus, Symbol lambda_plus, bool sgn)
{
    if (family == FamilyKind::U)
        throw std::domain_error("unitary data use make_unitary_datum");
    if (n_minus < 0 || n_plus < 0 || n_minus + n_plus > n)
        throw std::domain_error("need n_minus + n_plus <= n with both non-negative");
    if (sgn && family != FamilyKind::OOdd)
        throw std::domain_error("sgn flag is meaningful for odd orthogonal data only");

    const bool minus_sp = family == FamilyKind::OOdd;
    const bool plus_sp = family == FamilyKind::Sp || family == FamilyKind::OOdd;
    lambda_minus = canonicalize_slot(std::move(lambda_minus), n_minus, minus_sp,
                                     "lambda_minus");
    lambda_plus = canonicalize_slot(std::move(lambda_plus), n_plus, plus_sp,
                                    "lambda_plus");
    return OrthoSympDatum{family, n, n_minus, n_plus, std::move(lambda_minus),
                          std::move(lambda_plus), sgn};
}

UnitaryDatum make_unitary_datum(Int n, std::vector<UnitaryDatum::Slot> slots)
{
    if (n < 0) throw std::domain_error("unitary datum dimension is negative");
    Int used = 0;
    for (const auto& slot : slots) {
        if (slot.n <= 0)
            throw std::domain_error("explicit unitary slots must have positive dimension");
        if (!member(GroupFamily{FamilyKind::U, slot.n}, slot.lambda))
            throw std::domain_error("slot symbol " + to_string(slot.lambda)
                                    + " is not in S_{U_" + std::to_string(slot.n) + "}");
        used += slot.n;
    }
    if (used > n) throw std::domain_error("unitary slots exceed the dimension");
    return UnitaryDatum{n, std::move(slots), n - used};
}

Int theta_rank_so(const OrthoSympDatum& d)
{
    const Int plus_term =
        2 * d.n - 2 * d.n_plus + theta_rank_symbol(World::SpO, d.lambda_plus);
    const Int minus_extra = d.family == FamilyKind::Sp ? 1 : 0;
    const Int minus_term =
        2 * d.n - 2 * d.n_minus + theta_rank_symbol(World::SpO, d.lambda_minus)
        + minus_extra;
    return std::min(plus_term, minus_term);
}

Int theta_rank_u(const UnitaryDatum& d)
{
    Int best = d.n;  // the implicit zero slots (q+1 >= 3 guarantees one)
    for (const auto& slot : d.slots)
        best = std::min(best, d.n - slot.n + theta_rank_symbol(World::U, slot.lambda));
    return best;
}

OrthoSympDatum twist_sgn(const OrthoSympDatum& d)
{
    switch (d.family) {
        case FamilyKind::Sp:
            throw std::domain_error("sgn twist is undefined for symplectic data");
        case FamilyKind::OOdd: {
            OrthoSympDatum out = d;
            out.sgn = !out.sgn;
            return out;
        }
        default: {
            OrthoSympDatum out = d;
            out.lambda_minus = transpose(d.lambda_minus);
            out.lambda_plus = transpose(d.lambda_plus);
            return out;
        }
    }
}

OrthoSympDatum twist_chi(const OrthoSympDatum& d)
{
    if (d.family == FamilyKind::Sp)
        throw std::domain_error("chi twist is defined for orthogonal data only");
    OrthoSympDatum out = d;
    std::swap(out.n_minus, out.n_plus);
    std::swap(out.lambda_minus, out.lambda_plus);
    return out;
}

std::variant<OrthoSympDatum, UnitaryDatum> embed_unipotent(const UnipotentChar& c)
{
    const Int n = c.family.n;
    switch (c.family.kind) {
        case FamilyKind::U: {
            if (n == 0) return make_unitary_datum(0, {});
            return make_unitary_datum(n, {{n, c.lambda}});
        }
        case FamilyKind::OOdd:
            return make_ortho_symp_datum(c.family.kind, n, 0, n, zero_rank_symbol(true),
                                         transpose(c.lambda), c.sgn);
        case FamilyKind::Sp:
            return make_ortho_symp_datum(c.family.kind, n, 0, n, zero_rank_symbol(false),
                                         c.lambda);
        default:
            return make_ortho_symp_datum(c.family.kind, n, 0, n, zero_rank_symbol(false),
                                         c.lambda);
    }
}

namespace {

FamilyKind parse_family_kind(const std::string& s)
{
    if (s == "sp") return FamilyKind::Sp;
    if (s == "o+") return FamilyKind::OPlusEven;
    if (s == "o-") return FamilyKind::OMinusEven;
    if (s == "oodd") return FamilyKind::OOdd;
    if (s == "u") return FamilyKind::U;
    throw std::invalid_argument("unknown datum family '" + s + "'");
}

}  // namespace

std::variant<OrthoSympDatum, UnitaryDatum> parse_datum_json(const std::string& text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument(std::string("datum is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("family"))
        throw std::invalid_argument("datum must be a JSON object with a \"family\" key");
    const FamilyKind kind = parse_family_kind(j.at("family").get<std::string>());
    if (kind == FamilyKind::U) {
        std::vector<UnitaryDatum::Slot> slots;
        if (j.contains("slots"))
            for (const auto& slot : j.at("slots"))
                slots.push_back({slot.at("n").get<Int>(),
                                 parse_symbol(slot.at("lambda").get<std::string>())});
        UnitaryDatum d = make_unitary_datum(j.at("n").get<Int>(), std::move(slots));
        if (j.contains("rest") && j.at("rest").get<Int>() != d.rest)
            throw std::domain_error("datum \"rest\" disagrees with n - sum(slots)");
        return d;
    }
    return make_ortho_symp_datum(
        kind, j.at("n").get<Int>(), j.at("nMinus").get<Int>(), j.at("nPlus").get<Int>(),
        parse_symbol(j.at("lambdaMinus").get<std::string>()),
        parse_symbol(j.at("lambdaPlus").get<std::string>()),
        j.value("sgn", false));
}

std::string datum_to_json(const OrthoSympDatum& d)
{
    Json j;
    j["family"] = to_string(d.family);
    j["n"] = d.n;
    j["nMinus"] = d.n_minus;
    j["nPlus"] = d.n_plus;
    j["lambdaMinus"] = to_string(d.lambda_minus);
    j["lambdaPlus"] = to_string(d.lambda_plus);
    j["sgn"] = d.sgn;
    return j.dump();
}

std::string datum_to_json(const UnitaryDatum& d)
{
    Json j;
    j["family"] = "u";
    j["n"] = d.n;
    Json slots = Json::array();
    for (const auto& slot : d.slots)
        slots.push_back(Json{{"n", slot.n}, {"lambda", to_string(slot.lambda)}});
    j["slots"] = std::move(slots);
    j["rest"] = d.rest;
    return j.dump();
}

}  // namespace theta
