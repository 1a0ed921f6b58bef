#include "theta/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "theta/branching.hpp"
#include "theta/correspondence.hpp"
#include "theta/families.hpp"
#include "theta/lusztig_datum.hpp"
#include "theta/symbol.hpp"
#include "theta/theta_rank.hpp"
#include "theta/verify.hpp"

namespace theta {

namespace {

using Json = nlohmann::ordered_json;

World world_of_kind(FamilyKind kind)
{
    return kind == FamilyKind::U ? World::U : World::SpO;
}

Series series_of(const GroupFamily& f)
{
    switch (f.kind) {
        case FamilyKind::Sp: return Series::Sp;
        case FamilyKind::OPlusEven: return Series::OPlus;
        case FamilyKind::OMinusEven: return Series::OMinus;
        case FamilyKind::OOdd: return Series::OOdd;
        case FamilyKind::U: return f.n % 2 == 0 ? Series::UEven : Series::UOdd;
    }
    throw std::logic_error("unreachable");
}

Json witness_json(const Witness& w)
{
    return std::visit(
        [](const auto& x) -> Json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, UnipotentChar>) {
                Json j;
                j["kind"] = "character";
                j["family"] = to_string(x.family);
                j["symbol"] = to_string(x.lambda);
                if (x.family.kind == FamilyKind::OOdd) j["sgn"] = x.sgn;
                return j;
            } else {
                Json j = Json::parse(datum_to_json(x));
                Json wrapped;
                wrapped["kind"] = "datum";
                wrapped["datum"] = std::move(j);
                return wrapped;
            }
        },
        w);
}

struct Options {
    std::string format = "json";
    bool tsv() const { return format == "tsv"; }
};

void emit_suite(std::ostream& out, const SuiteReport& rep, const Options& opt)
{
    if (opt.tsv()) {
        out << rep.suite << '\t' << rep.max_n << '\t' << rep.cases << '\t'
            << rep.failures.size() << '\t' << (rep.passed() ? "pass" : "fail") << '\n';
        for (const SuiteFailure& f : rep.failures)
            out << "#\t" << f.input << "\texpected " << f.expected << "\tgot " << f.got
                << '\n';
        return;
    }
    Json j;
    j["suite"] = rep.suite;
    j["maxRank"] = rep.max_n;
    j["cases"] = rep.cases;
    j["pass"] = rep.passed();
    Json failures = Json::array();
    for (const SuiteFailure& f : rep.failures)
        failures.push_back(Json{{"input", f.input}, {"expected", f.expected},
                                {"got", f.got}});
    j["failures"] = std::move(failures);
    if (!rep.notes.empty()) j["notes"] = rep.notes;
    j["wallMs"] = static_cast<Int>(rep.wall_ms + 0.5);
    out << j.dump() << '\n';
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"exact theta-rank and first-occurrence combinatorics for "
                 "finite classical groups"};
    app.require_subcommand(1);
    Options opt;

    // ---------------------------------------------------------------- rank
    auto* rank_cmd = app.add_subcommand("rank", "rank, defect and rank_u of a symbol");
    std::string rank_symbol_text;
    rank_cmd->add_option("symbol", rank_symbol_text, "symbol [a,...|b,...]")->required();

    // ----------------------------------------------------------- theta-rank
    auto* theta_cmd =
        app.add_subcommand("theta-rank", "theta-rank of a unipotent symbol");
    std::string theta_world = "spo";
    std::string theta_symbol_text;
    theta_cmd->add_option("--world", theta_world, "spo or u")->required();
    theta_cmd->add_option("symbol", theta_symbol_text, "symbol")->required();

    // --------------------------------------------------- theta-rank-general
    auto* general_cmd = app.add_subcommand(
        "theta-rank-general", "theta-rank of a modified-Lusztig datum (JSON)");
    std::string datum_path;
    general_cmd->add_option("--datum", datum_path, "JSON file or - for stdin")
        ->required();

    // ------------------------------------------------------------ enumerate
    auto* enum_cmd =
        app.add_subcommand("enumerate", "all symbols (or characters) of a family");
    std::string enum_family_text;
    bool enum_with_theta = false;
    bool enum_chars = false;
    enum_cmd->add_option("--family", enum_family_text, "family literal, e.g. sp:2")
        ->required();
    std::string enum_with;
    enum_cmd->add_option("--with", enum_with, "annotate: theta-rank");
    enum_cmd->add_flag("--chars", enum_chars,
                       "list unipotent characters (doubles odd-orthogonal rows)");
    enum_cmd->add_option("--format", opt.format, "json or tsv");

    // ----------------------------------------------------- first-occurrence
    auto* first_cmd = app.add_subcommand(
        "first-occurrence", "dimension of the first theta partner in a tower");
    std::string first_family_text, first_tower_text, first_symbol_text;
    bool first_sgn = false;
    first_cmd->add_option("--family", first_family_text, "family literal")->required();
    first_cmd
        ->add_option("--tower", first_tower_text,
                     "o+ / o- (sp family), sp (orthogonal), same / opposite (u)")
        ->required();
    first_cmd->add_flag("--sgn", first_sgn, "sgn twin (odd orthogonal)");
    first_cmd->add_option("symbol", first_symbol_text, "symbol")->required();

    // ------------------------------------------------------ underline-theta
    auto* under_cmd = app.add_subcommand(
        "underline-theta", "partner symbol under the explicit sub-correspondence");
    std::string under_case_text, under_symbol_text;
    Int under_target = 0;
    under_cmd->add_option("--case", under_case_text, "I, II, III or IV")->required();
    under_cmd
        ->add_option("--target", under_target,
                     "target rank (Sp/O cases) or dimension (unitary cases)")
        ->required();
    under_cmd->add_option("symbol", under_symbol_text, "source symbol")->required();

    // --------------------------------------------------------------- branch
    auto* branch_cmd =
        app.add_subcommand("branch", "parabolic branching with theta-ranks");
    std::string branch_family_text, branch_symbol_text;
    Int branch_steps = 1;
    bool branch_sgn = false;
    branch_cmd->add_option("--family", branch_family_text, "family literal")->required();
    branch_cmd->add_option("--steps", branch_steps, "Witt steps (default 1)");
    branch_cmd->add_flag("--sgn", branch_sgn, "sgn twin (odd orthogonal)");
    branch_cmd->add_option("symbol", branch_symbol_text, "symbol")->required();
    branch_cmd->add_option("--format", opt.format, "json or tsv");

    // -------------------------------------------------------------- witness
    auto* witness_cmd = app.add_subcommand(
        "witness", "a character or datum of the requested theta-rank");
    std::string witness_family_text;
    Int witness_n = -1, witness_k = -1;
    witness_cmd->add_option("--family", witness_family_text,
                            "family kind (sp, o+, o-, oodd, u) or literal with rank")
        ->required();
    witness_cmd->add_option("-n", witness_n, "rank (dimension for u)");
    witness_cmd->add_option("-k", witness_k, "requested theta-rank")->required();

    // --------------------------------------------------------------- verify
    auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
    std::string verify_suite = "all";
    Int verify_max_rank = 6;
    verify_cmd->add_option("--suite", verify_suite, "suite id or all");
    verify_cmd->add_option("--max-rank", verify_max_rank, "enumeration bound");
    verify_cmd->add_option("--format", opt.format, "json or tsv");
    bool verify_list = false;
    verify_cmd->add_flag("--list", verify_list, "list suite ids");

    // ---------------------------------------------------------------- tables
    auto* tables_cmd = app.add_subcommand(
        "tables", "theta-rank / first-occurrence table of a family");
    std::string tables_family_kind;
    Int tables_max_rank = 6;
    tables_cmd->add_option("--family", tables_family_kind, "family kind or literal")
        ->required();
    tables_cmd->add_option("--max-rank", tables_max_rank, "rank bound");
    tables_cmd->add_option("--format", opt.format, "json or tsv");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help() << '\n';
            return 0;
        }
        err << "usage error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (*rank_cmd) {
            const Symbol s = parse_symbol(rank_symbol_text);
            Json j;
            j["rank"] = rank(s);
            j["defect"] = defect(s);
            j["rankU"] = rank_u(s);
            j["upsilon"] = to_string(upsilon(s));
            out << j.dump() << '\n';
        } else if (*theta_cmd) {
            if (theta_world != "spo" && theta_world != "u")
                throw std::invalid_argument("world must be spo or u, got '" + theta_world
                                            + "'");
            const Symbol s = parse_symbol(theta_symbol_text);
            const World w = theta_world == "u" ? World::U : World::SpO;
            const GroupFamily family = w == World::U
                                           ? GroupFamily{FamilyKind::U, rank_u(s)}
                                           : spo_family_of(s);
            if (w == World::U && !in_some_unitary_family(s))
                throw std::domain_error("symbol " + to_string(s)
                                        + " lies in no unitary family");
            Json j;
            j["input"] = to_string(s);
            j["family"] = to_string(family);
            j["theta_rank"] = theta_rank_symbol(w, s);
            out << j.dump() << '\n';
        } else if (*general_cmd) {
            std::string text;
            if (datum_path == "-") {
                std::ostringstream buffer;
                buffer << std::cin.rdbuf();
                text = buffer.str();
            } else {
                std::ifstream file(datum_path);
                if (!file)
                    throw std::invalid_argument("cannot open datum file '" + datum_path
                                                + "'");
                std::ostringstream buffer;
                buffer << file.rdbuf();
                text = buffer.str();
            }
            const auto datum = parse_datum_json(text);
            Json j;
            if (std::holds_alternative<OrthoSympDatum>(datum)) {
                const auto& d = std::get<OrthoSympDatum>(datum);
                j["input"] = Json::parse(datum_to_json(d));
                j["theta_rank"] = theta_rank_so(d);
            } else {
                const auto& d = std::get<UnitaryDatum>(datum);
                j["input"] = Json::parse(datum_to_json(d));
                j["theta_rank"] = theta_rank_u(d);
            }
            out << j.dump() << '\n';
        } else if (*enum_cmd) {
            if (!enum_with.empty() && enum_with != "theta-rank")
                throw std::invalid_argument("--with only supports theta-rank");
            enum_with_theta = enum_with == "theta-rank";
            const GroupFamily family = parse_family(enum_family_text);
            auto emit = [&](const Symbol& s, std::optional<bool> sgn) {
                const Int theta =
                    enum_with_theta
                        ? theta_rank_symbol(world_of_kind(family.kind), s)
                        : 0;
                if (opt.tsv()) {
                    out << to_string(family) << '\t' << to_string(s) << '\t'
                        << defect(s);
                    if (sgn) out << '\t' << (*sgn ? "sgn" : "plain");
                    if (enum_with_theta) out << '\t' << theta;
                    out << '\n';
                    return;
                }
                Json j;
                j["family"] = to_string(family);
                j["symbol"] = to_string(s);
                j["defect"] = defect(s);
                j["upsilon"] = to_string(upsilon(s));
                if (sgn) j["sgn"] = *sgn;
                if (family.kind == FamilyKind::OPlusEven
                    || family.kind == FamilyKind::OMinusEven)
                    j["selfTranspose"] = is_self_transpose(s);
                if (enum_with_theta) j["theta_rank"] = theta;
                out << j.dump() << '\n';
            };
            if (enum_chars) {
                for (const UnipotentChar& c : enumerate_unipotent(family))
                    emit(c.lambda,
                         family.kind == FamilyKind::OOdd ? std::optional<bool>(c.sgn)
                                                         : std::nullopt);
            } else {
                for (const Symbol& s : enumerate_symbols(family))
                    emit(s, std::nullopt);
            }
        } else if (*first_cmd) {
            const GroupFamily family = parse_family(first_family_text);
            const Symbol s = parse_symbol(first_symbol_text);
            if (!member(family, s))
                throw std::domain_error("symbol " + to_string(s) + " is not in "
                                        + to_string(family));
            if (first_sgn && family.kind != FamilyKind::OOdd)
                throw std::domain_error("--sgn applies to odd orthogonal characters");
            const Tower tower = parse_tower(family.kind, first_tower_text);
            const UnipotentChar c{family, s, first_sgn};
            Json j;
            j["input"] = to_string(s);
            j["family"] = to_string(family);
            j["tower"] = to_string(tower);
            if (family.kind == FamilyKind::OOdd) j["sgn"] = first_sgn;
            j["dimension"] = first_occurrence(c, tower);
            out << j.dump() << '\n';
        } else if (*under_cmd) {
            const PairCase pc = parse_pair_case(under_case_text);
            const Symbol s = parse_symbol(under_symbol_text);
            const UnderlineImage img = underline_theta(pc, s, under_target);
            Json j;
            j["lambda"] = to_string(img.lambda);
            j["tau"] = img.tau;
            j["defect"] = img.defect;
            j["target"] = to_string(img.target);
            out << j.dump() << '\n';
        } else if (*branch_cmd) {
            const GroupFamily family = parse_family(branch_family_text);
            const Symbol s = parse_symbol(branch_symbol_text);
            if (!member(family, s))
                throw std::domain_error("symbol " + to_string(s) + " is not in "
                                        + to_string(family));
            if (branch_steps < 0) throw std::domain_error("steps must be >= 0");
            const Int step = family.kind == FamilyKind::U ? 2 : 1;
            const UnipotentChar c{family, s, branch_sgn};
            for (const UnipotentChar& x :
                 induced_set(c, family.n + branch_steps * step)) {
                const Int theta = theta_rank(x);
                if (opt.tsv()) {
                    out << to_string(x.family) << '\t' << to_string(x.lambda) << '\t'
                        << theta << '\n';
                    continue;
                }
                Json j;
                j["family"] = to_string(x.family);
                j["symbol"] = to_string(x.lambda);
                if (family.kind == FamilyKind::OOdd) j["sgn"] = x.sgn;
                j["theta_rank"] = theta;
                out << j.dump() << '\n';
            }
        } else if (*witness_cmd) {
            GroupFamily family{FamilyKind::Sp, 0};
            if (witness_family_text.find(':') != std::string::npos) {
                family = parse_family(witness_family_text);
                if (witness_n >= 0 && witness_n != family.n)
                    throw std::invalid_argument(
                        "-n disagrees with the family literal rank");
            } else {
                if (witness_n < 0)
                    throw std::invalid_argument("-n is required with a bare family kind");
                family = parse_family(witness_family_text + ":"
                                      + std::to_string(witness_n));
            }
            const Witness w = witness_symbol(series_of(family), family.n, witness_k);
            Json j;
            j["family"] = to_string(family);
            j["n"] = family.n;
            j["k"] = witness_k;
            j["witness"] = witness_json(w);
            j["theta_rank"] = witness_k;
            out << j.dump() << '\n';
        } else if (*verify_cmd) {
            if (verify_list) {
                for (const std::string& name : suite_names()) out << name << '\n';
                return 0;
            }
            bool all_pass = true;
            if (verify_suite == "all") {
                for (const SuiteReport& rep : run_all_suites(verify_max_rank)) {
                    all_pass = all_pass && rep.passed();
                    emit_suite(out, rep, opt);
                }
            } else {
                const SuiteReport rep = run_suite(verify_suite, verify_max_rank);
                all_pass = rep.passed();
                emit_suite(out, rep, opt);
            }
            return all_pass ? 0 : 1;
        } else if (*tables_cmd) {
            GroupFamily base{FamilyKind::Sp, 0};
            Int from = 0, to = tables_max_rank;
            if (tables_family_kind.find(':') != std::string::npos) {
                base = parse_family(tables_family_kind);
                from = to = base.n;
            } else {
                base = parse_family(tables_family_kind + ":0");
            }
            for (Int n = from; n <= to; ++n) {
                const GroupFamily family{base.kind, n};
                for (const UnipotentChar& c : enumerate_unipotent(family)) {
                    if (opt.tsv()) {
                        out << to_string(family) << '\t' << to_string(c.lambda) << '\t'
                            << (c.sgn ? "sgn" : "plain") << '\t' << theta_rank(c);
                        for (Tower t : towers_of(family.kind))
                            out << '\t' << to_string(t) << '='
                                << first_occurrence(c, t);
                        out << '\n';
                        continue;
                    }
                    Json j;
                    j["family"] = to_string(family);
                    j["symbol"] = to_string(c.lambda);
                    if (family.kind == FamilyKind::OOdd) j["sgn"] = c.sgn;
                    j["theta_rank"] = theta_rank(c);
                    Json occ;
                    for (Tower t : towers_of(family.kind))
                        occ[to_string(t)] = first_occurrence(c, t);
                    j["first_occurrence"] = std::move(occ);
                    out << j.dump() << '\n';
                }
            }
        }
    } catch (const std::invalid_argument& e) {
        err << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        Json j;
        j["error"] = e.what();
        out << j.dump() << '\n';
        err << "domain error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace theta
