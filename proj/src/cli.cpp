#include "ringlex/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <optional>

#include "ringlex/analysis.hpp"
#include "ringlex/errors.hpp"
#include "ringlex/fixtures.hpp"
#include "ringlex/io.hpp"
#include "ringlex/report.hpp"

#ifndef RINGLEX_FIXTURE_DIR
#define RINGLEX_FIXTURE_DIR "data/fixtures"
#endif

namespace ringlex {

std::string default_fixture_dir() { return RINGLEX_FIXTURE_DIR; }

namespace {

using nlohmann::json;

struct Options {
    std::string ring;
    int n = 0;
    std::string basis;
    std::string generators;
    std::string criterion;
    int delta = 0;
    bool have_delta = false;
    std::string out = "table";
    std::uint64_t cap = kDefaultCap;
    std::uint64_t seed = 0;
    bool dual = false, rho = false, gray = false, gilbert = false, prop9 = false;
    std::string table, row, fixtures = default_fixture_dir();
};

void add_source_options(CLI::App* cmd, Options& o, bool allow_generators) {
    cmd->add_option("--ring", o.ring, "z4 or f2u")->check(CLI::IsMember({"z4", "f2u"}));
    cmd->add_option("--n", o.n, "code length")->check(CLI::Range(1, 32));
    cmd->add_option("--basis", o.basis, "basis file, or 'canonical'");
    cmd->add_option("--criterion", o.criterion, "selection property")
        ->check(CLI::IsMember(
            {"min-hamming", "min-lee", "min-euclidean", "self-inner-zero", "euclid-mod8", "lee-even"}));
    cmd->add_option("--delta", o.delta, "weight bound for min-* criteria")->check(CLI::PositiveNumber);
    if (allow_generators) cmd->add_option("--generators", o.generators, "file of generators to analyse");
}

void add_output_options(CLI::App* cmd, Options& o) {
    cmd->add_option("--out", o.out, "json or table")->check(CLI::IsMember({"json", "table"}));
    cmd->add_option("--cap", o.cap, "limit on exhaustive enumerations")->check(CLI::PositiveNumber);
}

void add_analysis_flags(CLI::App* cmd, Options& o) {
    cmd->add_flag("--dual", o.dual, "compute the dual code");
    cmd->add_flag("--rho", o.rho, "compute covering radii");
    cmd->add_flag("--gray", o.gray, "analyse the Gray image");
    cmd->add_flag("--gilbert", o.gilbert, "check the Gilbert bound on the Gray image");
    cmd->add_flag("--prop9", o.prop9, "report the covering-radius bounds (min-lee builds)");
}

Basis resolve_basis(const Options& o) {
    if (o.basis.empty()) throw ParseError("--basis is required");
    if (o.basis == "canonical") {
        if (o.ring.empty() || o.n == 0) throw ParseError("--basis canonical needs --ring and --n");
        return Basis::canonical(ring_by_name(o.ring), o.n);
    }
    Basis b = read_basis_file(o.basis);
    if (!o.ring.empty() && o.ring != b.ring().name())
        throw ParseError("--ring " + o.ring + " disagrees with basis file ring " + b.ring().name());
    if (o.n != 0 && o.n != b.n())
        throw ParseError("--n " + std::to_string(o.n) + " disagrees with basis file n=" + std::to_string(b.n()));
    return b;
}

Criterion resolve_criterion(const Options& o) {
    if (o.criterion.empty()) throw ParseError("--criterion is required");
    return Criterion::parse(o.criterion, o.have_delta ? std::optional<int>(o.delta) : std::nullopt);
}

AnalysisOptions analysis_options(const Options& o) {
    AnalysisOptions a;
    a.dual = o.dual;
    a.rho = o.rho;
    a.gray = o.gray;
    a.gilbert = o.gilbert;
    a.cap = o.cap;
    return a;
}

std::vector<std::string> format_all(const ChainRing& ring, const std::vector<RingVector>& vs) {
    std::vector<std::string> out;
    for (const auto& v : vs) out.push_back(format_vector(ring, v));
    return out;
}

json criterion_json(const Criterion& c) {
    return json{{"name", c.name()}, {"delta", c.delta() ? json(*c.delta()) : json(nullptr)}};
}

struct Built {
    Basis basis;
    Criterion criterion;
    BuildResult build;
};

Built run_build(const Options& o) {
    Basis basis = resolve_basis(o);
    Criterion criterion = resolve_criterion(o);
    BuildOptions bo;
    bo.cap = o.cap;
    BuildResult build = build_lexicode(basis, criterion, bo);
    return Built{std::move(basis), std::move(criterion), std::move(build)};
}

std::optional<RadiusBoundsReport> maybe_radius_bounds(const Options& o, const Built& b) {
    if (!o.prop9) return std::nullopt;
    const auto metric = b.criterion.min_weight_metric();
    if (!metric || *metric != Metric::Lee) throw ParseError("--prop9 needs --criterion min-lee");
    return radius_bounds_report(b.build, *b.criterion.delta(), o.cap);
}

int cmd_build(const Options& o, std::ostream& out) {
    const Built b = run_build(o);
    const CodeReport report = analyze_code(b.build.code, b.build.generator_vectors(), analysis_options(o));
    const auto p9 = maybe_radius_bounds(o, b);
    if (o.out == "json") {
        json j{{"command", "build"},
               {"ring", b.basis.ring().name()},
               {"n", b.basis.n()},
               {"criterion", criterion_json(b.criterion)},
               {"basis", format_all(b.basis.ring(), b.basis.vectors())},
               {"build", to_json(b.build)},
               {"report", to_json(report)},
               {"prop9", p9 ? to_json(*p9) : json(nullptr)}};
        out << j.dump(2) << "\n";
    } else {
        out << build_table(b.basis, b.criterion, b.build, report);
        if (p9) out << "\n" << radius_bounds_table(*p9);
    }
    return kExitOk;
}

// Code from --generators, or from a build when --basis is given.
std::pair<Code, std::vector<RingVector>> resolve_code(const Options& o) {
    if (!o.generators.empty()) {
        if (!o.basis.empty()) throw ParseError("give either --generators or --basis, not both");
        VectorFile f = read_vector_file(o.generators);
        if (f.canonical) f.vectors = Basis::canonical(f.ring, f.n).vectors();
        if (!o.ring.empty() && o.ring != f.ring.name()) throw ParseError("--ring disagrees with generator file");
        Code code = enumerate_code(f.ring, f.n, f.vectors, o.cap);
        return {std::move(code), std::move(f.vectors)};
    }
    Built b = run_build(o);
    auto gens = b.build.generator_vectors();
    return {std::move(b.build.code), std::move(gens)};
}

int cmd_analyze(const Options& o, std::ostream& out) {
    if (o.prop9) {
        if (!o.generators.empty()) throw ParseError("--prop9 needs a build (--basis and --criterion)");
        const Built b = run_build(o);
        const CodeReport report = analyze_code(b.build.code, b.build.generator_vectors(), analysis_options(o));
        const auto p9 = maybe_radius_bounds(o, b);
        if (o.out == "json")
            out << json{{"command", "analyze"}, {"report", to_json(report)}, {"prop9", to_json(*p9)}}.dump(2) << "\n";
        else
            out << report_table(report) << "\n" << radius_bounds_table(*p9);
        return kExitOk;
    }
    const auto [code, gens] = resolve_code(o);
    const CodeReport report = analyze_code(code, gens, analysis_options(o));
    if (o.out == "json") {
        out << json{{"command", "analyze"},
                    {"generators", format_all(code.ring(), gens)},
                    {"report", to_json(report)}}
                   .dump(2)
            << "\n";
    } else {
        out << report_table(report);
    }
    return kExitOk;
}

int cmd_gray(const Options& o, std::ostream& out) {
    const auto [code, gens] = resolve_code(o);
    if (code.is_zero_code()) throw UndefinedDistance("the zero code has no minimum distance");
    const BinaryCode image = gray_image(code);
    GrayReport g;
    g.length = image.length;
    g.size = image.size();
    g.linear = is_binary_linear(image);
    g.min_distance = binary_min_distance(image);
    if (o.rho) g.covering_radius = binary_covering_radius(image, o.cap);
    const GilbertResult gb = gilbert_bound(image.length, image.size(), g.min_distance);
    g.gilbert_met = gb.met;
    g.gilbert_ball = gb.ball;
    if (o.out == "json")
        out << json{{"command", "gray"}, {"generators", format_all(code.ring(), gens)}, {"gray", to_json(g)}}.dump(2)
            << "\n";
    else
        out << gray_table(g);
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const auto tables = load_fixtures(o.fixtures);
    std::vector<FixtureOutcome> outcomes;
    bool table_found = o.table.empty(), row_found = o.row.empty();
    for (const auto& t : tables) {
        if (!o.table.empty() && t.id != o.table) continue;
        table_found = true;
        for (const auto& r : t.rows) {
            if (!o.row.empty() && r.row != o.row) continue;
            row_found = true;
            outcomes.push_back(verify_row(t, r, o.cap));
        }
    }
    if (!table_found) throw ParseError("no fixture table '" + o.table + "' in " + o.fixtures);
    if (!row_found) throw ParseError("no fixture row '" + o.row + "'");
    const auto failed = std::count_if(outcomes.begin(), outcomes.end(), [](const auto& x) { return !x.pass; });
    if (o.out == "json") {
        json rows = json::array();
        for (const auto& x : outcomes) rows.push_back(to_json(x));
        out << json{{"command", "verify-fixtures"},
                    {"rows", rows},
                    {"passed", outcomes.size() - failed},
                    {"failed", failed}}
                   .dump(2)
            << "\n";
    } else {
        out << fixtures_table(outcomes);
    }
    return failed ? kExitFixtureFailed : kExitOk;
}

int cmd_rand_basis(const Options& o, std::ostream& out) {
    if (o.ring.empty() || o.n == 0) throw ParseError("rand-basis needs --ring and --n");
    const Basis b = random_basis(ring_by_name(o.ring), o.n, o.seed);
    if (o.out == "json")
        out << json{{"ring", b.ring().name()}, {"n", b.n()}, {"seed", o.seed},
                    {"basis", format_all(b.ring(), b.vectors())}}
                   .dump(2)
            << "\n";
    else
        out << format_basis_file(b);
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Linear lexicodes over Z4 and F2+uF2", "ringlex"};
    app.require_subcommand(1);
    Options o;

    auto* build = app.add_subcommand("build", "greedy lexicode construction");
    add_source_options(build, o, false);
    add_output_options(build, o);
    add_analysis_flags(build, o);

    auto* analyze = app.add_subcommand("analyze", "analyse a code given by generators or built from a basis");
    add_source_options(analyze, o, true);
    add_output_options(analyze, o);
    add_analysis_flags(analyze, o);

    auto* gray = app.add_subcommand("gray", "binary Gray image of a code");
    add_source_options(gray, o, true);
    add_output_options(gray, o);
    gray->add_flag("--rho", o.rho, "compute the binary covering radius");

    auto* verify = app.add_subcommand("verify-fixtures", "rebuild the bundled tables and compare");
    verify->add_option("--table", o.table, "table id, e.g. 4");
    verify->add_option("--row", o.row, "row id, e.g. 7a");
    verify->add_option("--fixtures", o.fixtures, "fixture directory");
    add_output_options(verify, o);

    auto* rand = app.add_subcommand("rand-basis", "seeded random basis of R^n");
    rand->add_option("--ring", o.ring, "z4 or f2u")->required()->check(CLI::IsMember({"z4", "f2u"}));
    rand->add_option("--n", o.n, "length")->required()->check(CLI::Range(1, 32));
    rand->add_option("--seed", o.seed, "RNG seed")->required();
    rand->add_option("--out", o.out, "json or table (basis file)")->check(CLI::IsMember({"json", "table"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitParse;
    }
    for (auto* cmd : {build, analyze, gray})
        if (cmd->parsed() && cmd->count("--delta")) o.have_delta = true;

    try {
        if (build->parsed()) return cmd_build(o, out);
        if (analyze->parsed()) return cmd_analyze(o, out);
        if (gray->parsed()) return cmd_gray(o, out);
        if (verify->parsed()) return cmd_verify(o, out);
        if (rand->parsed()) return cmd_rand_basis(o, out);
    } catch (const InvalidBasis& e) {
        err << "error: invalid basis: " << e.what() << "\n";
        return kExitInvalidBasis;
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const UndefinedDistance& e) {
        err << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const NonMultiplicative& e) {
        err << "error: " << e.what() << "\n";
        return kExitNonMultiplicative;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitParse;
}

}  // namespace ringlex
