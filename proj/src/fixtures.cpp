#include "ringlex/fixtures.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "ringlex/analysis.hpp"
#include "ringlex/errors.hpp"
#include "ringlex/standard_form.hpp"

namespace ringlex {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_words(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

bool parse_bool(const std::string& v, const std::string& where) {
    if (v == "true") return true;
    if (v == "false") return false;
    throw ParseError(where + ": expected true or false, got '" + v + "'");
}

int parse_int(const std::string& v, const std::string& where) {
    if (v.empty() || !std::all_of(v.begin(), v.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ParseError(where + ": expected a non-negative integer, got '" + v + "'");
    return std::stoi(v);
}

// Parses each text vector; nullopt when any is malformed or of the wrong length.
std::optional<std::vector<RingVector>> parse_all(const ChainRing& ring, int n, const std::vector<std::string>& texts,
                                                 const std::string& what, std::vector<std::string>* defects) {
    std::vector<RingVector> out;
    bool ok = true;
    for (std::size_t i = 0; i < texts.size(); ++i) {
        const std::string label = what + std::to_string(i + 1) + " '" + texts[i] + "'";
        try {
            RingVector v = parse_vector(ring, texts[i]);
            if (v.size() != n) {
                if (defects)
                    defects->push_back(label + " has length " + std::to_string(v.size()) + ", expected " +
                                       std::to_string(n));
                ok = false;
            }
            out.push_back(std::move(v));
        } catch (const Error& e) {
            if (defects) defects->push_back(label + " does not parse: " + e.what());
            ok = false;
        }
    }
    if (!ok) return std::nullopt;
    return out;
}

std::vector<std::string> format_all(const ChainRing& ring, const std::vector<RingVector>& vs) {
    std::vector<std::string> out;
    for (const auto& v : vs) out.push_back(format_vector(ring, v));
    return out;
}

}  // namespace

std::pair<int, int> parse_type(const std::string& text) {
    static const std::regex part(R"(([24])\^(\d+))");
    int k1 = 0, k2 = 0;
    bool seen4 = false, seen2 = false;
    const auto words = split_words(text);
    if (words.empty()) throw ParseError("empty type");
    for (const auto& w : words) {
        std::smatch m;
        if (!std::regex_match(w, m, part)) throw ParseError("malformed type '" + text + "'");
        const int k = std::stoi(m[2]);
        if (m[1] == "4") {
            if (seen4 || seen2) throw ParseError("malformed type '" + text + "'");
            seen4 = true;
            k1 = k;
        } else {
            if (seen2) throw ParseError("malformed type '" + text + "'");
            seen2 = true;
            k2 = k;
        }
    }
    return {k1, k2};
}

FixtureTable parse_fixture_table(const std::string& text, const std::string& id, const std::string& path) {
    FixtureTable table;
    table.id = id;
    table.path = path;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    FixtureRow* row = nullptr;
    std::set<std::string> row_keys;
    const std::string file = path.empty() ? "table" + id : path;

    auto finish_row = [&] {
        if (!row) return;
        const std::string where = file + ":" + std::to_string(row->line) + " [row " + row->row + "]";
        for (const char* key : {"n", "basis", "generators", "type", "d_L"})
            if (!row_keys.count(key)) throw ParseError(where + ": missing key '" + key + "'");
        if (row->erratum && row->erratum->note.empty())
            throw ParseError(where + ": erratum without erratum.note");
    };

    while (std::getline(in, raw)) {
        ++line_no;
        const std::string where = file + ":" + std::to_string(line_no);
        std::string line = raw;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            static const std::regex header(R"(\[row\s+([0-9A-Za-z]+)\])");
            std::smatch m;
            if (!std::regex_match(line, m, header)) throw ParseError(where + ": malformed section '" + line + "'");
            finish_row();
            table.rows.emplace_back();
            row = &table.rows.back();
            row->table = id;
            row->row = m[1];
            row->line = line_no;
            row_keys.clear();
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError(where + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        if (!row) {
            if (key == "ring") table.ring = value;
            else if (key == "criterion") table.criterion = value;
            else throw ParseError(where + ": unknown header key '" + key + "'");
            continue;
        }
        if (!row_keys.insert(key).second) throw ParseError(where + ": duplicate key '" + key + "'");
        auto err = [&]() -> FixtureRow::Erratum& {
            if (!row->erratum) row->erratum.emplace();
            return *row->erratum;
        };
        if (key == "n") row->n = parse_int(value, where);
        else if (key == "basis") {
            if (value == "canonical") row->canonical_basis = true;
            else row->basis = split_words(value);
        } else if (key == "delta") row->delta = parse_int(value, where);
        else if (key == "generators") row->generators = split_words(value);
        else if (key == "type") row->type = value;
        else if (key == "d_L") row->d_L = parse_int(value, where);
        else if (key == "self_orthogonal") row->self_orthogonal = parse_bool(value, where);
        else if (key == "self_dual") row->self_dual = parse_bool(value, where);
        else if (key == "erratum.basis") err().basis = split_words(value);
        else if (key == "erratum.generators") err().generators = split_words(value);
        else if (key == "erratum.type") err().type = value;
        else if (key == "erratum.d_L") err().d_L = parse_int(value, where);
        else if (key == "erratum.self_orthogonal") err().self_orthogonal = parse_bool(value, where);
        else if (key == "erratum.self_dual") err().self_dual = parse_bool(value, where);
        else if (key == "erratum.note") err().note = value;
        else throw ParseError(where + ": unknown key '" + key + "'");
    }
    finish_row();
    if (table.ring.empty()) throw ParseError(file + ": missing 'ring' header");
    if (table.criterion.empty()) throw ParseError(file + ": missing 'criterion' header");
    ring_by_name(table.ring);
    return table;
}

FixtureTable load_fixture_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open fixture file " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    std::string stem = path.stem().string();
    const std::string id = stem.rfind("table", 0) == 0 ? stem.substr(5) : stem;
    return parse_fixture_table(buf.str(), id, path.string());
}

std::vector<FixtureTable> load_fixtures(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir)) throw ParseError("fixture directory not found: " + dir.string());
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        const auto name = entry.path().filename().string();
        if (entry.is_regular_file() && name.rfind("table", 0) == 0 && entry.path().extension() == ".txt")
            files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    std::vector<FixtureTable> out;
    for (const auto& f : files) out.push_back(load_fixture_file(f));
    return out;
}

AuditResult audit_row(const FixtureTable& table, const FixtureRow& row, std::uint64_t cap) {
    AuditResult out;
    auto& d = out.defects;
    const ChainRing ring = ring_by_name(table.ring);
    const Criterion criterion = Criterion::parse(table.criterion, row.delta);
    const int n = row.n;

    std::optional<Basis> basis;
    if (row.canonical_basis) {
        basis = Basis::canonical(ring, n);
    } else {
        if (static_cast<int>(row.basis.size()) != n)
            d.push_back("basis has " + std::to_string(row.basis.size()) + " vectors, expected " + std::to_string(n));
        if (auto vs = parse_all(ring, n, row.basis, "b", &d)) {
            try {
                basis.emplace(ring, *vs);
            } catch (const InvalidBasis& e) {
                d.push_back(std::string("basis is invalid: ") + e.what());
            }
        }
    }

    auto gens = parse_all(ring, n, row.generators, "a", &d);
    if (!gens) return out;
    {
        std::set<RingVector> distinct(gens->begin(), gens->end());
        if (distinct.size() != gens->size()) d.push_back("generators repeat");
    }
    if (basis) {
        int last = 0;
        for (std::size_t i = 0; i < gens->size(); ++i) {
            const int step = basis->step_of((*gens)[i]);
            if (step <= last) {
                d.push_back("a" + std::to_string(i + 1) + " lies in layer " + std::to_string(step) +
                            ", not after layer " + std::to_string(last));
            }
            last = std::max(last, step);
        }
    }

    const Code code = enumerate_code(ring, n, *gens, cap);
    const StandardForm sf = standard_form(ring, n, *gens);
    try {
        const auto [k1, k2] = parse_type(row.type);
        if (k1 != sf.k1() || k2 != sf.k2())
            d.push_back("span has type " + sf.type_string(ring) + ", printed " + row.type);
    } catch (const ParseError& e) {
        d.push_back(std::string("printed type: ") + e.what());
    }
    if (code.is_zero_code()) {
        d.push_back("generators span the zero code");
    } else {
        const int dl = min_weight(code, Metric::Lee);
        if (dl != row.d_L) d.push_back("span has d_L " + std::to_string(dl) + ", printed " + std::to_string(row.d_L));
    }
    const LexicodeCheck lc = check_lexicode(code, criterion);
    if (!lc.all_satisfy)
        d.push_back("codeword " + format_vector(ring, *lc.violation) + " fails " + criterion.describe());
    if (Space(ring, n).volume() <= cap) {
        const auto extra = verify_maximality(code, criterion, cap);
        if (!extra.empty())
            d.push_back("span is not maximal: " + format_vector(ring, extra.front()) + " could be added");
    }
    if (row.self_orthogonal && *row.self_orthogonal != is_self_orthogonal(ring, *gens))
        d.push_back("span self-orthogonality disagrees with the printed flag");
    if (row.self_dual && *row.self_dual != is_self_dual(ring, *gens, n))
        d.push_back("span self-duality disagrees with the printed flag");
    return out;
}

EffectiveRow effective(const FixtureRow& row) {
    EffectiveRow e;
    e.n = row.n;
    e.canonical_basis = row.canonical_basis;
    e.basis = row.basis;
    e.generators = row.generators;
    e.type = row.type;
    e.d_L = row.d_L;
    e.self_orthogonal = row.self_orthogonal;
    e.self_dual = row.self_dual;
    if (row.erratum) {
        if (row.erratum->basis) {
            e.basis = *row.erratum->basis;
            e.canonical_basis = false;
        }
        if (row.erratum->generators) e.generators = *row.erratum->generators;
        if (row.erratum->type) e.type = *row.erratum->type;
        if (row.erratum->d_L) e.d_L = *row.erratum->d_L;
        if (row.erratum->self_orthogonal) e.self_orthogonal = row.erratum->self_orthogonal;
        if (row.erratum->self_dual) e.self_dual = row.erratum->self_dual;
    }
    return e;
}

FixtureOutcome verify_row(const FixtureTable& table, const FixtureRow& row, std::uint64_t cap) {
    FixtureOutcome out;
    out.table = table.id;
    out.row = row.row;
    const ChainRing ring = ring_by_name(table.ring);
    const Criterion criterion = Criterion::parse(table.criterion, row.delta);

    out.audit_defects = audit_row(table, row, cap).defects;
    out.erratum_applied = row.erratum.has_value();
    const EffectiveRow eff = effective(row);
    out.expected_generators = eff.generators;
    out.expected_type = eff.type;
    out.expected_d_L = eff.d_L;

    auto fail = [&](std::string why) {
        if (out.first_difference.empty()) out.first_difference = std::move(why);
    };
    if (row.erratum && out.audit_defects.empty()) {
        fail("erratum present on a row whose printed data is consistent");
        return out;
    }

    std::optional<Basis> basis;
    if (eff.canonical_basis) {
        basis = Basis::canonical(ring, eff.n);
    } else {
        std::vector<std::string> defects;
        auto vs = parse_all(ring, eff.n, eff.basis, "b", &defects);
        if (!vs) {
            fail("basis: " + defects.front());
            return out;
        }
        try {
            basis.emplace(ring, *vs);
        } catch (const Error& e) {
            fail(std::string("basis: ") + e.what());
            return out;
        }
    }

    BuildOptions options;
    options.cap = cap;
    const BuildResult built = build_lexicode(*basis, criterion, options);
    const auto produced = built.generator_vectors();
    out.produced_generators = format_all(ring, produced);
    out.verbatim = out.produced_generators == eff.generators;
    out.code_size = built.code.size();
    const StandardForm sf = standard_form(ring, eff.n, produced);
    out.produced_type = sf.type_string(ring);
    if (!built.code.is_zero_code()) out.produced_d_L = min_weight(built.code, Metric::Lee);
    out.self_orthogonal = is_self_orthogonal(ring, produced);
    out.self_dual = is_self_dual(ring, produced, eff.n);

    std::vector<std::string> defects;
    if (auto expected = parse_all(ring, eff.n, eff.generators, "a", &defects)) {
        const Code expected_code = enumerate_code(ring, eff.n, *expected, cap);
        if (!(expected_code == built.code))
            fail("code: produced span (" + std::to_string(built.code.size()) + " words) differs from expected span (" +
                 std::to_string(expected_code.size()) + " words)");
    } else {
        fail("code: expected generators unusable: " + defects.front());
    }
    try {
        const auto [k1, k2] = parse_type(eff.type);
        if (k1 != sf.k1() || k2 != sf.k2()) fail("type: produced " + out.produced_type + ", expected " + eff.type);
    } catch (const ParseError& e) {
        fail(std::string("type: ") + e.what());
    }
    if (!out.produced_d_L || *out.produced_d_L != eff.d_L)
        fail("d_L: produced " + (out.produced_d_L ? std::to_string(*out.produced_d_L) : std::string("undefined")) +
             ", expected " + std::to_string(eff.d_L));
    if (eff.self_orthogonal && *eff.self_orthogonal != *out.self_orthogonal)
        fail(std::string("self_orthogonal: produced ") + (*out.self_orthogonal ? "true" : "false") + ", expected " +
             (*eff.self_orthogonal ? "true" : "false"));
    if (eff.self_dual && *eff.self_dual != *out.self_dual)
        fail(std::string("self_dual: produced ") + (*out.self_dual ? "true" : "false") + ", expected " +
             (*eff.self_dual ? "true" : "false"));
    out.pass = out.first_difference.empty();
    return out;
}

}  // namespace ringlex
