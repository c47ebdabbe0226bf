#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ringlex/lexicode.hpp"

namespace ringlex {

// One row of a bundled table, as printed. Vectors are kept as text so that
// malformed entries survive parsing and are reported by the audit.
struct FixtureRow {
    std::string table;
    std::string row;
    int line = 0;
    int n = 0;
    bool canonical_basis = false;
    std::vector<std::string> basis;
    std::optional<int> delta;
    std::vector<std::string> generators;
    std::string type;
    int d_L = 0;
    std::optional<bool> self_orthogonal;
    std::optional<bool> self_dual;

    // Corrections for rows whose printed data is internally inconsistent.
    struct Erratum {
        std::optional<std::vector<std::string>> basis;
        std::optional<std::vector<std::string>> generators;
        std::optional<std::string> type;
        std::optional<int> d_L;
        std::optional<bool> self_orthogonal;
        std::optional<bool> self_dual;
        std::string note;
    };
    std::optional<Erratum> erratum;

    std::string id() const { return "T" + table + "r" + row; }
};

struct FixtureTable {
    std::string id;
    std::string path;
    std::string ring;
    std::string criterion;
    std::vector<FixtureRow> rows;
};

// Throws ParseError with file:line on malformed input.
FixtureTable parse_fixture_table(const std::string& text, const std::string& id, const std::string& path = "");
FixtureTable load_fixture_file(const std::filesystem::path& path);
// table<id>.txt files in dir, ordered by id.
std::vector<FixtureTable> load_fixtures(const std::filesystem::path& dir);

// "4^1 2^3" -> (1, 3); throws ParseError.
std::pair<int, int> parse_type(const std::string& text);

// Internal consistency of the printed row, independent of any build.
struct AuditResult {
    std::vector<std::string> defects;
    bool clean() const { return defects.empty(); }
};
AuditResult audit_row(const FixtureTable& table, const FixtureRow& row, std::uint64_t cap = kDefaultCap);

// Printed values with the erratum applied where present.
struct EffectiveRow {
    int n = 0;
    std::vector<std::string> basis;  // empty for canonical
    bool canonical_basis = false;
    std::vector<std::string> generators;
    std::string type;
    int d_L = 0;
    std::optional<bool> self_orthogonal;
    std::optional<bool> self_dual;
};
EffectiveRow effective(const FixtureRow& row);

struct FixtureOutcome {
    std::string table;
    std::string row;
    bool pass = false;
    std::string first_difference;  // empty on pass
    bool verbatim = false;         // produced generator list equals the expected one
    bool erratum_applied = false;
    std::vector<std::string> audit_defects;
    std::vector<std::string> expected_generators;
    std::vector<std::string> produced_generators;
    std::string expected_type;
    std::string produced_type;
    int expected_d_L = 0;
    std::optional<int> produced_d_L;
    std::uint64_t code_size = 0;
    std::optional<bool> self_orthogonal;
    std::optional<bool> self_dual;
};

// Rebuilds the row and compares code, type, d_L and the stated flags.
// An erratum on a row that audits clean is rejected as a data error.
FixtureOutcome verify_row(const FixtureTable& table, const FixtureRow& row, std::uint64_t cap = kDefaultCap);

}  // namespace ringlex
