#include "ringlex/report.hpp"

#include <iomanip>
#include <sstream>

namespace ringlex {

using nlohmann::json;

namespace {

template <class T>
json opt(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

template <class T>
std::string show(const std::optional<T>& v) {
    if (!v) return "-";
    std::ostringstream os;
    if constexpr (std::is_same_v<T, bool>) os << (*v ? "yes" : "no");
    else os << *v;
    return os.str();
}

std::string join(const std::vector<std::string>& xs, const char* sep = " ") {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
    return s;
}

void row(std::ostringstream& os, const std::string& key, const std::string& value) {
    os << std::left << std::setw(18) << key << value << "\n";
}

}  // namespace

json to_json(const GrayReport& g) {
    return json{{"length", g.length},
                {"size", g.size},
                {"min_distance", g.min_distance},
                {"linear", g.linear},
                {"covering_radius", opt(g.covering_radius)},
                {"gilbert_met", opt(g.gilbert_met)},
                {"gilbert_ball", opt(g.gilbert_ball)}};
}

json to_json(const CodeReport& r) {
    return json{{"ring", r.ring},
                {"n", r.n},
                {"type", r.type},
                {"k1", r.k1},
                {"k2", r.k2},
                {"code_size", r.code_size},
                {"d_H", opt(r.d_H)},
                {"d_L", opt(r.d_L)},
                {"d_E", opt(r.d_E)},
                {"self_orthogonal", opt(r.self_orthogonal)},
                {"self_dual", opt(r.self_dual)},
                {"dual_size", opt(r.dual_size)},
                {"rho_L", opt(r.rho_L)},
                {"gray", r.gray ? to_json(*r.gray) : json(nullptr)}};
}

json to_json(const BuildResult& b) {
    json gens = json::array();
    for (const auto& g : b.generators) gens.push_back({{"step", g.step}, {"vector", format_vector(b.ring, g.vector)}});
    json trace = json::array();
    for (const auto& t : b.trace)
        trace.push_back({{"step", t.step},
                         {"selected", t.selected ? json(format_vector(b.ring, *t.selected)) : json(nullptr)},
                         {"candidates_examined", t.candidates_examined}});
    return json{{"generators", gens}, {"chain_sizes", b.chain_sizes}, {"trace", trace}};
}

json to_json(const RadiusBoundsReport& p) {
    json cmp = json::array();
    for (const auto& c : p.comparisons)
        cmp.push_back({{"label", c.label},
                       {"step", c.step < 0 ? json(nullptr) : json(c.step)},
                       {"lhs", c.lhs},
                       {"rhs", c.rhs},
                       {"holds", c.holds},
                       {"asserted", c.asserted}});
    json rho = json::array();
    for (int r : p.step_rho) rho.push_back(r < 0 ? json(nullptr) : json(r));
    return json{{"n", p.n},         {"delta", p.delta},    {"d_L", p.d},
                {"rho_L", p.rho},   {"step_rho_L", rho},   {"comparisons", cmp},
                {"asserted_hold", p.asserted_hold()}};
}

json to_json(const FixtureOutcome& o) {
    return json{{"table", o.table},
                {"row", o.row},
                {"pass", o.pass},
                {"first_difference", o.first_difference.empty() ? json(nullptr) : json(o.first_difference)},
                {"verbatim", o.verbatim},
                {"erratum_applied", o.erratum_applied},
                {"audit_defects", o.audit_defects},
                {"expected_generators", o.expected_generators},
                {"produced_generators", o.produced_generators},
                {"expected_type", o.expected_type},
                {"produced_type", o.produced_type},
                {"expected_d_L", o.expected_d_L},
                {"produced_d_L", opt(o.produced_d_L)},
                {"code_size", o.code_size},
                {"self_orthogonal", opt(o.self_orthogonal)},
                {"self_dual", opt(o.self_dual)}};
}

std::string report_table(const CodeReport& r) {
    std::ostringstream os;
    row(os, "ring", r.ring);
    row(os, "n", std::to_string(r.n));
    row(os, "type", r.type + "  (k1=" + std::to_string(r.k1) + ", k2=" + std::to_string(r.k2) + ")");
    row(os, "code_size", std::to_string(r.code_size));
    row(os, "d_H", show(r.d_H));
    row(os, "d_L", show(r.d_L));
    row(os, "d_E", show(r.d_E));
    row(os, "self_orthogonal", show(r.self_orthogonal));
    row(os, "self_dual", show(r.self_dual));
    if (r.dual_size) row(os, "dual_size", show(r.dual_size));
    if (r.rho_L) row(os, "rho_L", show(r.rho_L));
    if (r.gray) os << gray_table(*r.gray);
    return os.str();
}

std::string gray_table(const GrayReport& g) {
    std::ostringstream os;
    row(os, "gray.length", std::to_string(g.length));
    row(os, "gray.size", std::to_string(g.size));
    row(os, "gray.min_distance", std::to_string(g.min_distance));
    row(os, "gray.linear", g.linear ? "yes" : "no");
    if (g.covering_radius) row(os, "gray.covering", show(g.covering_radius));
    if (g.gilbert_met) {
        row(os, "gray.gilbert_met", show(g.gilbert_met));
        row(os, "gray.gilbert_ball", show(g.gilbert_ball));
    }
    return os.str();
}

std::string build_table(const Basis& basis, const Criterion& criterion, const BuildResult& build,
                        const CodeReport& report) {
    const ChainRing& ring = basis.ring();
    std::vector<std::string> b, g;
    for (const auto& v : basis.vectors()) b.push_back(format_vector(ring, v));
    for (const auto& x : build.generators)
        g.push_back("a" + std::to_string(x.step) + "=" + format_vector(ring, x.vector));
    std::vector<std::string> sizes;
    for (auto s : build.chain_sizes) sizes.push_back(std::to_string(s));

    std::ostringstream os;
    os << std::left << std::setw(4) << "n" << std::setw(8) << "delta" << std::setw(10) << "type" << "d_L\n";
    os << std::setw(4) << basis.n() << std::setw(8) << show(criterion.delta()) << std::setw(10) << report.type
       << show(report.d_L) << "\n\n";
    row(os, "criterion", criterion.name() + "  [" + criterion.describe() + "]");
    row(os, "basis", join(b));
    row(os, "generators", join(g));
    row(os, "chain_sizes", join(sizes));
    os << report_table(report);
    return os.str();
}

std::string radius_bounds_table(const RadiusBoundsReport& p) {
    std::ostringstream os;
    os << "n=" << p.n << " delta=" << p.delta << " d_L=" << p.d << " rho_L=" << p.rho << "\n";
    for (const auto& c : p.comparisons) {
        os << std::left << std::setw(6) << (c.step < 0 ? "C" : "C_" + std::to_string(c.step)) << std::setw(32)
           << c.label << std::right << std::setw(4) << c.lhs << " <= " << std::left << std::setw(4) << c.rhs
           << (c.holds ? "holds" : "VIOLATED") << (c.asserted ? "" : "  (reported)") << "\n";
    }
    return os.str();
}

std::string fixtures_table(const std::vector<FixtureOutcome>& outcomes) {
    std::ostringstream os;
    int failed = 0;
    for (const auto& o : outcomes) {
        const std::string id = "T" + o.table + "r" + o.row;
        os << std::left << std::setw(8) << id << (o.pass ? "PASS" : "FAIL") << "  "
           << (o.verbatim ? "verbatim" : "differs ") << (o.erratum_applied ? "  erratum" : "");
        if (!o.pass) {
            ++failed;
            os << "  " << o.first_difference;
        }
        os << "\n";
    }
    os << outcomes.size() - failed << "/" << outcomes.size() << " rows pass\n";
    return os.str();
}

}  // namespace ringlex
