#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ringlex/analysis.hpp"
#include "ringlex/cli.hpp"
#include "ringlex/errors.hpp"
#include "ringlex/fixtures.hpp"
#include "ringlex/io.hpp"
#include "ringlex/report.hpp"

namespace py = pybind11;
using namespace ringlex;

namespace {

std::vector<RingVector> parse_all(const ChainRing& ring, const std::vector<std::string>& vs) {
    std::vector<RingVector> out;
    for (const auto& s : vs) out.push_back(parse_vector(ring, s));
    return out;
}

Basis make_basis(const ChainRing& ring, int n, const std::vector<std::string>& basis) {
    if (basis.size() == 1 && basis[0] == "canonical") return Basis::canonical(ring, n);
    return Basis(ring, parse_all(ring, basis));
}

// JSON text; the Python side decodes it.
std::string build(const std::string& ring_name, int n, const std::vector<std::string>& basis,
                  const std::string& criterion, std::optional<int> delta, std::uint64_t cap) {
    const ChainRing ring = ring_by_name(ring_name);
    const Basis b = make_basis(ring, n, basis);
    const Criterion c = Criterion::parse(criterion, delta);
    BuildOptions o;
    o.cap = cap;
    const BuildResult r = build_lexicode(b, c, o);
    AnalysisOptions a;
    a.cap = cap;
    const CodeReport rep = analyze_code(r.code, r.generator_vectors(), a);
    return nlohmann::json{{"build", to_json(r)}, {"report", to_json(rep)}}.dump();
}

std::string analyze(const std::string& ring_name, int n, const std::vector<std::string>& generators, bool dual,
                    bool rho, bool gray, bool gilbert, std::uint64_t cap) {
    const ChainRing ring = ring_by_name(ring_name);
    const auto g = parse_all(ring, generators);
    AnalysisOptions a;
    a.dual = dual;
    a.rho = rho;
    a.gray = gray;
    a.gilbert = gilbert;
    a.cap = cap;
    return to_json(analyze_code(enumerate_code(ring, n, g, cap), g, a)).dump();
}

std::vector<std::string> gray_words(const std::string& ring_name, int n, const std::vector<std::string>& generators) {
    const ChainRing ring = ring_by_name(ring_name);
    const BinaryCode image = gray_image(enumerate_code(ring, n, parse_all(ring, generators)));
    std::vector<std::string> out;
    for (const auto& w : image.unpacked())
        out.push_back(w.to_string());
    return out;
}

std::string verify_fixtures(const std::string& dir, const std::string& table, const std::string& row) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& t : load_fixtures(dir.empty() ? default_fixture_dir() : dir)) {
        if (!table.empty() && t.id != table) continue;
        for (const auto& r : t.rows)
            if (row.empty() || r.row == row) rows.push_back(to_json(verify_row(t, r)));
    }
    return rows.dump();
}

std::vector<std::string> rand_basis(const std::string& ring_name, int n, std::uint64_t seed) {
    const ChainRing ring = ring_by_name(ring_name);
    const Basis b = random_basis(ring, n, seed);
    std::vector<std::string> out;
    for (const auto& v : b.vectors()) out.push_back(format_vector(ring, v));
    return out;
}

py::tuple cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_ringlex, m) {
    m.doc() = "Linear lexicodes over Z4 and F2+uF2";

    auto base = py::register_exception<Error>(m, "RinglexError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<InvalidBasis>(m, "InvalidBasis", base.ptr());
    py::register_exception<CapExceeded>(m, "CapExceeded", base.ptr());
    py::register_exception<NonMultiplicative>(m, "NonMultiplicative", base.ptr());
    py::register_exception<UndefinedDistance>(m, "UndefinedDistance", base.ptr());
    py::register_exception<UnsupportedMetric>(m, "UnsupportedMetric", base.ptr());

    m.attr("DEFAULT_CAP") = kDefaultCap;
    m.def("build", &build, py::arg("ring"), py::arg("n"), py::arg("basis"), py::arg("criterion"),
          py::arg("delta") = py::none(), py::arg("cap") = kDefaultCap);
    m.def("analyze", &analyze, py::arg("ring"), py::arg("n"), py::arg("generators"), py::arg("dual") = true,
          py::arg("rho") = false, py::arg("gray") = false, py::arg("gilbert") = false, py::arg("cap") = kDefaultCap);
    m.def("gray_words", &gray_words, py::arg("ring"), py::arg("n"), py::arg("generators"));
    m.def("verify_fixtures", &verify_fixtures, py::arg("fixtures") = "", py::arg("table") = "", py::arg("row") = "");
    m.def("rand_basis", &rand_basis, py::arg("ring"), py::arg("n"), py::arg("seed"));
    m.def("gilbert_check", &gilbert_check, py::arg("n"), py::arg("size"), py::arg("d"));
    m.def("cli", &cli, py::arg("args"));
}
