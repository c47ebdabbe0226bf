#include "ringlex/io.hpp"

#include <fstream>
#include <random>
#include <regex>
#include <sstream>

#include "ringlex/errors.hpp"

namespace ringlex {

namespace {

std::string strip(std::string s) {
    if (const auto hash = s.find('#'); hash != std::string::npos) s.erase(hash);
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

VectorFile parse_vector_file(const std::string& text) {
    static const std::regex header(R"(ring\s*=\s*(\S+)\s+n\s*=\s*(\d+))");
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    bool have_header = false;
    VectorFile out;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = strip(raw);
        if (line.empty()) continue;
        const std::string where = "line " + std::to_string(line_no);
        if (!have_header) {
            std::smatch m;
            if (!std::regex_match(line, m, header))
                throw ParseError(where + ": expected header 'ring=<z4|f2u> n=<int>'");
            const std::string name = m[1];
            if (name != "z4" && name != "f2u") throw ParseError(where + ": unknown ring '" + name + "'");
            out.ring = ring_by_name(name);
            out.n = std::stoi(m[2]);
            if (out.n <= 0 || out.n > 32) throw ParseError(where + ": n must be in 1..32");
            have_header = true;
            continue;
        }
        if (line == "canonical") {
            if (out.canonical || !out.vectors.empty()) throw ParseError(where + ": 'canonical' must stand alone");
            out.canonical = true;
            continue;
        }
        if (out.canonical) throw ParseError(where + ": vectors after 'canonical'");
        RingVector v;
        try {
            v = parse_vector(out.ring, line);
        } catch (const Error& e) {
            throw ParseError(where + ": " + e.what());
        }
        if (v.size() != out.n)
            throw ParseError(where + ": vector has length " + std::to_string(v.size()) + ", expected " +
                             std::to_string(out.n));
        out.vectors.push_back(std::move(v));
    }
    if (!have_header) throw ParseError("empty vector file");
    return out;
}

VectorFile read_vector_file(const std::string& path) { return parse_vector_file(slurp(path)); }

Basis parse_basis_file(const std::string& text) {
    VectorFile f = parse_vector_file(text);
    if (f.canonical) return Basis::canonical(f.ring, f.n);
    if (static_cast<int>(f.vectors.size()) != f.n)
        throw InvalidBasis("basis file has " + std::to_string(f.vectors.size()) + " vectors, expected " +
                           std::to_string(f.n));
    return Basis(f.ring, std::move(f.vectors));
}

Basis read_basis_file(const std::string& path) { return parse_basis_file(slurp(path)); }

std::string format_basis_file(const Basis& basis) {
    std::ostringstream os;
    os << "ring=" << basis.ring().name() << " n=" << basis.n() << "\n";
    for (const auto& v : basis.vectors()) os << format_vector(basis.ring(), v) << "\n";
    return os.str();
}

Basis random_basis(const ChainRing& ring, int n, std::uint64_t seed) {
    if (n <= 0) throw DomainError("random basis needs n >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> symbol(0, ring.size() - 1);
    for (;;) {
        std::vector<RingVector> vs;
        for (int i = 0; i < n; ++i) {
            std::vector<std::uint8_t> c(n);
            for (auto& x : c) x = static_cast<std::uint8_t>(symbol(rng));
            vs.emplace_back(ring.id(), std::move(c));
        }
        if (generates_module(ring, n, vs)) return Basis(ring, std::move(vs));
    }
}

}  // namespace ringlex
