#include "ringlex/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <bit>
#include <limits>
#include <numeric>
#include <set>

#include "ringlex/errors.hpp"

namespace ringlex {

namespace {

void require_builtin(const ChainRing& ring, const char* what) {
    if (!ring.is_builtin()) throw UnsupportedMetric(std::string(what) + " needs a 4-element built-in ring");
}

void require_volume(const Space& space, std::uint64_t cap, const char* what) {
    if (space.volume() > cap)
        throw CapExceeded(std::string(what) + ": " + std::to_string(space.volume()) + " vectors exceeds cap " +
                          std::to_string(cap));
}

std::vector<Word> encode_all(const Space& space, const std::vector<RingVector>& vs) {
    std::vector<Word> out;
    for (const auto& v : vs) {
        if (v.ring() != space.ring().id()) throw RingMismatch("vector does not belong to ring " + space.ring().name());
        if (v.size() != space.n()) throw LengthMismatch("vector length differs from n = " + std::to_string(space.n()));
        out.push_back(space.encode(v));
    }
    return out;
}

// Incrementally picks words that enlarge the span; returns them.
std::vector<Word> greedy_generators(const Space& space, const std::vector<Word>& words) {
    std::vector<Word> span{0}, gens;
    for (Word w : words) {
        if (std::binary_search(span.begin(), span.end(), w)) continue;
        span = extend_span(space, span, w);
        gens.push_back(w);
    }
    return gens;
}

}  // namespace

Code enumerate_code(const ChainRing& ring, int n, const std::vector<RingVector>& generators, std::uint64_t cap) {
    Space space(ring, n);
    return Code(space, span_words(space, encode_all(space, generators), cap));
}

int min_weight(const Code& code, Metric metric) {
    if (!code.ring().supports(metric))
        throw UnsupportedMetric(std::string(metric_name(metric)) + " weight is not defined on " + code.ring().name());
    int best = std::numeric_limits<int>::max();
    for (Word w : code.words())
        if (w != 0) best = std::min(best, code.space().weight(w, metric));
    if (best == std::numeric_limits<int>::max()) throw UndefinedDistance("minimum distance of the zero code");
    return best;
}

Code dual_code_words(const Code& code, std::uint64_t cap) {
    const Space& space = code.space();
    require_volume(space, cap, "dual code");
    const auto gens = greedy_generators(space, code.words());
    std::vector<Word> dual;
    for (std::uint64_t k = 0; k < space.volume(); ++k) {
        const Word x = space.unrank(k);
        bool ok = true;
        for (Word g : gens) {
            if (space.inner(x, g) != 0) {
                ok = false;
                break;
            }
        }
        if (ok) dual.push_back(x);
    }
    return Code(space, std::move(dual));
}

std::vector<RingVector> dual_code(const Code& code, std::uint64_t cap) {
    const Code dual = dual_code_words(code, cap);
    std::vector<RingVector> gens;
    for (Word w : greedy_generators(code.space(), dual.words())) gens.push_back(code.space().decode(w));
    return standard_form(code.ring(), code.n(), gens).rows;
}

bool is_self_orthogonal(const ChainRing& ring, const std::vector<RingVector>& generators) {
    for (std::size_t i = 0; i < generators.size(); ++i)
        for (std::size_t j = i; j < generators.size(); ++j)
            if (inner_product(ring, generators[i], generators[j]) != ring.zero()) return false;
    return true;
}

bool is_self_dual(const ChainRing& ring, const std::vector<RingVector>& generators, int n) {
    if (!is_self_orthogonal(ring, generators)) return false;
    const StandardForm sf = standard_form(ring, n, generators);
    // |C|^2 = m^n, compared through exponents of p
    const int log_size = sf.rank() == 0 ? 0 : [&] {
        int s = 0;
        for (int v = 0; v < ring.e(); ++v) s += sf.levels[v] * ring.r() * (ring.e() - v);
        return s;
    }();
    return 2 * log_size == n * ring.r() * ring.e();
}

int covering_radius_lee(const Code& code, std::uint64_t cap) {
    const Space& space = code.space();
    require_builtin(code.ring(), "Lee covering radius");
    require_volume(space, cap, "covering radius");

    // weight-one symbols: 1 and 3 (v) in both rings
    std::vector<Word> steps;
    for (int i = 0; i < space.n(); ++i) {
        steps.push_back(space.with_lane(0, i, 1));
        steps.push_back(space.with_lane(0, i, 3));
    }
    constexpr std::uint8_t kUnseen = 0xFF;
    std::vector<std::uint8_t> dist(space.volume(), kUnseen);
    std::vector<Word> frontier;
    for (Word w : code.words()) {
        dist[space.rank(w)] = 0;
        frontier.push_back(w);
    }
    int radius = 0;
    std::vector<Word> next;
    while (!frontier.empty()) {
        next.clear();
        for (Word x : frontier) {
            for (Word s : steps) {
                const Word y = space.add(x, s);
                auto& d = dist[space.rank(y)];
                if (d == kUnseen) {
                    d = static_cast<std::uint8_t>(radius + 1);
                    next.push_back(y);
                }
            }
        }
        if (next.empty()) break;
        ++radius;
        frontier.swap(next);
    }
    return radius;
}

std::vector<BinaryWord> BinaryCode::unpacked() const {
    std::vector<BinaryWord> out;
    for (std::uint64_t w : words) {
        BinaryWord b;
        for (int j = 0; j < length; ++j) b.bits.push_back(static_cast<std::uint8_t>((w >> j) & 1));
        out.push_back(std::move(b));
    }
    return out;
}

std::uint64_t pack_binary(const BinaryWord& w) {
    if (w.size() > 64) throw DomainError("binary word longer than 64 bits");
    std::uint64_t out = 0;
    for (int j = 0; j < w.size(); ++j)
        if (w.bits[j]) out |= std::uint64_t{1} << j;
    return out;
}

BinaryCode gray_image(const Code& code) {
    const Space& space = code.space();
    require_builtin(code.ring(), "Gray map");
    const int n = space.n();
    if (2 * n > 64) throw DomainError("Gray image longer than 64 bits");
    constexpr std::uint64_t kLow = 0x5555555555555555ULL;
    BinaryCode out;
    out.length = 2 * n;
    out.words.reserve(code.size());
    for (Word w : code.words()) {
        std::uint64_t g = 0;
        if (code.ring().kind() == RingKind::Z4) {
            // symbol i -> bits 2i (high Gray bit), 2i+1 (low Gray bit)
            g = ((w >> 1) & kLow) | (((w ^ (w >> 1)) & kLow) << 1);
        } else {
            // a + ub -> b in block one, a + b in block two
            for (int i = 0; i < n; ++i) {
                const std::uint64_t a = (w >> (2 * i)) & 1, b = (w >> (2 * i + 1)) & 1;
                g |= b << i;
                g |= (a ^ b) << (n + i);
            }
        }
        out.words.push_back(g);
    }
    std::sort(out.words.begin(), out.words.end());
    out.words.erase(std::unique(out.words.begin(), out.words.end()), out.words.end());
    return out;
}

int binary_rank(const BinaryCode& image) {
    std::vector<std::uint64_t> basis;  // kept with distinct leading bits
    for (std::uint64_t w : image.words) {
        for (std::uint64_t b : basis) w = std::min(w, w ^ b);
        if (w != 0) {
            basis.push_back(w);
            std::sort(basis.rbegin(), basis.rend());
        }
    }
    return static_cast<int>(basis.size());
}

bool is_binary_linear(const BinaryCode& image) {
    if (image.words.empty() || image.words.front() != 0) return false;
    const int k = binary_rank(image);
    return k < 64 && image.size() == (std::uint64_t{1} << k);
}

int binary_min_distance(const BinaryCode& image) {
    if (image.size() < 2) throw UndefinedDistance("minimum distance of a code with fewer than two words");
    int best = std::numeric_limits<int>::max();
    if (is_binary_linear(image)) {
        for (std::uint64_t w : image.words)
            if (w != 0) best = std::min(best, std::popcount(w));
        return best;
    }
    for (std::size_t i = 0; i < image.words.size(); ++i)
        for (std::size_t j = i + 1; j < image.words.size(); ++j)
            best = std::min(best, std::popcount(image.words[i] ^ image.words[j]));
    return best;
}

int binary_covering_radius(const BinaryCode& image, std::uint64_t cap) {
    if (image.length >= 63 || (std::uint64_t{1} << image.length) > cap)
        throw CapExceeded("binary covering radius over 2^" + std::to_string(image.length) + " words exceeds cap " +
                          std::to_string(cap));
    if (image.words.empty()) throw UndefinedDistance("covering radius of the empty code");
    constexpr std::uint8_t kUnseen = 0xFF;
    std::vector<std::uint8_t> dist(std::size_t{1} << image.length, kUnseen);
    std::vector<std::uint64_t> frontier(image.words), next;
    for (std::uint64_t w : frontier) dist[w] = 0;
    int radius = 0;
    while (!frontier.empty()) {
        next.clear();
        for (std::uint64_t x : frontier) {
            for (int j = 0; j < image.length; ++j) {
                const std::uint64_t y = x ^ (std::uint64_t{1} << j);
                if (dist[y] == kUnseen) {
                    dist[y] = static_cast<std::uint8_t>(radius + 1);
                    next.push_back(y);
                }
            }
        }
        if (next.empty()) break;
        ++radius;
        frontier.swap(next);
    }
    return radius;
}

GilbertResult gilbert_bound(int n_bin, std::uint64_t size, int d) {
    if (d < 1) throw DomainError("gilbert bound needs d >= 1");
    if (n_bin < 0 || n_bin > 64) throw DomainError("gilbert bound needs 0 <= n <= 64");
    using u128 = unsigned __int128;
    u128 ball = 0, binom = 1;  // C(n, i); sums to at most 2^64
    for (int i = 0; i < d && i <= n_bin; ++i) {
        ball += binom;
        binom = binom * static_cast<u128>(n_bin - i) / static_cast<u128>(i + 1);
    }
    GilbertResult r;
    r.ball = ball > UINT64_MAX ? UINT64_MAX : static_cast<std::uint64_t>(ball);
    r.met = static_cast<u128>(size) * ball >= (static_cast<u128>(1) << n_bin);
    r.threshold = std::ldexp(1.0, n_bin) / static_cast<double>(ball);
    return r;
}

HomogeneousResult homogeneous_weight_verify(const ChainRing& ring, Metric metric, int n_max) {
    if (!ring.supports(metric))
        throw UnsupportedMetric(std::string(metric_name(metric)) + " weight is not defined on " + ring.name());
    HomogeneousResult out;
    for (int x = 0; x < ring.size(); ++x)
        for (const Element& u : ring.units())
            if (ring.symbol_weight(ring.element(x), metric) != ring.symbol_weight(ring.mul(u, ring.element(x)), metric))
                out.unit_invariant = false;

    bool have_xi = false;
    for (int n = 1; n <= n_max; ++n) {
        Space space(ring, n);
        std::set<std::vector<Word>> seen;
        std::vector<std::pair<std::vector<Word>, std::vector<Word>>> frontier{{{0}, {}}};  // (span, generators)
        for (int depth = 0; depth < n; ++depth) {
            decltype(frontier) next;
            for (const auto& [span, gens] : frontier) {
                for (std::uint64_t k = 1; k < space.volume(); ++k) {
                    const Word x = space.unrank(k);
                    if (std::binary_search(span.begin(), span.end(), x)) continue;
                    auto bigger = extend_span(space, span, x);
                    if (!seen.insert(bigger).second) continue;
                    auto g = gens;
                    g.push_back(x);
                    next.emplace_back(std::move(bigger), std::move(g));
                }
            }
            for (const auto& [span, gens] : next) {
                // an additive weight sums to xi |U| on every coordinate U uses
                std::int64_t sum = 0;
                Word used = 0;
                for (Word w : span) {
                    sum += space.weight(w, metric);
                    used |= w;
                }
                int support = 0;
                for (int i = 0; i < n; ++i) support += space.lane(used, i) != 0;
                const auto size = static_cast<std::int64_t>(span.size()) * support;
                ++out.subcodes_checked;
                if (!have_xi) {
                    const std::int64_t g = std::gcd(sum, size);
                    out.xi_num = sum / g;
                    out.xi_den = size / g;
                    have_xi = true;
                } else if (sum * out.xi_den != out.xi_num * size && out.holds) {
                    out.holds = false;
                    for (Word w : gens) out.counterexample.push_back(space.decode(w));
                }
            }
            frontier = std::move(next);
        }
    }
    out.holds = out.holds && out.unit_invariant;
    return out;
}

bool RadiusBoundsReport::asserted_hold() const {
    return std::all_of(comparisons.begin(), comparisons.end(),
                       [](const BoundComparison& c) { return !c.asserted || c.holds; });
}

RadiusBoundsReport radius_bounds_report(const BuildResult& build, int delta, std::uint64_t cap) {
    require_builtin(build.ring, "radius bounds report");
    RadiusBoundsReport rep;
    rep.n = build.n;
    rep.delta = delta;
    rep.d = min_weight(build.code, Metric::Lee);
    rep.rho = covering_radius_lee(build.code, cap);
    const int n = build.n;
    const std::uint64_t full = build.chain_sizes.back();

    auto add = [&](std::string label, int step, std::int64_t lhs, std::int64_t rhs, bool asserted) {
        rep.comparisons.push_back(BoundComparison{std::move(label), step, lhs, rhs, lhs <= rhs, asserted});
    };

    for (int i = 0; i <= n; ++i) {
        if (build.chain_sizes[i] == full) {
            rep.step_rho.push_back(-1);
            continue;
        }
        const Code ci = build.chain_code(i);
        const int rho_i = covering_radius_lee(ci, cap);
        rep.step_rho.push_back(rho_i);
        std::vector<RingVector> gens;
        for (const auto& g : build.generators)
            if (g.step <= i) gens.push_back(g.vector);
        const StandardForm sf = standard_form(build.ring, n, gens);
        add("delta <= rho_L(C_i)", i, delta, rho_i, false);
        add("rho_L(C_i) <= 2(n - k1) - k2", i, rho_i, 2 * (n - sf.k1()) - sf.k2(), true);
    }
    add("floor(delta/2) <= floor(d/2)", -1, delta / 2, rep.d / 2, false);
    add("floor(d/2) <= rho_L(C)", -1, rep.d / 2, rep.rho, true);
    add("rho_L(C) <= delta - 1", -1, rep.rho, delta - 1, false);
    add("delta - 1 <= d - 1", -1, delta - 1, rep.d - 1, false);
    return rep;
}

CodeReport analyze_code(const Code& code, const std::vector<RingVector>& generators, const AnalysisOptions& options) {
    const ChainRing& ring = code.ring();
    const Space& space = code.space();
    CodeReport r;
    r.ring = ring.name();
    r.n = code.n();
    const StandardForm sf = standard_form(ring, code.n(), generators);
    r.k1 = sf.k1();
    r.k2 = sf.k2();
    r.type = sf.type_string(ring);
    r.code_size = code.size();
    if (!code.is_zero_code()) {
        r.d_H = min_weight(code, Metric::Hamming);
        if (ring.supports(Metric::Lee)) r.d_L = min_weight(code, Metric::Lee);
        if (ring.supports(Metric::Euclidean)) r.d_E = min_weight(code, Metric::Euclidean);
    }
    r.self_orthogonal = is_self_orthogonal(ring, generators);
    r.self_dual = is_self_dual(ring, generators, code.n());
    if (options.dual && space.volume() <= options.cap) r.dual_size = dual_code_words(code, options.cap).size();
    if (options.rho && ring.is_builtin()) r.rho_L = covering_radius_lee(code, options.cap);
    if ((options.gray || options.gilbert) && ring.is_builtin()) {
        const BinaryCode image = gray_image(code);
        GrayReport g;
        g.length = image.length;
        g.size = image.size();
        g.linear = is_binary_linear(image);
        if (image.size() >= 2) g.min_distance = binary_min_distance(image);
        if (options.rho) g.covering_radius = binary_covering_radius(image, options.cap);
        if (options.gilbert && image.size() >= 2) {
            const GilbertResult gb = gilbert_bound(image.length, image.size(), g.min_distance);
            g.gilbert_met = gb.met;
            g.gilbert_ball = gb.ball;
        }
        r.gray = g;
    }
    return r;
}

}  // namespace ringlex
