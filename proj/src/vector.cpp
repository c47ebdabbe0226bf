#include "ringlex/vector.hpp"

#include <algorithm>

#include "ringlex/errors.hpp"

namespace ringlex {

namespace {

void check_ring(const ChainRing& ring, const RingVector& x) {
    if (x.ring() != ring.id()) throw RingMismatch("vector does not belong to ring " + ring.name());
}

void check_pair(const ChainRing& ring, const RingVector& x, const RingVector& y) {
    check_ring(ring, x);
    check_ring(ring, y);
    if (x.size() != y.size())
        throw LengthMismatch("vector lengths differ: " + std::to_string(x.size()) + " vs " + std::to_string(y.size()));
}

}  // namespace

RingVector RingVector::unit_vector(const ChainRing& ring, int n, int i) {
    std::vector<std::uint8_t> c(n, 0);
    c.at(i) = 1;
    return RingVector(ring.id(), std::move(c));
}

bool RingVector::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](std::uint8_t c) { return c == 0; });
}

int BinaryWord::weight() const {
    return static_cast<int>(std::count(bits.begin(), bits.end(), std::uint8_t{1}));
}

std::string BinaryWord::to_string() const {
    std::string s;
    s.reserve(bits.size());
    for (auto b : bits) s.push_back(b ? '1' : '0');
    return s;
}

RingVector parse_vector(const ChainRing& ring, std::string_view text) {
    if (text.empty()) throw ParseError("empty vector");
    std::vector<std::uint8_t> c;
    c.reserve(text.size());
    for (char ch : text) c.push_back(ring.parse_symbol(ch).index);
    return RingVector(ring.id(), std::move(c));
}

std::string format_vector(const ChainRing& ring, const RingVector& x) {
    check_ring(ring, x);
    std::string s;
    s.reserve(x.size());
    for (int i = 0; i < x.size(); ++i) s.push_back(ring.symbol(x.at(i)));
    return s;
}

RingVector vec_add(const ChainRing& ring, const RingVector& x, const RingVector& y) {
    check_pair(ring, x, y);
    std::vector<std::uint8_t> c(x.size());
    for (int i = 0; i < x.size(); ++i) c[i] = ring.add_index(x.indices()[i], y.indices()[i]);
    return RingVector(ring.id(), std::move(c));
}

RingVector vec_neg(const ChainRing& ring, const RingVector& x) {
    check_ring(ring, x);
    std::vector<std::uint8_t> c(x.size());
    for (int i = 0; i < x.size(); ++i) c[i] = ring.neg_index(x.indices()[i]);
    return RingVector(ring.id(), std::move(c));
}

RingVector vec_sub(const ChainRing& ring, const RingVector& x, const RingVector& y) {
    return vec_add(ring, x, vec_neg(ring, y));
}

RingVector scalar_mul(const ChainRing& ring, Element alpha, const RingVector& x) {
    check_ring(ring, x);
    if (alpha.ring != ring.id()) throw RingMismatch("scalar does not belong to ring " + ring.name());
    std::vector<std::uint8_t> c(x.size());
    for (int i = 0; i < x.size(); ++i) c[i] = ring.mul_index(alpha.index, x.indices()[i]);
    return RingVector(ring.id(), std::move(c));
}

int symbol_count(const RingVector& x, Element a) {
    if (a.ring != x.ring()) throw RingMismatch("symbol does not belong to the vector's ring");
    return static_cast<int>(std::count(x.indices().begin(), x.indices().end(), a.index));
}

int weight(const ChainRing& ring, const RingVector& x, Metric metric) {
    check_ring(ring, x);
    if (!ring.supports(metric))
        throw UnsupportedMetric(std::string(metric_name(metric)) + " weight is not defined on " + ring.name());
    int w = 0;
    for (int i = 0; i < x.size(); ++i) w += ring.symbol_weight(x.at(i), metric);
    return w;
}

int distance(const ChainRing& ring, const RingVector& x, const RingVector& y, Metric metric) {
    return weight(ring, vec_sub(ring, x, y), metric);
}

Element inner_product(const ChainRing& ring, const RingVector& x, const RingVector& y) {
    check_pair(ring, x, y);
    std::uint8_t s = 0;
    for (int i = 0; i < x.size(); ++i) s = ring.add_index(s, ring.mul_index(x.indices()[i], y.indices()[i]));
    return Element{ring.id(), s};
}

BinaryWord gray_z4(const ChainRing& ring, const RingVector& x) {
    if (ring.kind() != RingKind::Z4) throw RingMismatch("gray_z4 needs a vector over z4");
    check_ring(ring, x);
    static constexpr std::uint8_t hi[4] = {0, 0, 1, 1};
    static constexpr std::uint8_t lo[4] = {0, 1, 1, 0};
    BinaryWord w;
    w.bits.reserve(2 * x.size());
    for (auto c : x.indices()) {
        w.bits.push_back(hi[c]);
        w.bits.push_back(lo[c]);
    }
    return w;
}

BinaryWord gray_f2u(const ChainRing& ring, const RingVector& x) {
    if (ring.kind() != RingKind::F2u) throw RingMismatch("gray_f2u needs a vector over f2u");
    check_ring(ring, x);
    const int n = x.size();
    BinaryWord w;
    w.bits.assign(2 * n, 0);
    for (int i = 0; i < n; ++i) {
        const std::uint8_t c = x.indices()[i];
        const std::uint8_t a = c & 1, b = c >> 1;
        w.bits[i] = b;
        w.bits[n + i] = a ^ b;
    }
    return w;
}

BinaryWord gray_map(const ChainRing& ring, const RingVector& x) {
    switch (ring.kind()) {
    case RingKind::Z4: return gray_z4(ring, x);
    case RingKind::F2u: return gray_f2u(ring, x);
    case RingKind::Zpe: break;
    }
    throw UnsupportedMetric("no Gray map for ring " + ring.name());
}

}  // namespace ringlex
