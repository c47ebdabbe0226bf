#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ringlex/ring.hpp"

namespace ringlex {

// An element of R^n. Coordinates are stored as canonical element indices.
class RingVector {
public:
    RingVector() = default;
    RingVector(RingId ring, std::vector<std::uint8_t> coords) : ring_(ring), coords_(std::move(coords)) {}

    static RingVector zero(const ChainRing& ring, int n) { return RingVector(ring.id(), std::vector<std::uint8_t>(n, 0)); }
    // Vector with a one in coordinate i.
    static RingVector unit_vector(const ChainRing& ring, int n, int i);

    RingId ring() const { return ring_; }
    int size() const { return static_cast<int>(coords_.size()); }
    Element at(int i) const { return Element{ring_, coords_.at(i)}; }
    const std::vector<std::uint8_t>& indices() const { return coords_; }
    bool is_zero() const;

    friend bool operator==(const RingVector&, const RingVector&) = default;
    friend auto operator<=>(const RingVector& a, const RingVector& b) { return a.coords_ <=> b.coords_; }

private:
    RingId ring_ = 0;
    std::vector<std::uint8_t> coords_;
};

// A word of F_2^N, stored one bit per byte.
struct BinaryWord {
    std::vector<std::uint8_t> bits;

    int size() const { return static_cast<int>(bits.size()); }
    int weight() const;
    std::string to_string() const;

    friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
    friend auto operator<=>(const BinaryWord& a, const BinaryWord& b) { return a.bits <=> b.bits; }
};

// Text form: one symbol per coordinate, e.g. "11112233" or "1uv0".
RingVector parse_vector(const ChainRing& ring, std::string_view text);
std::string format_vector(const ChainRing& ring, const RingVector& x);

RingVector vec_add(const ChainRing& ring, const RingVector& x, const RingVector& y);
RingVector vec_sub(const ChainRing& ring, const RingVector& x, const RingVector& y);
RingVector vec_neg(const ChainRing& ring, const RingVector& x);
RingVector scalar_mul(const ChainRing& ring, Element alpha, const RingVector& x);

// n_a(x): number of coordinates equal to a.
int symbol_count(const RingVector& x, Element a);

int weight(const ChainRing& ring, const RingVector& x, Metric metric);
int distance(const ChainRing& ring, const RingVector& x, const RingVector& y, Metric metric);

// x . y = sum x_i y_i, evaluated in R.
Element inner_product(const ChainRing& ring, const RingVector& x, const RingVector& y);

// Z4 Gray map, per symbol 0->00, 1->01, 2->11, 3->10; symbol i occupies bits
// 2i and 2i+1.
BinaryWord gray_z4(const ChainRing& ring, const RingVector& x);

// F2+uF2 Gray map Phi(a + ub) = (b, a + b), applied to the whole vector: the
// n-bit block b_1..b_n followed by the n-bit block a_1+b_1..a_n+b_n.
BinaryWord gray_f2u(const ChainRing& ring, const RingVector& x);

// Dispatches to the Gray map of a built-in ring.
BinaryWord gray_map(const ChainRing& ring, const RingVector& x);

}  // namespace ringlex
