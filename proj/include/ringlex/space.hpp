#pragma once

#include <bit>
#include <cstdint>

#include "ringlex/ring.hpp"
#include "ringlex/vector.hpp"

namespace ringlex {

// Packed vector: coordinate i lives in lane i of lane_bits() bits.
using Word = std::uint64_t;

// The ambient module R^n in packed form. All exhaustive kernels (lexicode
// search, code enumeration, covering radius) work on Words.
//
// The 4-element rings use 2-bit lanes and branch-free SWAR arithmetic; for
// them a Word is also its own rank in the base-4 numbering of R^n.
class Space {
public:
    Space(ChainRing ring, int n);

    const ChainRing& ring() const { return ring_; }
    int n() const { return n_; }
    int lane_bits() const { return bits_; }

    // m^n, saturated at UINT64_MAX.
    std::uint64_t volume() const { return volume_; }

    Word encode(const RingVector& x) const;
    RingVector decode(Word w) const;

    std::uint8_t lane(Word w, int i) const { return static_cast<std::uint8_t>((w >> (i * bits_)) & lane_mask_); }
    Word with_lane(Word w, int i, std::uint8_t value) const {
        const int s = i * bits_;
        return (w & ~(lane_mask_ << s)) | (static_cast<Word>(value) << s);
    }

    // Rank in the base-m numbering where coordinate 0 is the least
    // significant digit, and its inverse.
    std::uint64_t rank(Word w) const;
    Word unrank(std::uint64_t k) const;

    Word add(Word x, Word y) const {
        switch (ring_.kind()) {
        case RingKind::Z4: {
            const Word s = x ^ y;
            const Word carry = (x & y & kLow) << 1;
            return (s & kLow) | ((s ^ carry) & kHigh);
        }
        case RingKind::F2u: return x ^ y;
        case RingKind::Zpe: break;
        }
        return add_generic(x, y);
    }

    Word neg(Word x) const {
        switch (ring_.kind()) {
        case RingKind::Z4: return x ^ ((x & kLow) << 1);
        case RingKind::F2u: return x;
        case RingKind::Zpe: break;
        }
        return neg_generic(x);
    }

    Word sub(Word x, Word y) const { return add(x, neg(y)); }

    // alpha * x for a scalar given by its element index.
    Word scale(std::uint8_t alpha, Word x) const {
        if (ring_.is_builtin()) {
            // both rings share the multiplication table: 2 and u double the
            // constant part into the nilpotent lane bit, 3 and v add it
            switch (alpha) {
            case 0: return 0;
            case 1: return x;
            case 2: return (x & kLow) << 1;
            default: return x ^ ((x & kLow) << 1);
            }
        }
        return scale_generic(alpha, x);
    }

    int weight(Word x, Metric metric) const {
        if (ring_.is_builtin()) {
            const Word lo = x & kLow;
            const Word hi = (x >> 1) & kLow;
            switch (metric) {
            case Metric::Hamming: return std::popcount(lo | hi);
            case Metric::Lee: return std::popcount(lo) + 2 * std::popcount(hi & ~lo);
            case Metric::Euclidean: return std::popcount(lo) + 4 * std::popcount(hi & ~lo);
            }
        }
        return weight_generic(x, metric);
    }

    // x . x as an element index.
    std::uint8_t self_inner(Word x) const {
        switch (ring_.kind()) {
        // unit squares are 1 and gamma squares vanish in both rings
        case RingKind::Z4: return static_cast<std::uint8_t>(std::popcount(x & kLow) & 3);
        case RingKind::F2u: return static_cast<std::uint8_t>(std::popcount(x & kLow) & 1);
        case RingKind::Zpe: break;
        }
        return inner(x, x);
    }

    std::uint8_t inner(Word x, Word y) const;

private:
    static constexpr Word kLow = 0x5555555555555555ULL;
    static constexpr Word kHigh = 0xAAAAAAAAAAAAAAAAULL;

    Word add_generic(Word x, Word y) const;
    Word neg_generic(Word x) const;
    Word scale_generic(std::uint8_t alpha, Word x) const;
    int weight_generic(Word x, Metric metric) const;

    ChainRing ring_;
    int n_ = 0;
    int bits_ = 0;
    Word lane_mask_ = 0;
    std::uint64_t volume_ = 0;
};

}  // namespace ringlex
