#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "ringlex/space.hpp"

namespace ringlex {

// Default limit on exhaustive enumerations: 4^10 vectors.
inline constexpr std::uint64_t kDefaultCap = std::uint64_t{1} << 20;

// A set of codewords in R^n, held as sorted packed words.
class Code {
public:
    Code(Space space, std::vector<Word> words);

    const Space& space() const { return space_; }
    const ChainRing& ring() const { return space_.ring(); }
    int n() const { return space_.n(); }
    std::size_t size() const { return words_.size(); }
    const std::vector<Word>& words() const { return words_; }

    bool contains(Word w) const { return std::binary_search(words_.begin(), words_.end(), w); }
    bool contains(const RingVector& x) const { return contains(space_.encode(x)); }
    bool is_zero_code() const { return words_.size() == 1 && words_.front() == 0; }

    std::vector<RingVector> vectors() const;

    friend bool operator==(const Code& a, const Code& b) {
        return a.ring() == b.ring() && a.n() == b.n() && a.words_ == b.words_;
    }

private:
    Space space_;
    std::vector<Word> words_;
};

// R-linear span of packed generators. Throws CapExceeded once the span grows
// past `cap` words.
std::vector<Word> span_words(const Space& space, const std::vector<Word>& generators, std::uint64_t cap = kDefaultCap);

// Extends a sorted, linear word set by all multiples of one more generator.
std::vector<Word> extend_span(const Space& space, const std::vector<Word>& code, Word generator);

}  // namespace ringlex
