#include "ringlex/code.hpp"

#include <string>

#include "ringlex/errors.hpp"

namespace ringlex {

Code::Code(Space space, std::vector<Word> words) : space_(std::move(space)), words_(std::move(words)) {
    std::sort(words_.begin(), words_.end());
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

std::vector<RingVector> Code::vectors() const {
    std::vector<RingVector> out;
    out.reserve(words_.size());
    for (Word w : words_) out.push_back(space_.decode(w));
    return out;
}

std::vector<Word> extend_span(const Space& space, const std::vector<Word>& code, Word generator) {
    if (std::binary_search(code.begin(), code.end(), generator)) return code;
    std::vector<Word> out;
    out.reserve(code.size() * space.ring().size());
    for (const Element& alpha : space.ring().scalar_order()) {
        const Word shift = space.scale(alpha.index, generator);
        for (Word c : code) out.push_back(space.add(shift, c));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Word> span_words(const Space& space, const std::vector<Word>& generators, std::uint64_t cap) {
    std::vector<Word> code{0};
    for (Word g : generators) {
        code = extend_span(space, code, g);
        if (code.size() > cap)
            throw CapExceeded("code has more than " + std::to_string(cap) + " words");
    }
    return code;
}

}  // namespace ringlex
