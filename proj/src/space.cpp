#include "ringlex/space.hpp"

#include <limits>
#include <string>

#include "ringlex/errors.hpp"

namespace ringlex {

Space::Space(ChainRing ring, int n) : ring_(std::move(ring)), n_(n) {
    const int m = ring_.size();
    bits_ = std::bit_width(static_cast<unsigned>(m - 1));
    if (bits_ == 0) bits_ = 1;
    if (n < 0 || n * bits_ > 64)
        throw CapExceeded("length " + std::to_string(n) + " does not fit a packed word over " + ring_.name());
    lane_mask_ = (Word{1} << bits_) - 1;
    volume_ = 1;
    for (int i = 0; i < n; ++i) {
        if (volume_ > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(m)) {
            volume_ = std::numeric_limits<std::uint64_t>::max();
            break;
        }
        volume_ *= static_cast<std::uint64_t>(m);
    }
}

Word Space::encode(const RingVector& x) const {
    if (x.ring() != ring_.id()) throw RingMismatch("vector does not belong to ring " + ring_.name());
    if (x.size() != n_) throw LengthMismatch("expected length " + std::to_string(n_));
    Word w = 0;
    for (int i = 0; i < n_; ++i) w |= static_cast<Word>(x.indices()[i]) << (i * bits_);
    return w;
}

RingVector Space::decode(Word w) const {
    std::vector<std::uint8_t> c(n_);
    for (int i = 0; i < n_; ++i) c[i] = lane(w, i);
    return RingVector(ring_.id(), std::move(c));
}

std::uint64_t Space::rank(Word w) const {
    if (ring_.is_builtin()) return w;
    std::uint64_t k = 0;
    for (int i = n_ - 1; i >= 0; --i) k = k * ring_.size() + lane(w, i);
    return k;
}

Word Space::unrank(std::uint64_t k) const {
    if (ring_.is_builtin()) return k;
    Word w = 0;
    const auto m = static_cast<std::uint64_t>(ring_.size());
    for (int i = 0; i < n_; ++i) {
        w |= static_cast<Word>(k % m) << (i * bits_);
        k /= m;
    }
    return w;
}

Word Space::add_generic(Word x, Word y) const {
    Word w = 0;
    for (int i = 0; i < n_; ++i)
        w |= static_cast<Word>(ring_.add_index(lane(x, i), lane(y, i))) << (i * bits_);
    return w;
}

Word Space::neg_generic(Word x) const {
    Word w = 0;
    for (int i = 0; i < n_; ++i) w |= static_cast<Word>(ring_.neg_index(lane(x, i))) << (i * bits_);
    return w;
}

Word Space::scale_generic(std::uint8_t alpha, Word x) const {
    Word w = 0;
    for (int i = 0; i < n_; ++i) w |= static_cast<Word>(ring_.mul_index(alpha, lane(x, i))) << (i * bits_);
    return w;
}

int Space::weight_generic(Word x, Metric metric) const {
    if (!ring_.supports(metric))
        throw UnsupportedMetric(std::string(metric_name(metric)) + " weight is not defined on " + ring_.name());
    int w = 0;
    for (int i = 0; i < n_; ++i) w += lane(x, i) != 0 ? 1 : 0;
    return w;
}

std::uint8_t Space::inner(Word x, Word y) const {
    std::uint8_t s = 0;
    for (int i = 0; i < n_; ++i) s = ring_.add_index(s, ring_.mul_index(lane(x, i), lane(y, i)));
    return s;
}

}  // namespace ringlex
