#include "ringlex/lexicode.hpp"

#include <random>
#include <sstream>

#include "ringlex/errors.hpp"
#include "ringlex/standard_form.hpp"

namespace ringlex {

namespace {

// Calls f with a cheap Word predicate specialised for the criterion variant.
template <class F>
decltype(auto) with_predicate(const Criterion& criterion, const Space& space, F&& f) {
    return std::visit(
        [&](const auto& v) -> decltype(auto) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Criterion::MinWeight>) {
                const Metric metric = v.metric;
                const int delta = v.delta;
                return f([&space, metric, delta](Word x) { return space.weight(x, metric) >= delta; });
            } else if constexpr (std::is_same_v<T, Criterion::SelfInnerZero>) {
                return f([&space](Word x) { return space.self_inner(x) == 0; });
            } else if constexpr (std::is_same_v<T, Criterion::EuclideanWeightMod8>) {
                return f([&space](Word x) { return space.weight(x, Metric::Euclidean) % 8 == 0; });
            } else if constexpr (std::is_same_v<T, Criterion::LeeWeightEven>) {
                return f([&space](Word x) { return space.weight(x, Metric::Lee) % 2 == 0; });
            } else {
                return f([&space, &v](Word x) { return v.predicate(space.decode(x)); });
            }
        },
        criterion.variant());
}

std::vector<std::uint8_t> gamma_powers(const ChainRing& ring) {
    std::vector<std::uint8_t> g;
    for (int j = 0; j < ring.e(); ++j) g.push_back(ring.gamma_pow(j).index);
    return g;
}

// P[gamma^j x + c] for all j < e and all c in code.
template <class Pred>
bool passes_all(const Space& space, const std::vector<std::uint8_t>& gpow, const std::vector<Word>& code, Word x,
                const Pred& pred) {
    for (std::uint8_t g : gpow) {
        const Word y = space.scale(g, x);
        for (Word c : code)
            if (!pred(space.add(y, c))) return false;
    }
    return true;
}

}  // namespace

// ---------------------------------------------------------------- Basis

bool generates_module(const ChainRing& ring, int n, const std::vector<RingVector>& vectors) {
    if (static_cast<int>(vectors.size()) != n) return false;
    for (const auto& v : vectors)
        if (v.ring() != ring.id() || v.size() != n) return false;
    return standard_form(ring, n, vectors).k1() == n;
}

Basis::Basis(ChainRing ring, std::vector<RingVector> vectors) : ring_(std::move(ring)), vectors_(std::move(vectors)) {
    const int n = static_cast<int>(vectors_.size());
    if (n == 0) throw InvalidBasis("basis is empty");
    for (const auto& v : vectors_) {
        if (v.ring() != ring_.id()) throw RingMismatch("basis vector does not belong to ring " + ring_.name());
        if (v.size() != n)
            throw InvalidBasis("basis vector of length " + std::to_string(v.size()) + " in a basis of " +
                               std::to_string(n) + " vectors");
    }
    if (!generates_module(ring_, n, vectors_))
        throw InvalidBasis("vectors do not generate " + ring_.name() + "^" + std::to_string(n));

    // Gauss-Jordan on [B | I]; every column has a unit pivot since B is invertible
    std::vector<std::vector<std::uint8_t>> a, inv(n, std::vector<std::uint8_t>(n, 0));
    for (const auto& v : vectors_) a.push_back(v.indices());
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    for (int c = 0; c < n; ++c) {
        int r = c;
        while (r < n && !ring_.is_unit(ring_.element(a[r][c]))) ++r;
        if (r == n) throw InvalidBasis("basis matrix is not invertible");
        std::swap(a[r], a[c]);
        std::swap(inv[r], inv[c]);
        const std::uint8_t s = ring_.inv_unit(ring_.element(a[c][c])).index;
        for (int j = 0; j < n; ++j) {
            a[c][j] = ring_.mul_index(s, a[c][j]);
            inv[c][j] = ring_.mul_index(s, inv[c][j]);
        }
        for (int r2 = 0; r2 < n; ++r2) {
            if (r2 == c || a[r2][c] == 0) continue;
            const std::uint8_t t = ring_.neg_index(a[r2][c]);
            for (int j = 0; j < n; ++j) {
                a[r2][j] = ring_.add_index(a[r2][j], ring_.mul_index(t, a[c][j]));
                inv[r2][j] = ring_.add_index(inv[r2][j], ring_.mul_index(t, inv[c][j]));
            }
        }
    }
    inverse_ = std::move(inv);
}

std::vector<std::uint8_t> Basis::coordinates(const RingVector& x) const {
    const int n = this->n();
    if (x.ring() != ring_.id()) throw RingMismatch("vector does not belong to ring " + ring_.name());
    if (x.size() != n) throw LengthMismatch("vector length differs from basis length " + std::to_string(n));
    // c = x B^{-1}
    std::vector<std::uint8_t> c(n, 0);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            c[j] = ring_.add_index(c[j], ring_.mul_index(x.indices()[k], inverse_[k][j]));
    return c;
}

int Basis::step_of(const RingVector& x) const {
    const auto c = coordinates(x);
    for (int j = static_cast<int>(c.size()) - 1; j >= 0; --j)
        if (c[j] != 0) return j + 1;
    return 0;
}

Basis Basis::canonical(ChainRing ring, int n) {
    if (n <= 0) throw InvalidBasis("basis length must be positive");
    std::vector<RingVector> v;
    for (int i = 0; i < n; ++i) v.push_back(RingVector::unit_vector(ring, n, i));
    return Basis(std::move(ring), std::move(v));
}

// ---------------------------------------------------------------- Criterion

Criterion Criterion::min_weight(Metric metric, int delta) {
    if (delta < 1) throw DomainError("minimum-weight criterion needs delta >= 1");
    return Criterion(MinWeight{metric, delta});
}

Criterion Criterion::custom(std::string name, std::function<bool(const RingVector&)> predicate,
                            bool declared_multiplicative) {
    if (!predicate) throw DomainError("custom criterion needs a predicate");
    return Criterion(Custom{std::move(name), std::move(predicate), declared_multiplicative});
}

Criterion Criterion::parse(const std::string& name, std::optional<int> delta) {
    auto need_delta = [&](Metric m) {
        if (!delta) throw ParseError("criterion " + name + " needs --delta");
        return min_weight(m, *delta);
    };
    if (name == "min-hamming") return need_delta(Metric::Hamming);
    if (name == "min-lee") return need_delta(Metric::Lee);
    if (name == "min-euclidean") return need_delta(Metric::Euclidean);
    if (name == "self-inner-zero") return self_inner_zero();
    if (name == "euclid-mod8") return euclidean_mod8();
    if (name == "lee-even") return lee_even();
    throw ParseError("unknown criterion '" + name + "'");
}

std::optional<int> Criterion::delta() const {
    if (const auto* mw = std::get_if<MinWeight>(&v_)) return mw->delta;
    return std::nullopt;
}

std::optional<Metric> Criterion::min_weight_metric() const {
    if (const auto* mw = std::get_if<MinWeight>(&v_)) return mw->metric;
    return std::nullopt;
}

std::string Criterion::name() const {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, MinWeight>) return std::string("min-") + metric_name(v.metric);
            else if constexpr (std::is_same_v<T, SelfInnerZero>) return "self-inner-zero";
            else if constexpr (std::is_same_v<T, EuclideanWeightMod8>) return "euclid-mod8";
            else if constexpr (std::is_same_v<T, LeeWeightEven>) return "lee-even";
            else return "custom:" + v.name;
        },
        v_);
}

std::string Criterion::describe() const {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, MinWeight>) {
                const char* w = v.metric == Metric::Hamming ? "wt_H" : v.metric == Metric::Lee ? "wt_L" : "wt_E";
                return std::string(w) + "(x) >= " + std::to_string(v.delta);
            } else if constexpr (std::is_same_v<T, SelfInnerZero>) {
                return "x.x = 0";
            } else if constexpr (std::is_same_v<T, EuclideanWeightMod8>) {
                return "wt_E(x) = 0 (mod 8)";
            } else if constexpr (std::is_same_v<T, LeeWeightEven>) {
                return "wt_L(x) = 0 (mod 2)";
            } else {
                return v.name;
            }
        },
        v_);
}

void Criterion::check_supported(const ChainRing& ring) const {
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, MinWeight>) {
                if (!ring.supports(v.metric))
                    throw UnsupportedMetric(std::string(metric_name(v.metric)) + " weight is not defined on " +
                                            ring.name());
            } else if constexpr (std::is_same_v<T, EuclideanWeightMod8> || std::is_same_v<T, LeeWeightEven>) {
                if (!ring.is_builtin()) throw UnsupportedMetric(name() + " needs a 4-element built-in ring");
            }
        },
        v_);
}

bool Criterion::evaluate(const ChainRing& ring, const RingVector& x) const {
    check_supported(ring);
    Space space(ring, x.size());
    return evaluate(space, space.encode(x));
}

bool Criterion::evaluate(const Space& space, Word x) const {
    return with_predicate(*this, space, [x](const auto& pred) { return pred(x); });
}

MultiplicativityResult check_multiplicative(const Criterion& criterion, const ChainRing& ring, int n,
                                            std::uint64_t sample_budget, std::uint64_t seed) {
    criterion.check_supported(ring);
    Space space(ring, n);
    std::vector<std::uint8_t> units;
    for (const Element& u : ring.units()) units.push_back(u.index);

    MultiplicativityResult result;
    result.exhaustive = space.volume() <= sample_budget;
    const std::uint64_t count = result.exhaustive ? space.volume() : sample_budget;
    std::mt19937_64 rng(seed);

    with_predicate(criterion, space, [&](const auto& pred) {
        for (std::uint64_t k = 0; k < count; ++k) {
            Word x = 0;
            if (result.exhaustive) {
                x = space.unrank(k);
            } else {
                for (int i = 0; i < n; ++i)
                    x = space.with_lane(x, i, static_cast<std::uint8_t>(rng() % ring.size()));
            }
            ++result.vectors_checked;
            if (!pred(x)) continue;
            for (std::uint8_t beta : units) {
                if (!pred(space.scale(beta, x))) {
                    result.holds = false;
                    result.counterexample = space.decode(x);
                    result.beta = ring.element(beta);
                    return;
                }
            }
        }
    });
    return result;
}

// ---------------------------------------------------------------- B-order

BOrderStream::BOrderStream(const Basis& basis) : space_(basis.ring(), basis.n()) {
    const ChainRing& ring = basis.ring();
    const int m = ring.size();
    for (const RingVector& b : basis.vectors()) {
        const Word bw = space_.encode(b);
        std::vector<Word> mult;
        for (const Element& alpha : ring.scalar_order()) mult.push_back(space_.scale(alpha.index, bw));
        std::vector<Word> d;
        for (int s = 0; s + 1 < m; ++s) d.push_back(space_.sub(mult[s + 1], mult[s]));
        delta_.push_back(std::move(d));
        wrap_.push_back(space_.sub(mult[0], mult[m - 1]));
        first_.push_back(mult[1]);
    }
    digits_.assign(basis.n(), 0);
}

void BOrderStream::seek_step(int i) {
    const int n = space_.n();
    if (i < 1 || i > n) throw DomainError("seek_step: step out of range");
    std::fill(digits_.begin(), digits_.end(), 0);
    digits_[i - 1] = 1;
    current_ = first_[i - 1];
    step_ = i;
    position_ = 1;
    for (int j = 1; j < i; ++j) position_ *= static_cast<std::uint64_t>(space_.ring().size());
    started_ = true;
    done_ = false;
}

bool BOrderStream::next() {
    if (done_) return false;
    if (!started_) {
        started_ = true;
        current_ = 0;
        step_ = 0;
        position_ = 0;
        return true;
    }
    const int m = space_.ring().size();
    const int n = space_.n();
    for (int j = 0; j < n; ++j) {
        if (digits_[j] + 1 < m) {
            current_ = space_.add(current_, delta_[j][digits_[j]]);
            ++digits_[j];
            if (j + 1 > step_) step_ = j + 1;
            ++position_;
            return true;
        }
        current_ = space_.add(current_, wrap_[j]);
        digits_[j] = 0;
    }
    done_ = true;
    return false;
}

// ---------------------------------------------------------------- build

std::vector<RingVector> BuildResult::generator_vectors() const {
    std::vector<RingVector> out;
    for (const auto& g : generators) out.push_back(g.vector);
    return out;
}

Code BuildResult::chain_code(int i) const {
    Space space(ring, n);
    std::vector<Word> gens;
    for (const auto& g : generators)
        if (g.step <= i) gens.push_back(space.encode(g.vector));
    return Code(space, span_words(space, gens, std::numeric_limits<std::uint64_t>::max()));
}

BuildResult build_lexicode(const Basis& basis, const Criterion& criterion, const BuildOptions& options) {
    const ChainRing& ring = basis.ring();
    const int n = basis.n();
    criterion.check_supported(ring);

    if (const auto* custom = std::get_if<Criterion::Custom>(&criterion.variant())) {
        if (!custom->declared_multiplicative)
            throw NonMultiplicative("custom criterion '" + custom->name + "' is not declared multiplicative");
    }
    const auto mult = check_multiplicative(criterion, ring, std::min(n, options.check_n), options.sample_budget);
    if (!mult.holds) {
        std::ostringstream os;
        os << "criterion " << criterion.name() << " is not multiplicative: P[x] holds for x = "
           << format_vector(ring, *mult.counterexample) << " but not for " << ring.symbol(*mult.beta) << "x";
        throw NonMultiplicative(os.str());
    }

    Space space(ring, n);
    const auto gpow = gamma_powers(ring);
    std::vector<Word> code{0};

    BuildResult result{ring, n, {}, {1}, Code(space, {0}), {}};
    BOrderStream stream(basis);

    with_predicate(criterion, space, [&](const auto& pred) {
        for (int i = 1; i <= n; ++i) {
            TraceEntry entry;
            entry.step = i;
            std::optional<Word> selected;
            stream.seek_step(i);
            do {
                ++entry.candidates_examined;
                const Word x = stream.word();
                if (passes_all(space, gpow, code, x, pred)) {
                    selected = x;
                    break;
                }
            } while (stream.next() && stream.step() == i);
            if (selected) {
                code = extend_span(space, code, *selected);
                if (code.size() > options.cap)
                    throw CapExceeded("lexicode has more than " + std::to_string(options.cap) + " words");
                entry.selected = space.decode(*selected);
                result.generators.push_back(Generator{i, *entry.selected});
            }
            result.chain_sizes.push_back(code.size());
            result.trace.push_back(std::move(entry));
        }
    });
    result.code = Code(space, std::move(code));
    return result;
}

// ---------------------------------------------------------------- checks

LexicodeCheck check_lexicode(const Code& code, const Criterion& criterion) {
    const Space& space = code.space();
    criterion.check_supported(space.ring());
    LexicodeCheck out;
    with_predicate(criterion, space, [&](const auto& pred) {
        for (Word w : code.words()) {
            if (w != 0 && !pred(w)) {
                out.all_satisfy = false;
                out.violation = space.decode(w);
                return;
            }
        }
    });

    std::vector<Word> spanned{0};
    for (Word w : code.words()) {
        if (std::binary_search(spanned.begin(), spanned.end(), w)) continue;
        spanned = extend_span(space, spanned, w);
        if (spanned.size() > code.size()) break;
    }
    if (spanned != code.words()) {
        out.closed = false;
        for (Word w : spanned) {
            if (!code.contains(w)) {
                if (!out.violation) out.violation = space.decode(w);
                break;
            }
        }
    }
    return out;
}

std::vector<RingVector> verify_maximality(const Code& code, const Criterion& criterion, std::uint64_t cap) {
    const Space& space = code.space();
    criterion.check_supported(space.ring());
    if (space.volume() > cap)
        throw CapExceeded("maximality scan over " + std::to_string(space.volume()) + " vectors exceeds cap " +
                          std::to_string(cap));
    const auto gpow = gamma_powers(space.ring());
    const auto& words = code.words();
    const bool linear = check_lexicode(code, Criterion::custom("any", [](const RingVector&) { return true; }, true))
                            .closed;

    std::vector<Word> found;
    with_predicate(criterion, space, [&](const auto& pred) {
        if (!linear) {
            for (std::uint64_t k = 0; k < space.volume(); ++k) {
                const Word x = space.unrank(k);
                if (!code.contains(x) && passes_all(space, gpow, words, x, pred)) found.push_back(x);
            }
            return;
        }
        // The test depends only on the coset x + C, so scan one member per coset.
        std::vector<bool> seen(space.volume(), false);
        for (std::uint64_t k = 0; k < space.volume(); ++k) {
            if (seen[k]) continue;
            const Word x = space.unrank(k);
            for (Word c : words) seen[space.rank(space.add(x, c))] = true;
            if (code.contains(x)) continue;
            if (passes_all(space, gpow, words, x, pred))
                for (Word c : words) found.push_back(space.add(x, c));
        }
    });
    std::sort(found.begin(), found.end());
    std::vector<RingVector> out;
    for (Word w : found) out.push_back(space.decode(w));
    return out;
}

}  // namespace ringlex
