#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ringlex/code.hpp"
#include "ringlex/ring.hpp"
#include "ringlex/space.hpp"
#include "ringlex/vector.hpp"

namespace ringlex {

// An ordered basis b_1..b_n of R^n. Construction rejects vectors that do not
// generate R^n.
class Basis {
public:
    Basis(ChainRing ring, std::vector<RingVector> vectors);
    static Basis canonical(ChainRing ring, int n);

    const ChainRing& ring() const { return ring_; }
    int n() const { return static_cast<int>(vectors_.size()); }
    const std::vector<RingVector>& vectors() const { return vectors_; }

    // c with x = sum_j c_j b_j.
    std::vector<std::uint8_t> coordinates(const RingVector& x) const;
    // The i with x in V_i \ V_{i-1}; 0 for the zero vector.
    int step_of(const RingVector& x) const;

    friend bool operator==(const Basis& a, const Basis& b) { return a.ring_ == b.ring_ && a.vectors_ == b.vectors_; }

private:
    ChainRing ring_;
    std::vector<RingVector> vectors_;
    std::vector<std::vector<std::uint8_t>> inverse_;
};

// True when the vectors generate R^n (n vectors of length n with k1 = n).
bool generates_module(const ChainRing& ring, int n, const std::vector<RingVector>& vectors);

// The selection property P of the greedy construction.
class Criterion {
public:
    struct MinWeight {
        Metric metric = Metric::Hamming;
        int delta = 1;
    };
    struct SelfInnerZero {};
    struct EuclideanWeightMod8 {};
    struct LeeWeightEven {};
    struct Custom {
        std::string name;
        std::function<bool(const RingVector&)> predicate;
        bool declared_multiplicative = false;
    };
    using Variant = std::variant<MinWeight, SelfInnerZero, EuclideanWeightMod8, LeeWeightEven, Custom>;

    static Criterion min_weight(Metric metric, int delta);
    static Criterion self_inner_zero() { return Criterion(SelfInnerZero{}); }
    static Criterion euclidean_mod8() { return Criterion(EuclideanWeightMod8{}); }
    static Criterion lee_even() { return Criterion(LeeWeightEven{}); }
    static Criterion custom(std::string name, std::function<bool(const RingVector&)> predicate,
                            bool declared_multiplicative);

    // CLI names: min-hamming, min-lee, min-euclidean (these need delta),
    // self-inner-zero, euclid-mod8, lee-even.
    static Criterion parse(const std::string& name, std::optional<int> delta);

    const Variant& variant() const { return v_; }
    bool is_custom() const { return std::holds_alternative<Custom>(v_); }
    std::optional<int> delta() const;
    std::optional<Metric> min_weight_metric() const;

    // CLI name, e.g. "min-lee".
    std::string name() const;
    // Human readable, e.g. "wt_L(x) >= 4".
    std::string describe() const;

    // Throws UnsupportedMetric when the ring lacks the weight this needs.
    void check_supported(const ChainRing& ring) const;

    bool evaluate(const ChainRing& ring, const RingVector& x) const;
    bool evaluate(const Space& space, Word x) const;

private:
    explicit Criterion(Variant v) : v_(std::move(v)) {}
    Variant v_;
};

struct MultiplicativityResult {
    bool holds = true;
    bool exhaustive = false;
    std::uint64_t vectors_checked = 0;
    // First x with P[x] but not P[beta x].
    std::optional<RingVector> counterexample;
    std::optional<Element> beta;
};

// Checks P[x] => P[beta x] for all units beta: exhaustively over R^n when
// m^n <= sample_budget, otherwise on sample_budget seeded random vectors.
MultiplicativityResult check_multiplicative(const Criterion& criterion, const ChainRing& ring, int n,
                                            std::uint64_t sample_budget = 1u << 16, std::uint64_t seed = 1);

// The B-ordering of R^n: V_0 = 0 and V_i = alpha_1 b_i + V_{i-1}, ...,
// alpha_m b_i + V_{i-1} with alpha_1 = 0, so V_{i-1} is the leading block.
// Yields each of the m^n vectors once, tagged with its step i (the index of
// the first V_i containing it; 0 for the zero vector).
class BOrderStream {
public:
    explicit BOrderStream(const Basis& basis);

    // Advances; false once all m^n vectors have been produced.
    bool next();
    // Jumps to the first vector of V_i \ V_{i-1} (1 <= i <= n).
    void seek_step(int i);
    int step() const { return step_; }
    Word word() const { return current_; }
    RingVector vector() const { return space_.decode(current_); }
    std::uint64_t position() const { return position_; }
    const Space& space() const { return space_; }

private:
    Space space_;
    std::vector<std::vector<Word>> delta_;  // delta_[j][d]: move digit j from d to d+1
    std::vector<Word> wrap_;                // reset digit j from m-1 to 0
    std::vector<Word> first_;               // alpha_2 b_j
    std::vector<int> digits_;
    Word current_ = 0;
    int step_ = 0;
    std::uint64_t position_ = 0;
    bool started_ = false;
    bool done_ = false;
};

struct Generator {
    int step = 0;  // the basis index i with a_i in V_i \ V_{i-1}
    RingVector vector;
};

struct TraceEntry {
    int step = 0;
    std::optional<RingVector> selected;
    std::uint64_t candidates_examined = 0;
};

struct BuildResult {
    ChainRing ring;
    int n = 0;
    std::vector<Generator> generators;
    // |C_0|, ..., |C_n|
    std::vector<std::uint64_t> chain_sizes;
    Code code;
    std::vector<TraceEntry> trace;

    std::vector<RingVector> generator_vectors() const;
    // C_i spanned by the generators selected at steps <= i.
    Code chain_code(int i) const;
};

struct BuildOptions {
    // Multiplicativity is confirmed on R^k for k = min(n, check_n).
    int check_n = 4;
    std::uint64_t sample_budget = 1u << 16;
    std::uint64_t cap = kDefaultCap;
};

// Greedy construction of the lexicode C(B, P): at each step i select the first
// a in V_i \ V_{i-1} (B-order) with P[gamma^j a + c] for all 0 <= j < e and
// c in C_{i-1}, then C_i = union over alpha of (alpha a + C_{i-1}).
//
// Refuses criteria that are not multiplicative (NonMultiplicative) and custom
// criteria that do not declare themselves multiplicative.
BuildResult build_lexicode(const Basis& basis, const Criterion& criterion, const BuildOptions& options = {});

// Linearity and the selection property on a finished code.
struct LexicodeCheck {
    bool all_satisfy = true;   // P holds for every nonzero codeword
    bool closed = true;        // closed under + and scalar multiplication
    std::optional<RingVector> violation;
    bool ok() const { return all_satisfy && closed; }
};

LexicodeCheck check_lexicode(const Code& code, const Criterion& criterion);
inline LexicodeCheck check_lexicode(const BuildResult& result, const Criterion& criterion) {
    return check_lexicode(result.code, criterion);
}

// Every x in R^n outside C with P[gamma^j x + c] for all j and all c in C; a
// lexicode admits none. Throws CapExceeded when m^n > cap.
std::vector<RingVector> verify_maximality(const Code& code, const Criterion& criterion,
                                          std::uint64_t cap = kDefaultCap);
inline std::vector<RingVector> verify_maximality(const BuildResult& result, const Criterion& criterion,
                                                 std::uint64_t cap = kDefaultCap) {
    return verify_maximality(result.code, criterion, cap);
}

}  // namespace ringlex
