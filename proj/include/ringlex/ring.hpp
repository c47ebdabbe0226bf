#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace ringlex {

// Identifies a ring instance; two elements may only be combined when their
// ids agree.
using RingId = std::uint32_t;

enum class RingKind : std::uint8_t { Z4, F2u, Zpe };

enum class Metric : std::uint8_t { Hamming, Lee, Euclidean };

const char* metric_name(Metric metric);

// An element of a finite chain ring, named by its canonical index in [0, m).
//
// Z4 uses 0,1,2,3. F2+uF2 uses 0 -> 0, 1 -> 1, 2 -> u, 3 -> v (= 1+u).
// Z_{p^e} uses the residues 0..p^e-1.
struct Element {
    RingId ring = 0;
    std::uint8_t index = 0;

    friend bool operator==(const Element&, const Element&) = default;
};

// A finite chain ring R with maximal ideal <gamma> of nilpotency index e and
// residue field F_{p^r}; |R| = p^{re}.
//
// Arithmetic is table driven. Instances are immutable and cheap to copy (the
// tables are shared).
class ChainRing {
public:
    RingId id() const { return data_->id; }
    RingKind kind() const { return data_->kind; }
    const std::string& name() const { return data_->name; }

    int p() const { return data_->p; }
    int r() const { return data_->r; }
    int e() const { return data_->e; }
    int size() const { return data_->m; }

    // True for the two 4-element rings, which carry Lee/Euclidean weights,
    // Gray maps and the 4^k1 2^k2 type.
    bool is_builtin() const { return data_->kind != RingKind::Zpe; }

    Element element(int index) const;
    Element zero() const { return element(0); }
    Element one() const { return element(1); }
    Element gamma() const { return element(data_->gamma); }

    // All m elements; position 0 is zero. Drives the B-ordering.
    const std::vector<Element>& scalar_order() const { return data_->scalar_order; }

    Element add(Element x, Element y) const;
    Element mul(Element x, Element y) const;
    Element neg(Element x) const;
    Element sub(Element x, Element y) const { return add(x, neg(y)); }

    bool is_unit(Element x) const;
    Element inv_unit(Element x) const;
    std::vector<Element> units() const;

    // gamma^j for 0 <= j <= e.
    Element gamma_pow(int j) const;

    // Largest j with x in <gamma^j>; e for zero.
    int valuation(Element x) const;

    // Coset of x modulo <gamma>, as an index in [0, p^r).
    int residue_class(Element x) const;

    // Weight of a single symbol. Lee and Euclidean weights exist only on the
    // built-in rings.
    int symbol_weight(Element x, Metric metric) const;
    bool supports(Metric metric) const;

    char symbol(Element x) const;
    Element parse_symbol(char c) const;

    // Raw index arithmetic for hot loops; no ring checks.
    std::uint8_t add_index(std::uint8_t a, std::uint8_t b) const { return data_->add[a * data_->m + b]; }
    std::uint8_t mul_index(std::uint8_t a, std::uint8_t b) const { return data_->mul[a * data_->m + b]; }
    std::uint8_t neg_index(std::uint8_t a) const { return data_->neg[a]; }

    friend bool operator==(const ChainRing& a, const ChainRing& b) { return a.id() == b.id(); }

private:
    struct Data {
        RingId id = 0;
        RingKind kind = RingKind::Zpe;
        std::string name;
        int p = 0, r = 1, e = 0, m = 0;
        std::uint8_t gamma = 0;
        std::vector<Element> scalar_order;
        std::vector<std::uint8_t> add, mul, neg;
        std::vector<bool> unit;
        std::vector<std::uint8_t> inverse;
        std::vector<std::uint8_t> valuation;
        std::vector<std::uint8_t> residue;
        std::vector<int> lee, euclid;
        std::string symbols;
    };

    explicit ChainRing(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
    static ChainRing finish(Data data);
    void check(Element x) const;

    std::shared_ptr<const Data> data_;

    friend ChainRing make_z4();
    friend ChainRing make_f2u();
    friend ChainRing make_zpe(int p, int e);
};

// Z4: p=2, r=1, e=2, gamma=2.
ChainRing make_z4();
// F2+uF2 with u^2 = 0: p=2, r=1, e=2, gamma=u.
ChainRing make_f2u();
// Z_{p^e} for prime p and p^e <= 16. Only Hamming weight is available.
ChainRing make_zpe(int p, int e);

// "z4", "f2u", or "z<q>" for a prime power q <= 16.
ChainRing ring_by_name(const std::string& name);

}  // namespace ringlex
