#include "ringlex/ring.hpp"

#include <string>

#include "ringlex/errors.hpp"

namespace ringlex {

const char* metric_name(Metric metric) {
    switch (metric) {
    case Metric::Hamming: return "hamming";
    case Metric::Lee: return "lee";
    case Metric::Euclidean: return "euclidean";
    }
    return "?";
}

namespace {

RingId make_id(RingKind kind, int p, int e) {
    return (static_cast<RingId>(kind) << 16) | (static_cast<RingId>(p) << 8) | static_cast<RingId>(e);
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

ChainRing ChainRing::finish(Data d) {
    const int m = d.m;
    for (int i = 0; i < m; ++i) d.scalar_order.push_back(Element{d.id, static_cast<std::uint8_t>(i)});

    d.neg.assign(m, 0);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (d.add[a * m + b] == 0) d.neg[a] = static_cast<std::uint8_t>(b);

    d.unit.assign(m, false);
    d.inverse.assign(m, 0);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (d.mul[a * m + b] == 1) {
                d.unit[a] = true;
                d.inverse[a] = static_cast<std::uint8_t>(b);
            }

    // valuation: x lies in <gamma^j> iff x = gamma^j * t for some t
    d.valuation.assign(m, 0);
    std::uint8_t g = 1;
    for (int j = 0; j <= d.e; ++j) {
        for (int t = 0; t < m; ++t) {
            const std::uint8_t x = d.mul[g * m + t];
            d.valuation[x] = static_cast<std::uint8_t>(j);
        }
        g = d.mul[g * m + d.gamma];
    }
    // zero is reached at every level; the loop leaves it at e
    return ChainRing(std::make_shared<const Data>(std::move(d)));
}

ChainRing make_z4() {
    ChainRing::Data d;
    d.kind = RingKind::Z4;
    d.id = make_id(d.kind, 2, 2);
    d.name = "z4";
    d.p = 2;
    d.e = 2;
    d.m = 4;
    d.gamma = 2;
    d.add.resize(16);
    d.mul.resize(16);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            d.add[a * 4 + b] = static_cast<std::uint8_t>((a + b) % 4);
            d.mul[a * 4 + b] = static_cast<std::uint8_t>((a * b) % 4);
        }
    d.residue = {0, 1, 0, 1};
    d.lee = {0, 1, 2, 1};
    d.euclid = {0, 1, 4, 1};
    d.symbols = "0123";
    return ChainRing::finish(std::move(d));
}

ChainRing make_f2u() {
    ChainRing::Data d;
    d.kind = RingKind::F2u;
    d.id = make_id(d.kind, 2, 2);
    d.name = "f2u";
    d.p = 2;
    d.e = 2;
    d.m = 4;
    d.gamma = 2;
    d.add.resize(16);
    d.mul.resize(16);
    // index bit 0 is the constant part a, bit 1 the u-part b of a + ub
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) {
            const int a1 = x & 1, b1 = x >> 1, a2 = y & 1, b2 = y >> 1;
            d.add[x * 4 + y] = static_cast<std::uint8_t>(x ^ y);
            const int a = a1 & a2;
            const int b = (a1 & b2) ^ (b1 & a2);
            d.mul[x * 4 + y] = static_cast<std::uint8_t>(a | (b << 1));
        }
    d.residue = {0, 1, 0, 1};
    d.lee = {0, 1, 2, 1};
    d.euclid = {0, 1, 4, 1};
    d.symbols = "01uv";
    return ChainRing::finish(std::move(d));
}

ChainRing make_zpe(int p, int e) {
    if (!is_prime(p) || e < 1) throw DomainError("make_zpe: need prime p and e >= 1");
    int q = 1;
    for (int i = 0; i < e; ++i) q *= p;
    if (q > 16) throw DomainError("make_zpe: p^e must not exceed 16");
    ChainRing::Data d;
    d.kind = RingKind::Zpe;
    d.id = make_id(d.kind, p, e);
    d.name = "z" + std::to_string(q) + (q == 4 ? "g" : "");
    d.p = p;
    d.e = e;
    d.m = q;
    d.gamma = static_cast<std::uint8_t>(p % q);
    d.add.resize(q * q);
    d.mul.resize(q * q);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            d.add[a * q + b] = static_cast<std::uint8_t>((a + b) % q);
            d.mul[a * q + b] = static_cast<std::uint8_t>((a * b) % q);
        }
    for (int a = 0; a < q; ++a) d.residue.push_back(static_cast<std::uint8_t>(a % p));
    d.symbols = std::string("0123456789abcdef").substr(0, q);
    return ChainRing::finish(std::move(d));
}

ChainRing ring_by_name(const std::string& name) {
    if (name == "z4") return make_z4();
    if (name == "f2u") return make_f2u();
    if (name == "z4g") return make_zpe(2, 2);
    if (name.size() >= 2 && name.size() <= 3 && name[0] == 'z' &&
        name.find_first_not_of("0123456789", 1) == std::string::npos) {
        const int q = std::stoi(name.substr(1));
        for (int p = 2; p <= q; ++p) {
            if (!is_prime(p) || q % p != 0) continue;
            int e = 0, t = q;
            while (t % p == 0) {
                t /= p;
                ++e;
            }
            if (t == 1) return make_zpe(p, e);
            break;
        }
    }
    throw ParseError("unknown ring '" + name + "'");
}

void ChainRing::check(Element x) const {
    if (x.ring != data_->id) throw RingMismatch("element does not belong to ring " + data_->name);
    if (x.index >= data_->m) throw DomainError("element index out of range");
}

Element ChainRing::element(int index) const {
    if (index < 0 || index >= data_->m) throw DomainError("element index out of range");
    return Element{data_->id, static_cast<std::uint8_t>(index)};
}

Element ChainRing::add(Element x, Element y) const {
    check(x);
    check(y);
    return Element{data_->id, add_index(x.index, y.index)};
}

Element ChainRing::mul(Element x, Element y) const {
    check(x);
    check(y);
    return Element{data_->id, mul_index(x.index, y.index)};
}

Element ChainRing::neg(Element x) const {
    check(x);
    return Element{data_->id, neg_index(x.index)};
}

bool ChainRing::is_unit(Element x) const {
    check(x);
    return data_->unit[x.index];
}

Element ChainRing::inv_unit(Element x) const {
    if (!is_unit(x)) throw DomainError("inv_unit: element is not a unit");
    return Element{data_->id, data_->inverse[x.index]};
}

std::vector<Element> ChainRing::units() const {
    std::vector<Element> out;
    for (const Element& x : data_->scalar_order)
        if (data_->unit[x.index]) out.push_back(x);
    return out;
}

Element ChainRing::gamma_pow(int j) const {
    if (j < 0 || j > data_->e) throw DomainError("gamma_pow: exponent outside [0, e]");
    std::uint8_t g = 1;
    for (int i = 0; i < j; ++i) g = mul_index(g, data_->gamma);
    return Element{data_->id, g};
}

int ChainRing::valuation(Element x) const {
    check(x);
    return data_->valuation[x.index];
}

int ChainRing::residue_class(Element x) const {
    check(x);
    return data_->residue[x.index];
}

bool ChainRing::supports(Metric metric) const {
    return metric == Metric::Hamming || is_builtin();
}

int ChainRing::symbol_weight(Element x, Metric metric) const {
    check(x);
    switch (metric) {
    case Metric::Hamming: return x.index == 0 ? 0 : 1;
    case Metric::Lee:
        if (!is_builtin()) throw UnsupportedMetric("Lee weight is not defined on " + data_->name);
        return data_->lee[x.index];
    case Metric::Euclidean:
        if (!is_builtin()) throw UnsupportedMetric("Euclidean weight is not defined on " + data_->name);
        return data_->euclid[x.index];
    }
    return 0;
}

char ChainRing::symbol(Element x) const {
    check(x);
    return data_->symbols[x.index];
}

Element ChainRing::parse_symbol(char c) const {
    const auto pos = data_->symbols.find(c);
    if (pos == std::string::npos)
        throw ParseError(std::string("symbol '") + c + "' is not an element of " + data_->name);
    return Element{data_->id, static_cast<std::uint8_t>(pos)};
}

}  // namespace ringlex
