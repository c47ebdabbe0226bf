#include <gtest/gtest.h>

#include "ringlex/errors.hpp"
#include "ringlex/ring.hpp"

using namespace ringlex;

namespace {

Element el(const ChainRing& r, char c) { return r.parse_symbol(c); }

}  // namespace

TEST(Z4, AdditionAndMultiplicationTables) {
    const ChainRing z = make_z4();
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            EXPECT_EQ(z.add(z.element(a), z.element(b)).index, (a + b) % 4);
            EXPECT_EQ(z.mul(z.element(a), z.element(b)).index, (a * b) % 4);
        }
}

TEST(Z4, ChainStructure) {
    const ChainRing z = make_z4();
    EXPECT_EQ(z.p(), 2);
    EXPECT_EQ(z.e(), 2);
    EXPECT_EQ(z.size(), 4);
    EXPECT_EQ(z.gamma().index, 2);
    EXPECT_EQ(z.gamma_pow(2).index, 0);
    EXPECT_EQ(z.valuation(z.element(2)), 1);
    EXPECT_EQ(z.valuation(z.element(3)), 0);
    EXPECT_EQ(z.valuation(z.zero()), 2);
    EXPECT_EQ(z.units().size(), 2u);
    EXPECT_EQ(z.inv_unit(z.element(3)).index, 3);
    EXPECT_THROW(z.inv_unit(z.element(2)), DomainError);
}

TEST(Z4, SymbolWeights) {
    const ChainRing z = make_z4();
    const int lee[] = {0, 1, 2, 1}, euc[] = {0, 1, 4, 1}, ham[] = {0, 1, 1, 1};
    for (int a = 0; a < 4; ++a) {
        EXPECT_EQ(z.symbol_weight(z.element(a), Metric::Lee), lee[a]);
        EXPECT_EQ(z.symbol_weight(z.element(a), Metric::Euclidean), euc[a]);
        EXPECT_EQ(z.symbol_weight(z.element(a), Metric::Hamming), ham[a]);
    }
}

TEST(F2u, MultiplicationFollowsUSquaredZero) {
    const ChainRing f = make_f2u();
    // (a + ub)(c + ud) = ac + u(ad + bc)
    auto as_pair = [](int idx) { return std::pair<int, int>{idx == 1 || idx == 3, idx >= 2}; };
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) {
            auto [a, b] = as_pair(x);
            auto [c, d] = as_pair(y);
            const int lo = a * c, hi = (a * d + b * c) % 2;
            const Element got = f.mul(f.element(x), f.element(y));
            EXPECT_EQ(as_pair(got.index), (std::pair<int, int>{lo, hi})) << x << "*" << y;
            EXPECT_EQ(f.add(f.element(x), f.element(y)).index, x ^ y);
        }
    EXPECT_EQ(f.mul(el(f, 'u'), el(f, 'u')), f.zero());
    EXPECT_EQ(f.mul(el(f, 'v'), el(f, 'v')), f.one());
    EXPECT_EQ(f.add(el(f, '1'), el(f, 'u')), el(f, 'v'));
}

TEST(F2u, LeeWeightIsGrayHamming) {
    const ChainRing f = make_f2u();
    EXPECT_EQ(f.symbol_weight(el(f, 'u'), Metric::Lee), 2);
    EXPECT_EQ(f.symbol_weight(el(f, 'v'), Metric::Lee), 1);
    EXPECT_EQ(f.symbol_weight(el(f, '1'), Metric::Lee), 1);
    EXPECT_EQ(f.gamma(), el(f, 'u'));
}

TEST(Ring, ScalarOrderStartsAtZeroAndCoversRing) {
    for (const ChainRing& r : {make_z4(), make_f2u(), make_zpe(3, 2)}) {
        const auto& order = r.scalar_order();
        ASSERT_EQ(static_cast<int>(order.size()), r.size());
        EXPECT_EQ(order.front(), r.zero());
        std::vector<bool> seen(r.size());
        for (auto x : order) seen[x.index] = true;
        EXPECT_TRUE(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
    }
}

TEST(Ring, ParseSymbolRejectsForeignSymbols) {
    EXPECT_THROW(make_z4().parse_symbol('u'), ParseError);
    EXPECT_THROW(make_f2u().parse_symbol('2'), ParseError);
}

TEST(Ring, ByName) {
    EXPECT_EQ(ring_by_name("z4").kind(), RingKind::Z4);
    EXPECT_EQ(ring_by_name("f2u").kind(), RingKind::F2u);
    EXPECT_EQ(ring_by_name("z9").size(), 9);
    EXPECT_THROW(ring_by_name("z6"), Error);
}

TEST(Ring, GenericRingHasNoLeeWeight) {
    const ChainRing r = make_zpe(3, 2);
    EXPECT_FALSE(r.supports(Metric::Lee));
    EXPECT_THROW(r.symbol_weight(r.one(), Metric::Lee), UnsupportedMetric);
}

TEST(Ring, UnitsAreExactlyValuationZero) {
    for (const ChainRing& r : {make_z4(), make_f2u(), make_zpe(2, 3), make_zpe(3, 2)})
        for (int a = 0; a < r.size(); ++a) {
            const Element x = r.element(a);
            EXPECT_EQ(r.is_unit(x), r.valuation(x) == 0);
            if (r.is_unit(x)) EXPECT_EQ(r.mul(x, r.inv_unit(x)), r.one());
        }
}

TEST(Ring, MixingRingsThrows) {
    const ChainRing z = make_z4(), f = make_f2u();
    EXPECT_THROW(z.add(z.one(), f.one()), RingMismatch);
}
