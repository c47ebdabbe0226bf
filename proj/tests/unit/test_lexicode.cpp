#include <gtest/gtest.h>

#include <set>

#include "ringlex/errors.hpp"
#include "ringlex/lexicode.hpp"
#include "ringlex/standard_form.hpp"

using namespace ringlex;

namespace {

std::vector<std::string> stream_strings(const Basis& b) {
    BOrderStream s(b);
    std::vector<std::string> out;
    while (s.next()) out.push_back(format_vector(b.ring(), s.vector()));
    return out;
}

std::vector<std::string> gens(const BuildResult& r) {
    std::vector<std::string> out;
    for (const auto& g : r.generators) out.push_back(format_vector(r.ring, g.vector));
    return out;
}

Basis basis_of(const ChainRing& r, std::initializer_list<const char*> vs) {
    std::vector<RingVector> v;
    for (auto s : vs) v.push_back(parse_vector(r, s));
    return Basis(r, v);
}

}  // namespace

TEST(BOrder, OneCoordinate) {
    EXPECT_EQ(stream_strings(Basis::canonical(make_z4(), 1)), (std::vector<std::string>{"0", "1", "2", "3"}));
}

TEST(BOrder, CanonicalLengthTwo) {
    const std::vector<std::string> expected{"00", "10", "20", "30", "01", "11", "21", "31",
                                            "02", "12", "22", "32", "03", "13", "23", "33"};
    EXPECT_EQ(stream_strings(Basis::canonical(make_z4(), 2)), expected);
}

TEST(BOrder, PrefixesAreTheSubmodulesVi) {
    const ChainRing f = make_f2u();
    const Basis b = basis_of(f, {"1u0", "v11", "0u1"});
    BOrderStream s(b);
    std::set<Word> seen;
    std::uint64_t count = 0;
    while (s.next()) {
        ASSERT_TRUE(seen.insert(s.word()).second);
        ++count;
        // once |V_i| = 4^i vectors are out, the step index must move on
        const int expected_step = count == 1 ? 0 : [&] {
            int i = 0;
            std::uint64_t v = 1;
            while (v < count) v *= 4, ++i;
            return i;
        }();
        ASSERT_EQ(s.step(), expected_step) << "position " << count;
        ASSERT_EQ(b.step_of(s.vector()), s.step());
    }
    EXPECT_EQ(count, 64u);
}

TEST(BOrder, SeekStepJumpsToBlockStart) {
    const Basis b = Basis::canonical(make_z4(), 3);
    BOrderStream s(b);
    s.seek_step(3);
    EXPECT_EQ(format_vector(b.ring(), s.vector()), "001");
    EXPECT_EQ(s.position(), 16u);
    ASSERT_TRUE(s.next());
    EXPECT_EQ(format_vector(b.ring(), s.vector()), "101");
}

TEST(Basis, RejectsNonGenerators) {
    const ChainRing z = make_z4();
    EXPECT_THROW(basis_of(z, {"20", "01"}), InvalidBasis);
    EXPECT_THROW(basis_of(z, {"10", "10"}), InvalidBasis);
    EXPECT_NO_THROW(basis_of(z, {"13", "01"}));
}

TEST(Basis, CoordinatesReconstructVector) {
    const ChainRing z = make_z4();
    const Basis b = basis_of(z, {"123", "011", "003"});
    const RingVector x = parse_vector(z, "321");
    const auto c = b.coordinates(x);
    RingVector sum = RingVector::zero(z, 3);
    for (int j = 0; j < 3; ++j) sum = vec_add(z, sum, scalar_mul(z, z.element(c[j]), b.vectors()[j]));
    EXPECT_EQ(sum, x);
}

TEST(Criterion, Evaluate) {
    const ChainRing z = make_z4();
    EXPECT_TRUE(Criterion::min_weight(Metric::Lee, 4).evaluate(z, parse_vector(z, "2200")));
    EXPECT_FALSE(Criterion::min_weight(Metric::Lee, 4).evaluate(z, parse_vector(z, "1110")));
    EXPECT_TRUE(Criterion::self_inner_zero().evaluate(z, parse_vector(z, "1111")));
    EXPECT_FALSE(Criterion::self_inner_zero().evaluate(z, parse_vector(z, "1100")));
    EXPECT_TRUE(Criterion::euclidean_mod8().evaluate(z, parse_vector(z, "22")));
    EXPECT_TRUE(Criterion::lee_even().evaluate(z, parse_vector(z, "13")));
    EXPECT_THROW(Criterion::min_weight(Metric::Lee, 2).evaluate(make_zpe(3, 2), RingVector::zero(make_zpe(3, 2), 2)),
                 UnsupportedMetric);
}

TEST(Criterion, ParseNames) {
    EXPECT_EQ(Criterion::parse("min-lee", 4).describe(), "wt_L(x) >= 4");
    EXPECT_EQ(Criterion::parse("self-inner-zero", std::nullopt).name(), "self-inner-zero");
    EXPECT_THROW(Criterion::parse("min-lee", std::nullopt), Error);
    EXPECT_THROW(Criterion::parse("prime-weight", std::nullopt), Error);
}

TEST(Criterion, BuiltInsAreMultiplicativeExhaustively) {
    for (const ChainRing& r : {make_z4(), make_f2u()})
        for (int n = 1; n <= 4; ++n) {
            std::vector<Criterion> cs{Criterion::self_inner_zero(), Criterion::euclidean_mod8(),
                                      Criterion::lee_even()};
            for (int d = 1; d <= 2 * n; ++d)
                for (Metric m : {Metric::Hamming, Metric::Lee, Metric::Euclidean})
                    cs.push_back(Criterion::min_weight(m, d));
            for (const auto& c : cs) {
                if (r.kind() == RingKind::F2u && std::holds_alternative<Criterion::EuclideanWeightMod8>(c.variant()))
                    continue;
                const auto res = check_multiplicative(c, r, n);
                EXPECT_TRUE(res.exhaustive);
                EXPECT_TRUE(res.holds) << r.name() << " n=" << n << " " << c.describe();
            }
        }
}

TEST(Criterion, DetectsNonMultiplicativeCustom) {
    const ChainRing z = make_z4();
    // true on 1 but not on 3 = 3 * 1
    const auto c = Criterion::custom("first-is-one", [](const RingVector& x) { return x.indices()[0] == 1; }, true);
    const auto res = check_multiplicative(c, z, 2);
    EXPECT_FALSE(res.holds);
    ASSERT_TRUE(res.counterexample);
    EXPECT_THROW(build_lexicode(Basis::canonical(z, 2), c), NonMultiplicative);
    const auto undeclared = Criterion::custom("all", [](const RingVector&) { return true; }, false);
    EXPECT_THROW(build_lexicode(Basis::canonical(z, 2), undeclared), NonMultiplicative);
}

TEST(Build, SelfOrthogonalCanonicalLengthFour) {
    const BuildResult r = build_lexicode(Basis::canonical(make_z4(), 4), Criterion::self_inner_zero());
    EXPECT_EQ(gens(r), (std::vector<std::string>{"2000", "0200", "0020", "1111"}));
    EXPECT_EQ(r.code.size(), 32u);
    EXPECT_EQ(r.chain_sizes, (std::vector<std::uint64_t>{1, 2, 4, 8, 32}));
    EXPECT_EQ(standard_form(r.ring, 4, r.generator_vectors()).type_string(r.ring), "4^1 2^3");
}

TEST(Build, MinLeeFourCanonical) {
    const BuildResult r = build_lexicode(Basis::canonical(make_z4(), 4), Criterion::min_weight(Metric::Lee, 4));
    EXPECT_EQ(gens(r), (std::vector<std::string>{"2110", "1201"}));
    EXPECT_TRUE(check_lexicode(r, Criterion::min_weight(Metric::Lee, 4)).ok());
    EXPECT_TRUE(verify_maximality(r, Criterion::min_weight(Metric::Lee, 4)).empty());
}

TEST(Build, TraceAndChainAreConsistent) {
    const Basis b = basis_of(make_f2u(), {"1u00", "0v10", "0011", "u001"});
    const BuildResult r = build_lexicode(b, Criterion::min_weight(Metric::Lee, 3));
    ASSERT_EQ(r.trace.size(), 4u);
    ASSERT_EQ(r.chain_sizes.size(), 5u);
    EXPECT_EQ(r.chain_sizes.front(), 1u);
    for (int i = 1; i <= 4; ++i) {
        EXPECT_LE(r.chain_sizes[i - 1], r.chain_sizes[i]);
        EXPECT_EQ(r.trace[i - 1].selected.has_value(), r.chain_sizes[i] > r.chain_sizes[i - 1]);
        EXPECT_EQ(r.chain_code(i).size(), r.chain_sizes[i]);
    }
    EXPECT_EQ(r.chain_sizes.back(), r.code.size());
    for (const auto& g : r.generators) EXPECT_EQ(b.step_of(g.vector), g.step);
}

TEST(Build, CapIsEnforced) {
    BuildOptions o;
    o.cap = 8;
    EXPECT_THROW(build_lexicode(Basis::canonical(make_z4(), 4), Criterion::self_inner_zero(), o), CapExceeded);
}

TEST(Build, GenericChainRingHamming) {
    const ChainRing r = make_zpe(3, 2);
    const BuildResult res = build_lexicode(Basis::canonical(r, 3), Criterion::min_weight(Metric::Hamming, 2));
    EXPECT_TRUE(check_lexicode(res, Criterion::min_weight(Metric::Hamming, 2)).ok());
    EXPECT_TRUE(verify_maximality(res, Criterion::min_weight(Metric::Hamming, 2)).empty());
}

TEST(Maximality, FindsMissingVectorsOfATruncatedCode) {
    const ChainRing z = make_z4();
    const Criterion c = Criterion::self_inner_zero();
    const BuildResult r = build_lexicode(Basis::canonical(z, 4), c);
    // drop the last generator; 1111 must now be reported as addable
    const Code partial = r.chain_code(3);
    const auto extra = verify_maximality(partial, c);
    EXPECT_NE(std::find(extra.begin(), extra.end(), parse_vector(z, "1111")), extra.end());
}
