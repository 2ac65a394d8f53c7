#include <gtest/gtest.h>

#include "biamalg/constructions.hpp"
#include "biamalg/isocheck.hpp"
#include "oracle.hpp"
#include "zoo.hpp"

using namespace biamalg;

namespace {

bool brute_isomorphic(const FiniteRing& a, const FiniteRing& b) {
    if (a.size() != b.size()) return false;
    for (const auto& t : oracle::homs(a, b))
        if (oracle::to_set(t).size() == b.size()) return true;
    return false;
}

void expect_witness_valid(const IsoResult& res, const FiniteRing& a, const FiniteRing& b) {
    ASSERT_EQ(res.outcome, IsoOutcome::isomorphic);
    ASSERT_TRUE(res.witness.has_value());
    const RingHom& f = *res.witness;
    EXPECT_TRUE(f.source() == a);
    EXPECT_TRUE(f.target() == b);
    EXPECT_TRUE(f.is_injective() && f.is_surjective());
    for (Index x = 0; x < a.size(); ++x)
        for (Index y = 0; y < a.size(); ++y) {
            ASSERT_EQ(f.apply(a.add(x, y)), b.add(f.apply(x), f.apply(y)));
            ASSERT_EQ(f.apply(a.mul(x, y)), b.mul(f.apply(x), f.apply(y)));
        }
    EXPECT_EQ(f.apply(a.one_index()), b.one_index());
}

}  // namespace

TEST(FingerprintTest, Examples) {
    const auto z4 = fingerprint(make_zmod(4));
    EXPECT_EQ(z4.cardinality, 4u);
    EXPECT_EQ(z4.characteristic, 4);
    EXPECT_EQ(z4.invariant_factors, (std::vector<std::int64_t>{4}));
    EXPECT_EQ(z4.unit_count, 2u);
    EXPECT_EQ(z4.idempotent_count, 2u);
    EXPECT_EQ(z4.nilpotent_count, 2u);

    const auto z2 = make_zmod(2);
    const auto v = fingerprint(make_product(z2, z2).ring);
    EXPECT_EQ(v.cardinality, 4u);
    EXPECT_EQ(v.characteristic, 2);
    EXPECT_EQ(v.invariant_factors, (std::vector<std::int64_t>{2, 2}));
    EXPECT_EQ(v.unit_count, 1u);
    EXPECT_EQ(v.idempotent_count, 4u);
    EXPECT_EQ(v.nilpotent_count, 1u);

    const auto zero = fingerprint(make_zmod(1));
    EXPECT_EQ(zero.cardinality, 1u);
    EXPECT_EQ(zero.characteristic, 1);
    EXPECT_EQ(zero.invariant_factors, (std::vector<std::int64_t>{1}));
}

TEST(FingerprintTest, InvariantFactors) {
    EXPECT_EQ(invariant_factors({6, 4}), (std::vector<std::int64_t>{2, 12}));
    EXPECT_EQ(invariant_factors({2, 3}), (std::vector<std::int64_t>{6}));
    EXPECT_EQ(invariant_factors({}), (std::vector<std::int64_t>{1}));
    EXPECT_EQ(invariant_factors({2, 2, 4}), (std::vector<std::int64_t>{2, 2, 4}));
}

TEST(IsoTest, ChineseRemainderWitness) {
    const auto z6 = make_zmod(6);
    const auto p = make_product(make_zmod(2), make_zmod(3));
    const auto res = find_isomorphism(z6, p.ring);
    expect_witness_valid(res, z6, p.ring);
    EXPECT_EQ((*res.witness)(z6.one()), p.ring.one());
}

TEST(IsoTest, FingerprintRejection) {
    const auto z2 = make_zmod(2);
    const auto res = find_isomorphism(make_zmod(4), make_product(z2, z2).ring);
    EXPECT_EQ(res.outcome, IsoOutcome::not_isomorphic);
    EXPECT_FALSE(res.witness.has_value());
    EXPECT_NE(res.reason.find("unit counts"), std::string::npos);
}

TEST(IsoTest, SelfIsomorphism) {
    for (const auto& [name, r] : zoo::small_rings()) {
        const auto res = find_isomorphism(r, r);
        expect_witness_valid(res, r, r);
    }
}

TEST(IsoTest, ZeroFactorAndDegreeOne) {
    const auto z5 = make_zmod(5);
    const auto p = make_product(make_zmod(1), z5);
    expect_witness_valid(find_isomorphism(p.ring, z5), p.ring, z5);
    const auto z3 = make_zmod(3);
    const auto q = zoo::poly(z3, {-1, 1});
    expect_witness_valid(find_isomorphism(q, z3), q, z3);
}

TEST(IsoTest, BudgetExhaustionIsUnknown) {
    const auto z2 = make_zmod(2);
    const auto a = make_product(make_product(z2, z2).ring, z2).ring;
    const auto b = make_product(z2, make_product(z2, z2).ring).ring;
    const auto res = find_isomorphism(a, b, 1);
    EXPECT_EQ(res.outcome, IsoOutcome::unknown);
    EXPECT_FALSE(res.witness.has_value());
}

TEST(IsoTest, SameFingerprintDifferentRings) {
    // F4 and Z/2[x]/(x^2) share order and characteristic; only search or a
    // finer invariant separates them.
    const auto z2 = make_zmod(2);
    const auto res = find_isomorphism(zoo::poly(z2, {1, 1, 1}), zoo::poly(z2, {0, 0, 1}));
    EXPECT_EQ(res.outcome, IsoOutcome::not_isomorphic);
}

TEST(IsoProperties, GoldenCorpusDecidedAndCorrect) {
    const auto rings = zoo::up_to_8();
    for (std::size_t i = 0; i < rings.size(); ++i)
        for (std::size_t j = 0; j < rings.size(); ++j) {
            const auto& [an, a] = rings[i];
            const auto& [bn, b] = rings[j];
            const auto res = find_isomorphism(a, b);
            ASSERT_NE(res.outcome, IsoOutcome::unknown) << an << " vs " << bn;
            const bool truth = brute_isomorphic(a, b);
            EXPECT_EQ(res.outcome == IsoOutcome::isomorphic, truth) << an << " vs " << bn;
            if (truth) {
                expect_witness_valid(res, a, b);
                EXPECT_TRUE(fingerprint(a) == fingerprint(b));
            }
            const auto back = find_isomorphism(b, a);
            EXPECT_EQ(back.outcome, res.outcome) << an << " vs " << bn;
        }
}

TEST(IsoProperties, InverseOfWitnessValidates) {
    const auto rings = zoo::up_to_8();
    for (const auto& [an, a] : rings)
        for (const auto& [bn, b] : rings) {
            const auto res = find_isomorphism(a, b);
            if (res.outcome != IsoOutcome::isomorphic) continue;
            std::vector<Index> inv(b.size());
            for (Index x = 0; x < a.size(); ++x) inv[res.witness->apply(x)] = x;
            const auto g = hom_from_table(b, a, inv);
            EXPECT_TRUE(same_map(compose(*res.witness, g), identity_hom(b))) << an << " vs " << bn;
        }
}

TEST(EnumerateHomsTest, MatchesBruteForce) {
    const auto rings = zoo::small_rings();
    for (const auto& [an, a] : rings)
        for (const auto& [bn, b] : rings) {
            std::size_t space = 1;
            for (std::size_t i = 0; i < a.rank(); ++i) space *= b.size();
            if (space > 4096 || a.size() > 16) continue;
            const auto expected = oracle::homs(a, b);
            const auto got = enumerate_homs(a, b);
            ASSERT_TRUE(got.complete);
            ASSERT_EQ(got.homs.size(), expected.size()) << an << " -> " << bn;
            for (const auto& f : got.homs) {
                const std::vector<Index> t(f.table().begin(), f.table().end());
                EXPECT_NE(std::find(expected.begin(), expected.end(), t), expected.end());
            }
        }
}

TEST(EnumerateHomsTest, Examples) {
    EXPECT_EQ(enumerate_homs(make_zmod(6), make_zmod(3)).homs.size(), 1u);
    EXPECT_EQ(enumerate_homs(make_zmod(3), make_zmod(6)).homs.size(), 0u);
    const auto z2 = make_zmod(2);
    // Z/2 x Z/2 -> Z/2: the two projections.
    EXPECT_EQ(enumerate_homs(make_product(z2, z2).ring, z2).homs.size(), 2u);
    EXPECT_EQ(enumerate_homs(make_zmod(1), make_zmod(1)).homs.size(), 1u);
    EXPECT_EQ(enumerate_homs(make_zmod(1), z2).homs.size(), 0u);
}
