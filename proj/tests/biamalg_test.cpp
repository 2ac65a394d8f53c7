#include <gtest/gtest.h>

#include "biamalg/biamalg.hpp"
#include "biamalg/classify.hpp"
#include "biamalg/error.hpp"
#include "instances.hpp"
#include "oracle.hpp"
#include "zoo.hpp"

using namespace biamalg;

namespace {

Ideal principal(const FiniteRing& r, std::int64_t n) { return ideal_generated(r, {r.scale(r.one(), n)}); }

RingHom canonical(const FiniteRing& a, const FiniteRing& b) { return make_hom(a, b, {b.one()}); }

void expect_clean(const Report& r) {
    for (const auto& c : r.checks) EXPECT_TRUE(c.passed()) << r.title << ": " << c.name << " -> " << c.witness;
}

oracle::ElementSet brute_w(const Product& bc, const RingHom& f, const RingHom& g, const oracle::ElementSet& j,
                           const oracle::ElementSet& jp) {
    oracle::ElementSet out;
    for (Index a = 0; a < f.source().size(); ++a)
        for (Index u : j)
            for (Index v : jp) out.insert(bc.pair(f.target().add(f.apply(a), u), g.target().add(g.apply(a), v)));
    return out;
}

oracle::ElementSet set_of(const Ideal& i) { return oracle::to_set(i.elements()); }

}  // namespace

TEST(BiAmalgamateTest, ZeroIdealsGiveTheGraph) {
    const auto z2 = make_zmod(2);
    const auto id = identity_hom(z2);
    const auto w = bi_amalgamate(id, id, zero_ideal(z2), zero_ideal(z2));
    EXPECT_EQ(w.w.size(), 2u);
    EXPECT_EQ(w.embedded(), (std::vector<Index>{w.bc.pair(0, 0), w.bc.pair(1, 1)}));
    expect_clean(w.construction);
}

TEST(BiAmalgamateTest, WholeIdealsGiveTheProduct) {
    const auto z2 = make_zmod(2);
    const auto id = identity_hom(z2);
    const auto w = bi_amalgamate(id, id, unit_ideal(z2), unit_ideal(z2));
    EXPECT_EQ(w.w.size(), 4u);
    EXPECT_TRUE(isomorphic(w.w, make_product(z2, z2).ring));
}

TEST(BiAmalgamateTest, PreimageMismatchCarriesWitness) {
    const auto z4 = make_zmod(4);
    const auto id = identity_hom(z4);
    try {
        bi_amalgamate(id, id, principal(z4, 2), zero_ideal(z4));
        FAIL() << "expected a preimage mismatch";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::preimage_mismatch);
        EXPECT_NE(e.witness().find("[2]"), std::string::npos) << e.witness();
    }
}

TEST(BiAmalgamateTest, MismatchedSourcesRejected) {
    const auto z4 = make_zmod(4), z2 = make_zmod(2);
    try {
        bi_amalgamate(identity_hom(z4), identity_hom(z2), zero_ideal(z4), zero_ideal(z2));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::mismatched_maps);
    }
    try {
        bi_amalgamate(identity_hom(z4), identity_hom(z4), zero_ideal(z2), zero_ideal(z4));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::wrong_ring);
    }
}

TEST(DuplicationTest, Orders) {
    const auto z4 = make_zmod(4), z6 = make_zmod(6);
    EXPECT_EQ(duplication(z4, principal(z4, 2)).w.size(), 8u);
    EXPECT_EQ(duplication(z6, principal(z6, 3)).w.size(), 12u);
    for (const auto& [name, r] : zoo::small_rings()) {
        if (r.size() > 16) continue;
        const auto w = duplication(r, zero_ideal(r));
        EXPECT_EQ(w.w.size(), r.size()) << name;
        EXPECT_TRUE(isomorphic(w.w, r)) << name;
    }
}

TEST(AmalgamationTest, Examples) {
    const auto z4 = make_zmod(4), z2 = make_zmod(2);
    const auto pi = canonical(z4, z2);
    const auto graph = amalgamation(pi, zero_ideal(z2));
    EXPECT_EQ(graph.w.size(), 4u);
    expect_clean(graph.construction);
    EXPECT_NE(graph.construction.find("element set equals {(a, f(a)+j)}"), nullptr);

    const auto full = amalgamation(pi, unit_ideal(z2));
    EXPECT_EQ(full.w.size(), 8u);
    expect_clean(full.construction);

    const auto dup = amalgamation(identity_hom(z4), principal(z4, 2));
    EXPECT_EQ(dup.embedded(), duplication(z4, principal(z4, 2)).embedded());
}

TEST(AmalgamationTest, IdentityWithZeroIdealIsA) {
    for (const auto& [name, r] : zoo::small_rings()) {
        if (r.size() > 16) continue;
        const auto w = amalgamation(identity_hom(r), zero_ideal(r));
        EXPECT_TRUE(isomorphic(w.w, r)) << name;
    }
}

TEST(IdealizationTest, Examples) {
    const auto z4 = make_zmod(4), z2 = make_zmod(2);
    const auto n = idealization(z4, principal(z4, 2));
    EXPECT_EQ(n.size(), 8u);
    EXPECT_TRUE(validate_axioms(n).ok());
    EXPECT_TRUE(isomorphic(n, duplication(z4, principal(z4, 2)).w));

    EXPECT_TRUE(isomorphic(idealization(z4, zero_ideal(z4)), z4));

    const auto d = idealization(z2, unit_ideal(z2));
    EXPECT_EQ(d.size(), 4u);
    const auto c = classify(d);
    EXPECT_TRUE(c.is_local);
    EXPECT_FALSE(c.is_reduced);
    EXPECT_TRUE(isomorphic(d, zoo::poly(z2, {0, 0, 1})));
}

TEST(IdealizationTest, IdealWiderThanItsGeneratorSpan) {
    const auto z2 = make_zmod(2);
    const auto a = zoo::poly(z2, {0, 0, 0, 1});
    const auto x = ideal_generated(a, {a.element({0, 1, 0})});
    ASSERT_EQ(x.size(), 4u);
    const auto n = idealization(a, x);
    EXPECT_EQ(n.size(), 32u);
    EXPECT_TRUE(validate_axioms(n, true).ok());
}

TEST(AmalgamationTest, WholeIdealOutsideTheImage) {
    const auto z10 = make_zmod(10), z2 = make_zmod(2);
    const auto c = zoo::poly(z2, {0, 1, 1});
    const auto f = canonical(z10, c);
    const auto w = amalgamation(f, unit_ideal(c));
    EXPECT_EQ(w.ga_jp.ring.size(), 4u);
    EXPECT_EQ(w.w.size(), 40u);
    expect_clean(w.construction);
    expect_clean(as_pullback(w));
    expect_clean(conductor_square(w));
}

TEST(IdealizationTest, CoincidenceReport) {
    const auto z4 = make_zmod(4), z6 = make_zmod(6);
    const auto yes = idealization_coincidence(z4, principal(z4, 2));
    ASSERT_EQ(yes.checks.size(), 1u);
    expect_clean(yes);
    ASSERT_TRUE(yes.checks[0].map.has_value());

    const auto no = idealization_coincidence(z6, principal(z6, 3));
    EXPECT_TRUE(no.checks.empty());
    EXPECT_EQ(no.notes.size(), 1u);
}

TEST(IdealizationTest, SquareZeroIdealsAgreeWithDuplication) {
    for (const auto& [name, r] : zoo::small_rings()) {
        if (r.size() > 16 || r.size() < 2) continue;
        for (const auto& s : oracle::all_ideals(r)) {
            const Ideal i = instances::as_ideal(r, s);
            if (!ideal_product(i, i).is_zero()) continue;
            const auto rep = idealization_coincidence(r, i);
            ASSERT_EQ(rep.checks.size(), 1u);
            EXPECT_TRUE(rep.all_passed()) << name << " |I|=" << i.size();
        }
    }
}

TEST(EmbeddedIdealTest, Examples) {
    const auto z4 = make_zmod(4);
    const auto w = duplication(z4, principal(z4, 2));
    const auto jj = j_times_jp(w);
    EXPECT_EQ(jj.size(), 4u);
    EXPECT_TRUE(embedded_ideal(w, zero_ideal(z4)) == jj);
    EXPECT_TRUE(embedded_ideal(w, principal(z4, 2)) == jj);
    EXPECT_TRUE(embedded_ideal(w, unit_ideal(z4)).is_whole());
    EXPECT_EQ(zero_times_jp(w).size(), 2u);
    EXPECT_EQ(j_times_zero(w).size(), 2u);
}

TEST(QuotientIsosTest, Examples) {
    const auto z4 = make_zmod(4), z6 = make_zmod(6);
    const auto w4 = duplication(z4, principal(z4, 2));
    const auto r0 = quotient_isos_check(w4, zero_ideal(z4));
    expect_clean(r0);
    EXPECT_EQ(quotient_ring(w4.w, j_times_jp(w4)).ring.size(), 2u);
    EXPECT_EQ(quotient_ring(w4.w, zero_times_jp(w4)).ring.size(), 4u);
    EXPECT_TRUE(isomorphic(quotient_ring(w4.w, zero_times_jp(w4)).ring, z4));
    for (const auto& c : r0.checks)
        if (c.name.find(" ~ ") != std::string::npos) EXPECT_TRUE(c.map.has_value()) << c.name;

    const auto w6 = duplication(z6, principal(z6, 3));
    const auto r2 = quotient_isos_check(w6, principal(z6, 2));
    expect_clean(r2);
    EXPECT_TRUE(quotient_ring(w6.w, embedded_ideal(w6, principal(z6, 2))).ring.is_zero_ring());
}

TEST(AsPullbackTest, Examples) {
    const auto z4 = make_zmod(4), z6 = make_zmod(6), z3 = make_zmod(3);
    const auto r4 = as_pullback(duplication(z4, principal(z4, 2)));
    expect_clean(r4);
    EXPECT_EQ(r4.find("W = alpha x_{A/I0} beta")->witness, "8 elements");
    const auto r6 = as_pullback(duplication(z6, principal(z6, 3)));
    expect_clean(r6);
    EXPECT_EQ(r6.find("W = alpha x_{A/I0} beta")->witness, "12 elements");
    const auto rz = as_pullback(duplication(z3, zero_ideal(z3)));
    expect_clean(rz);
    EXPECT_EQ(rz.find("W = alpha x_{A/I0} beta")->witness, "3 elements");
}

TEST(ConductorSquareTest, Examples) {
    const auto z4 = make_zmod(4), z6 = make_zmod(6), z5 = make_zmod(5);
    const auto r4 = conductor_square(duplication(z4, principal(z4, 2)));
    expect_clean(r4);
    EXPECT_EQ(r4.find("Ker mu1 = JxJ'")->witness, "conductor order 4");
    EXPECT_EQ(r4.find("|W| = |A/I0|·|J|·|J'|")->witness, "8 = 2·2·2");
    const auto r6 = conductor_square(duplication(z6, principal(z6, 3)));
    expect_clean(r6);
    EXPECT_EQ(r6.find("|W| = |A/I0|·|J|·|J'|")->witness, "12 = 3·2·2");
    const auto rz = conductor_square(duplication(z5, zero_ideal(z5)));
    expect_clean(rz);
    EXPECT_EQ(rz.find("Ker mu1 = JxJ'")->witness, "conductor order 1");
    EXPECT_GE(r4.checks.size(), 13u);
}

TEST(RecognizeTest, Examples) {
    const auto z4 = make_zmod(4), z2 = make_zmod(2);
    const auto pi = canonical(z4, z2);
    const auto ok = recognize_pullback(identity_hom(z2), identity_hom(z2), pi, pi);
    ASSERT_TRUE(ok.recognized());
    EXPECT_TRUE(ok.j->is_zero());
    EXPECT_TRUE(ok.jp->is_zero());
    EXPECT_EQ(ok.w->w.size(), 2u);
    expect_clean(ok.report);

    const auto v = make_product(z2, z2);
    const auto diag = make_hom(z2, v.ring, {v.ring.one()});
    const auto bad = recognize_pullback(identity_hom(v.ring), identity_hom(v.ring), diag, diag);
    EXPECT_FALSE(bad.recognized());
    const Check* image = bad.report.find("alpha(pi_B(alpha x beta)) = alpha(f(A))");
    ASSERT_NE(image, nullptr);
    EXPECT_FALSE(image->passed());
    EXPECT_NE(image->witness.find("not alpha(f(A))"), std::string::npos);

    const auto nc = recognize_pullback(identity_hom(z2), identity_hom(z2), v.proj_left, v.proj_right);
    EXPECT_FALSE(nc.recognized());
    const Check* comm = nc.report.find("alpha o f = beta o g");
    ASSERT_NE(comm, nullptr);
    EXPECT_FALSE(comm->passed());
    EXPECT_FALSE(comm->witness.empty());
}

TEST(RecognizeTest, ShapeErrors) {
    const auto z4 = make_zmod(4), z2 = make_zmod(2);
    try {
        recognize_pullback(identity_hom(z4), identity_hom(z2), identity_hom(z4), identity_hom(z4));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::mismatched_maps);
    }
}

TEST(CpiTest, Examples) {
    const auto z4 = make_zmod(4), z6 = make_zmod(6), z2 = make_zmod(2);
    const auto a = cpi_extension(z4, principal(z4, 2));
    EXPECT_EQ(a.ring.size(), 4u);
    EXPECT_EQ(a.s, (std::vector<Index>{1, 3}));
    expect_clean(a.report);

    const auto b = cpi_extension(z6, principal(z6, 3));
    EXPECT_EQ(b.ring.size(), 3u);
    EXPECT_EQ(b.s, (std::vector<Index>{1, 2, 4, 5}));
    expect_clean(b.report);

    const auto c = cpi_extension(z2, zero_ideal(z2));
    EXPECT_EQ(c.ring.size(), 2u);
    expect_clean(c.report);

    try {
        cpi_extension(z4, unit_ideal(z4));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::improper_ideal);
    }
}

TEST(TransferTest, Examples) {
    const auto z4 = make_zmod(4), z6 = make_zmod(6), z5 = make_zmod(5);
    const auto w6 = duplication(z6, principal(z6, 3));
    expect_clean(verify_transfer(w6));
    EXPECT_TRUE(classify(w6.w).is_reduced);
    EXPECT_TRUE(oracle::nilpotents(w6.w).size() == 1);

    const auto w4 = duplication(z4, principal(z4, 2));
    const auto r4 = verify_transfer(w4);
    expect_clean(r4);
    EXPECT_FALSE(classify(w4.w).is_reduced);
    EXPECT_NE(r4.find("reduced: (c) implies (d)")->witness.find("(d) no"), std::string::npos);

    const auto wf = duplication(z5, zero_ideal(z5));
    const auto rf = verify_transfer(wf);
    expect_clean(rf);
    EXPECT_TRUE(classify(wf.w).is_domain);
}

class BiAmalgProperties : public ::testing::Test {
protected:
    static const std::vector<instances::Params>& corpus() {
        static const auto c = instances::random(20240611, 60);
        return c;
    }
};

TEST_F(BiAmalgProperties, ElementSetMatchesDefinition) {
    for (const auto& p : corpus()) {
        const auto w = bi_amalgamate(p.f, p.g, p.j, p.jp);
        const auto expect = brute_w(w.bc, p.f, p.g, set_of(p.j), set_of(p.jp));
        EXPECT_EQ(oracle::to_set(w.embedded()), expect) << p.label;
        EXPECT_EQ(w.w.size(), expect.size()) << p.label;
        expect_clean(w.construction);
        // Closed under the product of B x C.
        for (Index x : w.embedded())
            for (Index y : w.embedded()) ASSERT_TRUE(expect.count(w.bc.ring.mul(x, y))) << p.label;
        EXPECT_TRUE(validate_axioms(w.w).ok()) << p.label;

        oracle::ElementSet fa_j, ga_jp;
        for (Index a = 0; a < w.a.size(); ++a) {
            for (Index u : p.j.elements()) fa_j.insert(w.b.add(p.f.apply(a), u));
            for (Index v : p.jp.elements()) ga_jp.insert(w.c.add(p.g.apply(a), v));
        }
        EXPECT_EQ(oracle::to_set(w.fa_j.embedding.table()), fa_j) << p.label;
        EXPECT_EQ(oracle::to_set(w.ga_jp.embedding.table()), ga_jp) << p.label;
    }
}

TEST_F(BiAmalgProperties, StructuralReportsHaveNoFailures) {
    std::mt19937_64 rng(99);
    for (const auto& p : corpus()) {
        const auto w = bi_amalgamate(p.f, p.g, p.j, p.jp);
        expect_clean(as_pullback(w));
        expect_clean(conductor_square(w));
        const auto ideals = oracle::all_ideals(w.a);
        const auto i = instances::as_ideal(w.a, ideals[rng() % ideals.size()]);
        const auto q = quotient_isos_check(w, i);
        EXPECT_FALSE(q.any_unknown()) << p.label;
        expect_clean(q);
        expect_clean(verify_transfer(w));
    }
}

TEST_F(BiAmalgProperties, DomainAndReducedAgainstBruteForce) {
    for (const auto& p : corpus()) {
        const auto w = bi_amalgamate(p.f, p.g, p.j, p.jp);
        const auto& bc = w.bc.ring;
        const auto wset = oracle::to_set(w.embedded());
        bool w_domain = wset.size() > 1, w_reduced = true;
        for (Index x : wset) {
            if (x != 0 && bc.mul(x, x) == 0) w_reduced = false;
            for (Index y : wset)
                if (x != 0 && y != 0 && bc.mul(x, y) == 0) w_domain = false;
        }
        EXPECT_EQ(classify(w.w).is_domain, w_domain) << p.label;
        EXPECT_EQ(classify(w.w).is_reduced, w_reduced) << p.label;

        // f(A)+J and g(A)+J' as subsets of B and C.
        auto side = [](const RingHom& h, const Ideal& k) {
            oracle::ElementSet s;
            for (Index a = 0; a < h.source().size(); ++a)
                for (Index u : k.elements()) s.insert(h.target().add(h.apply(a), u));
            return s;
        };
        auto domain = [](const FiniteRing& r, const oracle::ElementSet& s) {
            if (s.size() < 2) return false;
            for (Index x : s)
                for (Index y : s)
                    if (x && y && r.mul(x, y) == 0) return false;
            return true;
        };
        const bool rhs = (p.j.is_zero() && domain(w.c, side(p.g, p.jp))) ||
                         (p.jp.is_zero() && domain(w.b, side(p.f, p.j)));
        EXPECT_EQ(w_domain, rhs) << p.label;

        auto meets_nil = [](const FiniteRing& r, const Ideal& k) {
            const auto nil = oracle::nilpotents(r);
            for (Index x : k.elements())
                if (x && nil.count(x)) return true;
            return false;
        };
        if (w_reduced) {
            EXPECT_FALSE(meets_nil(w.b, p.j)) << p.label;
            EXPECT_FALSE(meets_nil(w.c, p.jp)) << p.label;
        }
    }
}

TEST_F(BiAmalgProperties, ReducedWForcesReducedSidesWhenFinite) {
    // Both sides are quotients of W, and quotients of a finite product of fields stay reduced.
    for (const auto& p : corpus()) {
        const auto w = bi_amalgamate(p.f, p.g, p.j, p.jp);
        if (oracle::nilpotents(w.w).size() > 1) continue;
        EXPECT_EQ(oracle::nilpotents(w.fa_j.ring).size(), 1u) << p.label;
        EXPECT_EQ(oracle::nilpotents(w.ga_jp.ring).size(), 1u) << p.label;
    }
}

TEST_F(BiAmalgProperties, DistinguishedIdealsAndQuotientOrders) {
    for (const auto& p : corpus()) {
        const auto w = bi_amalgamate(p.f, p.g, p.j, p.jp);
        EXPECT_EQ(j_times_jp(w).size(), p.j.size() * p.jp.size());
        EXPECT_EQ(zero_times_jp(w).size(), p.jp.size());
        EXPECT_EQ(j_times_zero(w).size(), p.j.size());
        EXPECT_TRUE(embedded_ideal(w, zero_ideal(w.a)) == j_times_jp(w));
        EXPECT_TRUE(embedded_ideal(w, w.i0) == j_times_jp(w));
        EXPECT_EQ(w.w.size() / j_times_jp(w).size(), w.a.size() / w.i0.size()) << p.label;
    }
}

TEST(RecognizeProperties, AgreesWithDirectComparison) {
    const auto pool = zoo::up_to_8();
    std::mt19937_64 rng(5);
    std::size_t accepted = 0, rejected = 0;
    for (int round = 0; round < 40; ++round) {
        const auto& a = pool[1 + rng() % (pool.size() - 1)].second;
        const auto& b = pool[1 + rng() % (pool.size() - 1)].second;
        const auto& c = pool[1 + rng() % (pool.size() - 1)].second;
        const auto& d = pool[1 + rng() % (pool.size() - 1)].second;
        const auto fs = enumerate_homs(a, b).homs, gs = enumerate_homs(a, c).homs;
        const auto as = enumerate_homs(b, d).homs, bs = enumerate_homs(c, d).homs;
        if (fs.empty() || gs.empty() || as.empty() || bs.empty()) continue;
        const auto& f = fs[rng() % fs.size()];
        const auto& g = gs[rng() % gs.size()];
        const Product bc = make_product(b, c);
        for (const auto& al : as)
            for (const auto& be : bs) {
                oracle::ElementSet fiber, ka, kb;
                for (Index x = 0; x < b.size(); ++x)
                    for (Index y = 0; y < c.size(); ++y)
                        if (al.apply(x) == be.apply(y)) fiber.insert(bc.pair(x, y));
                for (Index x = 0; x < b.size(); ++x)
                    if (al.apply(x) == 0) ka.insert(x);
                for (Index y = 0; y < c.size(); ++y)
                    if (be.apply(y) == 0) kb.insert(y);
                bool truth = instances::preimage_set(f, ka) == instances::preimage_set(g, kb) &&
                             brute_w(bc, f, g, ka, kb) == fiber;
                const auto r = recognize_pullback(al, be, f, g);
                EXPECT_EQ(r.recognized(), truth);
                if (r.recognized()) {
                    ++accepted;
                    EXPECT_EQ(oracle::to_set(r.w->embedded()), fiber);
                } else {
                    ++rejected;
                    bool has_witness = false;
                    for (const auto& ch : r.report.checks)
                        if (!ch.passed() && !ch.witness.empty()) has_witness = true;
                    EXPECT_TRUE(has_witness);
                }
            }
    }
    EXPECT_GT(accepted, 0u);
    EXPECT_GT(rejected, 0u);
}

TEST(CpiProperties, IsomorphismHoldsOnSmallRings) {
    for (const auto& [name, r] : zoo::small_rings()) {
        if (r.size() < 2 || r.size() > 16) continue;
        for (const auto& s : oracle::all_ideals(r)) {
            if (s.size() == r.size()) continue;
            const auto res = cpi_extension(r, instances::as_ideal(r, s));
            EXPECT_TRUE(res.report.all_passed()) << name << " |I|=" << s.size();
        }
    }
}
