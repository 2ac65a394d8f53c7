// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "biamalg/biamalg.hpp"
#include "biamalg/classify.hpp"
#include "biamalg/corpus.hpp"
#include "biamalg/spectrum.hpp"
#include "acceptance_dsl.hpp"

using namespace biamalg;

namespace {

using Set = std::set<Index>;

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Instance {
    const CorpusInstance* input;
    BiAmalgamation w;
};

std::string first_failure(const Report& r) {
    for (const auto& c : r.checks)
        if (!c.passed()) return r.title + ": " + c.name + " [" + c.witness + "]";
    return {};
}

bool clean(const Report& r, std::string& why) {
    if (r.all_passed()) return true;
    if (why.empty()) why = first_failure(r);
    return false;
}

Set brute_w(const Product& bc, const RingHom& f, const RingHom& g, const Set& j, const Set& jp) {
    Set out;
    for (Index a = 0; a < f.source().size(); ++a)
        for (Index u : j)
            for (Index v : jp) out.insert(bc.pair(f.target().add(f.apply(a), u), g.target().add(g.apply(a), v)));
    return out;
}

Set side_set(const RingHom& h, const Ideal& k) {
    Set s;
    for (Index a = 0; a < h.source().size(); ++a)
        for (Index u : k.elements()) s.insert(h.target().add(h.apply(a), u));
    return s;
}

bool domain_by_scan(const FiniteRing& r, const Set& s) {
    if (s.size() < 2) return false;
    for (Index x : s)
        for (Index y : s)
            if (x && y && r.mul(x, y) == 0) return false;
    return true;
}

bool prime_by_definition(const FiniteRing& r, const Ideal& p) {
    if (p.is_whole()) return false;
    for (Index x = 0; x < r.size(); ++x) {
        if (p.contains(x)) continue;
        for (Index y = 0; y < r.size(); ++y)
            if (!p.contains(y) && p.contains(r.mul(x, y))) return false;
    }
    return true;
}

void line(int n, const Outcome& o, bool& all) {
    std::cout << "criterion " << n << ": " << (o.pass ? "PASS" : "FAIL") << "  " << o.detail << "\n" << std::flush;
    all = all && o.pass;
}

Ideal principal(const FiniteRing& r, std::int64_t n) { return ideal_generated(r, {r.scale(r.one(), n)}); }

}  // namespace

int main() {
    bool all = true;
    const CorpusOptions opts{20261015, 240, 64};

    auto t0 = std::chrono::steady_clock::now();
    const auto inputs = generate_corpus(opts);
    std::vector<Instance> corpus;
    for (const auto& in : inputs) corpus.push_back({&in, bi_amalgamate(in.f, in.g, in.j, in.jp)});

    // 1. Pullback identity.
    {
        Outcome o;
        std::string why;
        std::size_t bad = 0;
        for (const auto& inst : corpus)
            if (!clean(as_pullback(inst.w), why)) ++bad;
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        o.pass = bad == 0 && corpus.size() >= 200 && secs < 30.0;
        std::ostringstream os;
        os << corpus.size() << " instances, " << bad << " with failures, " << secs << " s" << (why.empty() ? "" : "; " + why);
        o.detail = os.str();
        line(1, o, all);
    }

    // 2. Conductor square.
    {
        Outcome o;
        std::string why;
        std::size_t bad = 0;
        static const char* named[] = {"commutativity mu1 o iota2 = iota1 o mu2", "iota1 injective", "iota2 injective",
                                      "mu1 surjective", "mu2 surjective", "Ker mu1 = JxJ'", "Ker mu2 = JxJ'",
                                      "|W| = |A/I0|·|J|·|J'|"};
        for (const auto& inst : corpus) {
            const Report r = conductor_square(inst.w);
            bool ok = clean(r, why);
            for (const char* n : named) ok = ok && r.find(n) != nullptr;
            ok = ok && inst.w.w.size() == inst.w.a.size() / inst.w.i0.size() * inst.w.j.size() * inst.w.jp.size();
            if (!ok) ++bad;
        }
        o.pass = bad == 0;
        o.detail = std::to_string(corpus.size() - bad) + "/" + std::to_string(corpus.size()) +
                   " squares verified" + (why.empty() ? "" : "; " + why);
        line(2, o, all);
    }

    // 3. Recognition.
    {
        Outcome o;
        const auto squares = generate_squares(opts.seed, 120);
        std::size_t accepted = 0, rejected = 0, disagreements = 0, unverified = 0;
        for (const auto& sq : squares) {
            const FiniteRing& b = sq.f.target();
            const FiniteRing& c = sq.g.target();
            const Product bc = make_product(b, c);
            Set fiber, ka, kb, fa, pa;
            for (Index x = 0; x < b.size(); ++x)
                for (Index y = 0; y < c.size(); ++y)
                    if (sq.alpha.apply(x) == sq.beta.apply(y)) {
                        fiber.insert(bc.pair(x, y));
                        pa.insert(sq.alpha.apply(x));
                    }
            for (Index x = 0; x < b.size(); ++x)
                if (sq.alpha.apply(x) == 0) ka.insert(x);
            for (Index y = 0; y < c.size(); ++y)
                if (sq.beta.apply(y) == 0) kb.insert(y);
            for (Index a = 0; a < sq.f.source().size(); ++a) fa.insert(sq.alpha.apply(sq.f.apply(a)));
            const bool truth = brute_w(bc, sq.f, sq.g, ka, kb) == fiber;
            const auto r = recognize_pullback(sq.alpha, sq.beta, sq.f, sq.g);
            if (r.recognized() != truth) ++disagreements;
            if (r.recognized()) {
                ++accepted;
                if (Set(r.w->embedded().begin(), r.w->embedded().end()) != fiber) ++disagreements;
            } else {
                ++rejected;
                // The reported failing condition must fail by direct enumeration too.
                const Check* img = r.report.find("alpha(pi_B(alpha x beta)) = alpha(f(A))");
                const bool witnessed = img && !img->passed() && !img->witness.empty() && pa != fa;
                const Check* eq = r.report.find("alpha x beta = bi-amalgamation(Ker alpha, Ker beta)");
                const bool witnessed_eq = eq && !eq->passed() && !eq->witness.empty() && !truth;
                if (!witnessed && !witnessed_eq) ++unverified;
            }
        }
        o.pass = squares.size() >= 100 && disagreements == 0 && unverified == 0 && accepted > 0 && rejected > 0;
        o.detail = std::to_string(squares.size()) + " commuting squares, " + std::to_string(accepted) + " accepted, " +
                   std::to_string(rejected) + " rejected, " + std::to_string(disagreements) + " disagreements, " +
                   std::to_string(unverified) + " unverified rejections";
        line(3, o, all);
    }

    // 4. Quotient isomorphisms.
    {
        Outcome o;
        std::mt19937_64 rng(opts.seed);
        std::size_t pairs = 0, bad = 0, unknown = 0, missing_witness = 0;
        std::string why;
        for (const auto& inst : corpus) {
            const auto ideals = all_ideals(inst.w.a);
            const Ideal& i = ideals[rng() % ideals.size()];
            const Report r = quotient_isos_check(inst.w, i);
            ++pairs;
            if (r.any_unknown()) ++unknown;
            if (!clean(r, why)) ++bad;
            for (const auto& c : r.checks)
                if (c.name.find(" ~ ") != std::string::npos && c.passed() && !c.map) ++missing_witness;
        }
        o.pass = pairs >= 100 && bad == 0 && unknown == 0 && missing_witness == 0;
        o.detail = std::to_string(pairs) + " (W, I) pairs, " + std::to_string(bad) + " failing, " +
                   std::to_string(unknown) + " unknown" + (why.empty() ? "" : "; " + why);
        line(4, o, all);
    }

    // 5 and 6 share the transfer report.
    std::vector<Report> transfer;
    for (const auto& inst : corpus) transfer.push_back(verify_transfer(inst.w));

    {
        Outcome o;
        std::size_t bad = 0;
        std::size_t domains = 0;
        for (std::size_t k = 0; k < corpus.size(); ++k) {
            const auto& w = corpus[k].w;
            const Check* c =
                transfer[k].find("domain: W domain iff (J=0 and g(A)+J' domain) or (J'=0 and f(A)+J domain)");
            const Set ws(w.embedded().begin(), w.embedded().end());
            const bool lhs = domain_by_scan(w.bc.ring, ws);
            const bool rhs = (w.j.is_zero() && domain_by_scan(w.c, side_set(w.g, w.jp))) ||
                             (w.jp.is_zero() && domain_by_scan(w.b, side_set(w.f, w.j)));
            domains += lhs;
            if (!c || !c->passed() || lhs != rhs) ++bad;
        }
        o.pass = bad == 0;
        o.detail = std::to_string(corpus.size()) + " instances (" + std::to_string(domains) + " domains), " +
                   std::to_string(bad) + " violations";
        line(5, o, all);
    }

    {
        Outcome o;
        std::size_t bad = 0, radical_sub = 0, onto_sub = 0;
        std::string why;
        for (const auto& r : transfer) {
            if (!r.find("reduced: (a) or (b) implies (c)")->passed() || !r.find("reduced: (c) implies (d)")->passed())
                ++bad;
            if (const Check* c = r.find("reduced: (a)-(d) equivalent when I0 is radical")) {
                ++radical_sub;
                if (!c->passed()) ++bad;
            }
            if (const Check* c = r.find("reduced: f onto, Ker f in Ker g: W reduced iff B reduced and J' meets Nil(C) trivially")) {
                ++onto_sub;
                if (!c->passed()) ++bad;
            }
        }
        o.pass = bad == 0 && radical_sub >= 30 && onto_sub >= 30;
        o.detail = std::to_string(bad) + " violations; radical I0 sub-corpus " + std::to_string(radical_sub) +
                   ", surjective-f sub-corpus " + std::to_string(onto_sub);
        line(6, o, all);
    }

    // 7. Spectrum.
    {
        Outcome o;
        std::size_t bad = 0, primes = 0;
        std::string why;
        for (const auto& inst : corpus) {
            const SpecBowtie s = spec_bowtie(inst.w);
            if (!clean(s.report, why)) ++bad;
            // Independent count: primes among all ideals, by definition.
            std::size_t expected = 0;
            for (const auto& i : all_ideals(inst.w.w)) expected += prime_by_definition(inst.w.w, i);
            std::size_t seen = 0;
            for (const auto& e : s.entries) seen += prime_by_definition(inst.w.w, e.prime);
            if (expected != s.entries.size() || seen != expected) {
                ++bad;
                if (why.empty()) why = inst.input->label + ": prime count mismatch";
            }
            primes += s.entries.size();
        }
        const auto z4 = make_zmod(4), z6 = make_zmod(6);
        const auto s4 = spec_bowtie(duplication(z4, principal(z4, 2)));
        const auto s6 = spec_bowtie(duplication(z6, principal(z6, 3)));
        const bool pinned = s4.entries.size() == 1 && s6.entries.size() == 3 && s4.report.all_passed() &&
                            s6.report.all_passed();
        o.pass = bad == 0 && pinned;
        o.detail = std::to_string(primes) + " primes over " + std::to_string(corpus.size()) + " instances, " +
                   std::to_string(bad) + " mismatches; |Spec Z/4 bowtie (2)| = " + std::to_string(s4.entries.size()) +
                   ", |Spec Z/6 bowtie (3)| = " + std::to_string(s6.entries.size()) + (why.empty() ? "" : "; " + why);
        line(7, o, all);
    }

    // 8 and 9 share the localization report.
    std::vector<Report> loc;
    for (const auto& inst : corpus) loc.push_back(verify_spec_localization(inst.w));
    {
        const auto z2 = make_zmod(2);
        const auto id = identity_hom(z2);
        loc.push_back(verify_spec_localization(bi_amalgamate(id, id, unit_ideal(z2), unit_ideal(z2))));
    }

    {
        Outcome o;
        std::size_t bad = 0, local = 0, a_local = 0, whole = 0;
        for (std::size_t k = 0; k < loc.size(); ++k) {
            const Report& r = loc[k];
            for (const auto& c : r.checks) {
                const bool local_check = c.name.rfind("W local", 0) == 0 || c.name.rfind("A local", 0) == 0 ||
                                         c.name.rfind("maximal ideal", 0) == 0;
                if (local_check && !c.passed()) ++bad;
            }
            if (r.find("A local: W local iff J x J' in Jac(B x C)")) ++a_local;
            const Check* c = r.find("W local iff J != B and f(A)+J, g(A)+J' local");
            if (c && c->witness.find("W local yes") == 0) ++local;
            if (c && c->witness.find("J != B no") != std::string::npos) ++whole;
        }
        o.pass = bad == 0 && whole > 0;
        o.detail = std::to_string(loc.size()) + " instances (" + std::to_string(local) + " local, " +
                   std::to_string(a_local) + " with A local, " + std::to_string(whole) + " with J = B), " +
                   std::to_string(bad) + " violations";
        line(8, o, all);
    }

    {
        Outcome o;
        std::size_t bad = 0, conductor = 0, other = 0, unknown = 0;
        std::string why;
        for (const auto& r : loc) {
            for (const auto& c : r.checks) {
                if (c.name.rfind("W_P ~ A_p", 0) == 0) ++conductor;
                else if (c.name.rfind("W_P ~", 0) == 0) ++other;
                else if (c.name.rfind("f_p^-1", 0) != 0 && c.name.rfind("f_p, g_p", 0) != 0 &&
                         c.name.rfind("localized", 0) != 0)
                    continue;
                if (c.status == CheckStatus::unknown) ++unknown;
                if (!c.passed()) {
                    ++bad;
                    if (why.empty()) why = c.name + " [" + c.witness + "]";
                }
                if (c.name.rfind("W_P ~", 0) == 0 && c.passed() && !c.map) ++bad;
            }
        }
        o.pass = bad == 0 && unknown == 0 && conductor > 0 && other > 0;
        o.detail = std::to_string(conductor) + " conductor primes, " + std::to_string(other) + " other primes, " +
                   std::to_string(bad) + " failures" + (why.empty() ? "" : "; " + why);
        line(9, o, all);
    }

    // 10. Special-case identities.
    {
        Outcome o;
        std::size_t amalg = 0, amalg_bad = 0, side = 0, side_bad = 0, idz = 0, idz_bad = 0;
        for (const auto& in : inputs)
            if (in.family == "amalgamation") {
                const auto w = amalgamation(in.g, in.jp);
                ++amalg;
                const Check* c = w.construction.find("element set equals {(a, f(a)+j)}");
                if (!c || !w.construction.all_passed()) ++amalg_bad;
            }
        for (const auto& r : transfer) {
            for (const char* n : {"f(A)+J ~ A bowtie^{pi,f}(0, J)", "g(A)+J' ~ A bowtie^{pi,g}(0, J')"}) {
                const Check* c = r.find(n);
                ++side;
                if (!c || !c->passed() || !c->map) ++side_bad;
            }
        }
        auto pairs = square_zero_pairs(opts.max_order);
        const auto z4 = make_zmod(4);
        pairs.push_back({"Z/4 (2)", z4, principal(z4, 2)});
        for (const auto& p : pairs) {
            const Report r = idealization_coincidence(p.ring, p.ideal);
            ++idz;
            if (r.checks.size() != 1 || !r.all_passed() || !r.checks[0].map) ++idz_bad;
        }
        const auto pinned = amalgamation(identity_hom(z4), principal(z4, 2));
        const bool pinned_ok = pinned.construction.all_passed() && pinned.w.size() == 8;
        o.pass = amalg >= 30 && side >= 30 && idz >= 30 && amalg_bad + side_bad + idz_bad == 0 && pinned_ok;
        o.detail = "amalgamation " + std::to_string(amalg - amalg_bad) + "/" + std::to_string(amalg) +
                   ", f(A)+J as a bi-amalgamation " + std::to_string(side - side_bad) + "/" + std::to_string(side) +
                   ", idealization " + std::to_string(idz - idz_bad) + "/" + std::to_string(idz) +
                   ", pinned Z/4 (2) " + (pinned_ok ? "ok" : "failed");
        line(10, o, all);
    }

    // 11. Infrastructure.
    {
        Outcome o;
        std::size_t rings = 0, dirty = 0;
        auto audit = [&](const FiniteRing& r) {
            ++rings;
            if (!validate_axioms(r).ok()) ++dirty;
        };
        for (const auto& r : base_rings(64)) audit(r.ring);
        for (const auto& inst : corpus) {
            audit(inst.w.w);
            audit(inst.w.fa_j.ring);
            audit(inst.w.ga_jp.ring);
            audit(quotient_ring(inst.w.w, j_times_jp(inst.w)).ring);
        }
        const acceptance::DslOutcome dsl = acceptance::dsl_properties(1000, opts.seed);
        o.pass = dirty == 0 && dsl.ok;
        o.detail = std::to_string(rings) + " rings audited, " + std::to_string(dirty) + " with violations; " + dsl.detail;
        line(11, o, all);
    }

    std::cout << (all ? "all criteria passed" : "some criteria failed") << "\n";
    return all ? 0 : 1;
}
