#include "biamalg/spectrum.hpp"

#include <algorithm>
#include <sstream>

#include "biamalg/classify.hpp"
#include "biamalg/error.hpp"

namespace biamalg {

namespace {

std::vector<std::pair<Ideal, Index>> primes_with_idempotents(const FiniteRing& r) {
    const ElementTable et = element_table(r);
    std::vector<Index> idem;
    for (Index x = 1; x < r.size(); ++x)
        if (et.idempotent[x]) idem.push_back(x);
    std::vector<std::pair<Ideal, Index>> out;
    for (Index e : idem) {
        bool primitive = true;
        for (Index d : idem)
            if (d != e && r.mul(d, e) == d) {
                primitive = false;
                break;
            }
        if (!primitive) continue;
        std::vector<Index> p;
        for (Index x = 0; x < r.size(); ++x)
            if (et.nilpotent[r.mul(x, e)]) p.push_back(x);
        out.emplace_back(Ideal::from_elements(r, std::move(p), true), e);
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        return std::lexicographical_compare(x.first.elements().begin(), x.first.elements().end(),
                                            y.first.elements().begin(), y.first.elements().end());
    });
    return out;
}

std::vector<std::int32_t> inverse_table(const RingHom& emb) {
    std::vector<std::int32_t> inv(emb.target().size(), -1);
    for (Index x = 0; x < emb.source().size(); ++x) inv[emb.apply(x)] = static_cast<std::int32_t>(x);
    return inv;
}

bool contains_ideal(const Ideal& big, const Ideal& small) { return small.subset_of(big); }

std::string show_ideal(const Ideal& i) {
    std::string s = "{";
    bool first = true;
    for (Index x : i.elements()) {
        if (!first) s += ", ";
        first = false;
        s += to_string(i.ring().at(x));
    }
    return s + "}";
}

std::optional<std::size_t> position(const std::vector<Ideal>& xs, const Ideal& y) {
    for (std::size_t k = 0; k < xs.size(); ++k)
        if (xs[k] == y) return k;
    return std::nullopt;
}

/// f(p) + J as an ideal of f(A)+J.
Ideal pushed_prime(const RingHom& f, const Subring& side, const Ideal& p, const Ideal& j) {
    const auto inv = inverse_table(side.embedding);
    std::vector<Index> out;
    std::vector<char> seen(side.ring.size(), 0);
    for (Index x : p.elements())
        for (Index u : j.elements()) {
            const auto k = static_cast<Index>(inv[f.target().add(f.apply(x), u)]);
            if (!seen[k]) {
                seen[k] = 1;
                out.push_back(k);
            }
        }
    std::sort(out.begin(), out.end());
    return Ideal::from_elements(side.ring, std::move(out), true);
}

/// { a : f(a) ∈ L } for L an ideal of the subring f(A)+J.
Ideal pulled_prime(const RingHom& f, const Subring& side, const Ideal& l) {
    const auto inv = inverse_table(side.embedding);
    std::vector<Index> out;
    for (Index x = 0; x < f.source().size(); ++x)
        if (l.contains(static_cast<Index>(inv[f.apply(x)]))) out.push_back(x);
    return Ideal::from_elements(f.source(), std::move(out), true);
}

Ideal contract(const BiAmalgamation& w, const Ideal& l, const RingHom& proj, const Subring& side) {
    if (!(l.ring() == side.ring)) throw Error(Errc::wrong_ring, "ideal does not live in the expected subring");
    const auto inv = inverse_table(side.embedding);
    std::vector<Index> out;
    for (Index x = 0; x < w.w.size(); ++x)
        if (l.contains(static_cast<Index>(inv[proj.apply(x)]))) out.push_back(x);
    return Ideal::from_elements(w.w, std::move(out), true);
}

}  // namespace

std::vector<Ideal> spec(const FiniteRing& r) {
    std::vector<Ideal> out;
    for (auto& [p, e] : primes_with_idempotents(r)) out.push_back(p);
    return out;
}

std::vector<Index> primitive_idempotents(const FiniteRing& r) {
    std::vector<Index> out;
    for (auto& [p, e] : primes_with_idempotents(r)) out.push_back(e);
    return out;
}

LocalFactor localize_at_prime(const FiniteRing& r, const Ideal& p) {
    if (!(p.ring() == r)) throw Error(Errc::wrong_ring, "ideal does not live in the ring");
    for (const auto& [q, e] : primes_with_idempotents(r)) {
        if (!(q == p)) continue;
        const Quotient qr = quotient_ring(r, ideal_generated(r, {r.sub(r.one(), r.at(e))}));
        return LocalFactor{qr.ring, qr.map, e};
    }
    throw Error(Errc::not_prime, "ideal is not prime", show_ideal(p));
}

std::string to_string(PrimeClass c) {
    switch (c) {
        case PrimeClass::conductor: return "contains-conductor";
        case PrimeClass::y_side: return "Y-side";
        case PrimeClass::y_prime_side: return "Y'-side";
    }
    return "contains-conductor";
}

Ideal contract_left(const BiAmalgamation& w, const Ideal& l) { return contract(w, l, w.to_b, w.fa_j); }
Ideal contract_right(const BiAmalgamation& w, const Ideal& lp) { return contract(w, lp, w.to_c, w.ga_jp); }

SpecBowtie spec_bowtie(const BiAmalgamation& w) {
    SpecBowtie out;
    Report& rep = out.report;
    rep.title = "spectrum";

    const std::vector<Ideal> brute = spec(w.w);
    const std::vector<Ideal> spec_a = spec(w.a);
    const std::vector<Ideal> y = spec(w.fa_j.ring);
    const std::vector<Ideal> yp = spec(w.ga_jp.ring);
    const Ideal jf = j_in_fa_j(w);
    const Ideal jg = jp_in_ga_jp(w);
    const Ideal conductor = j_times_jp(w);

    std::vector<Ideal> from_a, above_i0;
    for (const auto& p : spec_a)
        if (contains_ideal(p, w.i0)) {
            above_i0.push_back(p);
            from_a.push_back(embedded_ideal(w, p));
        }
    std::vector<Ideal> lbar, lpbar;
    for (const auto& l : y) lbar.push_back(contract_left(w, l));
    for (const auto& l : yp) lpbar.push_back(contract_right(w, l));

    std::vector<Ideal> structural;
    for (const auto* group : {&from_a, &lbar, &lpbar})
        for (const auto& q : *group)
            if (!position(structural, q)) structural.push_back(q);

    std::string missing;
    for (const auto& q : structural)
        if (!position(brute, q)) missing = show_ideal(q) + " is not a prime of W";
    for (const auto& q : brute)
        if (!position(structural, q)) missing = show_ideal(q) + " has no structural source";
    rep.add("structural and brute-force spectra coincide", missing.empty() && structural.size() == brute.size(),
            missing.empty() ? std::to_string(brute.size()) + " primes" : missing);

    for (const auto& q : brute) {
        if (!classify(quotient_ring(w.w, q).ring).is_field) {
            rep.add("every prime is maximal", false, show_ideal(q));
            break;
        }
    }
    if (!rep.find("every prime is maximal")) rep.add("every prime is maximal", true);

    // Distinct primes above I0 give distinct p ⋈ (J, J').
    bool injective = true;
    for (std::size_t s = 0; s < from_a.size(); ++s)
        for (std::size_t t = s + 1; t < from_a.size(); ++t)
            if (from_a[s] == from_a[t]) injective = false;
    rep.add("p -> p bowtie(J,J') is a bijection onto the conductor class", injective,
            std::to_string(above_i0.size()) + " primes of A above I0");

    bool partition = true, unique_p = true, unique_l = true, lemma2 = true, special = true;
    std::string witness;
    for (const auto& q : brute) {
        SpectrumEntry e{q, PrimeClass::conductor, std::nullopt, std::nullopt, std::nullopt,
                        localize_at_prime(w.w, q).ring};
        const bool has_conductor = contains_ideal(q, conductor);
        std::size_t from_p = 0;
        for (std::size_t k = 0; k < from_a.size(); ++k)
            if (from_a[k] == q) {
                ++from_p;
                e.p = above_i0[k];
            }
        if (has_conductor != (from_p == 1)) {
            unique_p = false;
            witness = show_ideal(q);
        }
        std::size_t left = 0, right = 0;
        for (std::size_t k = 0; k < y.size(); ++k)
            if (lbar[k] == q && (has_conductor || !contains_ideal(y[k], jf))) {
                ++left;
                e.l = y[k];
            }
        for (std::size_t k = 0; k < yp.size(); ++k)
            if (lpbar[k] == q && (has_conductor || !contains_ideal(yp[k], jg))) {
                ++right;
                e.lp = yp[k];
            }
        if (has_conductor) {
            // P = L̄ = L̄' with L = f(p)+J and L' = g(p)+J', and f^-1(L) = p.
            if (e.p) {
                const Ideal l = pushed_prime(w.f, w.fa_j, *e.p, w.j);
                const Ideal lp = pushed_prime(w.g, w.ga_jp, *e.p, w.jp);
                if (!position(y, l) || !position(yp, lp) || !(contract_left(w, l) == q) ||
                    !(contract_right(w, lp) == q) || !(pulled_prime(w.f, w.fa_j, l) == *e.p) ||
                    !(pulled_prime(w.g, w.ga_jp, lp) == *e.p)) {
                    special = false;
                    witness = show_ideal(q);
                }
                e.l = l;
                e.lp = lp;
            }
        } else {
            if (left + right != 1) {
                unique_l = false;
                witness = show_ideal(q);
            }
            if (left + right > 1) rep.notes.push_back("L-bar and L'-bar collide at " + show_ideal(q));
            e.kind = left ? PrimeClass::y_side : PrimeClass::y_prime_side;
        }
        if ((e.kind == PrimeClass::conductor) != has_conductor) partition = false;
        out.entries.push_back(std::move(e));
    }
    rep.add("J x J' in P iff P = p bowtie(J,J') for a unique prime p above I0", unique_p, unique_p ? "" : witness);
    rep.add("J x J' not in P iff P = L-bar for a unique L in Y or Y' avoiding J or J'", unique_l,
            unique_l ? "" : witness);
    rep.add("conductor primes equal L-bar = L'-bar for L = f(p)+J, L' = g(p)+J'", special, special ? "" : witness);

    for (std::size_t k = 0; k < y.size(); ++k)
        if (contains_ideal(y[k], jf) && !(lbar[k] == embedded_ideal(w, pulled_prime(w.f, w.fa_j, y[k])))) {
            lemma2 = false;
            witness = show_ideal(y[k]);
        }
    for (std::size_t k = 0; k < yp.size(); ++k)
        if (contains_ideal(yp[k], jg) && !(lpbar[k] == embedded_ideal(w, pulled_prime(w.g, w.ga_jp, yp[k])))) {
            lemma2 = false;
            witness = show_ideal(yp[k]);
        }
    rep.add("L containing J gives L-bar = f^-1(L) bowtie(J,J')", lemma2, lemma2 ? "" : witness);

    std::size_t counts[3] = {0, 0, 0};
    for (const auto& e : out.entries) ++counts[static_cast<int>(e.kind)];
    rep.add("classes partition Spec(W)", partition && counts[0] + counts[1] + counts[2] == brute.size(),
            std::to_string(counts[0]) + " conductor, " + std::to_string(counts[1]) + " Y-side, " +
                std::to_string(counts[2]) + " Y'-side");

    // I ⋈ (J, J') is prime iff I + I0 is, tried on every principal ideal of A.
    bool lemma1 = true;
    for (Index x = 0; x < w.a.size(); ++x) {
        const Ideal i = ideal_generated(w.a, {w.a.at(x)});
        const bool left_prime = position(brute, embedded_ideal(w, i)).has_value();
        const bool right_prime = position(spec_a, ideal_sum(i, w.i0)).has_value();
        if (left_prime != right_prime) {
            lemma1 = false;
            witness = to_string(w.a.at(x));
            break;
        }
    }
    rep.add("I bowtie(J,J') prime iff I+I0 prime (principal I)", lemma1, lemma1 ? "" : "I = (" + witness + ")");
    return out;
}

Report verify_spec_localization(const BiAmalgamation& w) {
    Report rep;
    rep.title = "spectrum localization";
    auto yn = [](bool v) { return v ? std::string("yes") : std::string("no"); };
    const auto cw = classify(w.w);
    const auto cf = classify(w.fa_j.ring);
    const auto cg = classify(w.ga_jp.ring);
    const auto ca = classify(w.a);
    const bool rhs = !w.j.is_whole() && cf.is_local && cg.is_local;
    rep.add("W local iff J != B and f(A)+J, g(A)+J' local", cw.is_local == rhs,
            "W local " + yn(cw.is_local) + "; J != B " + yn(!w.j.is_whole()) + ", f(A)+J local " + yn(cf.is_local) +
                ", g(A)+J' local " + yn(cg.is_local));

    const std::vector<Ideal> spec_w = spec(w.w);
    if (cw.is_local) {
        std::vector<Ideal> above;
        for (const auto& p : spec(w.a))
            if (contains_ideal(p, w.i0)) above.push_back(p);
        const bool ok = above.size() == 1 && spec_w.size() == 1 && embedded_ideal(w, above[0]) == spec_w[0];
        rep.add("maximal ideal of local W is m bowtie(J,J')", ok,
                std::to_string(above.size()) + " maximal ideals of A above I0");
    }

    const auto cb = classify(w.b);
    const auto cc = classify(w.c);
    const bool in_jac = w.j.subset_of(cb.jacobson_radical) && w.jp.subset_of(cc.jacobson_radical);
    rep.add("W local implies J x J' in Jac(B x C)", !cw.is_local || in_jac,
            "W local " + yn(cw.is_local) + ", J x J' in Jac " + yn(in_jac));
    if (ca.is_local)
        rep.add("A local: W local iff J x J' in Jac(B x C)", cw.is_local == in_jac,
                "W local " + yn(cw.is_local) + ", J x J' in Jac " + yn(in_jac));

    const SpecBowtie sb = spec_bowtie(w);
    for (const auto& e : sb.entries) {
        const std::string tag = " at " + show_ideal(e.prime);
        if (e.kind == PrimeClass::y_side && e.l) {
            add_isomorphism(rep, "W_P ~ (f(A)+J)_L" + tag, e.local_factor, localize_at_prime(w.fa_j.ring, *e.l).ring);
        } else if (e.kind == PrimeClass::y_prime_side && e.lp) {
            add_isomorphism(rep, "W_P ~ (g(A)+J')_L'" + tag, e.local_factor,
                            localize_at_prime(w.ga_jp.ring, *e.lp).ring);
        } else if (e.kind == PrimeClass::conductor && e.p) {
            const LocalFactor ap = localize_at_prime(w.a, *e.p);
            auto side = [&](const RingHom& f, const Ideal& j) {
                std::vector<Index> s;
                std::vector<char> seen(f.target().size(), 0);
                for (Index x = 0; x < w.a.size(); ++x) {
                    if (e.p->contains(x)) continue;
                    for (Index u : j.elements()) {
                        const Index v = f.target().add(f.apply(x), u);
                        if (!seen[v]) {
                            seen[v] = 1;
                            s.push_back(v);
                        }
                    }
                }
                Localization loc = localize(f.target(), std::span<const Index>(s));
                std::vector<Index> table(ap.ring.size(), 0);
                std::vector<char> set(ap.ring.size(), 0);
                bool well = true;
                for (Index x = 0; x < w.a.size(); ++x) {
                    const Index k = ap.map.apply(x);
                    const Index v = loc.map.apply(f.apply(x));
                    if (set[k] && table[k] != v) well = false;
                    set[k] = 1;
                    table[k] = v;
                }
                std::vector<Element> js;
                for (const auto& g : j.generators()) js.push_back(loc.map(g));
                Ideal jl = ideal_generated(loc.ring, std::span<const Element>(js));
                return std::tuple{well, std::move(loc), std::move(table), std::move(jl)};
            };
            auto [wf, lb, tf, js] = side(w.f, w.j);
            auto [wg, lc, tg, jps] = side(w.g, w.jp);
            rep.add("f_p, g_p well-defined" + tag, wf && wg);
            if (!wf || !wg) continue;
            const RingHom fp = hom_from_table(ap.ring, lb.ring, tf);
            const RingHom gp = hom_from_table(ap.ring, lc.ring, tg);
            const Ideal pf = preimage(fp, js);
            const Ideal pg = preimage(gp, jps);
            const auto i0p = image_set(ap.map, std::vector<Index>(w.i0.elements().begin(), w.i0.elements().end()));
            const bool ident = pf == pg && std::equal(i0p.begin(), i0p.end(), pf.elements().begin(), pf.elements().end());
            rep.add("f_p^-1(J_S) = g_p^-1(J'_S') = (I0)_p" + tag, ident,
                    "|(I0)_p| = " + std::to_string(i0p.size()));
            if (!ident) continue;
            const BiAmalgamation wp = bi_amalgamate(fp, gp, js, jps);
            add_isomorphism(rep, "W_P ~ A_p bowtie(J_S, J'_S')" + tag, e.local_factor, wp.w);
            rep.append(conductor_square(wp), "localized" + tag + ": ");
        }
    }
    return rep;
}

std::string spectrum_dot(const SpecBowtie& s) {
    std::ostringstream os;
    os << "digraph spec {\n  rankdir=BT;\n";
    for (std::size_t k = 0; k < s.entries.size(); ++k) {
        const auto& e = s.entries[k];
        os << "  P" << k << " [label=\"" << show_ideal(e.prime) << "\\n" << to_string(e.kind) << "\"];\n";
        if (e.p) os << "  a" << k << " [shape=box,label=\"p = " << show_ideal(*e.p) << "\"];\n  a" << k << " -> P" << k << ";\n";
        if (e.l) os << "  l" << k << " [shape=box,label=\"L = " << show_ideal(*e.l) << "\"];\n  l" << k << " -> P" << k << ";\n";
        if (e.lp) os << "  m" << k << " [shape=box,label=\"L' = " << show_ideal(*e.lp) << "\"];\n  m" << k << " -> P" << k << ";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace biamalg
