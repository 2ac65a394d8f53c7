#include "biamalg/biamalg.hpp"

#include <algorithm>

#include "biamalg/classify.hpp"
#include "biamalg/error.hpp"
#include "biamalg/localize.hpp"

namespace biamalg {

namespace {

std::string show(const FiniteRing& r, Index x) { return to_string(r.at(x)); }

std::string show_pair(const Product& p, Index x) {
    return "(" + show(p.left, p.first(x)) + ", " + show(p.right, p.second(x)) + ")";
}

/// Target index -> source index for an injective hom; -1 off the image.
std::vector<std::int32_t> inverse_table(const RingHom& emb) {
    std::vector<std::int32_t> inv(emb.target().size(), -1);
    for (Index x = 0; x < emb.source().size(); ++x) inv[emb.apply(x)] = static_cast<std::int32_t>(x);
    return inv;
}

std::vector<Index> all_indices(std::size_t n) {
    std::vector<Index> v(n);
    for (Index x = 0; x < n; ++x) v[x] = x;
    return v;
}

std::vector<Index> sorted_unique(std::vector<Index> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

/// First element in exactly one of two sorted sets, and which side it came from.
std::optional<std::pair<Index, bool>> first_difference(const std::vector<Index>& x, const std::vector<Index>& y) {
    std::vector<Index> only_x, only_y;
    std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(only_x));
    std::set_difference(y.begin(), y.end(), x.begin(), x.end(), std::back_inserter(only_y));
    if (!only_x.empty()) return std::pair{only_x.front(), true};
    if (!only_y.empty()) return std::pair{only_y.front(), false};
    return std::nullopt;
}

std::vector<Index> kernel_of(std::span<const Index> table) {
    std::vector<Index> out;
    for (Index x = 0; x < table.size(); ++x)
        if (table[x] == 0) out.push_back(x);
    return out;
}

bool surjective(std::span<const Index> table, std::size_t target_size) {
    return sorted_unique({table.begin(), table.end()}).size() == target_size;
}

/// Fills table[key] = value, remembering the first clash.
struct TableBuilder {
    std::vector<std::int64_t> values;
    std::optional<Index> clash;

    explicit TableBuilder(std::size_t n) : values(n, -1) {}

    void set(Index key, Index value) {
        if (values[key] < 0)
            values[key] = value;
        else if (values[key] != value && !clash)
            clash = key;
    }
    std::optional<Index> missing() const {
        for (Index k = 0; k < values.size(); ++k)
            if (values[k] < 0) return k;
        return std::nullopt;
    }
    std::vector<Index> table() const { return {values.begin(), values.end()}; }
};

/// Records well-definedness and totality of a table-built map, then tries to
/// turn it into a ring homomorphism.
std::optional<RingHom> checked_map(Report& rep, const std::string& name, const TableBuilder& t,
                                   const FiniteRing& source, const FiniteRing& target) {
    if (t.clash) {
        rep.add(name + " well-defined", false, "two values at " + show(source, *t.clash));
        return std::nullopt;
    }
    if (auto m = t.missing()) {
        rep.add(name + " well-defined", false, "no value at " + show(source, *m));
        return std::nullopt;
    }
    rep.add(name + " well-defined", true);
    try {
        RingHom h = hom_from_table(source, target, t.table());
        rep.add(name + " is a ring homomorphism", true);
        return h;
    } catch (const Error& e) {
        rep.add(name + " is a ring homomorphism", false, std::string(e.what()) + " " + e.witness());
        return std::nullopt;
    }
}

}  // namespace

std::optional<Index> BiAmalgamation::find(Index x, Index y) const {
    const std::int32_t k = w_of_pair_.at(bc.pair(x, y));
    if (k < 0) return std::nullopt;
    return static_cast<Index>(k);
}

BiAmalgamation bi_amalgamate(const RingHom& f, const RingHom& g, const Ideal& j, const Ideal& jp) {
    if (!(f.source() == g.source())) throw Error(Errc::mismatched_maps, "f and g must share a source");
    if (!(j.ring() == f.target())) throw Error(Errc::wrong_ring, "J must be an ideal of the target of f");
    if (!(jp.ring() == g.target())) throw Error(Errc::wrong_ring, "J' must be an ideal of the target of g");
    const FiniteRing& a = f.source();
    const FiniteRing& b = f.target();
    const FiniteRing& c = g.target();

    Ideal i0 = preimage(f, j);
    const Ideal i0g = preimage(g, jp);
    if (!(i0 == i0g)) {
        const std::vector<Index> x(i0.elements().begin(), i0.elements().end());
        const std::vector<Index> y(i0g.elements().begin(), i0g.elements().end());
        const auto d = first_difference(x, y);
        throw Error(Errc::preimage_mismatch, "f^-1(J) and g^-1(J') differ",
                    show(a, d->first) + (d->second ? " is in f^-1(J) but not in g^-1(J')"
                                                   : " is in g^-1(J') but not in f^-1(J)"));
    }

    Product bc = make_product(b, c);

    // Coset representatives of I0 in A; (a, j, j') then ranges without repeats.
    std::vector<char> covered(a.size(), 0);
    std::vector<Index> reps;
    for (Index x = 0; x < a.size(); ++x) {
        if (covered[x]) continue;
        reps.push_back(x);
        for (Index i : i0.elements()) covered[a.add(x, i)] = 1;
    }
    std::vector<Index> elems;
    elems.reserve(reps.size() * j.size() * jp.size());
    for (Index x : reps)
        for (Index u : j.elements())
            for (Index v : jp.elements())
                elems.push_back(bc.pair(b.add(f.apply(x), u), c.add(g.apply(x), v)));
    const std::size_t generated = elems.size();
    elems = sorted_unique(std::move(elems));

    std::vector<Index> gens;
    for (std::size_t i = 0; i < a.rank(); ++i) {
        const Index e = a.index_of(a.generator(i));
        gens.push_back(bc.pair(f.apply(e), g.apply(e)));
    }
    for (Index u : j.elements()) gens.push_back(bc.pair(u, 0));
    for (Index v : jp.elements()) gens.push_back(bc.pair(0, v));
    Subring sub = subring_generated(bc.ring, std::span<const Index>(gens));

    std::vector<Index> image(sub.embedding.table().begin(), sub.embedding.table().end());
    std::sort(image.begin(), image.end());

    std::vector<Index> fgens;
    for (std::size_t i = 0; i < a.rank(); ++i) fgens.push_back(f.apply(a.index_of(a.generator(i))));
    std::vector<Index> ggens = fgens;
    for (std::size_t i = 0; i < a.rank(); ++i) ggens[i] = g.apply(a.index_of(a.generator(i)));
    for (Index u : j.elements()) fgens.push_back(u);
    for (Index v : jp.elements()) ggens.push_back(v);

    BiAmalgamation w{a,
                     b,
                     c,
                     f,
                     g,
                     j,
                     jp,
                     std::move(i0),
                     bc,
                     sub.ring,
                     sub.embedding,
                     compose(bc.proj_left, sub.embedding),
                     compose(bc.proj_right, sub.embedding),
                     subring_generated(b, std::span<const Index>(fgens)),
                     subring_generated(c, std::span<const Index>(ggens)),
                     Report{"construction", {}, {}},
                     std::move(image),
                     {}};

    w.construction.add("|W| = |A/I0|·|J|·|J'|", generated == w.embedded_.size() && generated == w.w.size(),
                       std::to_string(reps.size()) + "·" + std::to_string(j.size()) + "·" +
                           std::to_string(jp.size()) + " = " + std::to_string(generated) + ", |W| = " +
                           std::to_string(w.w.size()));
    const auto diff = first_difference(elems, w.embedded_);
    w.construction.add("element set equals {(f(a)+j, g(a)+j')}", !diff.has_value(),
                       diff ? show_pair(bc, diff->first) +
                                  (diff->second ? " enumerated but not generated" : " generated but not enumerated")
                            : std::to_string(elems.size()) + " elements");

    w.w_of_pair_.assign(bc.ring.size(), -1);
    for (Index x = 0; x < w.w.size(); ++x) w.w_of_pair_[w.embed.apply(x)] = static_cast<std::int32_t>(x);
    return w;
}

BiAmalgamation amalgamation(const RingHom& f, const Ideal& j) {
    const FiniteRing& a = f.source();
    BiAmalgamation w = bi_amalgamate(identity_hom(a), f, preimage(f, j), j);
    std::vector<Index> direct;
    for (Index x = 0; x < a.size(); ++x)
        for (Index u : j.elements()) direct.push_back(w.bc.pair(x, f.target().add(f.apply(x), u)));
    direct = sorted_unique(std::move(direct));
    const auto diff = first_difference(direct, w.embedded());
    w.construction.add("element set equals {(a, f(a)+j)}", !diff.has_value(),
                       diff ? show_pair(w.bc, diff->first) : std::to_string(direct.size()) + " elements");
    return w;
}

BiAmalgamation duplication(const FiniteRing& a, const Ideal& i) {
    const RingHom id = identity_hom(a);
    return bi_amalgamate(id, id, i, i);
}

FiniteRing idealization(const FiniteRing& a, const Ideal& i) {
    if (!(i.ring() == a)) throw Error(Errc::wrong_ring, "ideal does not live in the ring");
    const std::vector<Index> igens(i.elements().begin(), i.elements().end());
    const detail::SubgroupPresentation pres = detail::present_subgroup(a, igens);
    const std::size_t k = a.rank();
    const std::size_t m = pres.basis.size();
    std::vector<std::int64_t> orders = a.orders();
    orders.insert(orders.end(), pres.orders.begin(), pres.orders.end());

    FiniteRing::Structure st(k + m, std::vector<std::vector<std::int64_t>>(k + m, std::vector<std::int64_t>(k + m, 0)));
    for (std::size_t p = 0; p < k; ++p) {
        const Index ep = a.index_of(a.generator(p));
        for (std::size_t q = 0; q < k; ++q) std::copy(a.structure()[p][q].begin(), a.structure()[p][q].end(), st[p][q].begin());
        for (std::size_t s = 0; s < m; ++s) {
            const auto& co = pres.coords_of[a.mul(ep, pres.basis[s])];
            std::copy(co.begin(), co.end(), st[p][k + s].begin() + static_cast<std::ptrdiff_t>(k));
            st[k + s][p] = st[p][k + s];
        }
    }
    std::vector<std::int64_t> one = a.one().coords;
    one.resize(k + m, 0);
    return FiniteRing::from_structure(std::move(orders), std::move(st), std::move(one));
}

Ideal embedded_ideal(const BiAmalgamation& w, const Ideal& i) {
    if (!(i.ring() == w.a)) throw Error(Errc::wrong_ring, "ideal does not live in A");
    std::vector<char> mark(w.w.size(), 0);
    std::vector<Index> out;
    for (Index x : i.elements())
        for (Index u : w.j.elements())
            for (Index v : w.jp.elements()) {
                const Index k = *w.find(w.b.add(w.f.apply(x), u), w.c.add(w.g.apply(x), v));
                if (!mark[k]) {
                    mark[k] = 1;
                    out.push_back(k);
                }
            }
    std::sort(out.begin(), out.end());
    return Ideal::from_elements(w.w, std::move(out), true);
}

Ideal zero_times_jp(const BiAmalgamation& w) {
    std::vector<Index> out;
    for (Index v : w.jp.elements()) out.push_back(*w.find(0, v));
    return Ideal::from_elements(w.w, sorted_unique(std::move(out)), true);
}

Ideal j_times_zero(const BiAmalgamation& w) {
    std::vector<Index> out;
    for (Index u : w.j.elements()) out.push_back(*w.find(u, 0));
    return Ideal::from_elements(w.w, sorted_unique(std::move(out)), true);
}

Ideal j_times_jp(const BiAmalgamation& w) {
    std::vector<Index> out;
    for (Index u : w.j.elements())
        for (Index v : w.jp.elements()) out.push_back(*w.find(u, v));
    return Ideal::from_elements(w.w, sorted_unique(std::move(out)), true);
}

Ideal j_in_fa_j(const BiAmalgamation& w) { return preimage(w.fa_j.embedding, w.j); }
Ideal jp_in_ga_jp(const BiAmalgamation& w) { return preimage(w.ga_jp.embedding, w.jp); }

Report quotient_isos_check(const BiAmalgamation& w, const Ideal& i) {
    if (!(i.ring() == w.a)) throw Error(Errc::wrong_ring, "ideal does not live in A");
    Report rep;
    rep.title = "quotient isomorphisms";

    const Ideal ib = embedded_ideal(w, i);
    const Ideal i_plus = ideal_sum(i, w.i0);
    const Quotient wq = quotient_ring(w.w, ib);
    const Quotient aq = quotient_ring(w.a, i_plus);
    add_isomorphism(rep, "W/(I bowtie) ~ A/(I+I0)", wq.ring, aq.ring);

    // a -> (f(a), g(a)) + I bowtie is the canonical map behind the first isomorphism.
    std::vector<Index> canon(w.a.size());
    for (Index x = 0; x < w.a.size(); ++x) canon[x] = wq.map.apply(*w.find(w.f.apply(x), w.g.apply(x)));
    const std::vector<Index> ker = kernel_of(canon);
    rep.add("canonical A -> W/(I bowtie) is onto with kernel I+I0",
            surjective(canon, wq.ring.size()) &&
                std::equal(ker.begin(), ker.end(), i_plus.elements().begin(), i_plus.elements().end()),
            "kernel order " + std::to_string(ker.size()) + ", |I+I0| = " + std::to_string(i_plus.size()));

    const Ideal zjp = zero_times_jp(w);
    const Ideal jz = j_times_zero(w);
    const Ideal jjp = j_times_jp(w);
    add_isomorphism(rep, "W/(0xJ') ~ f(A)+J", quotient_ring(w.w, zjp).ring, w.fa_j.ring);
    add_isomorphism(rep, "W/(Jx0) ~ g(A)+J'", quotient_ring(w.w, jz).ring, w.ga_jp.ring);

    const std::vector<Index> kb = kernel_of(w.to_b.table());
    const std::vector<Index> kc = kernel_of(w.to_c.table());
    rep.add("projection W -> f(A)+J has kernel 0xJ'",
            std::equal(kb.begin(), kb.end(), zjp.elements().begin(), zjp.elements().end()) &&
                sorted_unique({w.to_b.table().begin(), w.to_b.table().end()}) ==
                    image_set(w.fa_j.embedding, all_indices(w.fa_j.ring.size())),
            "kernel order " + std::to_string(kb.size()));
    rep.add("projection W -> g(A)+J' has kernel Jx0",
            std::equal(kc.begin(), kc.end(), jz.elements().begin(), jz.elements().end()) &&
                sorted_unique({w.to_c.table().begin(), w.to_c.table().end()}) ==
                    image_set(w.ga_jp.embedding, all_indices(w.ga_jp.ring.size())),
            "kernel order " + std::to_string(kc.size()));

    const FiniteRing a_i0 = quotient_ring(w.a, w.i0).ring;
    add_isomorphism(rep, "A/I0 ~ W/(JxJ')", a_i0, quotient_ring(w.w, jjp).ring);
    add_isomorphism(rep, "A/I0 ~ (f(A)+J)/J", a_i0, quotient_ring(w.fa_j.ring, j_in_fa_j(w)).ring);
    add_isomorphism(rep, "A/I0 ~ (g(A)+J')/J'", a_i0, quotient_ring(w.ga_jp.ring, jp_in_ga_jp(w)).ring);
    return rep;
}

Report as_pullback(const BiAmalgamation& w) {
    Report rep;
    rep.title = "pullback";
    const Quotient q = quotient_ring(w.a, w.i0);
    const auto inv_b = inverse_table(w.fa_j.embedding);
    const auto inv_c = inverse_table(w.ga_jp.embedding);
    const FiniteRing& fj = w.fa_j.ring;
    const FiniteRing& gj = w.ga_jp.ring;

    TableBuilder alpha(fj.size()), beta(gj.size());
    for (Index x = 0; x < w.a.size(); ++x) {
        const Index v = q.map.apply(x);
        for (Index u : w.j.elements()) alpha.set(static_cast<Index>(inv_b[w.b.add(w.f.apply(x), u)]), v);
        for (Index u : w.jp.elements()) beta.set(static_cast<Index>(inv_c[w.c.add(w.g.apply(x), u)]), v);
    }
    const auto ha = checked_map(rep, "alpha: f(A)+J -> A/I0", alpha, fj, q.ring);
    const auto hb = checked_map(rep, "beta: g(A)+J' -> A/I0", beta, gj, q.ring);
    if (!ha || !hb) return rep;

    std::vector<Index> fiber;
    for (Index x = 0; x < fj.size(); ++x)
        for (Index y = 0; y < gj.size(); ++y)
            if (ha->apply(x) == hb->apply(y))
                fiber.push_back(w.bc.pair(w.fa_j.embedding.apply(x), w.ga_jp.embedding.apply(y)));
    std::sort(fiber.begin(), fiber.end());
    const auto diff = first_difference(fiber, w.embedded());
    rep.add("W = alpha x_{A/I0} beta", !diff,
            diff ? show_pair(w.bc, diff->first) + (diff->second ? " in the fiber product only" : " in W only")
                 : std::to_string(fiber.size()) + " elements");
    return rep;
}

Report conductor_square(const BiAmalgamation& w) {
    Report rep;
    rep.title = "conductor square";
    const Quotient q0 = quotient_ring(w.a, w.i0);
    const FiniteRing& fj = w.fa_j.ring;
    const FiniteRing& gj = w.ga_jp.ring;
    const Ideal jf = j_in_fa_j(w);
    const Ideal jg = jp_in_ga_jp(w);
    const Quotient qf = quotient_ring(fj, jf);
    const Quotient qg = quotient_ring(gj, jg);
    const Product t = make_product(qf.ring, qg.ring);
    const Product p2 = make_product(fj, gj);
    const auto inv_b = inverse_table(w.fa_j.embedding);
    const auto inv_c = inverse_table(w.ga_jp.embedding);

    TableBuilder iota1(q0.ring.size()), mu2(w.w.size()), iota2(w.w.size()), mu1(p2.ring.size());
    for (Index x = 0; x < w.a.size(); ++x) {
        const Index fb = static_cast<Index>(inv_b[w.f.apply(x)]);
        const Index gc = static_cast<Index>(inv_c[w.g.apply(x)]);
        iota1.set(q0.map.apply(x), t.pair(qf.map.apply(fb), qg.map.apply(gc)));
        for (Index u : w.j.elements())
            for (Index v : w.jp.elements())
                mu2.set(*w.find(w.b.add(w.f.apply(x), u), w.c.add(w.g.apply(x), v)), q0.map.apply(x));
    }
    for (Index x = 0; x < w.w.size(); ++x)
        iota2.set(x, p2.pair(static_cast<Index>(inv_b[w.to_b.apply(x)]), static_cast<Index>(inv_c[w.to_c.apply(x)])));
    for (Index x = 0; x < p2.ring.size(); ++x)
        mu1.set(x, t.pair(qf.map.apply(p2.first(x)), qg.map.apply(p2.second(x))));

    const auto i1 = checked_map(rep, "iota1", iota1, q0.ring, t.ring);
    const auto i2 = checked_map(rep, "iota2", iota2, w.w, p2.ring);
    const auto m1 = checked_map(rep, "mu1", mu1, p2.ring, t.ring);
    const auto m2 = checked_map(rep, "mu2", mu2, w.w, q0.ring);
    if (!i1 || !i2 || !m1 || !m2) return rep;

    std::optional<Index> bad;
    for (Index x = 0; x < w.w.size() && !bad; ++x)
        if (m1->apply(i2->apply(x)) != i1->apply(m2->apply(x))) bad = x;
    rep.add("commutativity mu1 o iota2 = iota1 o mu2", !bad, bad ? "fails at " + show_pair(w.bc, w.embed.apply(*bad)) : "");
    rep.add("iota1 injective", i1->is_injective(), std::to_string(q0.ring.size()) + " -> " + std::to_string(t.ring.size()));
    rep.add("iota2 injective", i2->is_injective(), std::to_string(w.w.size()) + " -> " + std::to_string(p2.ring.size()));
    rep.add("mu1 surjective", m1->is_surjective());
    rep.add("mu2 surjective", m2->is_surjective());

    std::vector<Index> jj;
    for (Index u : jf.elements())
        for (Index v : jg.elements()) jj.push_back(p2.pair(u, v));
    std::sort(jj.begin(), jj.end());
    const std::vector<Index> k1 = kernel_of(m1->table());
    rep.add("Ker mu1 = JxJ'", k1 == jj, "conductor order " + std::to_string(k1.size()));
    const Ideal jjw = j_times_jp(w);
    const std::vector<Index> k2 = kernel_of(m2->table());
    rep.add("Ker mu2 = JxJ'", std::equal(k2.begin(), k2.end(), jjw.elements().begin(), jjw.elements().end()),
            "kernel order " + std::to_string(k2.size()));

    // (iota2, mu2) should land bijectively on { (p, a) : mu1(p) = iota1(a) }.
    const std::size_t n0 = q0.ring.size();
    std::vector<std::uint64_t> pulled, image;
    for (Index p = 0; p < p2.ring.size(); ++p)
        for (Index x = 0; x < n0; ++x)
            if (m1->apply(p) == i1->apply(x)) pulled.push_back(std::uint64_t{p} * n0 + x);
    for (Index x = 0; x < w.w.size(); ++x) image.push_back(std::uint64_t{i2->apply(x)} * n0 + m2->apply(x));
    std::sort(image.begin(), image.end());
    const bool distinct = std::adjacent_find(image.begin(), image.end()) == image.end();
    rep.add("iota2 x mu2 is an isomorphism onto mu1 x iota1", distinct && image == pulled,
            std::to_string(image.size()) + " vs " + std::to_string(pulled.size()) + " elements");
    rep.add("|W| = |A/I0|·|J|·|J'|", w.w.size() == n0 * w.j.size() * w.jp.size(),
            std::to_string(w.w.size()) + " = " + std::to_string(n0) + "·" + std::to_string(w.j.size()) + "·" +
                std::to_string(w.jp.size()));
    return rep;
}

Recognition recognize_pullback(const RingHom& alpha, const RingHom& beta, const RingHom& f, const RingHom& g) {
    if (!(alpha.target() == beta.target()) || !(f.target() == alpha.source()) || !(g.target() == beta.source()) ||
        !(f.source() == g.source()))
        throw Error(Errc::mismatched_maps, "expected alpha: B -> D, beta: C -> D, f: A -> B, g: A -> C");
    const FiniteRing& a = f.source();
    const FiniteRing& b = f.target();
    const FiniteRing& c = g.target();
    Recognition out;
    out.report.title = "pullback recognition";

    std::optional<Index> bad;
    for (Index x = 0; x < a.size() && !bad; ++x)
        if (alpha.apply(f.apply(x)) != beta.apply(g.apply(x))) bad = x;
    out.report.add("alpha o f = beta o g", !bad, bad ? "fails at a = " + show(a, *bad) : "");

    const Product bc = make_product(b, c);
    std::vector<Index> fiber;
    std::vector<Index> alpha_pi;
    for (Index y = 0; y < c.size(); ++y)
        for (Index x = 0; x < b.size(); ++x)
            if (alpha.apply(x) == beta.apply(y)) {
                fiber.push_back(bc.pair(x, y));
                alpha_pi.push_back(alpha.apply(x));
            }
    std::sort(fiber.begin(), fiber.end());
    alpha_pi = sorted_unique(std::move(alpha_pi));
    const std::vector<Index> alpha_f = image_set(alpha, image_set(f, all_indices(a.size())));
    const auto diff = first_difference(alpha_pi, alpha_f);
    out.report.add("alpha(pi_B(alpha x beta)) = alpha(f(A))", !diff,
                   diff ? show(alpha.target(), diff->first) +
                              (diff->second ? " is in alpha(pi_B(alpha x beta)) but not alpha(f(A))"
                                            : " is in alpha(f(A)) but not alpha(pi_B(alpha x beta))")
                        : std::to_string(alpha_f.size()) + " elements");
    if (!out.report.all_passed()) return out;

    Ideal j = kernel(alpha);
    Ideal jp = kernel(beta);
    BiAmalgamation w = bi_amalgamate(f, g, j, jp);
    const auto d2 = first_difference(fiber, w.embedded());
    out.report.add("alpha x beta = bi-amalgamation(Ker alpha, Ker beta)", !d2,
                   d2 ? show_pair(bc, d2->first) : std::to_string(fiber.size()) + " elements");
    if (d2) return out;
    out.j = std::move(j);
    out.jp = std::move(jp);
    out.w = std::move(w);
    return out;
}

CpiExtension cpi_extension(const FiniteRing& a, const Ideal& i) {
    if (!(i.ring() == a)) throw Error(Errc::wrong_ring, "ideal does not live in the ring");
    if (i.is_whole()) throw Error(Errc::improper_ideal, "CPI-extension needs a proper ideal");
    const Quotient q = quotient_ring(a, i);

    std::vector<char> nzd(q.ring.size(), 1);
    for (Index x = 0; x < q.ring.size(); ++x)
        for (Index y = 1; y < q.ring.size(); ++y)
            if (q.ring.mul(x, y) == 0) {
                nzd[x] = 0;
                break;
            }
    std::vector<Index> s;
    for (Index x = 0; x < a.size(); ++x)
        if (nzd[q.map.apply(x)]) s.push_back(x);

    Localization loc = localize(a, std::span<const Index>(s));
    std::vector<Element> fi;
    for (const auto& e : i.generators()) fi.push_back(loc.map(e));
    const Ideal si = ideal_generated(loc.ring, std::span<const Element>(fi));

    std::vector<Index> gens;
    for (std::size_t k = 0; k < a.rank(); ++k) gens.push_back(loc.map.apply(a.index_of(a.generator(k))));
    for (Index x : si.elements()) gens.push_back(x);
    Subring cai = subring_generated(loc.ring, std::span<const Index>(gens));

    BiAmalgamation w = bi_amalgamate(q.map, loc.map, zero_ideal(q.ring), si);
    Report rep;
    rep.title = "CPI-extension";
    rep.add("pi^-1(0) = f^-1(S^-1 I) = I", w.i0 == i, "|I| = " + std::to_string(i.size()));
    const auto fi_set = image_set(loc.map, std::vector<Index>(i.elements().begin(), i.elements().end()));
    rep.add("S^-1 I = f(I)", std::equal(fi_set.begin(), fi_set.end(), si.elements().begin(), si.elements().end()),
            "|S^-1 I| = " + std::to_string(si.size()));
    rep.add("f(A)+S^-1 I = S^-1 A", cai.ring.size() == loc.ring.size(),
            "|S^-1 A| = " + std::to_string(loc.ring.size()));
    add_isomorphism(rep, "A bowtie^{pi,f}(0, S^-1 I) ~ f(A)+S^-1 I", w.w, cai.ring);
    return CpiExtension{cai.ring, std::move(s), std::move(loc), std::move(w), std::move(rep)};
}

Report verify_transfer(const BiAmalgamation& w) {
    Report rep;
    rep.title = "transfer";
    const auto cw = classify(w.w);
    const auto cf = classify(w.fa_j.ring);
    const auto cg = classify(w.ga_jp.ring);
    const auto cb = classify(w.b);
    const auto cc = classify(w.c);
    auto yn = [](bool v) { return v ? std::string("yes") : std::string("no"); };

    const bool rhs = (w.j.is_zero() && cg.is_domain) || (w.jp.is_zero() && cf.is_domain);
    rep.add("domain: W domain iff (J=0 and g(A)+J' domain) or (J'=0 and f(A)+J domain)", cw.is_domain == rhs,
            "W domain " + yn(cw.is_domain) + "; J=0 " + yn(w.j.is_zero()) + ", g(A)+J' domain " + yn(cg.is_domain) +
                "; J'=0 " + yn(w.jp.is_zero()) + ", f(A)+J domain " + yn(cf.is_domain));

    const bool jn = ideal_intersection(w.j, cb.nilradical).is_zero();
    const bool jpn = ideal_intersection(w.jp, cc.nilradical).is_zero();
    const bool ca = cf.is_reduced && jpn;
    const bool cb_ = cg.is_reduced && jn;
    const bool cc_ = cw.is_reduced;
    const bool cd = jn && jpn;
    const std::string state = "(a) " + yn(ca) + ", (b) " + yn(cb_) + ", (c) " + yn(cc_) + ", (d) " + yn(cd);
    rep.add("reduced: (a) or (b) implies (c)", !(ca || cb_) || cc_, state);
    rep.add("reduced: (c) implies (d)", !cc_ || cd, state);
    if (radical(w.i0) == w.i0)
        rep.add("reduced: (a)-(d) equivalent when I0 is radical", ca == cb_ && cb_ == cc_ && cc_ == cd, state);
    else
        rep.notes.push_back("I0 is not radical; four-way equivalence not asserted");

    const Ideal kf = kernel(w.f);
    const Ideal kg = kernel(w.g);
    if (w.f.is_surjective() && kf.subset_of(kg))
        rep.add("reduced: f onto, Ker f in Ker g: W reduced iff B reduced and J' meets Nil(C) trivially",
                cc_ == (cb.is_reduced && jpn),
                "W reduced " + yn(cc_) + ", B reduced " + yn(cb.is_reduced) + ", J'∩Nil(C)=0 " + yn(jpn));
    if (w.g.is_surjective() && kg.subset_of(kf))
        rep.add("reduced: g onto, Ker g in Ker f: W reduced iff C reduced and J meets Nil(B) trivially",
                cc_ == (cc.is_reduced && jn),
                "W reduced " + yn(cc_) + ", C reduced " + yn(cc.is_reduced) + ", J∩Nil(B)=0 " + yn(jn));
    if (cc_ && !(cf.is_reduced && cg.is_reduced))
        rep.notes.push_back(std::string("W reduced although ") + (cf.is_reduced ? "g(A)+J'" : "f(A)+J") +
                            " is not reduced");

    const Quotient pi = quotient_ring(w.a, w.i0);
    const BiAmalgamation wf = bi_amalgamate(pi.map, w.f, zero_ideal(pi.ring), w.j);
    add_isomorphism(rep, "f(A)+J ~ A bowtie^{pi,f}(0, J)", w.fa_j.ring, wf.w);
    const BiAmalgamation wg = bi_amalgamate(pi.map, w.g, zero_ideal(pi.ring), w.jp);
    add_isomorphism(rep, "g(A)+J' ~ A bowtie^{pi,g}(0, J')", w.ga_jp.ring, wg.w);
    return rep;
}

Report idealization_coincidence(const FiniteRing& a, const Ideal& i) {
    Report rep;
    rep.title = "idealization coincidence";
    if (!ideal_product(i, i).is_zero()) {
        rep.notes.push_back("I^2 is nonzero; the coincidence does not apply");
        return rep;
    }
    add_isomorphism(rep, "A bowtie I ~ A x| I", duplication(a, i).w, idealization(a, i));
    return rep;
}

}  // namespace biamalg
