#include "biamalg/corpus.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "biamalg/error.hpp"
#include "biamalg/isocheck.hpp"

namespace biamalg {

namespace {

FiniteRing poly(const FiniteRing& r, std::initializer_list<std::int64_t> coeffs) {
    std::vector<Element> c;
    for (auto v : coeffs) c.push_back(r.scale(r.one(), v));
    return make_poly_quotient(r, c);
}

std::vector<Index> element_list(const Ideal& i) { return {i.elements().begin(), i.elements().end()}; }

class Source {
public:
    explicit Source(std::uint64_t seed) : rng_(seed) {}
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }
    template <class T>
    const T& pick(const std::vector<T>& xs) { return xs[below(xs.size())]; }

private:
    std::mt19937_64 rng_;
};

/// Lazily cached ideals and hom sets over a ring pool.
class Pool {
public:
    explicit Pool(std::size_t max_order) : rings_(base_rings(std::min<std::size_t>(max_order, 32))) {}

    std::size_t size() const { return rings_.size(); }
    const NamedRing& at(std::size_t k) const { return rings_[k]; }

    const std::vector<Ideal>& ideals(std::size_t k) {
        auto it = ideals_.find(k);
        if (it == ideals_.end()) it = ideals_.emplace(k, all_ideals(rings_[k].ring)).first;
        return it->second;
    }
    const std::vector<RingHom>& homs(std::size_t a, std::size_t b) {
        auto it = homs_.find({a, b});
        if (it == homs_.end())
            it = homs_.emplace(std::pair{a, b}, enumerate_homs(rings_[a].ring, rings_[b].ring).homs).first;
        return it->second;
    }

private:
    std::vector<NamedRing> rings_;
    std::map<std::size_t, std::vector<Ideal>> ideals_;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<RingHom>> homs_;
};

std::vector<Ideal> matching_partners(const RingHom& g, const std::vector<Ideal>& candidates, const Ideal& i0) {
    std::vector<Ideal> out;
    for (const auto& k : candidates)
        if (preimage(g, k) == i0) out.push_back(k);
    return out;
}

}  // namespace

std::vector<NamedRing> base_rings(std::size_t max_order) {
    std::vector<NamedRing> all;
    for (std::int64_t n : {2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 18, 20, 24, 25, 27, 32})
        if (static_cast<std::size_t>(n) <= max_order) all.push_back({"Z/" + std::to_string(n), make_zmod(n)});
    const auto z2 = make_zmod(2), z3 = make_zmod(3), z4 = make_zmod(4);
    auto add = [&](std::string name, auto make) {
        all.push_back({std::move(name), make()});
        if (all.back().ring.size() > max_order) all.pop_back();
    };
    add("Z/2xZ/2", [&] { return make_product(z2, z2).ring; });
    add("Z/2xZ/3", [&] { return make_product(z2, z3).ring; });
    add("Z/2xZ/4", [&] { return make_product(z2, z4).ring; });
    add("Z/3xZ/3", [&] { return make_product(z3, z3).ring; });
    add("Z/4xZ/4", [&] { return make_product(z4, z4).ring; });
    add("Z/3xZ/4", [&] { return make_product(z3, z4).ring; });
    add("Z/2xZ/2xZ/2", [&] { return make_product(make_product(z2, z2).ring, z2).ring; });
    add("F4", [&] { return poly(z2, {1, 1, 1}); });
    add("F8", [&] { return poly(z2, {1, 1, 0, 1}); });
    add("F9", [&] { return poly(z3, {1, 0, 1}); });
    add("Z/2xF4", [&] { return make_product(z2, poly(z2, {1, 1, 1})).ring; });
    add("Z/2[x]/(x^2)", [&] { return poly(z2, {0, 0, 1}); });
    add("Z/2[x]/(x^3)", [&] { return poly(z2, {0, 0, 0, 1}); });
    add("Z/2[x]/(x^4)", [&] { return poly(z2, {0, 0, 0, 0, 1}); });
    add("Z/2[x]/(x^2+x)", [&] { return poly(z2, {0, 1, 1}); });
    add("Z/2[x]/(x^3+x^2)", [&] { return poly(z2, {0, 0, 1, 1}); });
    add("Z/3[x]/(x^2)", [&] { return poly(z3, {0, 0, 1}); });
    add("Z/4[x]/(x^2)", [&] { return poly(z4, {0, 0, 1}); });
    add("Z/4[x]/(x^2+x+1)", [&] { return poly(z4, {1, 1, 1}); });
    add("Z/4[x]/(x^2+2)", [&] { return poly(z4, {2, 0, 1}); });
    add("Z/2[x,y]/(x^2,y^2)", [&] { return poly(poly(z2, {0, 0, 1}), {0, 0, 1}); });
    add("Z/2[x]/(x^2)xZ/3", [&] { return make_product(poly(z2, {0, 0, 1}), z3).ring; });
    return all;
}

std::vector<Ideal> all_ideals(const FiniteRing& r) {
    std::map<std::vector<Index>, Ideal> found;
    for (Index x = 0; x < r.size(); ++x) {
        Ideal i = ideal_generated(r, {r.at(x)});
        found.emplace(element_list(i), i);
    }
    for (bool grew = true; grew;) {
        grew = false;
        std::vector<Ideal> cur;
        for (auto& [k, v] : found) cur.push_back(v);
        for (std::size_t s = 0; s < cur.size(); ++s)
            for (std::size_t t = s + 1; t < cur.size(); ++t) {
                Ideal u = ideal_sum(cur[s], cur[t]);
                if (found.emplace(element_list(u), u).second) grew = true;
            }
    }
    std::vector<Ideal> out;
    for (auto& [k, v] : found) out.push_back(v);
    std::stable_sort(out.begin(), out.end(), [](const Ideal& x, const Ideal& y) { return x.size() < y.size(); });
    return out;
}

std::vector<CorpusInstance> generate_corpus(const CorpusOptions& opts) {
    Pool pool(opts.max_order);
    Source src(opts.seed);
    const std::size_t cap = opts.max_order;
    std::vector<CorpusInstance> out;
    std::size_t attempts = 0;
    static const char* families[] = {"duplication", "amalgamation", "surjective", "general"};

    while (out.size() < opts.count) {
        if (++attempts > 1000 * (opts.count + 1))
            throw Error(Errc::budget_exceeded, "corpus generation could not reach the requested count");
        const std::string family = families[out.size() % 4];
        const std::size_t ia = src.below(pool.size());
        const FiniteRing& a = pool.at(ia).ring;
        const std::string an = pool.at(ia).name;

        if (family == "duplication") {
            const Ideal& i = src.pick(pool.ideals(ia));
            if (a.size() * i.size() > cap) continue;
            const RingHom id = identity_hom(a);
            out.push_back({"dup " + an + " |I|=" + std::to_string(i.size()), family, id, id, i, i});
        } else if (family == "amalgamation") {
            const std::size_t ib = src.below(pool.size());
            const auto& fs = pool.homs(ia, ib);
            if (fs.empty()) continue;
            const RingHom& f = src.pick(fs);
            const Ideal& j = src.pick(pool.ideals(ib));
            if (a.size() * j.size() > cap) continue;
            out.push_back({"amalg " + an + " -> " + pool.at(ib).name + " |J|=" + std::to_string(j.size()), family,
                           identity_hom(a), f, preimage(f, j), j});
        } else if (family == "surjective") {
            const auto& ks = pool.ideals(ia);
            const Ideal& k = src.pick(ks);
            if (k.is_whole()) continue;
            const std::size_t ic = src.below(pool.size());
            std::vector<RingHom> gs;
            for (const auto& g : pool.homs(ia, ic))
                if (k.subset_of(kernel(g))) gs.push_back(g);
            if (gs.empty()) continue;
            const RingHom& g = src.pick(gs);
            const Quotient q = quotient_ring(a, k);
            const auto bideals = all_ideals(q.ring);
            const Ideal& j = src.pick(bideals);
            const Ideal i0 = preimage(q.map, j);
            const auto partners = matching_partners(g, pool.ideals(ic), i0);
            if (partners.empty()) continue;
            const Ideal& jp = src.pick(partners);
            if (a.size() / i0.size() * j.size() * jp.size() > cap) continue;
            out.push_back({"onto " + an + " -> " + an + "/(" + std::to_string(k.size()) + "), " + pool.at(ic).name +
                               " |J|=" + std::to_string(j.size()) + " |J'|=" + std::to_string(jp.size()),
                           family, q.map, g, j, jp});
        } else {
            const std::size_t ib = src.below(pool.size());
            const std::size_t ic = src.below(pool.size());
            const auto& fs = pool.homs(ia, ib);
            const auto& gs = pool.homs(ia, ic);
            if (fs.empty() || gs.empty()) continue;
            const RingHom& f = src.pick(fs);
            const RingHom& g = src.pick(gs);
            const Ideal& j = src.pick(pool.ideals(ib));
            const Ideal i0 = preimage(f, j);
            const auto partners = matching_partners(g, pool.ideals(ic), i0);
            if (partners.empty()) continue;
            const Ideal& jp = src.pick(partners);
            if (a.size() / i0.size() * j.size() * jp.size() > cap) continue;
            out.push_back({"gen " + an + " -> " + pool.at(ib).name + ", " + pool.at(ic).name +
                               " |J|=" + std::to_string(j.size()) + " |J'|=" + std::to_string(jp.size()),
                           family, f, g, j, jp});
        }
    }
    return out;
}

std::vector<Square> generate_squares(std::uint64_t seed, std::size_t count) {
    Pool pool(16);
    Source src(seed);
    const auto z2 = make_zmod(2);
    const std::vector<NamedRing> targets{{"Z/2", z2},
                                         {"Z/3", make_zmod(3)},
                                         {"Z/4", make_zmod(4)},
                                         {"Z/6", make_zmod(6)},
                                         {"F4", poly(z2, {1, 1, 1})},
                                         {"Z/2xZ/2", make_product(z2, z2).ring}};
    const std::vector<NamedRing> sources{{"Z/2", z2},
                                         {"Z/4", make_zmod(4)},
                                         {"Z/6", make_zmod(6)},
                                         {"Z/12", make_zmod(12)},
                                         {"Z/2[x]/(x^2)", poly(z2, {0, 0, 1})}};
    std::vector<Square> out;
    std::size_t attempts = 0;
    while (out.size() < count) {
        if (++attempts > 1000 * (count + 1))
            throw Error(Errc::budget_exceeded, "square generation could not reach the requested count");
        // Half the squares draw B and C from the small targets themselves, so
        // alpha(B) ∩ beta(C) can outgrow the image of A and recognition fails.
        const bool wide = src.below(2) == 1;
        const NamedRing a = wide ? src.pick(sources) : pool.at(src.below(pool.size()));
        const NamedRing b = wide ? src.pick(targets) : pool.at(src.below(pool.size()));
        const NamedRing c = wide ? src.pick(targets) : pool.at(src.below(pool.size()));
        const NamedRing& d = src.pick(targets);
        const auto fs = enumerate_homs(a.ring, b.ring).homs;
        const auto gs = enumerate_homs(a.ring, c.ring).homs;
        if (fs.empty() || gs.empty()) continue;
        const RingHom& f = src.pick(fs);
        const RingHom& g = src.pick(gs);
        const auto alphas = enumerate_homs(b.ring, d.ring).homs;
        const auto betas = enumerate_homs(c.ring, d.ring).homs;
        std::vector<std::pair<std::size_t, std::size_t>> commuting;
        for (std::size_t s = 0; s < alphas.size(); ++s)
            for (std::size_t t = 0; t < betas.size(); ++t)
                if (same_map(compose(alphas[s], f), compose(betas[t], g))) commuting.emplace_back(s, t);
        if (commuting.empty()) continue;
        const auto [s, t] = src.pick(commuting);
        out.push_back({a.name + " -> " + b.name + ", " + c.name + " -> " + d.name,
                       alphas[s], betas[t], f, g});
    }
    return out;
}

std::vector<IdealPair> square_zero_pairs(std::size_t max_order) {
    std::vector<IdealPair> out;
    for (const auto& r : base_rings(std::min<std::size_t>(max_order, 32)))
        for (const auto& i : all_ideals(r.ring))
            if (!i.is_zero() && ideal_product(i, i).is_zero() && r.ring.size() * i.size() <= max_order)
                out.push_back({r.name + " |I|=" + std::to_string(i.size()), r.ring, i});
    return out;
}

std::vector<IdealPair> proper_ideal_pairs(std::size_t max_order) {
    std::vector<IdealPair> out;
    for (const auto& r : base_rings(std::min<std::size_t>(max_order, 32)))
        for (const auto& i : all_ideals(r.ring))
            if (!i.is_whole()) out.push_back({r.name + " |I|=" + std::to_string(i.size()), r.ring, i});
    return out;
}

}  // namespace biamalg
