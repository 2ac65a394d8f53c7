#include "biamalg/ideal.hpp"

#include <algorithm>
#include <sstream>

#include "biamalg/error.hpp"
#include "biamalg/smith.hpp"

namespace biamalg {

namespace detail {

SubgroupBuilder::SubgroupBuilder(const FiniteRing& ring) : ring_(&ring), member_(ring.size(), 0) {
    member_[0] = 1;
    elements_.push_back(0);
}

bool SubgroupBuilder::adjoin(Index g) {
    if (member_[g]) return false;
    generators_.push_back(g);
    const std::vector<Index> base = elements_;
    Index step = g;
    std::int64_t n = 1;
    while (!member_[step]) {
        for (Index h : base) {
            const Index x = ring_->add(h, step);
            member_[x] = 1;
            elements_.push_back(x);
        }
        step = ring_->add(step, g);
        ++n;
    }
    steps_.push_back(n);
    return true;
}

std::vector<Index> SubgroupBuilder::sorted_elements() const {
    std::vector<Index> out = elements_;
    std::sort(out.begin(), out.end());
    return out;
}

SubgroupPresentation present_subgroup(const FiniteRing& ring, std::span<const Index> generators) {
    SubgroupBuilder builder(ring);
    for (Index g : generators) builder.adjoin(g);
    const auto& gens = builder.generators();
    const auto& steps = builder.steps();
    const auto& elems = builder.elements();
    const std::size_t m = gens.size();

    SubgroupPresentation out;
    out.member.assign(ring.size(), 0);
    out.coords_of.assign(ring.size(), {});
    if (m == 0) {
        out.member[0] = 1;
        return out;
    }

    // Builder coordinates of each member, read off its position.
    std::vector<std::int64_t> position(ring.size(), -1);
    for (std::size_t p = 0; p < elems.size(); ++p) position[elems[p]] = static_cast<std::int64_t>(p);
    auto builder_coords = [&](Index x) {
        std::vector<std::int64_t> c(m, 0);
        std::int64_t p = position[x];
        for (std::size_t t = 0; t < m; ++t) {
            c[t] = p % steps[t];
            p /= steps[t];
        }
        return c;
    };

    // Row t: steps[t] * G_t minus its expression in G_0..G_{t-1}.
    IntMatrix rel;
    for (std::size_t t = 0; t < m; ++t) {
        auto row = builder_coords(ring.scale(gens[t], steps[t]));
        for (auto& x : row) x = -x;
        row[t] = steps[t];
        rel.push_back(std::move(row));
    }
    const auto order = static_cast<std::int64_t>(elems.size());
    const SmithForm snf = smith_normal_form(rel, m, order);

    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < m; ++i) {
        if (snf.diagonal[i] == 0) throw Error(Errc::invalid_argument, "subgroup relation lattice is not of full rank");
        if (snf.diagonal[i] == 1) continue;
        Index h = 0;
        for (std::size_t t = 0; t < m; ++t) h = ring.add(h, ring.scale(gens[t], snf.v_inverse[i][t]));
        out.basis.push_back(h);
        out.orders.push_back(snf.diagonal[i]);
        kept.push_back(i);
    }
    for (Index x : elems) {
        const auto c = builder_coords(x);
        std::vector<std::int64_t> y(kept.size(), 0);
        for (std::size_t a = 0; a < kept.size(); ++a) {
            std::int64_t acc = 0;
            for (std::size_t t = 0; t < m; ++t) acc = (acc + c[t] * snf.v[t][kept[a]]) % out.orders[a];
            y[a] = acc;
        }
        out.member[x] = 1;
        out.coords_of[x] = std::move(y);
    }
    return out;
}

}  // namespace detail

struct Ideal::Data {
    FiniteRing ring;
    std::vector<Element> gens;
    std::vector<Index> elements;
    std::vector<char> member;
};

namespace {

std::vector<Index> generator_indices(const FiniteRing& r) {
    std::vector<Index> out;
    for (std::size_t i = 0; i < r.rank(); ++i) out.push_back(r.index_of(r.generator(i)));
    return out;
}

}  // namespace

Ideal Ideal::from_elements(const FiniteRing& ring, std::vector<Index> elements, bool verify) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    auto d = std::make_shared<Data>(Data{ring, {}, std::move(elements), std::vector<char>(ring.size(), 0)});
    for (Index x : d->elements) {
        if (x >= ring.size()) throw Error(Errc::wrong_ring, "index outside the ring");
        d->member[x] = 1;
    }
    detail::SubgroupBuilder builder(ring);
    for (Index x : d->elements) builder.adjoin(x);
    if (verify) {
        if (d->elements.empty() || d->elements.front() != 0)
            throw Error(Errc::not_an_ideal, "subset does not contain 0");
        if (builder.elements().size() != d->elements.size()) {
            for (Index x : builder.elements())
                if (!d->member[x])
                    throw Error(Errc::not_an_ideal, "subset is not an additive subgroup", to_string(ring.at(x)));
        }
        for (Index h : builder.generators())
            for (Index e : generator_indices(ring)) {
                const Index p = ring.mul(e, h);
                if (!d->member[p])
                    throw Error(Errc::not_an_ideal, "subset is not closed under multiplication",
                                to_string(ring.at(p)));
            }
    }
    for (Index g : builder.generators()) d->gens.push_back(ring.at(g));
    return Ideal(std::move(d));
}

const FiniteRing& Ideal::ring() const { return d_->ring; }
const std::vector<Element>& Ideal::generators() const { return d_->gens; }
std::span<const Index> Ideal::elements() const { return d_->elements; }
std::size_t Ideal::size() const { return d_->elements.size(); }
bool Ideal::contains(Index x) const { return x < d_->member.size() && d_->member[x] != 0; }
bool Ideal::contains(const Element& x) const { return contains(d_->ring.index_of(x)); }
bool Ideal::is_whole() const { return size() == d_->ring.size(); }

bool Ideal::subset_of(const Ideal& k) const {
    if (!(ring() == k.ring())) return false;
    return std::all_of(d_->elements.begin(), d_->elements.end(), [&](Index x) { return k.contains(x); });
}

bool operator==(const Ideal& a, const Ideal& b) {
    return a.ring() == b.ring() && a.d_->elements == b.d_->elements;
}

Ideal ideal_generated(const FiniteRing& ring, std::span<const Element> gens) {
    detail::SubgroupBuilder builder(ring);
    const auto basis = generator_indices(ring);
    std::vector<Element> kept;
    for (const Element& g : gens) {
        const Index gi = ring.index_of(g);
        kept.push_back(g);
        builder.adjoin(gi);
        for (Index e : basis) builder.adjoin(ring.mul(e, gi));
    }
    auto d = std::make_shared<Ideal::Data>(Ideal::Data{ring, std::move(kept), builder.sorted_elements(),
                                         std::vector<char>(ring.size(), 0)});
    for (Index x : d->elements) d->member[x] = 1;
    return Ideal(std::move(d));
}

Ideal ideal_generated(const FiniteRing& ring, std::initializer_list<Element> gens) {
    return ideal_generated(ring, std::span<const Element>(gens.begin(), gens.size()));
}

Ideal zero_ideal(const FiniteRing& ring) { return ideal_generated(ring, std::span<const Element>{}); }

Ideal unit_ideal(const FiniteRing& ring) {
    const Element one = ring.one();
    return ideal_generated(ring, std::span<const Element>(&one, 1));
}

Ideal ideal_arith(IdealOp op, const Ideal& i, const Ideal* other) {
    if (op == IdealOp::radical) return radical(i);
    if (other == nullptr) throw Error(Errc::invalid_argument, "binary ideal operation needs two operands");
    switch (op) {
        case IdealOp::sum: return ideal_sum(i, *other);
        case IdealOp::product: return ideal_product(i, *other);
        case IdealOp::intersection: return ideal_intersection(i, *other);
        case IdealOp::radical: break;
    }
    return radical(i);
}

namespace {

void require_same_ring(const Ideal& i, const Ideal& k) {
    if (!(i.ring() == k.ring())) throw Error(Errc::wrong_ring, "ideals live in different rings");
}

}  // namespace

Ideal ideal_sum(const Ideal& i, const Ideal& k) {
    require_same_ring(i, k);
    std::vector<Element> gens = i.generators();
    gens.insert(gens.end(), k.generators().begin(), k.generators().end());
    return ideal_generated(i.ring(), gens);
}

Ideal ideal_product(const Ideal& i, const Ideal& k) {
    require_same_ring(i, k);
    const FiniteRing& r = i.ring();
    std::vector<Element> gens;
    for (const auto& a : i.generators())
        for (const auto& b : k.generators()) gens.push_back(r.mul(a, b));
    return ideal_generated(r, gens);
}

Ideal ideal_intersection(const Ideal& i, const Ideal& k) {
    require_same_ring(i, k);
    std::vector<Index> common;
    std::set_intersection(i.elements().begin(), i.elements().end(), k.elements().begin(), k.elements().end(),
                          std::back_inserter(common));
    return Ideal::from_elements(i.ring(), std::move(common), false);
}

Ideal radical(const Ideal& i) {
    const FiniteRing& r = i.ring();
    std::vector<Index> out;
    for (Index x = 0; x < r.size(); ++x)
        if (i.contains(r.power(x, r.size()))) out.push_back(x);
    return Ideal::from_elements(r, std::move(out), false);
}

std::string to_string(const Ideal& i) {
    std::ostringstream os;
    os << '(';
    for (std::size_t t = 0; t < i.generators().size(); ++t) os << (t ? ", " : "") << to_string(i.generators()[t]);
    os << ")#" << i.size();
    return os.str();
}

}  // namespace biamalg
