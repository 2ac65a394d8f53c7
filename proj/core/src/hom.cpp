#include "biamalg/hom.hpp"

#include <algorithm>
#include <sstream>

#include "biamalg/constructions.hpp"
#include "biamalg/error.hpp"

namespace biamalg {

struct RingHom::Data {
    FiniteRing source;
    FiniteRing target;
    std::vector<Element> images;
    std::vector<Index> table;
};

const FiniteRing& RingHom::source() const { return d_->source; }
const FiniteRing& RingHom::target() const { return d_->target; }
const std::vector<Element>& RingHom::generator_images() const { return d_->images; }
Index RingHom::apply(Index x) const { return d_->table.at(x); }
std::span<const Index> RingHom::table() const { return d_->table; }

Element RingHom::operator()(const Element& x) const { return d_->target.at(apply(d_->source.index_of(x))); }

bool RingHom::is_injective() const {
    return std::count(d_->table.begin(), d_->table.end(), Index{0}) == 1;
}

bool RingHom::is_surjective() const {
    std::vector<char> hit(d_->target.size(), 0);
    std::size_t count = 0;
    for (Index y : d_->table)
        if (!hit[y]) {
            hit[y] = 1;
            ++count;
        }
    return count == d_->target.size();
}

RingHom make_hom(const FiniteRing& source, const FiniteRing& target, std::vector<Element> images, HomCheck check) {
    const std::size_t k = source.rank();
    if (images.size() != k)
        throw Error(Errc::hom_arity, "expected " + std::to_string(k) + " generator images, got " +
                                         std::to_string(images.size()));
    std::vector<Index> img(k);
    for (std::size_t i = 0; i < k; ++i) img[i] = target.index_of(images[i]);

    for (std::size_t i = 0; i < k; ++i)
        if (target.scale(img[i], source.orders()[i]) != 0)
            throw Error(Errc::hom_order,
                        "order violation at generator " + std::to_string(i + 1) + ": " +
                            std::to_string(source.orders()[i]) + " * image must be 0",
                        to_string(images[i]));

    std::vector<Index> table(source.size());
    for (Index x = 0; x < source.size(); ++x) {
        const auto c = source.coords(x);
        Index y = 0;
        for (std::size_t i = 0; i < k; ++i)
            if (c[i] != 0) y = target.add(y, target.scale(img[i], c[i]));
        table[x] = y;
    }

    if (table[source.one_index()] != target.one_index())
        throw Error(Errc::hom_unit, "unit not preserved: image of 1 is " + to_string(target.at(table[source.one_index()])),
                    to_string(target.at(table[source.one_index()])));

    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) {
            const Index eij = source.mul(source.index_of(source.generator(i)), source.index_of(source.generator(j)));
            if (table[eij] != target.mul(img[i], img[j]))
                throw Error(Errc::hom_multiplicative,
                            "multiplicativity failure at generators (" + std::to_string(i + 1) + "," +
                                std::to_string(j + 1) + ")",
                            to_string(source.at(eij)));
        }

    const bool audit = check == HomCheck::audit ||
                       (check == HomCheck::standard && source.size() <= default_limits().audit_order);
    if (audit) {
        for (Index x = 0; x < source.size(); ++x)
            for (Index y = x; y < source.size(); ++y)
                if (table[source.mul(x, y)] != target.mul(table[x], table[y]))
                    throw Error(Errc::hom_multiplicative, "multiplicativity failure in element audit",
                                to_string(source.at(x)) + " * " + to_string(source.at(y)));
    }

    return RingHom(std::make_shared<RingHom::Data>(
        RingHom::Data{source, target, std::move(images), std::move(table)}));
}

RingHom hom_from_table(const FiniteRing& source, const FiniteRing& target, std::span<const Index> table) {
    if (table.size() != source.size()) throw Error(Errc::invalid_argument, "hom table has the wrong length");
    std::vector<Element> images;
    for (std::size_t i = 0; i < source.rank(); ++i)
        images.push_back(target.at(table[source.index_of(source.generator(i))]));
    RingHom h = make_hom(source, target, std::move(images));
    for (Index x = 0; x < source.size(); ++x)
        if (h.apply(x) != table[x])
            throw Error(Errc::hom_order, "map is not additive", to_string(source.at(x)));
    return h;
}

RingHom identity_hom(const FiniteRing& ring) {
    std::vector<Element> images;
    for (std::size_t i = 0; i < ring.rank(); ++i) images.push_back(ring.generator(i));
    return make_hom(ring, ring, std::move(images), HomCheck::generators);
}

RingHom compose(const RingHom& outer, const RingHom& inner) {
    if (!(inner.target() == outer.source()))
        throw Error(Errc::mismatched_maps, "cannot compose: inner target is not outer source");
    std::vector<Element> images;
    for (const auto& e : inner.generator_images()) images.push_back(outer(e));
    return make_hom(inner.source(), outer.target(), std::move(images), HomCheck::generators);
}

bool same_map(const RingHom& a, const RingHom& b) {
    return a.source() == b.source() && a.target() == b.target() &&
           std::equal(a.table().begin(), a.table().end(), b.table().begin(), b.table().end());
}

Ideal kernel(const RingHom& f) {
    std::vector<Index> out;
    for (Index x = 0; x < f.source().size(); ++x)
        if (f.apply(x) == 0) out.push_back(x);
    return Ideal::from_elements(f.source(), std::move(out), true);
}

Ideal preimage(const RingHom& f, const Ideal& k) {
    if (!(k.ring() == f.target())) throw Error(Errc::wrong_ring, "ideal does not live in the hom's target");
    std::vector<Index> out;
    for (Index x = 0; x < f.source().size(); ++x)
        if (k.contains(f.apply(x))) out.push_back(x);
    return Ideal::from_elements(f.source(), std::move(out), true);
}

std::vector<Index> image_set(const RingHom& f, std::span<const Index> elements) {
    std::vector<Index> out;
    out.reserve(elements.size());
    for (Index x : elements) out.push_back(f.apply(x));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

HomAnalysis hom_analysis(const RingHom& f) {
    std::vector<Index> gens(f.table().begin(), f.table().end());
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return HomAnalysis{kernel(f), subring_generated(f.target(), std::span<const Index>(gens))};
}

std::string to_string(const RingHom& f) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < f.generator_images().size(); ++i)
        os << (i ? ", " : "") << "e" << i + 1 << "->" << to_string(f.generator_images()[i]);
    os << '}';
    return os.str();
}

}  // namespace biamalg
