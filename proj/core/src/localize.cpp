#include "biamalg/localize.hpp"

#include <algorithm>

#include "biamalg/classify.hpp"
#include "biamalg/error.hpp"

namespace biamalg {

std::vector<Index> multiplicative_closure(const FiniteRing& r, std::span<const Index> s) {
    std::vector<char> seen(r.size(), 0);
    std::vector<Index> out{r.one_index()};
    seen[r.one_index()] = 1;
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (Index g : s) {
            const Index p = r.mul(out[i], g);
            if (!seen[p]) {
                seen[p] = 1;
                out.push_back(p);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Localization localize(const FiniteRing& r, std::span<const Index> s) {
    if (s.empty()) throw Error(Errc::invalid_argument, "localization needs a nonempty set");
    for (Index x : s)
        if (x >= r.size()) throw Error(Errc::wrong_ring, "index outside the ring");
    std::vector<Index> closure = multiplicative_closure(r, s);

    std::vector<Index> killed;
    for (Index a = 0; a < r.size(); ++a)
        for (Index t : closure)
            if (r.mul(t, a) == 0) {
                killed.push_back(a);
                break;
            }
    Ideal is = Ideal::from_elements(r, std::move(killed), true);
    Quotient q = quotient_ring(r, is);

    const ElementTable et = element_table(q.ring);
    for (Index t : closure)
        if (!et.unit[q.map.apply(t)])
            throw Error(Errc::invalid_argument, "localization left a non-unit image", to_string(r.at(t)));
    return Localization{q.ring, q.map, is, std::move(closure)};
}

Localization localize(const FiniteRing& r, std::span<const Element> s) {
    std::vector<Index> idx;
    for (const auto& x : s) idx.push_back(r.index_of(x));
    return localize(r, std::span<const Index>(idx));
}

}  // namespace biamalg
