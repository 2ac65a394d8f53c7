#include "biamalg/classify.hpp"

namespace biamalg {

ElementTable element_table(const FiniteRing& r) {
    const std::size_t n = r.size();
    ElementTable t;
    t.unit.assign(n, 0);
    t.nilpotent.assign(n, 0);
    t.idempotent.assign(n, 0);
    t.unit_order.assign(n, 0);
    std::vector<Index> stamp(n, 0);
    const Index one = r.one_index();
    for (Index x = 0; x < n; ++x) {
        t.idempotent[x] = r.mul(x, x) == x;
        Index v = x;
        for (std::uint32_t step = 1;; ++step) {
            if (v == 0) t.nilpotent[x] = 1;
            if (v == one && !t.unit[x]) {
                t.unit[x] = 1;
                t.unit_order[x] = step;
            }
            if (stamp[v] == x + 1) break;
            stamp[v] = x + 1;
            v = r.mul(v, x);
        }
    }
    return t;
}

ClassificationReport classify(const FiniteRing& r) {
    const std::size_t n = r.size();
    const ElementTable et = element_table(r);

    std::vector<Index> nil, units, jac;
    std::vector<Element> idempotents;
    for (Index x = 0; x < n; ++x) {
        if (et.nilpotent[x]) nil.push_back(x);
        if (et.unit[x]) units.push_back(x);
        if (et.idempotent[x]) idempotents.push_back(r.at(x));
    }
    const Index one = r.one_index();
    for (Index x = 0; x < n; ++x) {
        bool in = true;
        for (Index y = 0; y < n && in; ++y) in = et.unit[r.sub(one, r.mul(y, x))] != 0;
        if (in) jac.push_back(x);
    }

    bool domain = n > 1;
    for (Index x = 1; x < n && domain; ++x)
        for (Index y = x; y < n; ++y)
            if (r.mul(x, y) == 0) {
                domain = false;
                break;
            }

    ClassificationReport rep{
        units.size(),
        std::move(idempotents),
        Ideal::from_elements(r, std::move(nil), true),
        Ideal::from_elements(r, std::move(jac), true),
    };
    rep.is_zero_ring = n == 1;
    rep.is_local = n > 1 && rep.unit_count + rep.jacobson_radical.size() == n;
    rep.is_reduced = rep.nilradical.size() == 1;
    rep.is_domain = domain;
    rep.is_field = n > 1 && rep.unit_count == n - 1;
    return rep;
}

}  // namespace biamalg
