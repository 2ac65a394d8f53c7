#pragma once

#include <string>
#include <utility>
#include <vector>

#include "biamalg/constructions.hpp"

namespace zoo {

using biamalg::Element;
using biamalg::FiniteRing;

inline FiniteRing poly(const FiniteRing& r, std::vector<std::int64_t> coeffs) {
    std::vector<Element> c;
    for (auto v : coeffs) c.push_back(r.scale(r.one(), v));
    return biamalg::make_poly_quotient(r, c);
}

/// A spread of small rings: cyclic, products, polynomial quotients, quotients.
inline std::vector<std::pair<std::string, FiniteRing>> small_rings() {
    using namespace biamalg;
    std::vector<std::pair<std::string, FiniteRing>> out;
    for (int n = 1; n <= 12; ++n) out.emplace_back("Z/" + std::to_string(n), make_zmod(n));
    const auto z2 = make_zmod(2), z3 = make_zmod(3), z4 = make_zmod(4);
    out.emplace_back("Z/2xZ/2", make_product(z2, z2).ring);
    out.emplace_back("Z/2xZ/4", make_product(z2, z4).ring);
    out.emplace_back("Z/4xZ/3", make_product(z4, z3).ring);
    out.emplace_back("Z/2xZ/2xZ/2", make_product(make_product(z2, z2).ring, z2).ring);
    out.emplace_back("F4", poly(z2, {1, 1, 1}));
    out.emplace_back("Z/2[x]/x^2", poly(z2, {0, 0, 1}));
    out.emplace_back("Z/2[x]/x^3", poly(z2, {0, 0, 0, 1}));
    out.emplace_back("Z/3[x]/x^2", poly(z3, {0, 0, 1}));
    out.emplace_back("Z/4[x]/(x^2+x+1)", poly(z4, {1, 1, 1}));
    out.emplace_back("Z/4[x]/x^2", poly(z4, {0, 0, 1}));
    out.emplace_back("Z/2[x]/(x^2+x)", poly(z2, {0, 1, 1}));
    out.emplace_back("F9", poly(z3, {1, 0, 1}));
    out.emplace_back("Z/8", make_zmod(8));
    out.emplace_back("Z/16", make_zmod(16));
    out.emplace_back("Z/2[x]/x^2 x Z/3", make_product(poly(z2, {0, 0, 1}), z3).ring);
    return out;
}

/// Golden corpus: rings of order <= 8 reachable from Z/n by products and
/// polynomial quotients in one or two steps.
inline std::vector<std::pair<std::string, FiniteRing>> up_to_8() {
    using namespace biamalg;
    std::vector<std::pair<std::string, FiniteRing>> base;
    for (int n = 1; n <= 8; ++n) base.emplace_back("Z/" + std::to_string(n), make_zmod(n));
    const auto z2 = make_zmod(2);
    for (std::int64_t c0 = 0; c0 < 2; ++c0)
        for (std::int64_t c1 = 0; c1 < 2; ++c1) {
            base.emplace_back("Z/2[x]/(x^2+" + std::to_string(c1) + "x+" + std::to_string(c0) + ")",
                              poly(z2, {c0, c1, 1}));
            for (std::int64_t c2 = 0; c2 < 2; ++c2)
                base.emplace_back("Z/2[x]/(x^3+" + std::to_string(c2) + "x^2+" + std::to_string(c1) + "x+" +
                                      std::to_string(c0) + ")",
                                  poly(z2, {c0, c1, c2, 1}));
        }
    std::vector<std::pair<std::string, FiniteRing>> out = base;
    for (std::size_t a = 1; a < base.size(); ++a)
        for (std::size_t b = a; b < base.size(); ++b)
            if (base[a].second.size() > 1 && base[b].second.size() > 1 &&
                base[a].second.size() * base[b].second.size() <= 8)
                out.emplace_back(base[a].first + " x " + base[b].first,
                                 make_product(base[a].second, base[b].second).ring);
    return out;
}

}  // namespace zoo
