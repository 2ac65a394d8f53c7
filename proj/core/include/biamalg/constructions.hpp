#pragma once

#include <span>
#include <string>
#include <vector>

#include "biamalg/hom.hpp"
#include "biamalg/ideal.hpp"
#include "biamalg/ring.hpp"

namespace biamalg {

/// Z/n. n = 1 gives the zero ring.
FiniteRing make_zmod(std::int64_t n, const Limits& limits = default_limits());

/// R × S with its coordinate projections. Elements of the product are indexed
/// as r + |R| * s.
struct Product {
    FiniteRing ring;
    FiniteRing left;
    FiniteRing right;
    RingHom proj_left;
    RingHom proj_right;

    Index pair(Index r, Index s) const { return static_cast<Index>(r + left.size() * s); }
    Index first(Index x) const { return static_cast<Index>(x % left.size()); }
    Index second(Index x) const { return static_cast<Index>(x / left.size()); }
    Element pair(const Element& r, const Element& s) const;
};

Product make_product(const FiniteRing& r, const FiniteRing& s, const Limits& limits = default_limits());

/// R[x]/(f) for monic f given low-to-high: coeffs[0] + coeffs[1] x + ... + x^n.
/// Throws Errc::not_monic, Errc::bad_degree, Errc::size_cap.
FiniteRing make_poly_quotient(const FiniteRing& r, std::span<const Element> monic_coeffs,
                              const Limits& limits = default_limits());

struct Quotient {
    FiniteRing ring;
    RingHom map;
};

/// R/I with the canonical surjection, via the Smith form of the relation matrix.
Quotient quotient_ring(const FiniteRing& r, const Ideal& i);

/// Smallest unital subring containing gens, re-presented as a standalone ring.
Subring subring_generated(const FiniteRing& r, std::span<const Element> gens);
Subring subring_generated(const FiniteRing& r, std::span<const Index> gens);

struct AxiomReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Commutativity, associativity and unit law on generators, structure
/// constants against generator orders, and element-complete checks for rings
/// of at most Limits::audit_order elements (or `exhaustive`, within
/// Limits::ternary_order).
AxiomReport validate_axioms(const FiniteRing& r, bool exhaustive = false,
                            const Limits& limits = default_limits());

}  // namespace biamalg
