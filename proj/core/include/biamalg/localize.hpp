#pragma once

#include <span>
#include <vector>

#include "biamalg/constructions.hpp"

namespace biamalg {

/// S^-1 R for a finite ring, realised as R / I_S with
/// I_S = { a : s a = 0 for some s in the multiplicative closure of S }.
struct Localization {
    FiniteRing ring;
    RingHom map;
    /// I_S, the kernel of the canonical map.
    Ideal kernel;
    /// Multiplicative closure of S ∪ {1}, sorted.
    std::vector<Index> closure;
};

/// Throws Errc::invalid_argument if S is empty, Errc::wrong_ring on foreign
/// elements. Every element of the closure is checked to map to a unit.
Localization localize(const FiniteRing& r, std::span<const Element> s);
Localization localize(const FiniteRing& r, std::span<const Index> s);

std::vector<Index> multiplicative_closure(const FiniteRing& r, std::span<const Index> s);

}  // namespace biamalg
