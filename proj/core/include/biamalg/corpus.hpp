#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "biamalg/biamalg.hpp"

namespace biamalg {

struct NamedRing {
    std::string name;
    FiniteRing ring;
};

/// Nonzero rings of order at most `max_order` built from Z/n by products,
/// polynomial quotients and quotients; deterministic order.
std::vector<NamedRing> base_rings(std::size_t max_order);

/// Every ideal, smallest first (ties broken by element list).
std::vector<Ideal> all_ideals(const FiniteRing& r);

struct CorpusOptions {
    std::uint64_t seed = 1;
    std::size_t count = 240;
    /// Bound on |A|, |B|, |C| and |W|.
    std::size_t max_order = 64;
};

struct CorpusInstance {
    std::string label;
    /// duplication, amalgamation, surjective or general.
    std::string family;
    RingHom f, g;
    Ideal j, jp;
};

/// Seeded, reproducible bi-amalgamation inputs cycling through four families.
/// The surjective family has f a quotient map with Ker f ⊆ Ker g.
std::vector<CorpusInstance> generate_corpus(const CorpusOptions& opts);

struct Square {
    std::string label;
    RingHom alpha, beta, f, g;
};

/// Commuting squares alpha∘f = beta∘g over small rings, both recognizable
/// and not.
std::vector<Square> generate_squares(std::uint64_t seed, std::size_t count);

struct IdealPair {
    std::string label;
    FiniteRing ring;
    Ideal ideal;
};

/// Nonzero ideals I with I² = 0 of the base rings, |A|·|I| <= max_order.
std::vector<IdealPair> square_zero_pairs(std::size_t max_order);

/// Proper ideals of the base rings, for CPI-extensions.
std::vector<IdealPair> proper_ideal_pairs(std::size_t max_order);

}  // namespace biamalg
