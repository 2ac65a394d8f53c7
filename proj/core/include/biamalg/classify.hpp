#pragma once

#include <cstddef>
#include <vector>

#include "biamalg/ideal.hpp"
#include "biamalg/ring.hpp"

namespace biamalg {

struct ClassificationReport {
    std::size_t unit_count = 0;
    std::vector<Element> idempotents;
    Ideal nilradical;
    Ideal jacobson_radical;
    bool is_zero_ring = false;
    bool is_local = false;
    bool is_reduced = false;
    bool is_domain = false;
    bool is_field = false;
};

/// Full-enumeration classification. The nilradical comes from power
/// sequences, the Jacobson radical from the 1 - r x unit criterion; the two
/// are computed independently. The zero ring is neither local nor a domain.
ClassificationReport classify(const FiniteRing& r);

/// Per-element facts gathered from one power-sequence walk each.
struct ElementTable {
    std::vector<char> unit;
    std::vector<char> nilpotent;
    std::vector<char> idempotent;
    /// Multiplicative order for units, 0 otherwise.
    std::vector<std::uint32_t> unit_order;
};

ElementTable element_table(const FiniteRing& r);

}  // namespace biamalg
