#pragma once

#include <cstddef>
#include <cstdint>

namespace biamalg {

/// Size caps and search budgets shared by every construction.
struct Limits {
    /// Largest ring (by cardinality) any constructor may produce.
    std::size_t max_order = 4096;
    /// Rings at or below this order get element-complete audits (hom validation, axioms).
    std::size_t audit_order = 64;
    /// Upper bound on the order of a ring for which full ternary checks may be requested.
    std::size_t ternary_order = 512;
    /// Node cap for the isomorphism / hom search.
    std::uint64_t search_budget = 2'000'000;
};

/// Process-wide defaults. BIAMALG_MAX_ORDER, when set to a positive integer,
/// overrides max_order. Read once, never mutated afterwards.
const Limits& default_limits();

}  // namespace biamalg
