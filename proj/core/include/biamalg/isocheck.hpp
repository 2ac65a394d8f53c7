#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "biamalg/hom.hpp"

namespace biamalg {

/// Isomorphism invariants. Equal for isomorphic rings; the converse is not
/// claimed.
struct Fingerprint {
    std::size_t cardinality = 0;
    std::int64_t characteristic = 1;
    /// Additive invariant factors, each dividing the next. [1] for the zero ring.
    std::vector<std::int64_t> invariant_factors;
    std::size_t unit_count = 0;
    std::size_t idempotent_count = 0;
    std::size_t nilpotent_count = 0;
    /// Sorted multiplicative orders of the units.
    std::vector<std::uint32_t> unit_orders;
    /// Sorted annihilator sizes of all elements.
    std::vector<std::uint32_t> annihilator_sizes;

    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const FiniteRing& r);
std::string to_string(const Fingerprint& f);

/// Invariant factors of the finite abelian group Z/d_1 + ... + Z/d_k.
std::vector<std::int64_t> invariant_factors(const std::vector<std::int64_t>& orders);

enum class IsoOutcome { isomorphic, not_isomorphic, unknown };

std::string to_string(IsoOutcome o);

struct IsoResult {
    IsoOutcome outcome = IsoOutcome::unknown;
    /// Present exactly when outcome is isomorphic.
    std::optional<RingHom> witness;
    std::uint64_t nodes = 0;
    /// Which invariant differed, or why the search stopped.
    std::string reason;
};

/// Fingerprint filter, then backtracking over images of the additive
/// generators of `r`. Candidates must agree with the generator in additive
/// order, unit/idempotent/nilpotent class, multiplicative order and
/// annihilator size. Products of generator pairs and the unit are checked as
/// soon as every generator they involve has an image, and injectivity is
/// tracked on the growing image subgroup. A returned witness is validated
/// (elementwise when |r| <= audit_order) and bijective. When more than
/// `budget` candidates are tried the outcome is unknown, never
/// not_isomorphic.
IsoResult find_isomorphism(const FiniteRing& r, const FiniteRing& s,
                           std::uint64_t budget = default_limits().search_budget);

/// True iff the search succeeds; throws Errc::budget_exceeded on unknown.
bool isomorphic(const FiniteRing& r, const FiniteRing& s);

struct HomEnumeration {
    std::vector<RingHom> homs;
    /// False when the budget ran out before the search space was exhausted.
    bool complete = true;
    std::uint64_t nodes = 0;
};

/// Every unital ring homomorphism r -> s, in lexicographic order of the
/// generator image indices.
HomEnumeration enumerate_homs(const FiniteRing& r, const FiniteRing& s,
                              std::uint64_t budget = default_limits().search_budget);

}  // namespace biamalg
