#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "biamalg/hom.hpp"

namespace biamalg {

enum class CheckStatus { pass, fail, unknown };

std::string to_string(CheckStatus s);

/// One named, machine-checkable claim.
struct Check {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    /// Human-readable evidence: a counterexample on failure, a summary on success.
    std::string witness;
    /// Explicit isomorphism or map backing the claim, when there is one.
    std::optional<RingHom> map;

    bool passed() const { return status == CheckStatus::pass; }
};

struct Report {
    std::string title;
    std::vector<Check> checks;
    /// Observations that are recorded but not asserted.
    std::vector<std::string> notes;

    Check& add(std::string name, bool ok, std::string witness = {});
    void add_unknown(std::string name, std::string reason);
    void append(const Report& other, const std::string& prefix = {});

    bool all_passed() const;
    bool any_failed() const;
    bool any_unknown() const;
    const Check* find(const std::string& name) const;
};

/// Runs the isomorphism search and records pass (with witness), fail, or
/// unknown when the budget runs out.
Check& add_isomorphism(Report& report, std::string name, const FiniteRing& r, const FiniteRing& s,
                       std::uint64_t budget = default_limits().search_budget);

}  // namespace biamalg
