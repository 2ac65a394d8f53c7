#pragma once

#include <optional>
#include <string>
#include <vector>

#include "biamalg/biamalg.hpp"

namespace biamalg {

/// Prime ideals of a finite ring, one per primitive idempotent e:
/// P_e = { x : x e is nilpotent }. Sorted by element list; empty for the zero ring.
std::vector<Ideal> spec(const FiniteRing& r);

/// Primitive idempotents, in the order matching spec(r).
std::vector<Index> primitive_idempotents(const FiniteRing& r);

struct LocalFactor {
    /// R e ≅ R / (1 - e), the localization at P.
    FiniteRing ring;
    /// Canonical R -> R_P.
    RingHom map;
    /// The primitive idempotent outside P.
    Index idempotent = 0;
};

/// Throws Errc::not_prime unless p is one of spec(r).
LocalFactor localize_at_prime(const FiniteRing& r, const Ideal& p);

enum class PrimeClass { conductor, y_side, y_prime_side };
std::string to_string(PrimeClass c);

struct SpectrumEntry {
    Ideal prime;
    PrimeClass kind = PrimeClass::conductor;
    /// The prime of A with prime = p ⋈ (J, J'), conductor class only.
    std::optional<Ideal> p;
    /// Prime of f(A)+J with prime = L̄, when one exists.
    std::optional<Ideal> l;
    /// Prime of g(A)+J' with prime = L̄', when one exists.
    std::optional<Ideal> lp;
    FiniteRing local_factor;
};

struct SpecBowtie {
    std::vector<SpectrumEntry> entries;
    Report report;
};

/// L̄ = (L × (g(A)+J')) ∩ W for a prime L of f(A)+J.
Ideal contract_left(const BiAmalgamation& w, const Ideal& l);
/// L̄' = ((f(A)+J) × L') ∩ W for a prime L' of g(A)+J'.
Ideal contract_right(const BiAmalgamation& w, const Ideal& lp);

/// Spec(W) by brute force and from Spec(A), Spec(f(A)+J), Spec(g(A)+J'),
/// with every link between the two descriptions recorded as a check.
SpecBowtie spec_bowtie(const BiAmalgamation& w);

/// Locality criteria and the two localization descriptions, each
/// isomorphism carrying a witness.
Report verify_spec_localization(const BiAmalgamation& w);

/// Graphviz rendering of Spec(W): one node per prime, labelled by class,
/// with edges to the primes of A, f(A)+J, g(A)+J' it comes from.
std::string spectrum_dot(const SpecBowtie& s);

}  // namespace biamalg
