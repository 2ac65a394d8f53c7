#pragma once

#include <optional>
#include <string>
#include <vector>

#include "biamalg/constructions.hpp"
#include "biamalg/localize.hpp"
#include "biamalg/report.hpp"

namespace biamalg {

/// W = A ⋈^{f,g}(J, J') = { (f(a)+j, g(a)+j') } ⊆ B × C, materialized as a
/// standalone ring together with its embedding into B × C.
struct BiAmalgamation {
    FiniteRing a, b, c;
    RingHom f, g;
    Ideal j, jp;
    /// f^-1(J) = g^-1(J').
    Ideal i0;
    Product bc;
    FiniteRing w;
    RingHom embed;
    /// The coordinate projections restricted to W.
    RingHom to_b, to_c;
    /// f(A)+J ⊆ B and g(A)+J' ⊆ C.
    Subring fa_j, ga_jp;
    /// Checks performed while constructing (element-set identities and the like).
    Report construction;

    /// Index in W of the pair (x, y) of B × C, or nullopt when it is not in W.
    std::optional<Index> find(Index x, Index y) const;
    /// Sorted indices in B × C of the embedded elements.
    const std::vector<Index>& embedded() const { return embedded_; }

    std::vector<Index> embedded_;
    std::vector<std::int32_t> w_of_pair_;
};

/// Throws Errc::mismatched_maps when f and g have different sources,
/// Errc::wrong_ring when J or J' live in the wrong ring, and
/// Errc::preimage_mismatch (with a symmetric-difference witness) when
/// f^-1(J) ≠ g^-1(J').
BiAmalgamation bi_amalgamate(const RingHom& f, const RingHom& g, const Ideal& j, const Ideal& jp);

/// A ⋈^f J, as bi_amalgamate(id, f, f^-1(J), J). The element-set identity with
/// { (a, f(a)+j) } is recorded in `construction`.
BiAmalgamation amalgamation(const RingHom& f, const Ideal& j);

/// A ⋈ I = { (a, a+i) }.
BiAmalgamation duplication(const FiniteRing& a, const Ideal& i);

/// A ⋉ I: pairs (a, i) with (a,i)(a',i') = (aa', ai' + a'i).
FiniteRing idealization(const FiniteRing& a, const Ideal& i);

/// I ⋈^{f,g}(J, J') = { (f(i)+j, g(i)+j') } as an ideal of W.
Ideal embedded_ideal(const BiAmalgamation& w, const Ideal& i);
Ideal zero_times_jp(const BiAmalgamation& w);
Ideal j_times_zero(const BiAmalgamation& w);
Ideal j_times_jp(const BiAmalgamation& w);

/// J as an ideal of f(A)+J, and J' as an ideal of g(A)+J'.
Ideal j_in_fa_j(const BiAmalgamation& w);
Ideal jp_in_ga_jp(const BiAmalgamation& w);

/// W/(I⋈) ≅ A/(I+I0), W/(0×J') ≅ f(A)+J, W/(J×0) ≅ g(A)+J', and
/// A/I0 ≅ W/(J×J') ≅ (f(A)+J)/J ≅ (g(A)+J')/J', each with a witness.
Report quotient_isos_check(const BiAmalgamation& w, const Ideal& i);

/// W as the fiber product of α: f(A)+J → A/I0 and β: g(A)+J' → A/I0.
Report as_pullback(const BiAmalgamation& w);

/// The square W → A/I0, W → (f(A)+J) × (g(A)+J'), A/I0 → (f(A)+J)/J × (g(A)+J')/J'
/// with conductor J × J'.
Report conductor_square(const BiAmalgamation& w);

struct Recognition {
    Report report;
    /// Ker α and Ker β when the diagram is recognized.
    std::optional<Ideal> j, jp;
    std::optional<BiAmalgamation> w;
    bool recognized() const { return w.has_value(); }
};

/// Decides whether α ×_D β is a bi-amalgamation of (f, g): the square must
/// commute and α(π_B(α×β)) must equal α(f(A)). Throws Errc::mismatched_maps
/// unless α: B → D, β: C → D, f: A → B, g: A → C.
Recognition recognize_pullback(const RingHom& alpha, const RingHom& beta, const RingHom& f, const RingHom& g);

struct CpiExtension {
    /// C(A, I) = f(A) + S^-1 I inside S^-1 A.
    FiniteRing ring;
    /// Lifts of the non-zero-divisors of A/I.
    std::vector<Index> s;
    Localization localization;
    BiAmalgamation w;
    Report report;
};

/// Throws Errc::improper_ideal when I = A.
CpiExtension cpi_extension(const FiniteRing& a, const Ideal& i);

/// Domain and reducedness characterizations evaluated on both sides, plus
/// f(A)+J ≅ A ⋈^{π,f}(0, J) and its mirror for g.
Report verify_transfer(const BiAmalgamation& w);

/// When I² = 0, A ⋈ I ≅ A ⋉ I. Reports a single failing check otherwise only
/// if the isomorphism search contradicts that.
Report idealization_coincidence(const FiniteRing& a, const Ideal& i);

}  // namespace biamalg
