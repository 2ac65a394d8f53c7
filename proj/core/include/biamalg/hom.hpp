#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "biamalg/ideal.hpp"
#include "biamalg/ring.hpp"

namespace biamalg {

enum class HomCheck {
    /// Generator-pair checks, plus the element-complete audit when the source
    /// is at most Limits::audit_order elements.
    standard,
    /// Generator-pair checks only.
    generators,
    /// Element-complete audit regardless of size.
    audit,
};

/// Unital ring homomorphism, stored by the images of the source's additive
/// generators.
class RingHom {
public:
    const FiniteRing& source() const;
    const FiniteRing& target() const;
    const std::vector<Element>& generator_images() const;

    Element operator()(const Element& x) const;
    Index apply(Index x) const;
    /// Source index -> target index for every source element.
    std::span<const Index> table() const;

    bool is_injective() const;
    bool is_surjective() const;

private:
    friend RingHom make_hom(const FiniteRing&, const FiniteRing&, std::vector<Element>, HomCheck);
    struct Data;
    explicit RingHom(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
    std::shared_ptr<const Data> d_;
};

/// Validates and builds a homomorphism. Errors name the failing law:
/// Errc::hom_arity, Errc::hom_order, Errc::hom_unit, Errc::hom_multiplicative.
RingHom make_hom(const FiniteRing& source, const FiniteRing& target, std::vector<Element> images,
                 HomCheck check = HomCheck::standard);

/// Builds the hom whose element map is `table` (source index -> target index),
/// validating that the table is exactly that hom.
RingHom hom_from_table(const FiniteRing& source, const FiniteRing& target, std::span<const Index> table);

RingHom identity_hom(const FiniteRing& ring);
/// outer ∘ inner. Throws Errc::mismatched_maps unless inner's target is outer's source.
RingHom compose(const RingHom& outer, const RingHom& inner);
bool same_map(const RingHom& a, const RingHom& b);

/// Subring materialized as a standalone ring with its embedding.
struct Subring {
    FiniteRing ring;
    RingHom embedding;
};

struct HomAnalysis {
    Ideal kernel;
    Subring image;
};

Ideal kernel(const RingHom& f);
/// f^-1(k). Throws Errc::wrong_ring unless k lives in f's target.
Ideal preimage(const RingHom& f, const Ideal& k);
/// Image f(ideal) as a sorted element set of the target (not an ideal in general).
std::vector<Index> image_set(const RingHom& f, std::span<const Index> elements);
HomAnalysis hom_analysis(const RingHom& f);

std::string to_string(const RingHom& f);

}  // namespace biamalg
