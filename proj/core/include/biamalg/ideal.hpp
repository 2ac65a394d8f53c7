#pragma once

#include <memory>
#include <span>
#include <vector>

#include "biamalg/ring.hpp"

namespace biamalg {

/// Ideal of a finite ring: generators plus the eagerly enumerated closure.
class Ideal {
public:
    /// Wraps a subset already known to be an ideal. With `verify`, throws
    /// Errc::not_an_ideal (witness attached) unless the set contains 0 and is
    /// closed under subtraction and multiplication by ring elements.
    static Ideal from_elements(const FiniteRing& ring, std::vector<Index> elements, bool verify = true);

    const FiniteRing& ring() const;
    /// Additive generators of the element set (small, not necessarily minimal).
    const std::vector<Element>& generators() const;
    /// Sorted element indices.
    std::span<const Index> elements() const;
    std::size_t size() const;
    bool contains(Index x) const;
    bool contains(const Element& x) const;
    bool is_zero() const { return size() == 1; }
    bool is_whole() const;
    /// Same ambient ring and I ⊆ K.
    bool subset_of(const Ideal& k) const;

    friend bool operator==(const Ideal& a, const Ideal& b);
    friend Ideal ideal_generated(const FiniteRing& ring, std::span<const Element> gens);

private:
    struct Data;
    explicit Ideal(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
    std::shared_ptr<const Data> d_;
};

Ideal ideal_generated(const FiniteRing& ring, std::span<const Element> gens);
Ideal ideal_generated(const FiniteRing& ring, std::initializer_list<Element> gens);
Ideal zero_ideal(const FiniteRing& ring);
Ideal unit_ideal(const FiniteRing& ring);

enum class IdealOp { sum, product, intersection, radical };

/// `other` is ignored for radical and required otherwise. Throws
/// Errc::wrong_ring on mismatched rings, Errc::invalid_argument when the
/// second operand is missing.
Ideal ideal_arith(IdealOp op, const Ideal& i, const Ideal* other = nullptr);

Ideal ideal_sum(const Ideal& i, const Ideal& k);
Ideal ideal_product(const Ideal& i, const Ideal& k);
Ideal ideal_intersection(const Ideal& i, const Ideal& k);
Ideal radical(const Ideal& i);

std::string to_string(const Ideal& i);

namespace detail {

/// Additive subgroup being grown by adjoining generators.
class SubgroupBuilder {
public:
    explicit SubgroupBuilder(const FiniteRing& ring);
    /// Adjoins g; returns false when g was already a member.
    bool adjoin(Index g);
    bool contains(Index x) const { return member_[x] != 0; }
    const std::vector<Index>& elements() const { return elements_; }
    const std::vector<Index>& generators() const { return generators_; }
    /// Index growth |H_t| / |H_{t-1}| contributed by each generator. Element
    /// number p of elements() is sum of c_t * generators()[t] where p is read
    /// in mixed radix with these radices, least significant first.
    const std::vector<std::int64_t>& steps() const { return steps_; }
    std::vector<Index> sorted_elements() const;

private:
    const FiniteRing* ring_;
    std::vector<char> member_;
    std::vector<std::int64_t> steps_;
    std::vector<Index> elements_;
    std::vector<Index> generators_;
};

/// Independent cyclic generators of an additive subgroup, found through the
/// Smith normal form of its relation lattice, plus a coordinate lookup.
struct SubgroupPresentation {
    std::vector<Index> basis;
    std::vector<std::int64_t> orders;
    /// Ambient index -> coordinates w.r.t. basis (empty for non-members).
    std::vector<std::vector<std::int64_t>> coords_of;
    std::vector<char> member;
};

SubgroupPresentation present_subgroup(const FiniteRing& ring, std::span<const Index> generators);

}  // namespace detail

}  // namespace biamalg
