#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "biamalg/limits.hpp"

namespace biamalg {

/// Position of an element in a ring's canonical enumeration (mixed radix over
/// the additive generators, first generator least significant).
using Index = std::uint32_t;

/// Opaque identity token. Two rings built from identical tables still differ.
struct RingId {
    std::uint64_t value = 0;
    friend auto operator<=>(RingId, RingId) = default;
};

/// Coordinate vector over a specific ring's additive generators, always
/// reduced modulo the generator orders.
struct Element {
    RingId ring;
    std::vector<std::int64_t> coords;

    friend bool operator==(const Element&, const Element&) = default;
};

std::string to_string(const Element& x);

namespace detail {
struct RingData;
}

/// Finite commutative unital ring presented by cyclic additive generators
/// e_1..e_k of orders d_1..d_k and structure constants e_i * e_j.
///
/// A FiniteRing is a cheap handle onto immutable shared data. Element-level
/// arithmetic works either on `Element`s (checked, allocating) or on `Index`
/// values (the hot path used by every enumeration in the library).
class FiniteRing {
public:
    /// structure[i][j] is the coordinate vector of e_i * e_j.
    using Structure = std::vector<std::vector<std::vector<std::int64_t>>>;

    /// Builds a ring from raw data without checking ring axioms (see
    /// validate_axioms). Coordinates are reduced; generators of order 1 are
    /// dropped. Throws Errc::size_cap or Errc::invalid_argument on malformed
    /// shapes.
    static FiniteRing from_structure(std::vector<std::int64_t> orders, Structure structure,
                                     std::vector<std::int64_t> one,
                                     const Limits& limits = default_limits());

    RingId id() const;
    std::size_t rank() const;
    const std::vector<std::int64_t>& orders() const;
    const Structure& structure() const;
    std::size_t size() const;
    bool is_zero_ring() const { return size() == 1; }

    Element element(std::span<const std::int64_t> coords) const;
    Element element(std::initializer_list<std::int64_t> coords) const {
        return element(std::span<const std::int64_t>(coords.begin(), coords.size()));
    }
    Element zero() const;
    Element one() const;
    Element generator(std::size_t i) const;

    Element at(Index i) const;
    /// Throws Errc::wrong_ring if x belongs to another ring.
    Index index_of(const Element& x) const;
    void check_member(const Element& x) const;

    Element add(const Element& x, const Element& y) const;
    Element sub(const Element& x, const Element& y) const;
    Element neg(const Element& x) const;
    Element mul(const Element& x, const Element& y) const;
    Element scale(const Element& x, std::int64_t n) const;

    Index zero_index() const { return 0; }
    Index one_index() const;
    Index add(Index x, Index y) const;
    Index sub(Index x, Index y) const;
    Index neg(Index x) const;
    Index mul(Index x, Index y) const;
    Index scale(Index x, std::int64_t n) const;
    Index power(Index x, std::uint64_t n) const;
    /// Smallest t > 0 with t * x = 0.
    std::int64_t additive_order(Index x) const;

    std::vector<std::int64_t> coords(Index x) const;
    Index encode(std::span<const std::int64_t> reduced_coords) const;

    friend bool operator==(const FiniteRing& a, const FiniteRing& b) { return a.id() == b.id(); }

private:
    explicit FiniteRing(std::shared_ptr<const detail::RingData> data) : data_(std::move(data)) {}
    std::shared_ptr<const detail::RingData> data_;
};

}  // namespace biamalg

template <>
struct std::hash<biamalg::RingId> {
    std::size_t operator()(biamalg::RingId id) const noexcept {
        return std::hash<std::uint64_t>{}(id.value);
    }
};
