#include "biamalg/ring.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <mutex>
#include <sstream>

#include "biamalg/error.hpp"

namespace biamalg {

namespace detail {

struct RingData {
    RingId id;
    std::vector<std::int64_t> orders;
    FiniteRing::Structure structure;
    std::vector<std::int64_t> one;
    std::vector<std::size_t> strides;
    std::size_t size = 1;
    Index one_index = 0;

    // Write-once operation tables for small rings.
    static constexpr std::size_t kTableOrder = 512;
    mutable std::once_flag tables_once;
    mutable std::vector<Index> add_table;
    mutable std::vector<Index> mul_table;
};

}  // namespace detail

namespace {

std::atomic<std::uint64_t> next_ring_id{1};

std::int64_t reduce(std::int64_t x, std::int64_t m) {
    std::int64_t r = x % m;
    return r < 0 ? r + m : r;
}

using Data = detail::RingData;

void decode(const Data& d, Index x, std::int64_t* out) {
    std::size_t v = x;
    for (std::size_t i = 0; i < d.orders.size(); ++i) {
        out[i] = static_cast<std::int64_t>(v % static_cast<std::size_t>(d.orders[i]));
        v /= static_cast<std::size_t>(d.orders[i]);
    }
}

Index encode_raw(const Data& d, const std::int64_t* c) {
    std::size_t v = 0;
    for (std::size_t i = 0; i < d.orders.size(); ++i) v += static_cast<std::size_t>(c[i]) * d.strides[i];
    return static_cast<Index>(v);
}

Index raw_add(const Data& d, Index x, Index y, std::int64_t sign) {
    std::size_t vx = x, vy = y, out = 0;
    for (std::size_t i = 0; i < d.orders.size(); ++i) {
        const auto m = static_cast<std::size_t>(d.orders[i]);
        const auto a = static_cast<std::int64_t>(vx % m);
        const auto b = static_cast<std::int64_t>(vy % m);
        vx /= m;
        vy /= m;
        out += static_cast<std::size_t>(reduce(a + sign * b, d.orders[i])) * d.strides[i];
    }
    return static_cast<Index>(out);
}

Index raw_mul(const Data& d, Index x, Index y) {
    const std::size_t k = d.orders.size();
    std::int64_t cx[64], cy[64], acc[64];
    decode(d, x, cx);
    decode(d, y, cy);
    for (std::size_t l = 0; l < k; ++l) acc[l] = 0;
    for (std::size_t i = 0; i < k; ++i) {
        if (cx[i] == 0) continue;
        for (std::size_t j = 0; j < k; ++j) {
            if (cy[j] == 0) continue;
            const std::int64_t w = cx[i] * cy[j];
            const auto& c = d.structure[i][j];
            for (std::size_t l = 0; l < k; ++l)
                if (c[l] != 0) acc[l] = (acc[l] + w * c[l]) % d.orders[l];
        }
    }
    return encode_raw(d, acc);
}

void build_tables(const Data& d) {
    const std::size_t n = d.size;
    d.add_table.resize(n * n);
    d.mul_table.resize(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x; y < n; ++y) {
            const Index s = raw_add(d, static_cast<Index>(x), static_cast<Index>(y), 1);
            const Index p = raw_mul(d, static_cast<Index>(x), static_cast<Index>(y));
            d.add_table[x * n + y] = d.add_table[y * n + x] = s;
            d.mul_table[x * n + y] = d.mul_table[y * n + x] = p;
        }
}

bool use_tables(const Data& d) {
    if (d.size > Data::kTableOrder) return false;
    std::call_once(d.tables_once, [&d] { build_tables(d); });
    return true;
}

}  // namespace

std::string to_string(const Element& x) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < x.coords.size(); ++i) os << (i ? "," : "") << x.coords[i];
    os << ']';
    return os.str();
}

FiniteRing FiniteRing::from_structure(std::vector<std::int64_t> orders, Structure structure,
                                      std::vector<std::int64_t> one, const Limits& limits) {
    const std::size_t k = orders.size();
    if (structure.size() != k || one.size() != k)
        throw Error(Errc::invalid_argument, "structure constants do not match the number of generators");
    std::size_t size = 1;
    for (auto d : orders) {
        if (d < 1) throw Error(Errc::invalid_argument, "generator orders must be positive");
        if (static_cast<std::size_t>(d) > limits.max_order || size * static_cast<std::size_t>(d) > limits.max_order)
            throw Error(Errc::size_cap, "ring exceeds the size cap of " + std::to_string(limits.max_order));
        size *= static_cast<std::size_t>(d);
    }
    for (const auto& row : structure) {
        if (row.size() != k) throw Error(Errc::invalid_argument, "structure table is not square");
        for (const auto& v : row)
            if (v.size() != k) throw Error(Errc::invalid_argument, "structure constant has the wrong length");
    }
    if (k > 63) throw Error(Errc::invalid_argument, "too many additive generators");

    // Drop generators of order 1 (they contribute nothing).
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < k; ++i)
        if (orders[i] > 1) keep.push_back(i);

    auto data = std::make_shared<Data>();
    data->id = RingId{next_ring_id.fetch_add(1)};
    for (auto i : keep) data->orders.push_back(orders[i]);
    const std::size_t kk = keep.size();
    data->structure.assign(kk, std::vector<std::vector<std::int64_t>>(kk, std::vector<std::int64_t>(kk, 0)));
    for (std::size_t a = 0; a < kk; ++a)
        for (std::size_t b = 0; b < kk; ++b)
            for (std::size_t c = 0; c < kk; ++c)
                data->structure[a][b][c] = reduce(structure[keep[a]][keep[b]][keep[c]], data->orders[c]);
    data->one.resize(kk);
    for (std::size_t c = 0; c < kk; ++c) data->one[c] = reduce(one[keep[c]], data->orders[c]);
    data->strides.resize(kk);
    std::size_t stride = 1;
    for (std::size_t c = 0; c < kk; ++c) {
        data->strides[c] = stride;
        stride *= static_cast<std::size_t>(data->orders[c]);
    }
    data->size = stride;
    data->one_index = encode_raw(*data, data->one.data());
    return FiniteRing(std::move(data));
}

RingId FiniteRing::id() const { return data_->id; }
std::size_t FiniteRing::rank() const { return data_->orders.size(); }
const std::vector<std::int64_t>& FiniteRing::orders() const { return data_->orders; }
const FiniteRing::Structure& FiniteRing::structure() const { return data_->structure; }
std::size_t FiniteRing::size() const { return data_->size; }
Index FiniteRing::one_index() const { return data_->one_index; }

Element FiniteRing::element(std::span<const std::int64_t> coords) const {
    if (coords.size() != rank())
        throw Error(Errc::invalid_argument, "expected " + std::to_string(rank()) + " coordinates, got " +
                                                std::to_string(coords.size()));
    Element e{id(), {}};
    e.coords.resize(rank());
    for (std::size_t i = 0; i < rank(); ++i) e.coords[i] = reduce(coords[i], data_->orders[i]);
    return e;
}

Element FiniteRing::zero() const { return Element{id(), std::vector<std::int64_t>(rank(), 0)}; }
Element FiniteRing::one() const { return Element{id(), data_->one}; }

Element FiniteRing::generator(std::size_t i) const {
    if (i >= rank()) throw Error(Errc::invalid_argument, "generator index out of range");
    Element e = zero();
    e.coords[i] = 1;
    return e;
}

Element FiniteRing::at(Index i) const { return Element{id(), coords(i)}; }

void FiniteRing::check_member(const Element& x) const {
    if (x.ring != id() || x.coords.size() != rank())
        throw Error(Errc::wrong_ring, "element " + to_string(x) + " does not belong to this ring");
}

Index FiniteRing::index_of(const Element& x) const {
    check_member(x);
    for (std::size_t i = 0; i < rank(); ++i)
        if (x.coords[i] < 0 || x.coords[i] >= data_->orders[i])
            throw Error(Errc::invalid_argument, "element coordinates are not reduced");
    return encode_raw(*data_, x.coords.data());
}

Element FiniteRing::add(const Element& x, const Element& y) const { return at(add(index_of(x), index_of(y))); }
Element FiniteRing::sub(const Element& x, const Element& y) const { return at(sub(index_of(x), index_of(y))); }
Element FiniteRing::neg(const Element& x) const { return at(neg(index_of(x))); }
Element FiniteRing::mul(const Element& x, const Element& y) const { return at(mul(index_of(x), index_of(y))); }
Element FiniteRing::scale(const Element& x, std::int64_t n) const { return at(scale(index_of(x), n)); }

Index FiniteRing::add(Index x, Index y) const {
    if (use_tables(*data_)) return data_->add_table[static_cast<std::size_t>(x) * data_->size + y];
    return raw_add(*data_, x, y, 1);
}

Index FiniteRing::sub(Index x, Index y) const { return raw_add(*data_, x, y, -1); }
Index FiniteRing::neg(Index x) const { return raw_add(*data_, 0, x, -1); }

Index FiniteRing::mul(Index x, Index y) const {
    if (use_tables(*data_)) return data_->mul_table[static_cast<std::size_t>(x) * data_->size + y];
    return raw_mul(*data_, x, y);
}

Index FiniteRing::scale(Index x, std::int64_t n) const {
    std::int64_t c[64];
    decode(*data_, x, c);
    for (std::size_t i = 0; i < rank(); ++i) {
        const std::int64_t m = data_->orders[i];
        c[i] = reduce((c[i] * reduce(n, m)) % m, m);
    }
    return encode_raw(*data_, c);
}

Index FiniteRing::power(Index x, std::uint64_t n) const {
    Index result = one_index();
    Index base = x;
    while (n > 0) {
        if (n & 1U) result = mul(result, base);
        base = mul(base, base);
        n >>= 1U;
    }
    return result;
}

std::int64_t FiniteRing::additive_order(Index x) const {
    std::int64_t c[64];
    decode(*data_, x, c);
    std::int64_t ord = 1;
    for (std::size_t i = 0; i < rank(); ++i) {
        const std::int64_t m = data_->orders[i];
        const std::int64_t g = std::gcd(c[i], m);
        const std::int64_t oi = m / g;
        ord = std::lcm(ord, oi);
    }
    return ord;
}

std::vector<std::int64_t> FiniteRing::coords(Index x) const {
    std::vector<std::int64_t> c(rank());
    decode(*data_, x, c.data());
    return c;
}

Index FiniteRing::encode(std::span<const std::int64_t> reduced_coords) const {
    if (reduced_coords.size() != rank()) throw Error(Errc::invalid_argument, "coordinate length mismatch");
    return encode_raw(*data_, reduced_coords.data());
}

}  // namespace biamalg
