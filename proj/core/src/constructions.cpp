#include "biamalg/constructions.hpp"

#include <numeric>

#include "biamalg/error.hpp"
#include "biamalg/smith.hpp"

namespace biamalg {

namespace {

std::int64_t reduce(std::int64_t x, std::int64_t m) {
    const std::int64_t r = x % m;
    return r < 0 ? r + m : r;
}

void check_cap(std::size_t order, const Limits& limits) {
    if (order > limits.max_order)
        throw Error(Errc::size_cap, "ring of order " + std::to_string(order) + " exceeds the size cap of " +
                                        std::to_string(limits.max_order));
}

FiniteRing::Structure empty_structure(std::size_t k) {
    return FiniteRing::Structure(k, std::vector<std::vector<std::int64_t>>(k, std::vector<std::int64_t>(k, 0)));
}

}  // namespace

FiniteRing make_zmod(std::int64_t n, const Limits& limits) {
    if (n < 1) throw Error(Errc::invalid_argument, "Z/n needs n >= 1");
    check_cap(static_cast<std::size_t>(n), limits);
    if (n == 1) return FiniteRing::from_structure({}, {}, {}, limits);
    return FiniteRing::from_structure({n}, {{{1}}}, {1}, limits);
}

Element Product::pair(const Element& r, const Element& s) const {
    return ring.at(pair(left.index_of(r), right.index_of(s)));
}

Product make_product(const FiniteRing& r, const FiniteRing& s, const Limits& limits) {
    if (r.size() > limits.max_order || s.size() > limits.max_order || r.size() * s.size() > limits.max_order)
        check_cap(r.size() * s.size(), limits);
    const std::size_t kr = r.rank(), ks = s.rank(), k = kr + ks;
    std::vector<std::int64_t> orders = r.orders();
    orders.insert(orders.end(), s.orders().begin(), s.orders().end());
    auto st = empty_structure(k);
    for (std::size_t i = 0; i < kr; ++i)
        for (std::size_t j = 0; j < kr; ++j)
            for (std::size_t l = 0; l < kr; ++l) st[i][j][l] = r.structure()[i][j][l];
    for (std::size_t i = 0; i < ks; ++i)
        for (std::size_t j = 0; j < ks; ++j)
            for (std::size_t l = 0; l < ks; ++l) st[kr + i][kr + j][kr + l] = s.structure()[i][j][l];
    std::vector<std::int64_t> one = r.one().coords;
    const auto& so = s.one().coords;
    one.insert(one.end(), so.begin(), so.end());
    FiniteRing prod = FiniteRing::from_structure(std::move(orders), std::move(st), std::move(one), limits);

    std::vector<Element> left_images, right_images;
    for (std::size_t i = 0; i < k; ++i) {
        left_images.push_back(i < kr ? r.generator(i) : r.zero());
        right_images.push_back(i < kr ? s.zero() : s.generator(i - kr));
    }
    RingHom pl = make_hom(prod, r, std::move(left_images), HomCheck::generators);
    RingHom pr = make_hom(prod, s, std::move(right_images), HomCheck::generators);
    return Product{prod, r, s, std::move(pl), std::move(pr)};
}

FiniteRing make_poly_quotient(const FiniteRing& r, std::span<const Element> monic_coeffs, const Limits& limits) {
    if (monic_coeffs.size() < 2) throw Error(Errc::bad_degree, "polynomial must have degree at least 1");
    for (const auto& c : monic_coeffs) r.check_member(c);
    const std::size_t n = monic_coeffs.size() - 1;
    if (!(monic_coeffs[n] == r.one()))
        throw Error(Errc::not_monic, "leading coefficient must be 1", to_string(monic_coeffs[n]));
    std::size_t order = 1;
    for (std::size_t t = 0; t < n; ++t) {
        order *= r.size();
        check_cap(order, limits);
    }

    // x^m reduced modulo f, as coefficient vectors of length n, for m < 2n - 1.
    std::vector<std::vector<Index>> xpow(2 * n, std::vector<Index>(n, 0));
    for (std::size_t m = 0; m < n; ++m) xpow[m][m] = r.one_index();
    for (std::size_t m = n; m < 2 * n; ++m) {
        const auto& prev = xpow[m - 1];
        const Index top = prev[n - 1];
        std::vector<Index> cur(n, 0);
        for (std::size_t u = n - 1; u > 0; --u) cur[u] = prev[u - 1];
        for (std::size_t u = 0; u < n; ++u)
            cur[u] = r.sub(cur[u], r.mul(top, r.index_of(monic_coeffs[u])));
        xpow[m] = std::move(cur);
    }

    const std::size_t k = r.rank();
    const std::size_t kk = n * k;
    std::vector<std::int64_t> orders(kk);
    for (std::size_t t = 0; t < n; ++t)
        for (std::size_t i = 0; i < k; ++i) orders[t * k + i] = r.orders()[i];
    auto st = empty_structure(kk);
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t t = 0; t < n; ++t)
                for (std::size_t j = 0; j < k; ++j) {
                    const Index eij = r.mul(r.index_of(r.generator(i)), r.index_of(r.generator(j)));
                    auto& target = st[s * k + i][t * k + j];
                    for (std::size_t u = 0; u < n; ++u) {
                        const auto c = r.coords(r.mul(eij, xpow[s + t][u]));
                        for (std::size_t l = 0; l < k; ++l) target[u * k + l] = c[l];
                    }
                }
    std::vector<std::int64_t> one(kk, 0);
    const auto& ro = r.one().coords;
    for (std::size_t l = 0; l < k; ++l) one[l] = ro[l];
    return FiniteRing::from_structure(std::move(orders), std::move(st), std::move(one), limits);
}

Quotient quotient_ring(const FiniteRing& r, const Ideal& i) {
    if (!(i.ring() == r)) throw Error(Errc::wrong_ring, "ideal does not belong to the ring being quotiented");
    const std::size_t k = r.rank();
    IntMatrix rel;
    for (std::size_t t = 0; t < k; ++t) {
        std::vector<std::int64_t> row(k, 0);
        row[t] = r.orders()[t];
        rel.push_back(std::move(row));
    }
    detail::SubgroupBuilder builder(r);
    for (Index x : i.elements()) builder.adjoin(x);
    for (Index g : builder.generators()) rel.push_back(r.coords(g));

    std::int64_t exponent = 1;
    for (std::int64_t d : r.orders()) exponent = std::lcm(exponent, d);
    const SmithForm snf = smith_normal_form(rel, k, exponent);
    std::vector<std::size_t> kept;
    for (std::size_t t = 0; t < k; ++t) {
        if (snf.diagonal[t] == 0) throw Error(Errc::invalid_argument, "relation lattice is not of full rank");
        if (snf.diagonal[t] > 1) kept.push_back(t);
    }
    const std::size_t q = kept.size();
    std::vector<std::int64_t> orders(q);
    for (std::size_t a = 0; a < q; ++a) orders[a] = snf.diagonal[kept[a]];

    // Column a of V, reduced mod its invariant factor, gives quotient coordinate a.
    std::vector<std::vector<std::int64_t>> vcol(q, std::vector<std::int64_t>(k));
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t t = 0; t < k; ++t) vcol[a][t] = reduce(snf.v[t][kept[a]], orders[a]);
    auto project = [&](Index x) {
        const auto c = r.coords(x);
        std::vector<std::int64_t> out(q, 0);
        for (std::size_t a = 0; a < q; ++a) {
            std::int64_t acc = 0;
            for (std::size_t t = 0; t < k; ++t) acc = (acc + c[t] * vcol[a][t]) % orders[a];
            out[a] = acc;
        }
        return out;
    };
    std::vector<Index> lifts(q);
    for (std::size_t a = 0; a < q; ++a) {
        std::vector<std::int64_t> c(k);
        for (std::size_t t = 0; t < k; ++t) c[t] = reduce(snf.v_inverse[kept[a]][t], r.orders()[t]);
        lifts[a] = r.encode(c);
    }
    auto st = empty_structure(q);
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = 0; b < q; ++b) st[a][b] = project(r.mul(lifts[a], lifts[b]));
    FiniteRing quotient = FiniteRing::from_structure(orders, std::move(st), project(r.one_index()));

    std::vector<Element> images;
    for (std::size_t t = 0; t < k; ++t) images.push_back(quotient.element(project(r.index_of(r.generator(t)))));
    RingHom map = make_hom(r, quotient, std::move(images));
    if (!(kernel(map) == i)) throw Error(Errc::invalid_argument, "quotient map kernel differs from the ideal");
    return Quotient{quotient, std::move(map)};
}

Subring subring_generated(const FiniteRing& r, std::span<const Index> gens) {
    detail::SubgroupBuilder builder(r);
    builder.adjoin(r.one_index());
    for (Index g : gens) builder.adjoin(g);
    for (std::size_t a = 0; a < builder.generators().size(); ++a)
        for (std::size_t b = 0; b <= a; ++b) {
            const Index ga = builder.generators()[a];
            const Index gb = builder.generators()[b];
            builder.adjoin(r.mul(ga, gb));
        }
    const detail::SubgroupPresentation pres = detail::present_subgroup(r, builder.generators());
    const std::size_t q = pres.basis.size();
    auto st = empty_structure(q);
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = 0; b < q; ++b) st[a][b] = pres.coords_of[r.mul(pres.basis[a], pres.basis[b])];
    FiniteRing sub = FiniteRing::from_structure(pres.orders, std::move(st), pres.coords_of[r.one_index()]);
    std::vector<Element> images;
    for (Index h : pres.basis) images.push_back(r.at(h));
    RingHom embedding = make_hom(sub, r, std::move(images));
    return Subring{sub, std::move(embedding)};
}

Subring subring_generated(const FiniteRing& r, std::span<const Element> gens) {
    std::vector<Index> idx;
    for (const auto& g : gens) idx.push_back(r.index_of(g));
    return subring_generated(r, std::span<const Index>(idx));
}

namespace {

// Bilinear product straight from the structure constants; independent of the
// cached tables so that unchecked rings are judged on their raw data.
std::vector<std::int64_t> raw_product(const FiniteRing& r, const std::vector<std::int64_t>& x,
                                      const std::vector<std::int64_t>& y) {
    const std::size_t k = r.rank();
    std::vector<std::int64_t> out(k, 0);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (x[i] == 0 || y[j] == 0) continue;
            for (std::size_t l = 0; l < k; ++l)
                out[l] = reduce(out[l] + x[i] * y[j] % r.orders()[l] * r.structure()[i][j][l], r.orders()[l]);
        }
    return out;
}

std::vector<std::int64_t> unit_vector(std::size_t k, std::size_t i) {
    std::vector<std::int64_t> v(k, 0);
    v[i] = 1;
    return v;
}

}  // namespace

AxiomReport validate_axioms(const FiniteRing& r, bool exhaustive, const Limits& limits) {
    AxiomReport report;
    const std::size_t k = r.rank();
    const auto& d = r.orders();
    const auto& st = r.structure();
    auto pos = [](std::size_t i) { return std::to_string(i + 1); };

    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t l = 0; l < k; ++l) {
                if (reduce(d[i] * st[i][j][l], d[l]) != 0 || reduce(d[j] * st[i][j][l], d[l]) != 0) {
                    report.violations.push_back("order at (" + pos(i) + "," + pos(j) + ")");
                    break;
                }
            }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (st[i][j] != st[j][i]) report.violations.push_back("commutativity at (" + pos(i) + "," + pos(j) + ")");
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t l = 0; l < k; ++l) {
                const auto left = raw_product(r, st[i][j], unit_vector(k, l));
                const auto right = raw_product(r, unit_vector(k, i), st[j][l]);
                if (left != right)
                    report.violations.push_back("associativity at (" + pos(i) + "," + pos(j) + "," + pos(l) + ")");
            }
    const auto one = r.one().coords;
    for (std::size_t i = 0; i < k; ++i)
        if (raw_product(r, one, unit_vector(k, i)) != unit_vector(k, i) ||
            raw_product(r, unit_vector(k, i), one) != unit_vector(k, i))
            report.violations.push_back("unit law at generator " + pos(i));

    const bool full = r.size() <= limits.audit_order || (exhaustive && r.size() <= limits.ternary_order);
    if (full && report.ok()) {
        const std::size_t n = r.size();
        std::vector<std::vector<std::int64_t>> el(n);
        for (Index x = 0; x < n; ++x) el[x] = r.coords(x);
        std::vector<std::vector<std::int64_t>> prod(n * n);
        for (Index x = 0; x < n; ++x)
            for (Index y = 0; y < n; ++y) prod[x * n + y] = raw_product(r, el[x], el[y]);
        for (Index x = 0; x < n && report.ok(); ++x) {
            if (prod[x * n + r.one_index()] != el[x]) report.violations.push_back("unit law at " + to_string(r.at(x)));
            for (Index y = 0; y < n && report.ok(); ++y) {
                if (prod[x * n + y] != prod[y * n + x])
                    report.violations.push_back("commutativity at " + to_string(r.at(x)) + "," + to_string(r.at(y)));
                const Index xy = r.encode(prod[x * n + y]);
                for (Index z = 0; z < n; ++z) {
                    const Index yz = r.encode(prod[y * n + z]);
                    if (prod[xy * n + z] != prod[x * n + yz]) {
                        report.violations.push_back("associativity at " + to_string(r.at(x)) + "," +
                                                    to_string(r.at(y)) + "," + to_string(r.at(z)));
                        break;
                    }
                }
            }
        }
    }
    return report;
}

}  // namespace biamalg
