#include "biamalg/isocheck.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "biamalg/classify.hpp"
#include "biamalg/error.hpp"
#include "biamalg/ideal.hpp"

namespace biamalg {

namespace {

struct Signature {
    std::int64_t additive_order = 0;
    char unit = 0;
    char nilpotent = 0;
    char idempotent = 0;
    std::uint32_t unit_order = 0;
    std::uint32_t nil_index = 0;
    std::uint32_t annihilator = 0;

    friend bool operator==(const Signature&, const Signature&) = default;
};

std::uint32_t annihilator_size(const FiniteRing& r, Index x) {
    detail::SubgroupBuilder span(r);
    for (std::size_t i = 0; i < r.rank(); ++i) span.adjoin(r.mul(x, r.index_of(r.generator(i))));
    return static_cast<std::uint32_t>(r.size() / span.elements().size());
}

std::vector<Signature> signatures(const FiniteRing& r) {
    const ElementTable t = element_table(r);
    std::vector<Signature> out(r.size());
    for (Index x = 0; x < r.size(); ++x) {
        Signature& s = out[x];
        s.additive_order = r.additive_order(x);
        s.unit = t.unit[x];
        s.nilpotent = t.nilpotent[x];
        s.idempotent = t.idempotent[x];
        s.unit_order = t.unit_order[x];
        if (s.nilpotent) {
            Index v = x;
            std::uint32_t n = 1;
            while (v != 0) {
                v = r.mul(v, x);
                ++n;
            }
            s.nil_index = n;
        }
        s.annihilator = annihilator_size(r, x);
    }
    return out;
}

int support_level(const std::vector<std::int64_t>& c) {
    for (int l = static_cast<int>(c.size()) - 1; l >= 0; --l)
        if (c[static_cast<std::size_t>(l)] != 0) return l;
    return -1;
}

struct PairCheck {
    std::size_t i, j;
    std::vector<std::int64_t> product;
};

/// Shared backtracking over generator images, for isomorphism search and
/// homomorphism enumeration.
class GeneratorSearch {
public:
    GeneratorSearch(const FiniteRing& r, const FiniteRing& s, bool injective, std::uint64_t budget)
        : r_(r), s_(s), injective_(injective), budget_(budget), k_(r.rank()), checks_(k_), one_at_(-1) {
        for (std::size_t i = 0; i < k_; ++i)
            for (std::size_t j = i; j < k_; ++j) {
                const auto& p = r.structure()[i][j];
                const std::size_t lvl = std::max<std::size_t>(j, static_cast<std::size_t>(std::max(0, support_level(p))));
                checks_[lvl].push_back(PairCheck{i, j, p});
            }
        one_at_ = support_level(r.one().coords);
        img_.assign(k_, 0);
    }

    void set_candidates(std::vector<std::vector<Index>> c) { candidates_ = std::move(c); }

    /// Runs the search; `on_solution` returns false to stop.
    template <typename F>
    void run(F&& on_solution) {
        hit_.assign(s_.size(), 0);
        hit_[0] = 1;
        span_.assign(1, {Index{0}});
        stop_ = false;
        dfs(0, on_solution);
    }

    std::uint64_t nodes() const { return nodes_; }
    bool exhausted() const { return exhausted_; }
    const std::vector<Index>& images() const { return img_; }

private:
    Index image_of(const std::vector<std::int64_t>& c) const {
        Index y = 0;
        for (std::size_t l = 0; l < c.size(); ++l)
            if (c[l] != 0) y = s_.add(y, s_.scale(img_[l], c[l]));
        return y;
    }

    bool level_ok(std::size_t t) const {
        if (one_at_ == static_cast<int>(t) && image_of(r_.one().coords) != s_.one_index()) return false;
        for (const auto& pc : checks_[t])
            if (image_of(pc.product) != s_.mul(img_[pc.i], img_[pc.j])) return false;
        return true;
    }

    // Extends the image subgroup by the new generator; false on a collision.
    bool grow_span(std::size_t t) {
        const auto& base = span_.back();
        std::vector<Index> next = base;
        Index step = img_[t];
        for (std::int64_t c = 1; c < r_.orders()[t]; ++c, step = s_.add(step, img_[t]))
            for (Index h : base) {
                const Index x = s_.add(h, step);
                if (hit_[x]) {
                    for (std::size_t p = base.size(); p < next.size(); ++p) hit_[next[p]] = 0;
                    return false;
                }
                hit_[x] = 1;
                next.push_back(x);
            }
        span_.push_back(std::move(next));
        return true;
    }

    void shrink_span() {
        const auto& top = span_.back();
        for (std::size_t p = span_[span_.size() - 2].size(); p < top.size(); ++p) hit_[top[p]] = 0;
        span_.pop_back();
    }

    template <typename F>
    void dfs(std::size_t t, F& on_solution) {
        if (t == k_) {
            if (!on_solution(img_)) stop_ = true;
            return;
        }
        for (Index y : candidates_[t]) {
            if (stop_) return;
            if (++nodes_ > budget_) {
                exhausted_ = true;
                stop_ = true;
                return;
            }
            img_[t] = y;
            if (!level_ok(t)) continue;
            if (injective_) {
                if (!grow_span(t)) continue;
                dfs(t + 1, on_solution);
                shrink_span();
            } else {
                dfs(t + 1, on_solution);
            }
        }
    }

    const FiniteRing& r_;
    const FiniteRing& s_;
    bool injective_;
    std::uint64_t budget_;
    std::size_t k_;
    std::vector<std::vector<PairCheck>> checks_;
    int one_at_;
    std::vector<std::vector<Index>> candidates_;
    std::vector<Index> img_;
    std::vector<char> hit_;
    std::vector<std::vector<Index>> span_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
    bool stop_ = false;
};

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<Element> to_elements(const FiniteRing& s, const std::vector<Index>& img) {
    std::vector<Element> out;
    out.reserve(img.size());
    for (Index y : img) out.push_back(s.at(y));
    return out;
}

}  // namespace

std::vector<std::int64_t> invariant_factors(const std::vector<std::int64_t>& orders) {
    std::map<std::int64_t, std::vector<std::int64_t>> by_prime;
    for (std::int64_t d : orders)
        for (auto [p, e] : factorize(d)) {
            std::int64_t q = 1;
            for (int t = 0; t < e; ++t) q *= p;
            by_prime[p].push_back(q);
        }
    std::size_t len = 0;
    for (auto& [p, powers] : by_prime) {
        std::sort(powers.begin(), powers.end(), std::greater<>());
        len = std::max(len, powers.size());
    }
    if (len == 0) return {1};
    std::vector<std::int64_t> out(len, 1);
    for (const auto& [p, powers] : by_prime)
        for (std::size_t t = 0; t < powers.size(); ++t) out[len - 1 - t] *= powers[t];
    return out;
}

Fingerprint fingerprint(const FiniteRing& r) {
    Fingerprint f;
    f.cardinality = r.size();
    f.characteristic = r.additive_order(r.one_index());
    f.invariant_factors = invariant_factors(r.orders());
    const ElementTable t = element_table(r);
    for (Index x = 0; x < r.size(); ++x) {
        if (t.unit[x]) {
            ++f.unit_count;
            f.unit_orders.push_back(t.unit_order[x]);
        }
        if (t.idempotent[x]) ++f.idempotent_count;
        if (t.nilpotent[x]) ++f.nilpotent_count;
        f.annihilator_sizes.push_back(annihilator_size(r, x));
    }
    std::sort(f.unit_orders.begin(), f.unit_orders.end());
    std::sort(f.annihilator_sizes.begin(), f.annihilator_sizes.end());
    return f;
}

std::string to_string(const Fingerprint& f) {
    std::ostringstream os;
    os << "(|R|=" << f.cardinality << ", char=" << f.characteristic << ", [";
    for (std::size_t i = 0; i < f.invariant_factors.size(); ++i) os << (i ? "," : "") << f.invariant_factors[i];
    os << "], units=" << f.unit_count << ", idempotents=" << f.idempotent_count
       << ", nilpotents=" << f.nilpotent_count << ")";
    return os.str();
}

std::string to_string(IsoOutcome o) {
    switch (o) {
        case IsoOutcome::isomorphic: return "isomorphic";
        case IsoOutcome::not_isomorphic: return "not isomorphic";
        case IsoOutcome::unknown: return "unknown";
    }
    return "unknown";
}

namespace {

std::string differences(const Fingerprint& a, const Fingerprint& b) {
    std::vector<std::string> out;
    auto count = [&](const char* what, std::size_t x, std::size_t y) {
        if (x != y) out.push_back(std::string(what) + " differ (" + std::to_string(x) + " vs " + std::to_string(y) + ")");
    };
    count("cardinalities", a.cardinality, b.cardinality);
    if (a.characteristic != b.characteristic)
        out.push_back("characteristics differ (" + std::to_string(a.characteristic) + " vs " +
                      std::to_string(b.characteristic) + ")");
    if (a.invariant_factors != b.invariant_factors) out.push_back("additive invariant factors differ");
    count("unit counts", a.unit_count, b.unit_count);
    count("idempotent counts", a.idempotent_count, b.idempotent_count);
    count("nilpotent counts", a.nilpotent_count, b.nilpotent_count);
    if (a.unit_orders != b.unit_orders) out.push_back("unit order multisets differ");
    if (a.annihilator_sizes != b.annihilator_sizes) out.push_back("annihilator size multisets differ");
    std::string joined;
    for (const auto& d : out) joined += (joined.empty() ? "" : "; ") + d;
    return "fingerprints differ: " + joined;
}

}  // namespace

IsoResult find_isomorphism(const FiniteRing& r, const FiniteRing& s, std::uint64_t budget) {
    IsoResult out;
    const Fingerprint fr = fingerprint(r), fs = fingerprint(s);
    if (!(fr == fs)) {
        out.outcome = IsoOutcome::not_isomorphic;
        out.reason = differences(fr, fs);
        return out;
    }
    const auto sig_r = signatures(r), sig_s = signatures(s);
    std::vector<std::vector<Index>> cand(r.rank());
    for (std::size_t i = 0; i < r.rank(); ++i) {
        const Signature& want = sig_r[r.index_of(r.generator(i))];
        for (Index y = 0; y < s.size(); ++y)
            if (sig_s[y] == want) cand[i].push_back(y);
    }
    GeneratorSearch search(r, s, true, budget);
    search.set_candidates(std::move(cand));
    std::optional<std::vector<Index>> found;
    search.run([&](const std::vector<Index>& img) {
        found = img;
        return false;
    });
    out.nodes = search.nodes();
    if (found) {
        const HomCheck check = r.size() <= default_limits().audit_order ? HomCheck::audit : HomCheck::generators;
        RingHom f = make_hom(r, s, to_elements(s, *found), check);
        if (!f.is_injective() || !f.is_surjective())
            throw Error(Errc::invalid_argument, "isomorphism search produced a non-bijective map", to_string(f));
        out.outcome = IsoOutcome::isomorphic;
        out.witness = std::move(f);
        out.reason = "witness found";
    } else if (search.exhausted()) {
        out.outcome = IsoOutcome::unknown;
        out.reason = "search budget of " + std::to_string(budget) + " nodes exhausted";
    } else {
        out.outcome = IsoOutcome::not_isomorphic;
        out.reason = "exhaustive search found no isomorphism";
    }
    return out;
}

bool isomorphic(const FiniteRing& r, const FiniteRing& s) {
    const IsoResult res = find_isomorphism(r, s);
    if (res.outcome == IsoOutcome::unknown) throw Error(Errc::budget_exceeded, res.reason);
    return res.outcome == IsoOutcome::isomorphic;
}

HomEnumeration enumerate_homs(const FiniteRing& r, const FiniteRing& s, std::uint64_t budget) {
    HomEnumeration out;
    std::vector<std::vector<Index>> cand(r.rank());
    for (std::size_t i = 0; i < r.rank(); ++i)
        for (Index y = 0; y < s.size(); ++y)
            if (s.scale(y, r.orders()[i]) == 0) cand[i].push_back(y);
    GeneratorSearch search(r, s, false, budget);
    search.set_candidates(std::move(cand));
    std::vector<std::vector<Index>> found;
    if (r.rank() == 0) {
        if (s.is_zero_ring()) found.emplace_back();
    } else {
        search.run([&](const std::vector<Index>& img) {
            found.push_back(img);
            return true;
        });
    }
    for (const auto& img : found) out.homs.push_back(make_hom(r, s, to_elements(s, img), HomCheck::generators));
    out.nodes = search.nodes();
    out.complete = !search.exhausted();
    return out;
}

}  // namespace biamalg
