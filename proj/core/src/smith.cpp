#include "biamalg/smith.hpp"

#include <algorithm>
#include <cstdlib>
#include <tuple>
#include <utility>

#include "biamalg/error.hpp"

namespace biamalg {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::overflow, "overflow in Smith normal form");
    return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_sub_overflow(a, b, &r)) throw Error(Errc::overflow, "overflow in Smith normal form");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::overflow, "overflow in Smith normal form");
    return r;
}

IntMatrix identity(std::size_t n) {
    IntMatrix m(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

class Reducer {
public:
    Reducer(const IntMatrix& m, std::size_t cols, std::int64_t modulus)
        : a_(m), rows_(m.size()), cols_(cols), modulus_(modulus), u_(modulus > 0 ? IntMatrix{} : identity(rows_)),
          v_(identity(cols_)), vinv_(identity(cols_)) {}

    SmithForm run() {
        const std::size_t n = std::min(rows_, cols_);
        std::size_t t = 0;
        for (; t < n; ++t) {
            if (!move_min_to(t, t, rows_, cols_)) break;
            for (;;) {
                for (std::size_t i = t + 1; i < rows_; ++i)
                    if (a_[i][t] != 0) combine_rows(t, i);
                bool clean = true;
                for (std::size_t j = t + 1; j < cols_; ++j)
                    if (a_[t][j] != 0) combine_cols(t, j);
                for (std::size_t i = t + 1; i < rows_; ++i)
                    if (a_[i][t] != 0) clean = false;
                if (!clean) continue;
                // Pivot must divide the remaining block.
                bool divides = true;
                for (std::size_t i = t + 1; i < rows_ && divides; ++i) {
                    for (std::size_t j = t + 1; j < cols_; ++j) {
                        if (a_[i][j] % a_[t][t] != 0) {
                            add_row(t, i, 1);
                            divides = false;
                            break;
                        }
                    }
                }
                if (divides) break;
            }
            if (a_[t][t] < 0) negate_row(t);
        }
        SmithForm out;
        out.rank = t;
        out.diagonal.resize(n, 0);
        for (std::size_t i = 0; i < n; ++i) out.diagonal[i] = a_[i][i];
        out.u = std::move(u_);
        out.v = std::move(v_);
        out.v_inverse = std::move(vinv_);
        return out;
    }

private:
    static std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
        std::int64_t x0 = 1, y0 = 0, x1 = 0, y1 = 1;
        while (b != 0) {
            const std::int64_t q = a / b;
            std::tie(a, b) = std::make_pair(b, a - q * b);
            std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
            std::tie(y0, y1) = std::make_pair(y1, y0 - q * y1);
        }
        if (a < 0) {
            a = -a;
            x0 = -x0;
            y0 = -y0;
        }
        x = x0;
        y = y0;
        return a;
    }

    // Clears a[i][t] against the pivot with a determinant-one 2x2 row operation.
    void combine_rows(std::size_t t, std::size_t i) {
        const std::int64_t a = a_[t][t], b = a_[i][t];
        if (b % a == 0) {
            add_row(i, t, -(b / a));
            return;
        }
        std::int64_t x = 0, y = 0;
        const std::int64_t g = ext_gcd(a, b, x, y);
        const std::int64_t p = -(b / g), q = a / g;
        mix(a_, t, i, x, y, p, q);
        if (tracking_u()) mix(u_, t, i, x, y, p, q);
    }

    // Clears a[t][j] with a determinant-one 2x2 column operation.
    void combine_cols(std::size_t t, std::size_t j) {
        const std::int64_t a = a_[t][t], b = a_[t][j];
        if (b % a == 0) {
            add_col(j, t, -(b / a));
            return;
        }
        std::int64_t x = 0, y = 0;
        const std::int64_t g = ext_gcd(a, b, x, y);
        const std::int64_t ag = a / g, bg = b / g;
        // Columns (t, j) <- (x*c_t + y*c_j, -bg*c_t + ag*c_j); rows of V^-1 take the inverse.
        mix_cols(a_, t, j, x, y, -bg, ag);
        mix_cols(v_, t, j, x, y, -bg, ag);
        mix(vinv_, t, j, ag, bg, -y, x);
        reduce_column(t);
        reduce_column(j);
    }

    // rows (r, s) <- (x*r + y*s, p*r + q*s)
    static void mix(IntMatrix& m, std::size_t r, std::size_t s, std::int64_t x, std::int64_t y, std::int64_t p,
                    std::int64_t q) {
        for (std::size_t k = 0; k < m[r].size(); ++k) {
            const std::int64_t u = m[r][k], w = m[s][k];
            m[r][k] = checked_add(checked_mul(x, u), checked_mul(y, w));
            m[s][k] = checked_add(checked_mul(p, u), checked_mul(q, w));
        }
    }

    static void mix_cols(IntMatrix& m, std::size_t c, std::size_t d, std::int64_t x, std::int64_t y,
                         std::int64_t p, std::int64_t q) {
        for (auto& row : m) {
            const std::int64_t u = row[c], w = row[d];
            row[c] = checked_add(checked_mul(x, u), checked_mul(y, w));
            row[d] = checked_add(checked_mul(p, u), checked_mul(q, w));
        }
    }

    // row_dst += k * row_src
    void add_row(std::size_t dst, std::size_t src, std::int64_t k) {
        for (std::size_t j = 0; j < cols_; ++j) a_[dst][j] = checked_add(a_[dst][j], checked_mul(k, a_[src][j]));
        if (!tracking_u()) return;
        for (std::size_t j = 0; j < rows_; ++j) u_[dst][j] = checked_add(u_[dst][j], checked_mul(k, u_[src][j]));
    }

    bool tracking_u() const { return modulus_ <= 0; }

    std::int64_t reduce(std::int64_t x) const {
        if (modulus_ <= 0) return x;
        x %= modulus_;
        return x < 0 ? x + modulus_ : x;
    }

    // Keeps column c of V and row c of V^-1 in [0, N) in modular mode.
    void reduce_column(std::size_t c) {
        if (modulus_ <= 0) return;
        for (auto& row : v_) row[c] = reduce(row[c]);
        for (auto& x : vinv_[c]) x = reduce(x);
    }

    // col_dst += k * col_src; V^-1 picks up row_src -= k * row_dst.
    void add_col(std::size_t dst, std::size_t src, std::int64_t k) {
        for (std::size_t i = 0; i < rows_; ++i) a_[i][dst] = checked_add(a_[i][dst], checked_mul(k, a_[i][src]));
        for (std::size_t i = 0; i < cols_; ++i) v_[i][dst] = checked_add(v_[i][dst], checked_mul(k, v_[i][src]));
        for (std::size_t j = 0; j < cols_; ++j)
            vinv_[src][j] = checked_sub(vinv_[src][j], checked_mul(k, vinv_[dst][j]));
        reduce_column(dst);
        reduce_column(src);
    }

    void swap_rows(std::size_t i, std::size_t k) {
        if (i == k) return;
        std::swap(a_[i], a_[k]);
        if (tracking_u()) std::swap(u_[i], u_[k]);
    }

    void swap_cols(std::size_t j, std::size_t k) {
        if (j == k) return;
        for (auto& row : a_) std::swap(row[j], row[k]);
        for (auto& row : v_) std::swap(row[j], row[k]);
        std::swap(vinv_[j], vinv_[k]);
    }

    void negate_row(std::size_t i) {
        for (auto& x : a_[i]) x = -x;
        if (tracking_u())
            for (auto& x : u_[i]) x = -x;
    }

    bool move_min_to(std::size_t r0, std::size_t c0, std::size_t r1, std::size_t c1) {
        std::size_t bi = 0, bj = 0;
        std::int64_t best = 0;
        for (std::size_t i = r0; i < r1; ++i)
            for (std::size_t j = c0; j < c1; ++j) {
                const std::int64_t v = std::llabs(a_[i][j]);
                if (v != 0 && (best == 0 || v < best)) {
                    best = v;
                    bi = i;
                    bj = j;
                }
            }
        if (best == 0) return false;
        swap_rows(r0, bi);
        swap_cols(c0, bj);
        return true;
    }

    IntMatrix a_;
    std::size_t rows_;
    std::size_t cols_;
    std::int64_t modulus_;
    IntMatrix u_;
    IntMatrix v_;
    IntMatrix vinv_;
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m, std::size_t cols, std::int64_t modulus) {
    for (const auto& row : m)
        if (row.size() != cols) throw Error(Errc::invalid_argument, "ragged matrix passed to smith_normal_form");
    return Reducer(m, cols, modulus).run();
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    if (a.empty()) return {};
    const std::size_t inner = b.size();
    const std::size_t cols = b.empty() ? 0 : b.front().size();
    IntMatrix out(a.size(), std::vector<std::int64_t>(cols, 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < inner; ++k)
            for (std::size_t j = 0; j < cols; ++j)
                out[i][j] = checked_add(out[i][j], checked_mul(a[i][k], b[k][j]));
    return out;
}

}  // namespace biamalg
