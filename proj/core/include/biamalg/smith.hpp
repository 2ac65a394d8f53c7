#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace biamalg {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Smith normal form U * M * V = D over the integers.
///
/// U (rows x rows) and V (cols x cols) are unimodular; `v_inverse` is V^-1,
/// tracked alongside V so callers can lift quotient generators. `diagonal`
/// holds the min(rows, cols) diagonal entries of D, nonnegative, each dividing
/// the next among the nonzero ones. Entries past `rank` are zero.
struct SmithForm {
    IntMatrix u;
    IntMatrix v;
    IntMatrix v_inverse;
    std::vector<std::int64_t> diagonal;
    std::size_t rank = 0;
};

/// `cols` is needed when `m` has no rows. Throws Error(Errc::overflow) if an
/// intermediate entry leaves the int64 range.
///
/// With a positive `modulus` N the caller promises N * Z^cols lies in the row
/// lattice. U is then not tracked (left empty) and V, V^-1 are kept reduced
/// into [0, N), which is all a quotient map onto the factors needs and keeps
/// the entries small. V * V^-1 = I then holds modulo N.
SmithForm smith_normal_form(const IntMatrix& m, std::size_t cols, std::int64_t modulus = 0);

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

}  // namespace biamalg
