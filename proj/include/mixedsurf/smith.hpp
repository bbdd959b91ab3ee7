#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "util.hpp"

namespace mixedsurf {

// Isomorphism type of a finitely generated abelian group:
// Z^rank + Z/t_1 + ... + Z/t_k with 1 < t_1 | t_2 | ... | t_k.
struct AbelianStructure {
    int rank = 0;
    std::vector<long long> torsion;

    friend bool operator==(const AbelianStructure&, const AbelianStructure&) = default;
    friend auto operator<=>(const AbelianStructure&, const AbelianStructure&) = default;
};

namespace detail {

struct int64_overflow {};

// Arithmetic wrappers: the checked int64 flavour throws int64_overflow so the
// caller can redo the computation with arbitrary precision.
inline long long snf_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw int64_overflow{};
    return r;
}
inline long long snf_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw int64_overflow{};
    return r;
}
inline long long snf_neg(long long a) {
    if (a == std::numeric_limits<long long>::min()) throw int64_overflow{};
    return -a;
}
inline boost::multiprecision::cpp_int snf_add(const boost::multiprecision::cpp_int& a,
                                              const boost::multiprecision::cpp_int& b) {
    return a + b;
}
inline boost::multiprecision::cpp_int snf_mul(const boost::multiprecision::cpp_int& a,
                                              const boost::multiprecision::cpp_int& b) {
    return a * b;
}
inline boost::multiprecision::cpp_int snf_neg(const boost::multiprecision::cpp_int& a) {
    return -a;
}

// Diagonal of the Smith normal form of an r x c matrix (padded with zeros to
// length min(r,c) conceptually; trailing zeros are trimmed by the caller).
template <typename I>
std::vector<I> smith_diagonal(std::vector<std::vector<I>> m, int cols) {
    int rows = static_cast<int>(m.size());
    std::vector<I> diag;
    int t = 0;
    auto entry_abs_less = [](const I& a, const I& b) {
        I x = a < 0 ? -a : a, y = b < 0 ? -b : b;
        return x < y;
    };
    while (t < rows && t < cols) {
        // pick the nonzero entry of smallest magnitude as pivot
        int pr = -1, pc = -1;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j)
                if (m[i][j] != 0 && (pr < 0 || entry_abs_less(m[i][j], m[pr][pc]))) {
                    pr = i;
                    pc = j;
                }
        if (pr < 0) break;  // all remaining entries are zero
        std::swap(m[t], m[pr]);
        for (int i = t; i < rows; ++i) std::swap(m[i][t], m[i][pc]);
        for (;;) {
            // clear column t by row operations; if a remainder pops up it
            // becomes the new (smaller) pivot, so this terminates
            bool again = false;
            for (int i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0) continue;
                I q = m[i][t] / m[t][t];
                if (q != 0)
                    for (int j = t; j < cols; ++j)
                        m[i][j] = snf_add(m[i][j], snf_neg(snf_mul(q, m[t][j])));
                if (m[i][t] != 0) {
                    std::swap(m[t], m[i]);
                    again = true;
                }
            }
            if (again) continue;
            for (int j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0) continue;
                I q = m[t][j] / m[t][t];
                if (q != 0)
                    for (int i = t; i < rows; ++i)
                        m[i][j] = snf_add(m[i][j], snf_neg(snf_mul(q, m[i][t])));
                if (m[t][j] != 0) {
                    for (int i = t; i < rows; ++i) std::swap(m[i][t], m[i][j]);
                    again = true;
                    break;
                }
            }
            if (!again) break;
        }
        if (m[t][t] < 0) m[t][t] = snf_neg(m[t][t]);
        diag.push_back(m[t][t]);
        ++t;
    }
    // enforce the divisibility chain d_1 | d_2 | ... by gcd/lcm swaps
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
            if (diag[i] == 0 || diag[i + 1] % diag[i] == 0) {
                if (diag[i] == 0 && diag[i + 1] != 0) {
                    std::swap(diag[i], diag[i + 1]);
                    changed = true;
                }
                continue;
            }
            I a = diag[i], b = diag[i + 1];
            I g = a;
            I h = b;
            while (h != 0) {
                I r = g % h;
                g = h;
                h = r;
            }
            diag[i] = g;
            diag[i + 1] = snf_mul(a / g, b);
            changed = true;
        }
    }
    return diag;
}

template <typename I>
AbelianStructure cokernel_impl(const std::vector<std::vector<long long>>& rows, int cols) {
    std::vector<std::vector<I>> m;
    m.reserve(rows.size());
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols) throw error("bad relation matrix");
        m.emplace_back(r.begin(), r.end());
    }
    std::vector<I> diag = smith_diagonal<I>(std::move(m), cols);
    AbelianStructure out;
    int nonzero = 0;
    for (const I& d : diag)
        if (d != 0) ++nonzero;
    out.rank = cols - nonzero;
    for (const I& d : diag)
        if (d > 1) {
            if (d > I(std::numeric_limits<long long>::max())) throw error("overflow");
            out.torsion.push_back(static_cast<long long>(d));
        }
    std::sort(out.torsion.begin(), out.torsion.end());
    return out;
}

}  // namespace detail

// Cokernel Z^cols / <rows>: the abelian group presented by the given integer
// relation matrix.  Runs in checked 64-bit arithmetic and falls back to
// arbitrary precision when intermediate values overflow.
inline AbelianStructure cokernel(const std::vector<std::vector<long long>>& rows, int cols) {
    if (cols < 0) throw error("bad relation matrix");
    try {
        return detail::cokernel_impl<long long>(rows, cols);
    } catch (const detail::int64_overflow&) {
        return detail::cokernel_impl<boost::multiprecision::cpp_int>(rows, cols);
    }
}

}  // namespace mixedsurf
