#pragma once
// Numerical invariants of the quotient surface.  From the covering data
// (g(C), |G|, |O_2|) these are exact integer formulas; the branch locus is
// read off the conjugacy classes of the outer involutions; and the Hodge
// index theorem bounds how many disjoint (-1)-curves the surface can
// possibly contain, which is what the minimality annotations rest on.

#include <mixedsurf/extension.hpp>
#include <mixedsurf/genvec.hpp>
#include <mixedsurf/smith.hpp>
#include <mixedsurf/typeenum.hpp>

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace mixedsurf {

namespace detail {

inline long long exact_div(long long num, long long den, const char* what) {
    if (den == 0 || num % den != 0) throw error(what);
    return num / den;
}

}  // namespace detail

// Topological Euler number e(X) = 2(g-1)/|G| * (2(g-1) - |O_2|).
inline long long euler_number(long long g, long long order_g, long long n_o2) {
    return detail::exact_div(2 * (g - 1) * (2 * (g - 1) - n_o2), order_g,
                             "inconsistent inputs");
}

// Self-intersection of the canonical class,
// K^2 = 2(g-1)/|G| * (4(g-1) - 5|O_2|).
inline long long canonical_square(long long g, long long order_g,
                                  long long n_o2) {
    return detail::exact_div(2 * (g - 1) * (4 * (g - 1) - 5 * n_o2), order_g,
                             "inconsistent inputs");
}

// Holomorphic Euler characteristic chi(O_X) = (g-1)(g-1-|O_2|)/|G|.
inline long long holomorphic_chi(long long g, long long order_g,
                                 long long n_o2) {
    return detail::exact_div((g - 1) * (g - 1 - n_o2), order_g,
                             "inconsistent inputs");
}

// One irreducible branch curve: the image of the fixed-point curve of a
// conjugacy class of outer involutions.  Its self-intersection is always
// -4(genus - 1).
struct BranchCurve {
    long long genus = 0;
    long long self_intersection = 0;
    long long class_size = 0;

    friend auto operator<=>(const BranchCurve&, const BranchCurve&) = default;
};

// The full branch locus of C x C -> X, one curve per conjugacy class of
// outer involutions, sorted.
struct BranchDescriptor {
    std::vector<BranchCurve> curves;

    // delta(B) = sum of (genus - 1) = 8 chi - K^2.
    long long delta() const {
        long long d = 0;
        for (const auto& c : curves) d += c.genus - 1;
        return d;
    }

    friend bool operator==(const BranchDescriptor&,
                           const BranchDescriptor&) = default;
};

// Branch locus of the quotient by the doubled group: `mixed` is the doubled
// multiplication table, `n` the subgroup order, `o2` the subgroup parts of
// the outer involutions, and `g` the genus of the covering curve.  Each
// class of size N contributes a curve of genus 2(g-1)/|Z| + 1 and
// self-intersection -8 N (g-1)/|G|.  Non-exact divisions signal corrupted
// inputs, never a valid configuration.
inline BranchDescriptor branch_descriptor(const FiniteGroup& mixed, int n,
                                          const std::vector<int>& o2,
                                          long long g) {
    BranchDescriptor out;
    const long long order = mixed.order();
    std::vector<char> seen(mixed.conjugacy_classes().size(), 0);
    long long covered = 0;
    for (int a : o2) {
        const int cls = mixed.class_of(n + a);
        if (seen[cls]) continue;
        seen[cls] = 1;
        const long long size = mixed.class_size(n + a);
        const long long zc = mixed.centralizer_order(n + a);
        BranchCurve c;
        c.genus =
            detail::exact_div(2 * (g - 1), zc, "inconsistent branch data") + 1;
        c.self_intersection = -detail::exact_div(8 * size * (g - 1), order,
                                                 "inconsistent branch data");
        c.class_size = size;
        covered += size;
        out.curves.push_back(c);
    }
    if (covered != static_cast<long long>(o2.size()))
        throw error("inconsistent branch data");
    std::sort(out.curves.begin(), out.curves.end());
    return out;
}

// Freeness of the diagonal-type action: the subgroup elements with fixed
// points on the curve must meet their images under phi only in the
// identity.  This is exactly smoothness of the quotient surface.
inline bool is_semi_isogenous(const FiniteGroup& g0, int q,
                              const std::vector<int>& v,
                              const MixedExtension& ext) {
    const auto mask = sigma_mask(g0, q, v);
    for (int x = 1; x < g0.order(); ++x)
        if (mask[x] && mask[ext.phi[x]]) return false;
    return true;
}

// Filters applied after the outer involutions and the branch locus are
// known: the involution count must match the one the type forces, every
// period must fit under every class size, divide the involution count and
// respect the centralizer bound, and the branch degree must equal
// 8 chi - K^2.
inline bool post_filters(const CoveringType& type,
                         const std::vector<int>& o2,
                         const BranchDescriptor& branch) {
    const long long n_o2 = static_cast<long long>(o2.size());
    if (n_o2 != type.n_o2) return false;
    if (n_o2 > 0) {
        for (long long m : type.periods) {
            if (n_o2 % m != 0) return false;
            if (m * n_o2 > type.order_g0) return false;
            for (const auto& c : branch.curves)
                if (m > c.class_size) return false;
        }
    }
    long long chi = 0, k2 = 0;
    try {
        chi = holomorphic_chi(type.g, type.order_g, n_o2);
        k2 = canonical_square(type.g, type.order_g, n_o2);
    } catch (const error&) {
        return false;
    }
    return branch.delta() == 8 * chi - k2;
}

// One classified family: a row of the output tables.
struct SurfaceFamily {
    long long k2 = 0;
    long long pg = 0;
    long long q = 0;
    long long chi = 0;
    long long e = 0;
    long long g = 0;
    CoveringType type;
    std::string g0_label;
    std::string g_label;
    std::vector<int> vector;
    MixedExtension extension;
    BranchDescriptor branch;
    AbelianStructure h1;
    std::optional<long long> g_alb;
    long long minus_one_bound = 0;
};

// Report of the identities every family must satisfy.  An empty violation
// list means the family is internally consistent.
struct ConsistencyReport {
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
    explicit operator bool() const { return ok(); }
};

inline ConsistencyReport consistency_check(const SurfaceFamily& f) {
    ConsistencyReport rep;
    auto expect = [&](bool cond, const char* name) {
        if (!cond) rep.violations.push_back(name);
    };

    expect(f.chi == 1 - f.q + f.pg, "chi = 1 - q + pg");

    bool formulas = true;
    try {
        expect(f.e == euler_number(f.g, f.type.order_g, f.type.n_o2),
               "e matches the covering formula");
        expect(f.k2 == canonical_square(f.g, f.type.order_g, f.type.n_o2),
               "K^2 matches the covering formula");
        expect(f.chi == holomorphic_chi(f.g, f.type.order_g, f.type.n_o2),
               "chi matches the covering formula");
    } catch (const error&) {
        formulas = false;
    }
    expect(formulas, "covering formulas divide exactly");

    const long long delta = 8 * f.chi - f.k2;
    expect(f.branch.delta() == delta, "delta(B) = 8 chi - K^2");
    expect(f.k2 + f.e == 12 * f.chi, "K^2 + e = 12 chi");
    expect(f.k2 <= 9 * f.chi, "K^2 <= 9 chi");

    long long self_sum = 0, kb_sum = 0, class_sum = 0;
    bool shape = true;
    for (const auto& c : f.branch.curves) {
        self_sum += c.self_intersection;
        kb_sum += 2 * (c.genus - 1) - c.self_intersection;
        class_sum += c.class_size;
        shape = shape && c.genus >= 2 && c.self_intersection < 0 &&
                c.self_intersection % 2 == 0 &&
                c.self_intersection == -4 * (c.genus - 1);
    }
    expect(shape, "branch curves have genus >= 2 and B_i^2 = -4(g_i - 1)");
    expect(self_sum == -4 * delta, "B^2 = -4 delta");
    expect(kb_sum == 6 * delta, "K.B = 6 delta");
    expect(class_sum == f.type.n_o2, "class sizes sum to |O_2|");

    expect(f.h1.rank == 2 * f.q, "H_1 rank = 2q");
    return rep;
}

// det M_1: Gram determinant of (K, B, E) for one (-1)-curve E with
// E.B = n1, in the chi = 1 context where K.B = 6(8 - K^2) and
// B^2 = -4(8 - K^2).
inline long long hodge_det1(long long k2, long long n1) {
    const long long d = 8 - k2;
    return -k2 * n1 * n1 - 12 * d * n1 + 4 * d * (73 - 8 * k2);
}

// det M_2: Gram determinant of (K, B, E_1, E_2) for two disjoint
// (-1)-curves with E_i.B = n_i.
inline long long hodge_det2(long long k2, long long n1, long long n2) {
    const long long d = 8 - k2;
    return n2 * n2 * (1 + k2) + n2 * (12 * d - 2 * n1) +
           n1 * n1 * (1 + k2) + 12 * n1 * d + 8 * d * (4 * k2 - 37);
}

namespace detail {

// Exact integer determinant by fraction-free (Bareiss) elimination; the
// matrices here are at most 7x7.
inline long long gram_det(std::vector<std::vector<long long>> m) {
    const int n = static_cast<int>(m.size());
    long long prev = 1;
    int sign = 1;
    for (int i = 0; i < n - 1; ++i) {
        if (m[i][i] == 0) {
            int p = -1;
            for (int j = i + 1; j < n && p < 0; ++j)
                if (m[j][i] != 0) p = j;
            if (p < 0) return 0;
            std::swap(m[i], m[p]);
            sign = -sign;
        }
        for (int j = i + 1; j < n; ++j)
            for (int k = i + 1; k < n; ++k)
                m[j][k] = (m[j][k] * m[i][i] - m[j][i] * m[i][k]) / prev;
        prev = m[i][i];
    }
    return sign * m[n - 1][n - 1];
}

// Gram matrix of (K, B, E_1..E_k) with E_i.B = ns[i], K.E_i = -1,
// E_i^2 = -1 and the E_i pairwise disjoint, at chi = 1.
inline std::vector<std::vector<long long>> hodge_gram(
    long long k2, const std::vector<long long>& ns) {
    const long long d = 8 - k2;
    const int m = static_cast<int>(ns.size()) + 2;
    std::vector<std::vector<long long>> g(m, std::vector<long long>(m, 0));
    g[0][0] = k2;
    g[0][1] = g[1][0] = 6 * d;
    g[1][1] = -4 * d;
    for (int j = 0; j < m - 2; ++j) {
        g[0][2 + j] = g[2 + j][0] = -1;
        g[1][2 + j] = g[2 + j][1] = ns[j];
        g[2 + j][2 + j] = -1;
    }
    return g;
}

// Hodge sign condition at stage k: the span of (K, B, E_1..E_k) carries
// exactly one positive direction, so the Gram determinant must have sign
// (-1)^(k+1) or vanish.
inline bool hodge_stage_ok(long long k2, const std::vector<long long>& ns) {
    const long long det = gram_det(hodge_gram(k2, ns));
    return (ns.size() % 2 == 1) ? det >= 0 : det <= 0;
}

}  // namespace detail

// Largest admissible E.B for a single (-1)-curve: the biggest n >= 0 with
// det M_1 >= 0.  (det M_1 is nonnegative at n = 0 and opens downward.)
inline long long hodge_floor_x2(long long k2) {
    if (k2 < 1 || k2 > 8) throw error("out of range");
    long long n = 0;
    while (hodge_det1(k2, n + 1) >= 0) ++n;
    return n;
}

// Largest admissible E_2.B once E_1.B = n1 is fixed: the biggest n2 with
// det M_2 <= 0, if any admissible value exists at all.
inline std::optional<long long> hodge_floor_y2(long long k2, long long n1) {
    for (long long y = 200; y >= -200; --y)
        if (hodge_det2(k2, n1, y) <= 0) return y;
    return std::nullopt;
}

// Upper bound on the number of disjoint (-1)-curves, by staged Hodge-index
// elimination: every curve needs an even E.B >= 6, and each stage's Gram
// determinant must carry the right sign.  The bound is the deepest stage
// with an admissible tuple.
inline long long minus_one_curve_bound(long long k2) {
    const long long x2 = hodge_floor_x2(k2);
    if (x2 < 6) return 0;
    std::vector<long long> evens;
    for (long long n = 6; n <= x2; n += 2) evens.push_back(n);

    long long depth = 0;
    std::vector<std::vector<long long>> frontier{{}};
    while (!frontier.empty()) {
        std::vector<std::vector<long long>> next;
        for (const auto& t : frontier) {
            for (long long n : evens) {
                if (!t.empty() && n < t.back()) continue;
                std::vector<long long> grown = t;
                grown.push_back(n);
                if (detail::hodge_stage_ok(k2, grown))
                    next.push_back(std::move(grown));
            }
        }
        if (next.empty()) break;
        ++depth;
        frontier = std::move(next);
    }
    return depth;
}

}  // namespace mixedsurf
