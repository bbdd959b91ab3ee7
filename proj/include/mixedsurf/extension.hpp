#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "group.hpp"

namespace mixedsurf {

// Degree-two extension data over an index-two subgroup G0.  A pair
// (phi, tau) with phi an automorphism of G0, phi(tau) = tau and
// phi^2 = conjugation by tau describes the group G = G0 + G0*t generated by
// G0 and one further element t with t^2 = tau and t x t^-1 = phi(x).  Such
// a G acts on a product of two copies of a curve by exchanging the factors
// along the G0-action twisted by phi, which is the symmetry every surface
// in this classification quotients by.
struct MixedExtension {
    std::vector<int> phi;  // automorphism of G0, as an element map
    int tau = 0;

    friend bool operator==(const MixedExtension& a, const MixedExtension& b) {
        return a.tau == b.tau && a.phi == b.phi;
    }
    friend bool operator<(const MixedExtension& a, const MixedExtension& b) {
        return a.phi != b.phi ? a.phi < b.phi : a.tau < b.tau;
    }
};

inline bool is_mixed_extension(const FiniteGroup& g0,
                               const std::vector<int>& phi, int tau) {
    const int n = g0.order();
    if (static_cast<int>(phi.size()) != n || tau < 0 || tau >= n) return false;
    std::vector<char> hit(n, 0);
    for (int x : phi) {
        if (x < 0 || x >= n || hit[x]) return false;
        hit[x] = 1;
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (phi[g0.mul(a, b)] != g0.mul(phi[a], phi[b])) return false;
    if (phi[tau] != tau) return false;
    for (int x = 0; x < n; ++x)
        if (phi[phi[x]] != g0.conj(tau, x)) return false;
    return true;
}

inline void check_mixed_extension(const FiniteGroup& g0,
                                  const MixedExtension& ext) {
    if (!is_mixed_extension(g0, ext.phi, ext.tau))
        throw error("not a valid mixed extension");
}

// Elements a of G0 for which the outer element (a, t) squares to the
// identity: a * phi(a) * tau = 1.  These index the fixed curves of the
// factor-exchanging symmetries, so their count drives the invariants.
inline std::vector<int> o2_complements(const FiniteGroup& g0,
                                       const MixedExtension& ext) {
    std::vector<int> out;
    for (int a = 0; a < g0.order(); ++a)
        if (g0.mul(g0.mul(a, ext.phi[a]), ext.tau) == 0) out.push_back(a);
    return out;
}

inline int o2_count(const FiniteGroup& g0, const MixedExtension& ext) {
    return static_cast<int>(o2_complements(g0, ext).size());
}

// The whole group G as a multiplication table on indices a + n*eps, where
// eps marks the nontrivial coset.  Index 0 stays the identity and G0 embeds
// as the first n indices; the distinguished outer element t is index n.
inline FiniteGroup mixed_group(const FiniteGroup& g0,
                               const MixedExtension& ext) {
    check_mixed_extension(g0, ext);
    const int n = g0.order();
    const int m = 2 * n;
    std::vector<std::int32_t> table(static_cast<std::size_t>(m) * m);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const int ab = g0.mul(a, b);
            const int aphib = g0.mul(a, ext.phi[b]);
            table[static_cast<std::size_t>(a) * m + b] = ab;
            table[static_cast<std::size_t>(a) * m + (b + n)] = ab + n;
            table[static_cast<std::size_t>(a + n) * m + b] = aphib + n;
            table[static_cast<std::size_t>(a + n) * m + (b + n)] =
                g0.mul(aphib, ext.tau);
        }
    return FiniteGroup(m, std::move(table));
}

// All extension pairs over G0, given its automorphism list: for each phi,
// the admissible tau are the phi-fixed solutions of conj_tau = phi^2.
// Ordered by the automorphism list, then tau ascending.
inline std::vector<MixedExtension> enumerate_extensions(
    const FiniteGroup& g0, const std::vector<std::vector<int>>& autos) {
    const int n = g0.order();
    std::vector<MixedExtension> out;
    for (const auto& phi : autos) {
        std::vector<int> sq(n);
        for (int x = 0; x < n; ++x) sq[x] = phi[phi[x]];
        for (int t = 0; t < n; ++t) {
            if (phi[t] != t) continue;
            bool ok = true;
            for (int x = 0; x < n && ok; ++x) ok = sq[x] == g0.conj(t, x);
            if (ok) out.push_back({phi, t});
        }
    }
    return out;
}

// Extension pairs up to isomorphism of the extension: re-choosing the outer
// generator t as (a, t) replaces (phi, tau) by (conj_a . phi, a phi(a) tau),
// and an automorphism alpha of G0 transports (phi, tau) to
// (alpha phi alpha^-1, alpha(tau)).  Classes are connected components under
// both; the representative of a class is its smallest member in enumeration
// order.
struct ExtensionClasses {
    std::vector<MixedExtension> all;  // the input, enumeration order
    std::vector<int> class_of;        // per extension: index into reps
    std::vector<int> reps;            // lexicographically smallest member per class
};

namespace detail {

inline MixedExtension coset_image(const FiniteGroup& g0,
                                  const MixedExtension& e, int a) {
    const int n = g0.order();
    MixedExtension out;
    out.phi.resize(n);
    for (int x = 0; x < n; ++x) out.phi[x] = g0.conj(a, e.phi[x]);
    out.tau = g0.mul(g0.mul(a, e.phi[a]), e.tau);
    return out;
}

inline MixedExtension aut_image(const MixedExtension& e,
                                const std::vector<int>& alpha,
                                const std::vector<int>& alpha_inv) {
    const int n = static_cast<int>(alpha.size());
    MixedExtension out;
    out.phi.resize(n);
    for (int x = 0; x < n; ++x) out.phi[x] = alpha[e.phi[alpha_inv[x]]];
    out.tau = alpha[e.tau];
    return out;
}

struct UnionFind {
    std::vector<int> up;
    explicit UnionFind(int n) : up(n) {
        for (int i = 0; i < n; ++i) up[i] = i;
    }
    int find(int x) {
        while (up[x] != x) x = up[x] = up[up[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) up[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace detail

inline ExtensionClasses extension_classes(
    const FiniteGroup& g0, const std::vector<std::vector<int>>& autos,
    std::vector<MixedExtension> exts) {
    const int m = static_cast<int>(exts.size());
    std::map<MixedExtension, int> index;
    for (int i = 0; i < m; ++i) index.emplace(exts[i], i);
    auto at = [&](const MixedExtension& e) {
        auto it = index.find(e);
        if (it == index.end()) throw error("not a valid mixed extension");
        return it->second;
    };

    detail::UnionFind uf(m);
    const std::vector<int> gens = g0.greedy_generators();
    for (int i = 0; i < m; ++i)
        for (int a : gens) uf.unite(i, at(detail::coset_image(g0, exts[i], a)));

    // One full automorphism sweep per automorphism orbit covers the whole
    // orbit, because the sweep from any member reaches every other one.
    std::vector<char> swept(m, 0);
    std::vector<int> alpha_inv(g0.order());
    for (int i = 0; i < m; ++i) {
        if (swept[i]) continue;
        for (const auto& alpha : autos) {
            for (int x = 0; x < g0.order(); ++x) alpha_inv[alpha[x]] = x;
            int j = at(detail::aut_image(exts[i], alpha, alpha_inv));
            uf.unite(i, j);
            swept[j] = 1;
        }
    }

    ExtensionClasses out;
    out.all = std::move(exts);
    out.class_of.assign(m, -1);
    std::map<int, int> root_class;
    for (int i = 0; i < m; ++i) {
        int r = uf.find(i);
        auto [it, fresh] = root_class.emplace(r, static_cast<int>(out.reps.size()));
        if (fresh) out.reps.push_back(i);
        out.class_of[i] = it->second;
        // The representative is the lexicographically smallest (phi, tau)
        // of the class, independent of enumeration order.
        int& rep = out.reps[it->second];
        if (out.all[i] < out.all[rep]) rep = i;
    }
    return out;
}

// Automorphisms of G0 that fix the extension class of (phi, tau): alpha for
// which some coset move brings (alpha phi alpha^-1, alpha(tau)) back to
// (phi, tau).  These are exactly the relabelings that preserve the
// extension, so they act on the generating vectors of each family.
inline std::vector<std::vector<int>> extension_stabilizer(
    const FiniteGroup& g0, const std::vector<std::vector<int>>& autos,
    const MixedExtension& ext) {
    const int n = g0.order();
    std::vector<std::vector<int>> out;
    std::vector<int> alpha_inv(n);
    for (const auto& alpha : autos) {
        for (int x = 0; x < n; ++x) alpha_inv[alpha[x]] = x;
        MixedExtension img = detail::aut_image(ext, alpha, alpha_inv);
        bool member = false;
        for (int a = 0; a < n && !member; ++a)
            member = detail::coset_image(g0, ext, a) == img;
        if (member) out.push_back(alpha);
    }
    return out;
}

}  // namespace mixedsurf
