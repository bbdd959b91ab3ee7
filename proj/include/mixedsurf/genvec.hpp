#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "group.hpp"

namespace mixedsurf {

// Generating vectors of type (q; m_1,...,m_r) for a finite group: tuples
//
//     (d_1, e_1, ..., d_q, e_q, h_1, ..., h_r)
//
// of group elements whose entries generate the whole group, subject to the
// long relation  [d_1,e_1]...[d_q,e_q] h_1 ... h_r = 1  and with h_j of
// order exactly m_j.  Such a tuple is the monodromy of a Galois covering of
// a genus-q curve branched in r points, so the tuple data is exactly what
// the classification pipeline enumerates per group.
//
// A vector is stored as a flat list of element indices, handle entries
// first.  enumerate_vectors lists all of them in lexicographic order;
// move_images applies returning-to-the-same-family mapping-class moves,
// whose orbits identify equivalent coverings.

inline int genvec_size(int q, int r) { return 2 * q + r; }

// Product [d_1,e_1]...[d_q,e_q] h_1...h_r of the long relation.
inline int long_product(const FiniteGroup& g, int q, const std::vector<int>& v) {
    int acc = 0;
    for (int i = 0; i < q; ++i) {
        int d = v[2 * i], e = v[2 * i + 1];
        acc = g.mul(acc, g.mul(g.mul(d, e), g.mul(g.inv(d), g.inv(e))));
    }
    for (std::size_t k = 2 * static_cast<std::size_t>(q); k < v.size(); ++k)
        acc = g.mul(acc, v[k]);
    return acc;
}

// Orders of the branch entries, in vector position order.
inline std::vector<int> vector_periods(const FiniteGroup& g, int q,
                                       const std::vector<int>& v) {
    std::vector<int> out;
    for (std::size_t k = 2 * static_cast<std::size_t>(q); k < v.size(); ++k)
        out.push_back(g.element_order(v[k]));
    return out;
}

// Orders of the branch entries, sorted ascending.  Moves permute the branch
// entries, so this multiset is the move-invariant form of the periods.
inline std::vector<int> sorted_periods(const FiniteGroup& g, int q,
                                       const std::vector<int>& v) {
    std::vector<int> out = vector_periods(g, q, v);
    std::sort(out.begin(), out.end());
    return out;
}

inline bool generates(const FiniteGroup& g, const std::vector<int>& v) {
    return static_cast<int>(g.closure(v).size()) == g.order();
}

// Cheap necessary condition for a vector of type (q; m_1..m_r) to exist:
// the entries generate the abelianization, where the long relation makes
// one branch entry redundant, so the minimal generator count of the
// abelianization is at most 2q + r - 1 (2q when r = 0).  This rules out
// wide elementary abelian groups long before any search runs.
inline bool abelianized_generation_possible(const FiniteGroup& g, int q,
                                            int r) {
    const auto invariants = g.abelian_invariants();
    const int cap = 2 * q + (r > 0 ? r - 1 : 0);
    return static_cast<int>(invariants.size()) <= cap;
}

// Full validity check against a positional period list.
inline bool is_generating_vector(const FiniteGroup& g, int q,
                                 const std::vector<int>& periods,
                                 const std::vector<int>& v) {
    const int r = static_cast<int>(periods.size());
    if (q < 0 || static_cast<int>(v.size()) != genvec_size(q, r)) return false;
    for (int x : v)
        if (x < 0 || x >= g.order()) return false;
    for (int j = 0; j < r; ++j)
        if (g.element_order(v[2 * q + j]) != periods[j]) return false;
    if (long_product(g, q, v) != 0) return false;
    return generates(g, v);
}

namespace detail {

// Backtracking core shared by enumeration and the existence probe.  Handle
// slots run over all elements and branch slots over the elements of the
// exact period, ascending, so the visit order is lexicographic.  The last
// branch slot is forced by the long relation and only checked.  The
// subgroup generated by the chosen prefix is carried along incrementally,
// which makes the generation test at a leaf a table lookup whenever the
// forced entry is already inside it.
template <typename Sink>
inline void genvec_search(const FiniteGroup& g, int q,
                          const std::vector<int>& periods, bool probe,
                          Sink&& sink) {
    const int n = g.order();
    const int r = static_cast<int>(periods.size());
    const int len = genvec_size(q, r);
    if (len == 0) {
        std::vector<int> empty;
        if (n == 1) sink(empty);
        return;
    }

    std::vector<std::vector<int>> cand(r);
    for (int j = 0; j < r; ++j) {
        for (int x = 0; x < n; ++x)
            if (g.element_order(x) == periods[j]) cand[j].push_back(x);
        if (cand[j].empty()) return;
    }

    // For the existence probe the whole vector may be conjugated at once,
    // so the first enumerated slot can be pinned to class representatives.
    std::vector<int> first_reps;
    if (probe) {
        std::vector<char> is_rep(n, 0);
        for (const auto& cls : g.conjugacy_classes())
            is_rep[*std::min_element(cls.begin(), cls.end())] = 1;
        const std::vector<int>* domain = nullptr;
        std::vector<int> all(n);
        for (int x = 0; x < n; ++x) all[x] = x;
        domain = q > 0 ? &all : &cand[0];
        for (int x : *domain)
            if (is_rep[x]) first_reps.push_back(x);
    }

    std::vector<int> all_elements(n);
    for (int x = 0; x < n; ++x) all_elements[x] = x;

    std::vector<int> v(len);
    // closure_sets[k] marks the subgroup generated by v[0..k-1].
    std::vector<std::vector<char>> closure_sets(len + 1,
                                                std::vector<char>(n, 0));
    std::vector<int> closure_count(len + 1, 1);
    closure_sets[0][0] = 1;
    bool done = false;

    auto place = [&](int depth, int x) {
        v[depth] = x;
        const auto& prev = closure_sets[depth];
        auto& cur = closure_sets[depth + 1];
        if (prev[x]) {
            cur = prev;
            closure_count[depth + 1] = closure_count[depth];
            return;
        }
        std::fill(cur.begin(), cur.end(), 0);
        cur[0] = 1;
        std::vector<int> bfs{0};
        for (std::size_t i = 0; i < bfs.size(); ++i)
            for (int d2 = 0; d2 <= depth; ++d2) {
                int y = g.mul(bfs[i], v[d2]);
                if (!cur[y]) {
                    cur[y] = 1;
                    bfs.push_back(y);
                }
            }
        closure_count[depth + 1] = static_cast<int>(bfs.size());
    };

    auto rec = [&](auto&& self, int depth, int acc) -> void {
        if (done) return;
        if (depth == len) {
            if (r == 0 && acc != 0) return;
            if (closure_count[len] != n) return;
            sink(v);
            if (probe) done = true;
            return;
        }
        const bool first = depth == 0;
        if (depth < 2 * q) {
            const std::vector<int>& dom =
                (first && probe) ? first_reps : all_elements;
            const bool closes_pair = depth % 2 == 1;
            for (int x : dom) {
                place(depth, x);
                int acc2 = acc;
                if (closes_pair) {
                    int d = v[depth - 1];
                    acc2 = g.mul(acc, g.mul(g.mul(d, x), g.mul(g.inv(d), g.inv(x))));
                }
                self(self, depth + 1, acc2);
                if (done) return;
            }
            return;
        }
        const int j = depth - 2 * q;
        if (j == r - 1) {
            int x = g.inv(acc);
            if (g.element_order(x) != periods[j]) return;
            place(depth, x);
            self(self, depth + 1, 0);
            return;
        }
        const std::vector<int>& dom =
            (first && probe) ? first_reps : cand[j];
        for (int x : dom) {
            place(depth, x);
            self(self, depth + 1, g.mul(acc, x));
            if (done) return;
        }
    };
    rec(rec, 0, 0);
}

}  // namespace detail

// All generating vectors of the given type, in lexicographic order.
inline std::vector<std::vector<int>> enumerate_vectors(
    const FiniteGroup& g, int q, const std::vector<int>& periods) {
    std::vector<std::vector<int>> out;
    detail::genvec_search(g, q, periods, false,
                          [&](const std::vector<int>& v) { out.push_back(v); });
    return out;
}

// Whether any generating vector of the given type exists.  Stops at the
// first hit and pins the first enumerated slot to conjugacy-class
// representatives, so this is much cheaper than a full enumeration.
inline bool exists_vector(const FiniteGroup& g, int q,
                          const std::vector<int>& periods) {
    bool found = false;
    detail::genvec_search(g, q, periods, true,
                          [&](const std::vector<int>&) { found = true; });
    return found;
}

// Mask of the elements with fixed points on the covering curve: the union
// of the conjugates of all powers of the branch entries, identity included.
inline std::vector<char> sigma_mask(const FiniteGroup& g, int q,
                                    const std::vector<int>& v) {
    std::vector<char> mask(g.order(), 0);
    mask[0] = 1;
    for (std::size_t k = 2 * static_cast<std::size_t>(q); k < v.size(); ++k) {
        int p = v[k];
        while (p != 0) {
            if (!mask[p])
                for (int x : g.conjugacy_classes()[g.class_of(p)]) mask[x] = 1;
            p = g.mul(p, v[k]);
        }
    }
    return mask;
}

// Conjugate every entry by x.  Simultaneous conjugation is re-choosing the
// base point of the monodromy, so it maps generating vectors to equivalent
// generating vectors.
inline std::vector<int> conjugate_vector(const FiniteGroup& g, int x,
                                         const std::vector<int>& v) {
    std::vector<int> out(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) out[k] = g.conj(x, v[k]);
    return out;
}

// Apply a group automorphism, given as a permutation of element indices,
// entrywise.
inline std::vector<int> relabel_vector(const std::vector<int>& perm,
                                       const std::vector<int>& v) {
    std::vector<int> out(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) out[k] = perm[v[k]];
    return out;
}

// ---------------------------------------------------------------------------
// Mapping-class moves.
//
// Each move below is induced by an orientation-preserving homeomorphism of
// the base orbifold, certified by the fact that the corresponding free-group
// substitution fixes the long relator (or a subword of it that embeds into
// the relator, possibly after rotating the relation) verbatim.  The braid,
// twist and handle-swap moves are the classical ones; the handle-mixing and
// point-push substitutions were derived once and their integer tables are
// frozen here.  The test suite re-runs the free-reduction certificate for
// every frozen table.

enum MoveSet : unsigned {
    move_braids = 1u << 0,   // half-twists exchanging adjacent branch points
    move_twists = 1u << 1,   // Dehn twists along the two curves of one handle
    move_swaps = 1u << 2,    // exchange of two adjacent handles
    move_mixes = 1u << 3,    // Dehn twist along a curve crossing two handles
    move_pushes = 1u << 4,   // point-pushes of a branch point around a handle
    move_windows = 1u << 5,  // conjugation of a relator window by its product
    move_all = (1u << 6) - 1,
};

namespace detail {

// Letter words over the slots of two adjacent handles: 1 = d_i, 2 = e_i,
// 3 = d_{i+1}, 4 = e_{i+1}, negative letters are inverses.  The
// substitution fixes [d_i,e_i][d_{i+1},e_{i+1}] verbatim in the free group.
// Twists and swaps alone realize only a proper subgroup of the symplectic
// group on the homology of the covered surface; this move is the missing
// generator.  It is the Dehn twist about a curve running through both
// handles, computed through the hyperelliptic double plane cover for genus
// two and transported to the standard relator basis.
inline const std::vector<std::vector<int>>& mix_words(bool inverse) {
    static const std::vector<std::vector<int>> fwd = {
        {1, 2, -3, -4, 1, -3, -4, 1, 2, 4, 3, -2, -1},
        {1, 2, -3, -4, -2, -1, 4, 3, 2, 4, 3, -2, -1},
        {1, 2, -3, -4, -2, -1, 4, 3, 3, 4, 3, -2, -1},
        {1, 2, -3, -3, -4, 1, 2, 4, 3, -2, -1}};
    static const std::vector<std::vector<int>> bwd = {
        {4, 3, -2, -2, -1, 4, 3, 1, 2, -3, -4},
        {4, 3, -2, -1, -3, -4, 1, 2, 2, 1, 2, -3, -4},
        {4, 3, -2, -1, -3, -4, 1, 2, 3, 1, 2, -3, -4},
        {4, 3, -2, -1, 4, -2, -1, 4, 3, 1, 2, -3, -4}};
    return inverse ? bwd : fwd;
}

// Point-push of the first branch point around the last handle.  Letters:
// 1 = d_q, 2 = e_q, 3 = h_1.  The substitution fixes the relator subword
// [d,e]h verbatim; on homology it sends e to e - h.
inline const std::vector<std::vector<int>>& push_end_words(bool inverse) {
    static const std::vector<std::vector<int>> fwd = {
        {1}, {-3, 2}, {-3, 2, 1, -2, 3, 2, -1, -2, 3}};
    static const std::vector<std::vector<int>> bwd = {
        {1}, {2, -1, -2, 3, 2, 1}, {2, -1, -2, 3, 2, 1, -2}};
    return inverse ? bwd : fwd;
}

// Point-push of the last branch point around the first handle, across the
// wrap-around of the long relation (uv = 1 iff vu = 1, so the relator may
// be rotated to h [d,e] ...).  Letters: 1 = d_1, 2 = e_1, 3 = h_r.  The
// substitution fixes h[d,e] verbatim; on homology it sends d to d + h.
inline const std::vector<std::vector<int>>& push_start_words(bool inverse) {
    static const std::vector<std::vector<int>> fwd = {
        {3, 1}, {2}, {3, 1, 2, -1, 3, 1, -2, -1, -3}};
    static const std::vector<std::vector<int>> bwd = {
        {1, -2, -1, -3, 1, 2}, {2}, {1, -2, -1, 3, 1, 2, -1}};
    return inverse ? bwd : fwd;
}

inline int eval_letters(const FiniteGroup& g, const std::vector<int>& word,
                        const int* slots) {
    int acc = 0;
    for (int x : word) {
        int e = slots[(x > 0 ? x : -x) - 1];
        acc = g.mul(acc, x > 0 ? e : g.inv(e));
    }
    return acc;
}

inline int commutator(const FiniteGroup& g, int a, int b) {
    return g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b)));
}

}  // namespace detail

// Images of v under every applicable move of the selected families, in a
// fixed deterministic order.  Braids permute the branch periods, so images
// match the period multiset of v but not necessarily its positional period
// list.
inline std::vector<std::vector<int>> move_images(const FiniteGroup& g, int q,
                                                 const std::vector<int>& v,
                                                 unsigned moves = move_all) {
    const int r = static_cast<int>(v.size()) - 2 * q;
    std::vector<std::vector<int>> out;

    if (moves & move_braids)
        for (int j = 0; j + 1 < r; ++j) {
            const int a = 2 * q + j, b = a + 1;
            std::vector<int> w = v;
            w[a] = g.conj(v[a], v[b]);
            w[b] = v[a];
            out.push_back(std::move(w));
            w = v;
            w[a] = v[b];
            w[b] = g.conj(g.inv(v[b]), v[a]);
            out.push_back(std::move(w));
        }

    if (moves & move_twists)
        for (int i = 0; i < q; ++i) {
            const int d = v[2 * i], e = v[2 * i + 1];
            for (int de : {g.mul(e, d), g.mul(e, g.inv(d))}) {
                std::vector<int> w = v;
                w[2 * i + 1] = de;
                out.push_back(std::move(w));
            }
            for (int dd : {g.mul(d, e), g.mul(d, g.inv(e))}) {
                std::vector<int> w = v;
                w[2 * i] = dd;
                out.push_back(std::move(w));
            }
        }

    if (moves & move_swaps)
        for (int i = 0; i + 1 < q; ++i) {
            const int a = v[2 * i], b = v[2 * i + 1];
            const int c = v[2 * i + 2], d = v[2 * i + 3];
            std::vector<int> w = v;
            const int k1 = detail::commutator(g, a, b);
            w[2 * i] = g.conj(k1, c);
            w[2 * i + 1] = g.conj(k1, d);
            w[2 * i + 2] = a;
            w[2 * i + 3] = b;
            out.push_back(std::move(w));
            w = v;
            const int k2 = g.inv(detail::commutator(g, c, d));
            w[2 * i] = c;
            w[2 * i + 1] = d;
            w[2 * i + 2] = g.conj(k2, a);
            w[2 * i + 3] = g.conj(k2, b);
            out.push_back(std::move(w));
        }

    if (moves & move_mixes)
        for (int i = 0; i + 1 < q; ++i)
            for (bool invm : {false, true}) {
                const auto& tab = detail::mix_words(invm);
                const int* slots = v.data() + 2 * i;
                std::vector<int> w = v;
                for (int k = 0; k < 4; ++k)
                    w[2 * i + k] = detail::eval_letters(g, tab[k], slots);
                out.push_back(std::move(w));
            }

    if ((moves & move_pushes) && q > 0 && r > 0) {
        const int base = 2 * q - 2;
        const int end_slots[3] = {v[base], v[base + 1], v[2 * q]};
        for (bool invm : {false, true}) {
            const auto& tab = detail::push_end_words(invm);
            std::vector<int> w = v;
            w[base] = detail::eval_letters(g, tab[0], end_slots);
            w[base + 1] = detail::eval_letters(g, tab[1], end_slots);
            w[2 * q] = detail::eval_letters(g, tab[2], end_slots);
            out.push_back(std::move(w));
        }
        const int last = 2 * q + r - 1;
        const int start_slots[3] = {v[0], v[1], v[last]};
        for (bool invm : {false, true}) {
            const auto& tab = detail::push_start_words(invm);
            std::vector<int> w = v;
            w[0] = detail::eval_letters(g, tab[0], start_slots);
            w[1] = detail::eval_letters(g, tab[1], start_slots);
            w[last] = detail::eval_letters(g, tab[2], start_slots);
            out.push_back(std::move(w));
        }
    }

    if (moves & move_windows) {
        for (int i = 0; i < q; ++i) {
            const int k = detail::commutator(g, v[2 * i], v[2 * i + 1]);
            if (k == 0) continue;
            for (int s : {k, g.inv(k)}) {
                std::vector<int> w = v;
                w[2 * i] = g.conj(s, v[2 * i]);
                w[2 * i + 1] = g.conj(s, v[2 * i + 1]);
                out.push_back(std::move(w));
            }
        }
        if (q > 0 && r > 0) {
            const int base = 2 * q - 2;
            const int k = detail::commutator(g, v[base], v[base + 1]);
            const int s0 = g.mul(k, v[2 * q]);
            if (s0 != 0)
                for (int s : {s0, g.inv(s0)}) {
                    std::vector<int> w = v;
                    w[base] = g.conj(s, v[base]);
                    w[base + 1] = g.conj(s, v[base + 1]);
                    w[2 * q] = g.conj(s, v[2 * q]);
                    out.push_back(std::move(w));
                }
        }
    }

    return out;
}

// Closure of v under the selected moves, sorted lexicographically.
inline std::vector<std::vector<int>> vector_orbit(const FiniteGroup& g, int q,
                                                  const std::vector<int>& v,
                                                  unsigned moves = move_all) {
    std::set<std::vector<int>> seen{v};
    std::vector<std::vector<int>> bfs{v};
    for (std::size_t i = 0; i < bfs.size(); ++i)
        for (auto& w : move_images(g, q, bfs[i], moves))
            if (seen.insert(w).second) bfs.push_back(std::move(w));
    return {seen.begin(), seen.end()};
}

}  // namespace mixedsurf
