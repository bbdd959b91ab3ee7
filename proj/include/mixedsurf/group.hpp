#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "util.hpp"

namespace mixedsurf {

// A finite group given by its full multiplication table.  Element 0 is the
// identity.  Construction validates the table (identity, Latin square, and
// associativity for small orders) and precomputes the data everything
// downstream keeps asking for: inverses, element orders, conjugacy classes
// and centralizer orders.
class FiniteGroup {
  public:
    FiniteGroup() : n_(1), table_{0} { finish(); }

    FiniteGroup(int n, std::vector<std::int32_t> table)
        : n_(n), table_(std::move(table)) {
        if (n_ <= 0 || table_.size() != static_cast<std::size_t>(n_) * n_)
            throw error("bad multiplication table size");
        finish();
    }

    // Closure of permutation generators on points 0..degree-1 under the
    // composition (a*b)(i) = a(b(i)).  Elements are numbered in BFS order
    // from the identity, multiplying on the right by each generator in turn,
    // so the numbering is deterministic.
    static FiniteGroup from_permutations(int degree,
                                         const std::vector<std::vector<int>>& gens,
                                         std::size_t max_order = 1000000) {
        for (const auto& g : gens) {
            if (static_cast<int>(g.size()) != degree)
                throw error("bad permutation degree");
            std::vector<char> seen(degree, 0);
            for (int x : g) {
                if (x < 0 || x >= degree || seen[x]) throw error("not a permutation");
                seen[x] = 1;
            }
        }
        std::vector<int> ident(degree);
        std::iota(ident.begin(), ident.end(), 0);
        std::vector<std::vector<int>> elts{ident};
        std::map<std::vector<int>, int> pos{{ident, 0}};
        std::size_t cap = std::min<std::size_t>(max_order, max_table_order);
        for (std::size_t i = 0; i < elts.size(); ++i) {
            for (const auto& g : gens) {
                std::vector<int> y(degree);
                for (int p = 0; p < degree; ++p) y[p] = elts[i][g[p]];
                if (pos.emplace(y, static_cast<int>(elts.size())).second) {
                    elts.push_back(std::move(y));
                    if (elts.size() > cap) throw error("group too large");
                }
            }
        }
        int n = static_cast<int>(elts.size());
        std::vector<std::int32_t> table(static_cast<std::size_t>(n) * n);
        std::vector<int> y(degree);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                for (int p = 0; p < degree; ++p) y[p] = elts[a][elts[b][p]];
                table[static_cast<std::size_t>(a) * n + b] = pos.at(y);
            }
        return FiniteGroup(n, std::move(table));
    }

    int order() const { return n_; }
    int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
    int inv(int a) const { return inv_[a]; }
    int conj(int g, int x) const { return mul(mul(g, x), inv_[g]); }  // g x g^-1

    int pow(int a, long long k) const {
        int m = elt_order_[a];
        k %= m;
        if (k < 0) k += m;
        int r = 0;
        for (long long i = 0; i < k; ++i) r = mul(r, a);
        return r;
    }

    int element_order(int a) const { return elt_order_[a]; }
    const std::vector<int>& element_orders() const { return elt_order_; }
    bool is_abelian() const { return abelian_; }

    const std::vector<std::vector<int>>& conjugacy_classes() const { return classes_; }
    int class_of(int a) const { return class_index_[a]; }
    int class_size(int a) const { return static_cast<int>(classes_[class_index_[a]].size()); }
    int centralizer_order(int a) const { return cent_order_[a]; }
    const std::vector<int>& center() const { return center_; }

    // Sorted element list of the subgroup generated by gens.
    std::vector<int> closure(const std::vector<int>& gens) const {
        std::vector<char> in(n_, 0);
        in[0] = 1;
        std::vector<int> bfs{0};
        for (std::size_t i = 0; i < bfs.size(); ++i)
            for (int g : gens) {
                int y = mul(bfs[i], g);
                if (!in[y]) {
                    in[y] = 1;
                    bfs.push_back(y);
                }
            }
        std::sort(bfs.begin(), bfs.end());
        return bfs;
    }

    std::vector<int> derived_subgroup() const {
        std::vector<char> seen(n_, 0);
        std::vector<int> comms;
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b) {
                int c = mul(mul(mul(a, b), inv_[a]), inv_[b]);
                if (!seen[c]) {
                    seen[c] = 1;
                    comms.push_back(c);
                }
            }
        return closure(comms);
    }

    bool is_normal(const std::vector<int>& sub) const {
        std::vector<char> in(n_, 0);
        for (int h : sub) in[h] = 1;
        for (int g = 0; g < n_; ++g)
            for (int h : sub)
                if (!in[conj(g, h)]) return false;
        return true;
    }

    // Normal closure of a set of elements: smallest normal subgroup
    // containing them.
    std::vector<int> normal_closure(const std::vector<int>& elems) const {
        std::vector<int> gens;
        std::vector<char> seen(n_, 0);
        for (int x : elems)
            for (int g = 0; g < n_; ++g) {
                int y = conj(g, x);
                if (!seen[y]) {
                    seen[y] = 1;
                    gens.push_back(y);
                }
            }
        return closure(gens);
    }

    // Quotient by a normal subgroup.  coset_of, if given, receives the coset
    // index of each element; coset 0 contains the identity.
    FiniteGroup quotient(const std::vector<int>& sub, std::vector<int>* coset_of = nullptr) const {
        if (!is_normal(sub)) throw error("not a normal subgroup");
        std::vector<int> coset(n_, -1);
        std::vector<int> reps;
        for (int a = 0; a < n_; ++a) {
            if (coset[a] >= 0) continue;
            int c = static_cast<int>(reps.size());
            reps.push_back(a);
            for (int h : sub) coset[mul(a, h)] = c;
        }
        int m = static_cast<int>(reps.size());
        std::vector<std::int32_t> table(static_cast<std::size_t>(m) * m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                table[static_cast<std::size_t>(i) * m + j] = coset[mul(reps[i], reps[j])];
        if (coset_of) *coset_of = coset;
        return FiniteGroup(m, std::move(table));
    }

    // Ascending invariant factors of the abelianization (empty for perfect
    // or trivial groups).  Derived from element-order counts of the
    // abelian quotient, which determine a finite abelian group completely.
    std::vector<long long> abelian_invariants() const {
        FiniteGroup q = quotient(derived_subgroup());
        int m = q.order();
        if (m == 1) return {};
        std::map<int, std::vector<int>> partitions;  // prime -> lambda desc
        for (int p = 2, rest = m; rest > 1; ++p) {
            if (rest % p) continue;
            while (rest % p == 0) rest /= p;
            // counts[k] = #elements killed by p^k; the p-part size bounds it
            std::vector<long long> counts{1};
            long long ppart = 0;
            for (int a = 0; a < m; ++a) {
                int o = q.element_order(a);
                while (o % p == 0) o /= p;
                if (o == 1) ++ppart;
            }
            long long pk = 1;
            while (counts.back() < ppart) {
                pk *= p;
                long long c = 0;
                for (int a = 0; a < m; ++a)
                    if (q.pow(a, pk) == 0) ++c;
                counts.push_back(c);
            }
            std::vector<int> conj_part;  // m_k = #{i : lambda_i >= k}
            for (std::size_t k = 1; k < counts.size(); ++k) {
                long long r = counts[k] / counts[k - 1];
                int e = 0;
                while (r > 1) {
                    r /= p;
                    ++e;
                }
                conj_part.push_back(e);
            }
            std::vector<int> lambda;
            for (std::size_t k = 0; k < conj_part.size(); ++k) {
                int next = k + 1 < conj_part.size() ? conj_part[k + 1] : 0;
                for (int t = 0; t < conj_part[k] - next; ++t)
                    lambda.push_back(static_cast<int>(k) + 1);
            }
            std::sort(lambda.rbegin(), lambda.rend());
            partitions[p] = lambda;
        }
        std::size_t width = 0;
        for (const auto& [p, lam] : partitions) width = std::max(width, lam.size());
        std::vector<long long> invf;
        for (std::size_t i = 0; i < width; ++i) {
            long long f = 1;
            for (const auto& [p, lam] : partitions)
                if (i < lam.size())
                    for (int t = 0; t < lam[i]; ++t) f *= p;
            invf.push_back(f);
        }
        std::sort(invf.begin(), invf.end());
        return invf;
    }

    // Generating set built greedily: repeatedly adjoin the element that
    // grows the subgroup the most (ties: smallest index).  Deterministic,
    // and small enough to keep automorphism backtracking shallow.
    std::vector<int> greedy_generators() const {
        std::vector<int> gens;
        std::size_t have = 1;
        while (static_cast<int>(have) < n_) {
            int pick = -1;
            std::size_t best = 0;
            std::vector<int> trial = gens;
            trial.push_back(0);
            for (int g = 0; g < n_; ++g) {
                trial.back() = g;
                std::size_t grown = closure(trial).size();
                if (grown > best) {
                    best = grown;
                    pick = g;
                }
            }
            gens.push_back(pick);
            have = best;
        }
        return gens;
    }

  private:
    static constexpr std::size_t max_table_order = 4096;

    int n_;
    std::vector<std::int32_t> table_;
    std::vector<int> inv_;
    std::vector<int> elt_order_;
    std::vector<std::vector<int>> classes_;
    std::vector<int> class_index_;
    std::vector<int> cent_order_;
    std::vector<int> center_;
    bool abelian_ = true;

    void finish() {
        for (int j = 0; j < n_; ++j)
            if (mul(0, j) != j || mul(j, 0) != j)
                throw error("element 0 is not an identity");
        std::vector<char> seen(n_);
        for (int a = 0; a < n_; ++a) {
            std::fill(seen.begin(), seen.end(), 0);
            for (int b = 0; b < n_; ++b) {
                int c = mul(a, b);
                if (c < 0 || c >= n_ || seen[c]) throw error("multiplication table is not a group");
                seen[c] = 1;
            }
            std::fill(seen.begin(), seen.end(), 0);
            for (int b = 0; b < n_; ++b) {
                int c = mul(b, a);
                if (seen[c]) throw error("multiplication table is not a group");
                seen[c] = 1;
            }
        }
        if (n_ <= 128) {
            for (int a = 0; a < n_; ++a)
                for (int b = 0; b < n_; ++b)
                    for (int c = 0; c < n_; ++c)
                        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                            throw error("multiplication table is not a group");
        }
        inv_.assign(n_, 0);
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                if (mul(a, b) == 0) {
                    inv_[a] = b;
                    break;
                }
        elt_order_.assign(n_, 1);
        for (int a = 0; a < n_; ++a) {
            int k = 1, x = a;
            while (x != 0) {
                x = mul(x, a);
                ++k;
            }
            elt_order_[a] = k;
        }
        class_index_.assign(n_, -1);
        for (int a = 0; a < n_; ++a) {
            if (class_index_[a] >= 0) continue;
            std::vector<char> in(n_, 0);
            std::vector<int> cls;
            for (int g = 0; g < n_; ++g) {
                int y = conj(g, a);
                if (!in[y]) {
                    in[y] = 1;
                    cls.push_back(y);
                }
            }
            std::sort(cls.begin(), cls.end());
            int ci = static_cast<int>(classes_.size());
            for (int y : cls) class_index_[y] = ci;
            classes_.push_back(std::move(cls));
        }
        cent_order_.assign(n_, 0);
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                if (mul(a, b) == mul(b, a)) ++cent_order_[a];
        for (int a = 0; a < n_; ++a)
            if (cent_order_[a] == n_) center_.push_back(a);
        abelian_ = static_cast<int>(center_.size()) == n_;
    }
};

// ---------------------------------------------------------------------------
// Isomorphism and automorphisms.

// Cheap isomorphism invariants used to prune before backtracking.
struct GroupFingerprint {
    int order = 1;
    std::vector<std::pair<int, int>> order_histogram;   // (element order, count)
    std::vector<long long> abelianization;              // invariant factors
    int center_order = 1;
    int derived_order = 1;
    std::vector<int> class_sizes;                       // sorted ascending

    friend bool operator==(const GroupFingerprint&, const GroupFingerprint&) = default;
    friend auto operator<=>(const GroupFingerprint&, const GroupFingerprint&) = default;
};

inline GroupFingerprint fingerprint(const FiniteGroup& g) {
    GroupFingerprint fp;
    fp.order = g.order();
    std::map<int, int> hist;
    for (int a = 0; a < g.order(); ++a) ++hist[g.element_order(a)];
    fp.order_histogram.assign(hist.begin(), hist.end());
    fp.abelianization = g.abelian_invariants();
    fp.center_order = static_cast<int>(g.center().size());
    fp.derived_order = static_cast<int>(g.derived_subgroup().size());
    for (const auto& c : g.conjugacy_classes()) fp.class_sizes.push_back(static_cast<int>(c.size()));
    std::sort(fp.class_sizes.begin(), fp.class_sizes.end());
    return fp;
}

namespace detail {

// Machinery for extending generator images to a homomorphism.  The subgroup
// generated by a prefix of `gens` is traversed once in BFS order; each
// element gets a definition (previous element, generator) so candidate
// images can be replayed cheaply, then every product edge is checked.
struct HomProgram {
    std::vector<int> elements;                // BFS order, elements[0] = 0
    std::vector<std::pair<int, int>> defs;    // defs[i] = (j, k): e_i = e_j * g_k
    std::vector<std::array<int, 3>> edges;    // (i, k, j): e_i * g_k = e_j

    HomProgram() = default;

    HomProgram(const FiniteGroup& g, const std::vector<int>& gens) {
        std::vector<int> pos(g.order(), -1);
        elements.push_back(0);
        pos[0] = 0;
        defs.emplace_back(-1, -1);
        for (std::size_t i = 0; i < elements.size(); ++i)
            for (std::size_t k = 0; k < gens.size(); ++k) {
                int y = g.mul(elements[i], gens[k]);
                if (pos[y] < 0) {
                    pos[y] = static_cast<int>(elements.size());
                    elements.push_back(y);
                    defs.emplace_back(static_cast<int>(i), static_cast<int>(k));
                }
            }
        for (std::size_t i = 0; i < elements.size(); ++i)
            for (std::size_t k = 0; k < gens.size(); ++k)
                edges.push_back({static_cast<int>(i), static_cast<int>(k),
                                 pos[g.mul(elements[i], gens[k])]});
    }

    // Image of each BFS element under generator images `img`, or empty if
    // the assignment is not a homomorphism into `dst`.
    std::vector<int> run(const FiniteGroup& dst, const std::vector<int>& img) const {
        std::vector<int> out(elements.size());
        out[0] = 0;
        for (std::size_t i = 1; i < elements.size(); ++i) {
            auto [j, k] = defs[i];
            out[i] = dst.mul(out[j], img[k]);
        }
        for (const auto& e : edges)
            if (dst.mul(out[e[0]], img[e[1]]) != out[e[2]]) return {};
        return out;
    }
};

// Enumerate isomorphisms a -> b as element maps.  visit() is called for
// each one; returning true stops the search (and makes search_isos return
// true).  Assumes equal orders; fingerprint pruning is the caller's job.
template <typename Visit>
bool search_isos(const FiniteGroup& a, const FiniteGroup& b, Visit&& visit) {
    std::vector<int> gens = a.greedy_generators();
    if (gens.empty()) {
        std::vector<int> ident{0};
        return visit(ident);
    }
    std::vector<HomProgram> progs;
    for (std::size_t k = 1; k <= gens.size(); ++k)
        progs.emplace_back(a, std::vector<int>(gens.begin(), gens.begin() + k));
    std::vector<std::vector<int>> cand(gens.size());
    for (std::size_t k = 0; k < gens.size(); ++k)
        for (int h = 0; h < b.order(); ++h)
            if (b.element_order(h) == a.element_order(gens[k]) &&
                b.class_size(h) == a.class_size(gens[k]))
                cand[k].push_back(h);
    std::vector<int> img;
    std::vector<int> perm(a.order());

    auto rec = [&](auto&& self, std::size_t k) -> bool {
        for (int h : cand[k]) {
            img.push_back(h);
            std::vector<int> out = progs[k].run(b, img);
            if (!out.empty()) {
                if (k + 1 == gens.size()) {
                    std::vector<char> hit(b.order(), 0);
                    bool bij = out.size() == static_cast<std::size_t>(b.order());
                    for (int x : out)
                        if (hit[x]++) {
                            bij = false;
                            break;
                        }
                    if (bij) {
                        for (std::size_t i = 0; i < out.size(); ++i)
                            perm[progs[k].elements[i]] = out[i];
                        if (visit(perm)) {
                            img.pop_back();
                            return true;
                        }
                    }
                } else if (self(self, k + 1)) {
                    img.pop_back();
                    return true;
                }
            }
            img.pop_back();
        }
        return false;
    };
    return rec(rec, 0);
}

}  // namespace detail

inline bool is_isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
    if (a.order() != b.order()) return false;
    if (fingerprint(a) != fingerprint(b)) return false;
    return detail::search_isos(a, b, [](const std::vector<int>&) { return true; });
}

struct AutLimits {
    int max_order = 64;
    std::size_t max_count = 1000000;
};

// All automorphisms of g, each as an element map, in the deterministic order
// the backtracking search finds them.  The first entry need not be the
// identity, but the identity is always present.
inline std::vector<std::vector<int>> automorphisms(const FiniteGroup& g,
                                                   AutLimits lim = {}) {
    if (g.order() > lim.max_order) throw error("automorphism search too large");
    std::vector<std::vector<int>> out;
    detail::search_isos(g, g, [&](const std::vector<int>& p) {
        out.push_back(p);
        if (out.size() > lim.max_count) throw error("automorphism search too large");
        return false;
    });
    return out;
}

}  // namespace mixedsurf
