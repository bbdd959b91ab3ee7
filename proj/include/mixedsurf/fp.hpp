#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "smith.hpp"
#include "util.hpp"

namespace mixedsurf {

// A word over the generators of a finitely presented group: letter +k means
// generator k (1-based), -k its inverse.  The empty word is the identity.
using Word = std::vector<int>;

inline Word word_inverse(const Word& w) {
    Word out(w.rbegin(), w.rend());
    for (int& x : out) x = -x;
    return out;
}

inline Word word_concat(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

inline Word word_conjugate(const Word& t, const Word& w) {  // t w t^-1
    return word_concat(word_concat(t, w), word_inverse(t));
}

inline Word word_commutator(const Word& a, const Word& b) {  // a b a^-1 b^-1
    return word_concat(word_concat(a, b), word_concat(word_inverse(a), word_inverse(b)));
}

// <x_1,...,x_ngens | relators>
struct Presentation {
    int ngens = 0;
    std::vector<Word> relators;

    void validate() const {
        if (ngens < 0) throw error("bad presentation");
        for (const Word& r : relators)
            for (int x : r)
                if (x == 0 || x > ngens || x < -ngens) throw error("bad presentation");
    }
};

// Orbifold surface group of signature (genus; m_1,...,m_r): generators
// a_1,b_1,...,a_genus,b_genus,c_1,...,c_r with relators c_j^{m_j} and
// [a_1,b_1]...[a_genus,b_genus] c_1...c_r.
inline Presentation orbifold_presentation(int genus, const std::vector<int>& periods) {
    if (genus < 0) throw error("bad presentation");
    for (int m : periods)
        if (m < 2) throw error("bad presentation");
    const int r = static_cast<int>(periods.size());
    Presentation p;
    p.ngens = 2 * genus + r;
    Word surface;
    for (int i = 0; i < genus; ++i) {
        Word c = word_commutator(Word{2 * i + 1}, Word{2 * i + 2});
        surface.insert(surface.end(), c.begin(), c.end());
    }
    for (int j = 0; j < r; ++j) {
        p.relators.push_back(Word(periods[j], 2 * genus + j + 1));
        surface.push_back(2 * genus + j + 1);
    }
    if (!surface.empty()) p.relators.push_back(std::move(surface));
    return p;
}

// Direct product of two presented groups: disjoint generator sets, both
// relator lists, and a commutator for every cross pair.
inline Presentation product_presentation(const Presentation& a, const Presentation& b) {
    a.validate();
    b.validate();
    Presentation p;
    p.ngens = a.ngens + b.ngens;
    p.relators = a.relators;
    for (const Word& r : b.relators) {
        Word w = r;
        for (int& x : w) x += x > 0 ? a.ngens : -a.ngens;
        p.relators.push_back(std::move(w));
    }
    for (int i = 1; i <= a.ngens; ++i)
        for (int j = a.ngens + 1; j <= p.ngens; ++j)
            p.relators.push_back(word_commutator(Word{i}, Word{j}));
    return p;
}

// Right action of the generators on a finite coset set {0..n-1}: tracing a
// word applies its letters left to right.  Generators act by permutations.
struct CosetAction {
    int ncosets = 0;
    std::vector<std::vector<int>> fwd;  // fwd[k][c] = c * x_{k+1}
    std::vector<std::vector<int>> bwd;  // inverse permutations

    static CosetAction from_generators(int ncosets, const std::vector<std::vector<int>>& perms) {
        CosetAction a;
        a.ncosets = ncosets;
        a.fwd = perms;
        a.bwd.assign(perms.size(), std::vector<int>(ncosets));
        for (std::size_t k = 0; k < perms.size(); ++k) {
            if (static_cast<int>(perms[k].size()) != ncosets) throw error("bad coset action");
            std::vector<char> seen(ncosets, 0);
            for (int c = 0; c < ncosets; ++c) {
                int d = perms[k][c];
                if (d < 0 || d >= ncosets || seen[d]) throw error("bad coset action");
                seen[d] = 1;
                a.bwd[k][d] = c;
            }
        }
        return a;
    }

    int apply_letter(int c, int letter) const {
        if (letter > 0) return fwd[letter - 1][c];
        return bwd[-letter - 1][c];
    }

    int apply(int c, const Word& w) const {
        for (int x : w) c = apply_letter(c, x);
        return c;
    }
};

// A coset table for a subgroup of the presented group, given by an explicit
// action of the generators: each relator must fix every point and the action
// must be transitive from point 0 (otherwise the points are not a single
// coset space).
inline CosetAction coset_table_from_action(const Presentation& p, int npoints,
                                           const std::vector<std::vector<int>>& perms) {
    p.validate();
    if (npoints <= 0 || static_cast<int>(perms.size()) != p.ngens)
        throw error("bad coset action");
    CosetAction act = CosetAction::from_generators(npoints, perms);
    for (const Word& r : p.relators)
        for (int c = 0; c < npoints; ++c)
            if (act.apply(c, r) != c) throw error("action inconsistent with presentation");
    std::vector<char> found(npoints, 0);
    found[0] = 1;
    std::vector<int> queue{0};
    for (std::size_t qi = 0; qi < queue.size(); ++qi)
        for (int k = 0; k < p.ngens; ++k) {
            int d = act.fwd[k][queue[qi]];
            if (!found[d]) {
                found[d] = 1;
                queue.push_back(d);
            }
        }
    for (int c = 0; c < npoints; ++c)
        if (!found[c]) throw error("not a single subgroup");
    return act;
}

// Schreier transversal and Reidemeister-Schreier rewriting for the
// stabilizer of coset 0 of a transitive action compatible with a
// presentation.  Subgroup generators are numbered 1..sgen_count() in the
// order their defining edges (coset ascending, generator ascending) appear,
// skipping the spanning-tree edges, which rewrite to nothing.
class SubgroupRewriter {
  public:
    SubgroupRewriter(Presentation pres, CosetAction act)
        : pres_(std::move(pres)), act_(std::move(act)) {
        pres_.validate();
        if (static_cast<int>(act_.fwd.size()) != pres_.ngens)
            throw error("bad coset action");
        int n = act_.ncosets;
        // relators must act trivially or the action cannot factor through
        // the presented group
        for (const Word& r : pres_.relators)
            for (int c = 0; c < n; ++c)
                if (act_.apply(c, r) != c)
                    throw error("action inconsistent with presentation");
        // BFS spanning tree over signed letters, generator ascending,
        // positive before negative
        transversal_.assign(n, Word());
        std::vector<char> found(n, 0);
        found[0] = 1;
        tree_edge_.assign(n, std::vector<char>(pres_.ngens, 0));
        std::vector<int> queue{0};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int c = queue[qi];
            for (int k = 0; k < pres_.ngens; ++k)
                for (int sign = 0; sign < 2; ++sign) {
                    int letter = sign == 0 ? k + 1 : -(k + 1);
                    int d = act_.apply_letter(c, letter);
                    if (found[d]) continue;
                    found[d] = 1;
                    transversal_[d] = transversal_[c];
                    transversal_[d].push_back(letter);
                    // the positive edge of this step rewrites to nothing
                    if (sign == 0)
                        tree_edge_[c][k] = 1;
                    else
                        tree_edge_[d][k] = 1;
                    queue.push_back(d);
                }
        }
        for (int c = 0; c < n; ++c)
            if (!found[c]) throw error("not a single subgroup");
        sgen_of_edge_.assign(n, std::vector<int>(pres_.ngens, 0));
        for (int c = 0; c < n; ++c)
            for (int k = 0; k < pres_.ngens; ++k)
                if (!tree_edge_[c][k]) sgen_of_edge_[c][k] = ++sgen_count_;
    }

    const Presentation& presentation() const { return pres_; }
    const CosetAction& action() const { return act_; }
    int index() const { return act_.ncosets; }
    int sgen_count() const { return sgen_count_; }
    const Word& transversal(int coset) const { return transversal_[coset]; }

    // Rewrite a word tracing from `from` back to `from` into subgroup
    // generator letters; this is the image of transversal(from) * w *
    // transversal(from)^-1 under the rewriting map.
    Word rewrite_from(int from, const Word& w) const {
        Word out;
        int c = from;
        for (int x : w) {
            if (x > 0) {
                int k = x - 1;
                if (int s = sgen_of_edge_[c][k]) out.push_back(s);
                c = act_.fwd[k][c];
            } else {
                int k = -x - 1;
                int d = act_.bwd[k][c];
                if (int s = sgen_of_edge_[d][k]) out.push_back(-s);
                c = d;
            }
        }
        if (c != from) throw error("not in subgroup");
        return out;
    }

    // Rewrite a word in the stabilizer of coset 0.
    Word rewrite(const Word& w) const {
        if (act_.apply(0, w) != 0) throw error("not in subgroup");
        return rewrite_from(0, w);
    }

    // Ambient word of subgroup generator s: t_c x_k t_{c x_k}^-1 for the
    // edge (c, k) defining s.
    Word subgroup_generator_word(int s) const {
        if (s < 1 || s > sgen_count_) throw error("out of range");
        for (int c = 0; c < act_.ncosets; ++c)
            for (int k = 0; k < pres_.ngens; ++k)
                if (sgen_of_edge_[c][k] == s) {
                    Word w = transversal_[c];
                    w.push_back(k + 1);
                    Word back = word_inverse(transversal_[act_.fwd[k][c]]);
                    return word_concat(w, back);
                }
        throw error("out of range");
    }

    // Defining relators of the subgroup presentation: every conjugate of
    // every ambient relator by a transversal element, rewritten.
    std::vector<Word> subgroup_relators() const {
        std::vector<Word> out;
        for (int c = 0; c < act_.ncosets; ++c)
            for (const Word& r : pres_.relators) out.push_back(rewrite_from(c, r));
        return out;
    }

  private:
    Presentation pres_;
    CosetAction act_;
    std::vector<Word> transversal_;
    std::vector<std::vector<char>> tree_edge_;
    std::vector<std::vector<int>> sgen_of_edge_;
    int sgen_count_ = 0;
};

// Exponent-sum row of a word over ngens generators.
inline std::vector<long long> exponent_row(const Word& w, int ngens) {
    std::vector<long long> row(ngens, 0);
    for (int x : w) {
        if (x == 0 || x > ngens || x < -ngens) throw error("bad presentation");
        if (x > 0)
            ++row[x - 1];
        else
            --row[-x - 1];
    }
    return row;
}

// Abelianization of a presented group: cokernel of the relator
// exponent-sum matrix.
inline AbelianStructure abelianization(const Presentation& p) {
    p.validate();
    std::vector<std::vector<long long>> rows;
    rows.reserve(p.relators.size());
    for (const Word& r : p.relators) rows.push_back(exponent_row(r, p.ngens));
    return cokernel(rows, p.ngens);
}

}  // namespace mixedsurf
