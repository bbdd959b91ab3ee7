#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "extension.hpp"
#include "fp.hpp"
#include "genvec.hpp"
#include "group.hpp"
#include "smith.hpp"
#include "util.hpp"

namespace mixedsurf {

// Shortest-word section of the epimorphism psi defined by a generating
// vector: breadth-first search over the Cayley digraph of G^0 on the
// generator images.  words[a] is a positive word in the orbifold
// generators with psi(words[a]) = a, of minimal length, first in
// generator order among those; inverses are reached as powers, so the
// letters stay positive.
inline std::vector<Word> psi_word_map(const FiniteGroup& g0, const std::vector<int>& v) {
    const int n = g0.order();
    std::vector<Word> words(n);
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    std::vector<int> queue{0};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const int a = queue[qi];
        for (int k = 0; k < static_cast<int>(v.size()); ++k) {
            const int b = g0.mul(a, v[k]);
            if (seen[b]) continue;
            seen[b] = 1;
            words[b] = words[a];
            words[b].push_back(k + 1);
            queue.push_back(b);
        }
    }
    for (int a = 0; a < n; ++a)
        if (!seen[a]) throw error("inconsistent inputs");
    return words;
}

// Everything the fundamental-group construction of one family consumes:
// the covering type data, the generating vector, the mixed extension, and
// a word map realizing a section of psi.
struct HomologyInput {
    FiniteGroup g0;
    int q = 0;
    std::vector<int> periods;
    std::vector<int> vec;
    MixedExtension ext;
    std::vector<Word> psi_words;
};

inline HomologyInput make_homology_input(const FiniteGroup& g0, int q,
                                         const std::vector<int>& periods,
                                         const std::vector<int>& v,
                                         const MixedExtension& ext) {
    if (!is_generating_vector(g0, q, periods, v)) throw error("inconsistent inputs");
    check_mixed_extension(g0, ext);
    HomologyInput in{g0, q, periods, v, ext, psi_word_map(g0, v)};
    for (int a = 0; a < g0.order(); ++a)
        if (detail::eval_letters(g0, in.psi_words[a], v.data()) != a)
            throw error("inconsistent inputs");
    return in;
}

namespace detail {

// Letters of a word moved into the second factor of a product presentation
// whose first factor has `shift` generators.
inline Word embed_factor(const Word& w, int shift) {
    Word out = w;
    for (int& x : out) x += x > 0 ? shift : -shift;
    return out;
}

// The two-step tower pi_1(C x C) = H <= T x T and G = <H, tau'>, kept
// together because the fixed-point rows of h1_of_family must be rewritten
// through the same Schreier generators the presentation of G uses.
struct MixedPresentationBuild {
    SubgroupRewriter rewriter;  // H inside the product of two copies of T
    int half = 0;               // generators per factor of the product
    std::vector<int> phi_inv;   // inverse table of ext.phi
    Word t;                     // psi word of tau, in the letters of T
    Presentation group;         // G over gen(H) plus the fresh tau'
    int tau_prime = 0;          // letter of tau' in `group`
};

inline MixedPresentationBuild build_mixed_presentation(const HomologyInput& in) {
    const FiniteGroup& g0 = in.g0;
    const int n = g0.order();
    const int half = genvec_size(in.q, static_cast<int>(in.periods.size()));
    const Presentation torb = orbifold_presentation(in.q, in.periods);
    Presentation ambient = product_presentation(torb, torb);

    std::vector<int> phi_inv(n);
    for (int a = 0; a < n; ++a) phi_inv[in.ext.phi[a]] = a;

    // H is the stabilizer of the identity under the right action
    // g * (t1, t2) = psi(t1)^-1 g phi^-1(psi(t2)) of the product on G^0.
    std::vector<std::vector<int>> perms(ambient.ngens, std::vector<int>(n));
    for (int k = 0; k < half; ++k) {
        const int si = g0.inv(in.vec[k]);
        const int f = phi_inv[in.vec[k]];
        for (int c = 0; c < n; ++c) perms[k][c] = g0.mul(si, c);
        for (int c = 0; c < n; ++c) perms[half + k][c] = g0.mul(c, f);
    }
    CosetAction act = coset_table_from_action(ambient, n, perms);

    MixedPresentationBuild b{SubgroupRewriter(std::move(ambient), std::move(act)),
                             half,
                             std::move(phi_inv),
                             in.psi_words[in.ext.tau],
                             {},
                             0};
    const SubgroupRewriter& rw = b.rewriter;
    if (rw.index() != n) throw error("inconsistent inputs");

    const int sgens = rw.sgen_count();
    b.tau_prime = sgens + 1;
    const Word tau_tilde = rw.rewrite(word_concat(b.t, embed_factor(b.t, half)));

    // Conjugation by tau' sends (t1, t2) to (t2, t t1 t^-1); on ambient
    // letters: a first-factor generator to its t-conjugate in the second
    // factor, a second-factor generator to its twin in the first.
    auto conj_tau = [&](const Word& w) {
        Word out;
        for (int x : w) {
            const int k = x > 0 ? x : -x;
            if (k <= half) {
                Word img = embed_factor(word_conjugate(b.t, Word{k}), half);
                if (x < 0) img = word_inverse(img);
                out.insert(out.end(), img.begin(), img.end());
            } else {
                out.push_back(x > 0 ? k - half : half - k);
            }
        }
        return out;
    };

    b.group.ngens = sgens + 1;
    b.group.relators = rw.subgroup_relators();
    for (int s = 1; s <= sgens; ++s) {
        Word r = rw.rewrite(conj_tau(rw.subgroup_generator_word(s)));
        r.push_back(b.tau_prime);
        r.push_back(-s);
        r.push_back(-b.tau_prime);
        b.group.relators.push_back(std::move(r));
    }
    Word square{b.tau_prime, b.tau_prime};
    b.group.relators.push_back(word_concat(square, word_inverse(tau_tilde)));
    b.group.validate();
    return b;
}

}  // namespace detail

// Presentation of the extension G of H by the class of tau': the relators
// of H, one conjugation relator per Schreier generator, and the square of
// the fresh generator identified with tau tilde.  Kept Tietze-unreduced:
// it is emitted for inspection and consumed only through abelianization.
inline Presentation build_G_presentation(const HomologyInput& in) {
    return detail::build_mixed_presentation(in).group;
}

// H1(X, Z): the abelianization of G, killed further by one row per
// order-two element outside G^0.  A stored complement (a, 1) is tau' h
// with h = phi^-1(a); its class acts on H1 through the exponent row of
// tau' (h1, (t h1)^-1) where h1 is the psi word of h.
inline AbelianStructure h1_of_family(const HomologyInput& in, const std::vector<int>& o2) {
    const detail::MixedPresentationBuild b = detail::build_mixed_presentation(in);
    const int cols = b.group.ngens;
    std::vector<std::vector<long long>> rows;
    rows.reserve(b.group.relators.size() + o2.size());
    for (const Word& r : b.group.relators) rows.push_back(exponent_row(r, cols));
    for (int a : o2) {
        if (a < 0 || a >= in.g0.order()) throw error("out of range");
        const Word& h1 = in.psi_words[b.phi_inv[a]];
        const Word pair = word_concat(
            h1, detail::embed_factor(word_inverse(word_concat(b.t, h1)), b.half));
        // membership in H is exactly the order-two condition on (a, 1)
        if (b.rewriter.action().apply(0, pair) != 0) throw error("inconsistent inputs");
        std::vector<long long> row = exponent_row(b.rewriter.rewrite(pair), cols);
        ++row[b.tau_prime - 1];
        rows.push_back(std::move(row));
    }
    return cokernel(rows, cols);
}

}  // namespace mixedsurf
