#include <doctest.h>

#include <mixedsurf/catalogue.hpp>
#include <mixedsurf/extension.hpp>
#include <mixedsurf/genvec.hpp>
#include <mixedsurf/homology.hpp>
#include <mixedsurf/invariants.hpp>

#include <algorithm>
#include <set>
#include <vector>

using mixedsurf::AbelianStructure;
using mixedsurf::abelianization;
using mixedsurf::automorphisms;
using mixedsurf::branch_descriptor;
using mixedsurf::build_G_presentation;
using mixedsurf::Catalogue;
using mixedsurf::enumerate_extensions;
using mixedsurf::enumerate_vectors;
using mixedsurf::extension_classes;
using mixedsurf::ExtensionClasses;
using mixedsurf::FiniteGroup;
using mixedsurf::h1_of_family;
using mixedsurf::HomologyInput;
using mixedsurf::is_semi_isogenous;
using mixedsurf::make_homology_input;
using mixedsurf::mixed_group;
using mixedsurf::MixedExtension;
using mixedsurf::o2_complements;
using mixedsurf::psi_word_map;
using mixedsurf::Word;

namespace {

const Catalogue& cat() {
    static Catalogue c = Catalogue::load_default();
    return c;
}

const FiniteGroup& grp(int order, int index) {
    return cat().find(order, index)->group;
}

ExtensionClasses classes_of(const FiniteGroup& g) {
    auto auts = automorphisms(g);
    return extension_classes(g, auts, enumerate_extensions(g, auts));
}

int eval(const FiniteGroup& g, const Word& w, const std::vector<int>& v) {
    int acc = 0;
    for (int x : w) acc = g.mul(acc, x > 0 ? v[x - 1] : g.inv(v[-x - 1]));
    return acc;
}

}  // namespace

TEST_CASE("shortest positive word sections") {
    const FiniteGroup& z2 = grp(2, 1);
    auto w2 = psi_word_map(z2, {1, 0, 0, 0});
    REQUIRE(w2.size() == 2);
    CHECK(w2[0] == Word{});
    CHECK(w2[1] == Word{1});

    // inverses are reached as powers, not as inverse letters
    const FiniteGroup& z3 = grp(3, 1);
    auto w3 = psi_word_map(z3, {1, 0});
    REQUIRE(w3.size() == 3);
    CHECK(w3[0] == Word{});
    CHECK(w3[1] == Word{1});
    CHECK(w3[2] == Word{1, 1});

    SUBCASE("sections at order eight stay within the directed diameter") {
        const FiniteGroup& d4 = grp(8, 3);
        auto vecs = enumerate_vectors(d4, 0, {2, 2, 2, 2});
        REQUIRE(!vecs.empty());
        const std::vector<int>& v = vecs.front();
        auto words = psi_word_map(d4, v);
        // independent distance computation on the Cayley digraph
        std::vector<int> dist(8, -1);
        dist[0] = 0;
        std::vector<int> bfs{0};
        for (std::size_t i = 0; i < bfs.size(); ++i)
            for (int x : v) {
                int b = d4.mul(bfs[i], x);
                if (dist[b] < 0) {
                    dist[b] = dist[bfs[i]] + 1;
                    bfs.push_back(b);
                }
            }
        for (int a = 0; a < 8; ++a) {
            CHECK(eval(d4, words[a], v) == a);
            CHECK(static_cast<int>(words[a].size()) == dist[a]);
            CHECK(std::all_of(words[a].begin(), words[a].end(), [](int x) { return x > 0; }));
        }
        CHECK(words == psi_word_map(d4, v));
    }

    SUBCASE("non-generating images are rejected") {
        const FiniteGroup& v4 = grp(4, 2);
        CHECK_THROWS_WITH((void)psi_word_map(v4, {1, 1}), "inconsistent inputs");
    }
}

TEST_CASE("homology input validation") {
    const FiniteGroup& z2 = grp(2, 1);
    MixedExtension ext{{0, 1}, 1};

    HomologyInput in = make_homology_input(z2, 2, {}, {1, 0, 0, 0}, ext);
    CHECK(in.psi_words.size() == 2);
    CHECK(in.vec == std::vector<int>{1, 0, 0, 0});

    // not a generating vector of the claimed type
    CHECK_THROWS_WITH((void)make_homology_input(z2, 2, {}, {0, 0, 0, 0}, ext),
                      "inconsistent inputs");
    CHECK_THROWS_WITH((void)make_homology_input(z2, 1, {2}, {1, 0, 0}, ext),
                      "inconsistent inputs");
    // not a mixed extension: phi must fix tau
    const FiniteGroup& v4 = grp(4, 2);
    CHECK_THROWS_WITH((void)make_homology_input(v4, 2, {}, {1, 2, 0, 0}, {{0, 2, 1, 3}, 1}),
                      "not a valid mixed extension");
}

TEST_CASE("presentation of the index two tower") {
    // G0 = Z/2, genus-2 base, identity extension over tau = the involution
    const FiniteGroup& z2 = grp(2, 1);
    MixedExtension ext{{0, 1}, 1};
    HomologyInput in = make_homology_input(z2, 2, {}, {1, 0, 0, 0}, ext);

    mixedsurf::Presentation g = build_G_presentation(in);
    // the ambient product has 8 generators, the index is |G0| = 2, so the
    // Schreier count is 8*2 - 1; one fresh generator is added on top
    CHECK(g.ngens == 8 * 2 - 1 + 1);
    g.validate();

    // without outer involutions the quotient rows are empty, so the first
    // homology is just the abelianization of the presentation
    CHECK(o2_complements(z2, ext).empty());
    CHECK(abelianization(g) == h1_of_family(in, {}));
}

TEST_CASE("first homology of small table families") {
    SUBCASE("order two kernel, no branch curves") {
        const FiniteGroup& z2 = grp(2, 1);
        MixedExtension ext{{0, 1}, 1};
        HomologyInput in = make_homology_input(z2, 2, {}, {1, 0, 0, 0}, ext);
        CHECK(h1_of_family(in, {}) == AbelianStructure{4, {2}});
    }

    SUBCASE("order three kernel, one branch curve") {
        const FiniteGroup& z3 = grp(3, 1);
        MixedExtension ext{{0, 1, 2}, 1};
        HomologyInput in = make_homology_input(z3, 2, {}, {1, 0, 0, 0}, ext);
        auto o2 = o2_complements(z3, ext);
        CHECK(o2 == std::vector<int>{1});
        CHECK(h1_of_family(in, o2) == AbelianStructure{4, {}});
        // the fixed-point row is what kills the residual 2-torsion
        CHECK(abelianization(build_G_presentation(in)) == AbelianStructure{4, {2}});
    }

    SUBCASE("trivial kernel") {
        const FiniteGroup& e = grp(1, 1);
        MixedExtension ext{{0}, 0};
        HomologyInput q3 = make_homology_input(e, 3, {}, {0, 0, 0, 0, 0, 0}, ext);
        CHECK(o2_complements(e, ext) == std::vector<int>{0});
        CHECK(h1_of_family(q3, {0}) == AbelianStructure{6, {}});
        CHECK(abelianization(build_G_presentation(q3)) == AbelianStructure{6, {2}});
        HomologyInput q1 = make_homology_input(e, 1, {}, {0, 0}, ext);
        CHECK(h1_of_family(q1, {0}) == AbelianStructure{2, {}});
    }

    SUBCASE("quaternion kernel has free first homology") {
        const FiniteGroup& q8 = grp(8, 4);
        // two non-commuting order-4 elements i, j: the vector (i,j,i,j)
        // satisfies [i,j][i,j] = 1 and generates
        std::vector<int> v;
        for (int i = 1; i < 8 && v.empty(); ++i)
            for (int j = i + 1; j < 8; ++j)
                if (q8.element_order(i) == 4 && q8.element_order(j) == 4 &&
                    q8.mul(i, j) != q8.mul(j, i)) {
                    v = {i, j, i, j};
                    break;
                }
        REQUIRE(!v.empty());

        ExtensionClasses cls = classes_of(q8);
        int hits = 0;
        for (int r : cls.reps) {
            const MixedExtension& ext = cls.all[r];
            auto o2 = o2_complements(q8, ext);
            if (o2.size() != 6) continue;
            ++hits;
            CHECK(is_semi_isogenous(q8, 2, v, ext));
            HomologyInput in = make_homology_input(q8, 2, {}, v, ext);
            CHECK(h1_of_family(in, o2) == AbelianStructure{4, {}});

            // the six outer involutions fall into three two-element classes
            // of genus-3 branch curves of self-intersection -8
            auto branch = branch_descriptor(mixed_group(q8, ext), 8, o2, 9);
            REQUIRE(branch.curves.size() == 3);
            for (const auto& c : branch.curves) {
                CHECK(c.genus == 3);
                CHECK(c.self_intersection == -8);
                CHECK(c.class_size == 2);
            }
        }
        CHECK(hits == 1);
    }

    SUBCASE("order eight kernel over a twice-branched torus") {
        const FiniteGroup& g = grp(8, 2);
        auto vecs = enumerate_vectors(g, 1, {2, 2});
        CHECK(vecs.size() == 120);
        ExtensionClasses cls = classes_of(g);
        int shown = 0;
        for (int r : cls.reps) {
            const MixedExtension& ext = cls.all[r];
            if (!o2_complements(g, ext).empty()) continue;
            for (const auto& v : vecs) {
                if (!is_semi_isogenous(g, 1, v, ext)) continue;
                HomologyInput in = make_homology_input(g, 1, {2, 2}, v, ext);
                CHECK(h1_of_family(in, {}) == AbelianStructure{2, {4}});
                if (++shown == 3) break;
            }
            if (shown == 3) break;
        }
        CHECK(shown == 3);
    }
}

TEST_CASE("first homology at order sixteen") {
    // elementary abelian kernel of order 16 with six order-2 branch points:
    // the surviving actions split into exactly two homology types
    const FiniteGroup& g = grp(16, 14);
    auto vecs = enumerate_vectors(g, 0, {2, 2, 2, 2, 2, 2});
    CHECK(vecs.size() == 504000);
    auto auts = automorphisms(g);
    CHECK(auts.size() == 20160);
    ExtensionClasses cls = extension_classes(g, auts, enumerate_extensions(g, auts));
    CHECK(cls.all.size() == 1696);
    CHECK(cls.reps.size() == 5);

    std::set<AbelianStructure> seen;
    for (int r : cls.reps) {
        const MixedExtension& ext = cls.all[r];
        auto o2 = o2_complements(g, ext);
        if (o2.size() != 4) continue;
        int step = 0;
        for (const auto& v : vecs) {
            if (!is_semi_isogenous(g, 0, v, ext)) continue;
            if (step++ % 500 != 0) continue;
            HomologyInput in = make_homology_input(g, 0, {2, 2, 2, 2, 2, 2}, v, ext);
            AbelianStructure h1 = h1_of_family(in, o2);
            CHECK(h1.rank == 0);
            seen.insert(h1);
        }
    }
    CHECK(seen == std::set<AbelianStructure>{{0, {2, 2, 4, 4}}, {0, {4, 4, 4}}});
}

TEST_CASE("first homology at order thirty-two") {
    // the unbranched genus-9 action of the order-64 group: every fixed-point
    // free representative has the same finite first homology
    const FiniteGroup& g = grp(32, 12);
    auto vecs = enumerate_vectors(g, 0, {2, 2, 2, 2, 2});
    CHECK(vecs.size() == 46080);
    auto auts = automorphisms(g);
    CHECK(auts.size() == 3072);
    ExtensionClasses cls = extension_classes(g, auts, enumerate_extensions(g, auts));
    CHECK(cls.all.size() == 2080);
    CHECK(cls.reps.size() == 28);

    int families = 0;
    for (int r : cls.reps) {
        const MixedExtension& ext = cls.all[r];
        if (!o2_complements(g, ext).empty()) continue;
        for (const auto& v : vecs) {
            if (!is_semi_isogenous(g, 0, v, ext)) continue;
            HomologyInput in = make_homology_input(g, 0, {2, 2, 2, 2, 2}, v, ext);
            CHECK(h1_of_family(in, {}) == AbelianStructure{0, {2, 2, 2, 8}});
            ++families;
            break;
        }
    }
    CHECK(families > 0);
}

TEST_CASE("moves preserve first homology") {
    SUBCASE("order two kernel, full orbit") {
        const FiniteGroup& z2 = grp(2, 1);
        MixedExtension ext{{0, 1}, 1};
        auto orbit = mixedsurf::vector_orbit(z2, 2, {1, 0, 0, 0});
        CHECK(orbit.size() == 15);
        for (const auto& v : orbit) {
            HomologyInput in = make_homology_input(z2, 2, {}, v, ext);
            CHECK(h1_of_family(in, {}) == AbelianStructure{4, {2}});
        }
    }

    SUBCASE("order three kernel, sampled orbit") {
        const FiniteGroup& z3 = grp(3, 1);
        MixedExtension ext{{0, 1, 2}, 1};
        auto orbit = mixedsurf::vector_orbit(z3, 2, {1, 0, 0, 0});
        CHECK(orbit.size() == 80);
        for (std::size_t i = 0; i < orbit.size(); i += 7) {
            HomologyInput in = make_homology_input(z3, 2, {}, orbit[i], ext);
            CHECK(h1_of_family(in, {1}) == AbelianStructure{4, {}});
        }
    }
}

TEST_CASE("fixed point rows must belong to outer involutions") {
    const FiniteGroup& z2 = grp(2, 1);
    MixedExtension ext{{0, 1}, 1};
    HomologyInput in = make_homology_input(z2, 2, {}, {1, 0, 0, 0}, ext);
    // (0, 1) does not square to the identity under this extension
    CHECK_THROWS_WITH((void)h1_of_family(in, {0}), "inconsistent inputs");
    CHECK_THROWS_WITH((void)h1_of_family(in, {5}), "out of range");
}
