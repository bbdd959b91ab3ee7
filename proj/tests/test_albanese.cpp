#include <doctest.h>

#include <mixedsurf/albanese.hpp>
#include <mixedsurf/catalogue.hpp>
#include <mixedsurf/extension.hpp>
#include <mixedsurf/genvec.hpp>
#include <mixedsurf/invariants.hpp>

#include <random>
#include <set>
#include <utility>
#include <vector>

using mixedsurf::albanese_genus;
using mixedsurf::automorphisms;
using mixedsurf::Catalogue;
using mixedsurf::compute_M;
using mixedsurf::enumerate_extensions;
using mixedsurf::enumerate_vectors;
using mixedsurf::extension_classes;
using mixedsurf::ExtensionClasses;
using mixedsurf::FiniteGroup;
using mixedsurf::g_action_on_pairs;
using mixedsurf::is_semi_isogenous;
using mixedsurf::mixed_group;
using mixedsurf::MixedExtension;
using mixedsurf::monodromy_strategies;
using mixedsurf::monodromy_strategy;
using mixedsurf::MonodromyStrategy;
using mixedsurf::o2_count;

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

// Every semi-isogenous (vector, extension) pair of the given group and type
// with the given involution count must produce the same fibre-relevant
// count M and fibre genus; returns how many pairs were inspected.  `stride`
// subsamples the vector list to keep the sweep proportionate.
int sweep_expect(const FiniteGroup& g0, const std::vector<int>& periods,
                 int want_o2, int g, long long want_m, long long want_genus,
                 std::size_t stride = 1) {
    auto cls = classes_of(g0);
    auto vecs = enumerate_vectors(g0, 1, periods);
    const auto& strat = monodromy_strategy("table-calibrated");
    int seen = 0;
    for (int rep : cls.reps) {
        const MixedExtension& ext = cls.all[rep];
        if (o2_count(g0, ext) != want_o2) continue;
        for (std::size_t i = 0; i < vecs.size(); i += stride) {
            if (!is_semi_isogenous(g0, 1, vecs[i], ext)) continue;
            const long long m = compute_M(g0, ext, 1, vecs[i], strat);
            CHECK(m == want_m);
            CHECK(albanese_genus(m, g, want_o2, g0.order()) == want_genus);
            ++seen;
        }
    }
    return seen;
}

}  // namespace

TEST_CASE("doubled group acts on pairs") {
    const FiniteGroup& g0 = grp(16, 11);
    auto exts = enumerate_extensions(g0, automorphisms(g0));
    REQUIRE(!exts.empty());
    const MixedExtension& ext = exts.front();
    const int n = g0.order();

    // identity fixes everything, inner elements act coordinatewise
    CHECK(g_action_on_pairs(g0, ext, 0, {3, 5}) == std::pair<int, int>{3, 5});
    for (int a : {1, 7, 12}) {
        auto p = g_action_on_pairs(g0, ext, a, {3, 5});
        CHECK(p.first == g0.mul(a, 3));
        CHECK(p.second == g0.mul(ext.phi[a], 5));
    }

    // the distinguished outer element swaps the coordinates and twists the
    // second one by tau
    auto q = g_action_on_pairs(g0, ext, n, {3, 5});
    CHECK(q.first == 5);
    CHECK(q.second == g0.mul(ext.tau, 3));

    SUBCASE("group law matches composition of actions") {
        FiniteGroup big = mixed_group(g0, ext);
        std::mt19937 rng(2026);
        std::uniform_int_distribution<int> dg(0, 2 * n - 1), dh(0, n - 1);
        for (int i = 0; i < 100; ++i) {
            const int x = dg(rng), y = dg(rng);
            const std::pair<int, int> p{dh(rng), dh(rng)};
            CHECK(g_action_on_pairs(g0, ext, big.mul(x, y), p) ==
                  g_action_on_pairs(
                      g0, ext, x, g_action_on_pairs(g0, ext, y, p)));
        }
        // in particular translating by (outer)*(g) equals acting twice
        for (int g = 0; g < 2 * n; g += 5) {
            const std::pair<int, int> p{dh(rng), dh(rng)};
            CHECK(g_action_on_pairs(g0, ext, big.mul(n, g), p) ==
                  g_action_on_pairs(
                      g0, ext, n, g_action_on_pairs(g0, ext, g, p)));
        }
    }

    SUBCASE("range checks") {
        CHECK_THROWS_WITH((void)g_action_on_pairs(g0, ext, 2 * n, {0, 0}),
                          "out of range");
        CHECK_THROWS_WITH((void)g_action_on_pairs(g0, ext, -1, {0, 0}),
                          "out of range");
        CHECK_THROWS_WITH((void)g_action_on_pairs(g0, ext, 0, {0, n}),
                          "out of range");
    }
}

TEST_CASE("monodromy strategy registry") {
    REQUIRE(!monodromy_strategies().empty());
    CHECK(monodromy_strategies().front().name == "table-calibrated");
    CHECK(monodromy_strategy("saturated").name == "saturated");
    CHECK_THROWS_WITH((void)monodromy_strategy("nope"),
                      "unknown monodromy strategy");
}

TEST_CASE("full monodromy image forces fibre genus g minus involutions") {
    // the three unbranched families over a genus-one base: image saturates,
    // so the union is all of G0 x G0 and the fibre genus is g(C) - |O_2|
    for (int idx : {2, 3, 5}) {
        const FiniteGroup& g0 = grp(8, idx);
        CHECK(sweep_expect(g0, {2, 2}, 0, 5, 64, 5, 7) > 0);
    }

    SUBCASE("branched saturated rows") {
        // Klein four-group with four branch points: M = 16 = |G0|^2
        CHECK(sweep_expect(grp(4, 2), {2, 2, 2, 2}, 2, 5, 16, 3) == 24);
        // elementary abelian of order nine: M = 81 = |G0|^2
        CHECK(sweep_expect(grp(9, 2), {3, 3}, 3, 7, 81, 4, 11) > 0);
    }

    SUBCASE("saturated strategy agrees on a full-image row") {
        const FiniteGroup& g0 = grp(8, 2);
        auto cls = classes_of(g0);
        auto vecs = enumerate_vectors(g0, 1, {2, 2});
        for (int rep : cls.reps) {
            const MixedExtension& ext = cls.all[rep];
            if (o2_count(g0, ext) != 0) continue;
            for (const auto& v : vecs) {
                if (!is_semi_isogenous(g0, 1, v, ext)) continue;
                CHECK(compute_M(g0, ext, 1, v,
                                monodromy_strategy("saturated")) == 64);
                return;
            }
        }
        FAIL("no free pair found");
    }
}

TEST_CASE("proper monodromy images halve or quarter the translate union") {
    // order-sixteen kernels over a genus-one base, two branch points of
    // period two: every family has M = |G0|^2 / 2, fibre genus 3, and the
    // saturated strategy would overshoot
    for (int idx : {2, 3, 5, 10, 11, 13})
        CHECK(sweep_expect(grp(16, idx), {2, 2}, 4, 9, 128, 3, 23) > 0);

    SUBCASE("the saturated count differs, so the image content matters") {
        const FiniteGroup& g0 = grp(16, 11);
        auto cls = classes_of(g0);
        auto vecs = enumerate_vectors(g0, 1, {2, 2});
        for (int rep : cls.reps) {
            const MixedExtension& ext = cls.all[rep];
            if (o2_count(g0, ext) != 4) continue;
            for (const auto& v : vecs) {
                if (!is_semi_isogenous(g0, 1, v, ext)) continue;
                CHECK(compute_M(g0, ext, 1, v,
                                monodromy_strategy("saturated")) == 256);
                CHECK(compute_M(g0, ext, 1, v,
                                monodromy_strategy("table-calibrated")) ==
                      128);
                return;
            }
        }
        FAIL("no free pair found");
    }
}

TEST_CASE("fibre genus at kernel orders twenty-four and thirty-two") {
    // order-24 kernels, twelve outer involutions' worth of branching at
    // order 32 and eight at order 24; these rows separate the fibre genus
    // values 2 and 3 within the same order
    CHECK(sweep_expect(grp(24, 14), {2, 2}, 8, 13, 288, 3, 37) > 0);
    CHECK(sweep_expect(grp(24, 5), {2, 2}, 8, 13, 288, 3, 37) > 0);
    CHECK(sweep_expect(grp(32, 5), {2, 2}, 12, 17, 256, 2, 101) > 0);
    CHECK(sweep_expect(grp(32, 8), {2, 2}, 12, 17, 512, 3, 101) > 0);
    CHECK(sweep_expect(grp(32, 9), {2, 2}, 12, 17, 512, 3, 101) > 0);
}

TEST_CASE("fibre genus formula") {
    CHECK(albanese_genus(64, 5, 0, 8) == 5);
    CHECK(albanese_genus(16, 5, 2, 4) == 3);
    CHECK(albanese_genus(128, 9, 4, 16) == 3);
    // degenerate fibres: g(C) - 1 = |O_2| gives genus one, which a caller
    // rejects for surfaces of general type
    CHECK(albanese_genus(64, 5, 4, 8) == 1);

    CHECK_THROWS_WITH((void)albanese_genus(63, 5, 0, 8), "inconsistent M");
    CHECK_THROWS_WITH((void)albanese_genus(0, 5, 0, 8), "inconsistent M");
    CHECK_THROWS_WITH((void)albanese_genus(-4, 5, 0, 8), "inconsistent M");
    CHECK_THROWS_WITH((void)albanese_genus(64, 5, 0, 0), "inconsistent M");
    // more involutions than the genus can carry
    CHECK_THROWS_WITH((void)albanese_genus(64, 5, 7, 8), "inconsistent M");
}

TEST_CASE("translate union rejects unusable inputs") {
    const FiniteGroup& g0 = grp(8, 2);
    auto cls = classes_of(g0);
    auto vecs = enumerate_vectors(g0, 1, {2, 2});
    REQUIRE(!vecs.empty());
    const auto& strat = monodromy_strategy("table-calibrated");

    // one semi-isogenous pair to anchor the checks
    const MixedExtension* ext_p = nullptr;
    const std::vector<int>* vec_p = nullptr;
    for (int rep : cls.reps) {
        for (const auto& v : vecs)
            if (is_semi_isogenous(g0, 1, v, cls.all[rep])) {
                ext_p = &cls.all[rep];
                vec_p = &v;
                break;
            }
        if (ext_p) break;
    }
    REQUIRE(ext_p != nullptr);
    const MixedExtension& ext = *ext_p;

    // the fibration over an elliptic curve needs a genus-one base
    auto d4vecs = enumerate_vectors(grp(8, 3), 0, {2, 2, 2, 2});
    REQUIRE(!d4vecs.empty());
    auto d4cls = classes_of(grp(8, 3));
    CHECK_THROWS_WITH((void)compute_M(grp(8, 3), d4cls.all[d4cls.reps[0]], 0,
                                      d4vecs.front(), strat),
                      "inconsistent inputs");
    // vectors must be generating vectors of the stated shape
    CHECK_THROWS_WITH((void)compute_M(g0, ext, 1, {0, 0, 0, 0}, strat),
                      "inconsistent inputs");
    CHECK_THROWS_WITH((void)compute_M(g0, ext, 1, {1, 2, 3}, strat),
                      "inconsistent inputs");

    SUBCASE("strategies must return subgroups of the pair group") {
        // {1, (x, 1)} with x of order four is never closed under products
        MonodromyStrategy broken{
            "broken", [](const FiniteGroup& g, const MixedExtension&, int,
                         const std::vector<int>&) {
                std::vector<char> mask(
                    static_cast<std::size_t>(g.order()) * g.order(), 0);
                mask[0] = 1;
                for (int x = 0; x < g.order(); ++x)
                    if (g.element_order(x) == 4) {
                        mask[x * g.order()] = 1;
                        break;
                    }
                return mask;
            }};
        MonodromyStrategy missing_identity{
            "missing-identity",
            [](const FiniteGroup& g, const MixedExtension&, int,
               const std::vector<int>&) {
                return std::vector<char>(
                    static_cast<std::size_t>(g.order()) * g.order(), 0);
            }};
        MonodromyStrategy wrong_size{
            "wrong-size", [](const FiniteGroup&, const MixedExtension&, int,
                             const std::vector<int>&) {
                return std::vector<char>(3, 1);
            }};
        CHECK_THROWS_WITH((void)compute_M(g0, ext, 1, *vec_p, broken),
                          "invalid monodromy image");
        CHECK_THROWS_WITH((void)compute_M(g0, ext, 1, *vec_p, missing_identity),
                          "invalid monodromy image");
        CHECK_THROWS_WITH((void)compute_M(g0, ext, 1, *vec_p, wrong_size),
                          "invalid monodromy image");
    }
}
