#include <doctest.h>

#include <mixedsurf/catalogue.hpp>
#include <mixedsurf/invariants.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

using namespace mixedsurf;

namespace {

const Catalogue& cat() {
    static Catalogue c = Catalogue::load_default();
    return c;
}

const FiniteGroup& grp(int order, int index) {
    return cat().find(order, index)->group;
}

// The extension of the given subgroup whose outer-involution count matches,
// taken from the deduplicated classes.
MixedExtension ext_with_o2(const FiniteGroup& g0, int want) {
    auto autos = automorphisms(g0);
    auto cls = extension_classes(g0, autos, enumerate_extensions(g0, autos));
    for (int rep : cls.reps)
        if (o2_count(g0, cls.all[rep]) == want) return cls.all[rep];
    REQUIRE(false);
    return {};
}

CoveringType make_type(long long q, std::vector<long long> periods,
                       long long g, long long order_g0, long long n_o2) {
    CoveringType t;
    t.q = q;
    t.periods = std::move(periods);
    t.g = g;
    t.beta = g - 1;
    t.order_g0 = order_g0;
    t.order_g = 2 * order_g0;
    t.n_o2 = n_o2;
    t.theta = rational(2 * (g - 1), order_g0);
    return t;
}

}  // namespace

TEST_CASE("surface invariants from covering data") {
    CHECK(euler_number(3, 4, 0) == 4);
    CHECK(euler_number(4, 6, 1) == 5);
    CHECK(euler_number(9, 64, 0) == 4);
    CHECK(canonical_square(5, 8, 2) == 6);
    CHECK(canonical_square(7, 12, 4) == 4);
    CHECK(canonical_square(9, 16, 6) == 2);
    CHECK(canonical_square(3, 4, 0) == 8);
    CHECK(canonical_square(17, 64, 12) == 2);
    CHECK(holomorphic_chi(5, 8, 2) == 1);
    CHECK(holomorphic_chi(17, 64, 12) == 1);
    CHECK(holomorphic_chi(2, 2, 1) == 0);

    CHECK_THROWS_AS(euler_number(4, 7, 0), error);
    CHECK_THROWS_AS(canonical_square(4, 7, 0), error);
    CHECK_THROWS_AS(holomorphic_chi(3, 3, 0), error);

    // Noether's identity holds whenever all three formulas divide.
    for (long long g = 2; g <= 20; ++g)
        for (long long order : {2LL, 4LL, 6LL, 8LL, 12LL, 16LL})
            for (long long n = 0; n <= g - 1; ++n) {
                long long e, k2, chi;
                try {
                    e = euler_number(g, order, n);
                    k2 = canonical_square(g, order, n);
                    chi = holomorphic_chi(g, order, n);
                } catch (const error&) {
                    continue;
                }
                CHECK(e + k2 == 12 * chi);
            }
}

TEST_CASE("branch locus descriptors") {
    // Cyclic order-six double of Z3: one outer involution, genus-2 curve.
    const FiniteGroup& z3 = grp(3, 1);
    MixedExtension e6 = ext_with_o2(z3, 1);
    FiniteGroup z6 = mixed_group(z3, e6);
    auto o2 = o2_complements(z3, e6);
    REQUIRE(o2.size() == 1);
    auto br = branch_descriptor(z6, 3, o2, 4);
    REQUIRE(br.curves.size() == 1);
    CHECK(br.curves[0] == BranchCurve{2, -4, 1});
    CHECK(br.delta() == 1);

    // Dihedral double of the Klein four-group: one class of two
    // involutions, a genus-3 curve of self-intersection -8.
    const FiniteGroup& v4 = grp(4, 2);
    MixedExtension ed = ext_with_o2(v4, 2);
    FiniteGroup d4 = mixed_group(v4, ed);
    REQUIRE(cat().find_isomorphic(d4)->index == 3);
    auto o2d = o2_complements(v4, ed);
    auto brd = branch_descriptor(d4, 4, o2d, 5);
    REQUIRE(brd.curves.size() == 1);
    CHECK(brd.curves[0] == BranchCurve{3, -8, 2});
    CHECK(brd.delta() == 2);

    // Double of the symmetric group of degree three with four outer
    // involutions: central one gives (2,-4), the size-three class (4,-12).
    const FiniteGroup& s3 = grp(6, 1);
    MixedExtension es = ext_with_o2(s3, 4);
    FiniteGroup d6 = mixed_group(s3, es);
    REQUIRE(cat().find_isomorphic(d6)->index == 4);
    auto o2s = o2_complements(s3, es);
    auto brs = branch_descriptor(d6, 6, o2s, 7);
    REQUIRE(brs.curves.size() == 2);
    CHECK(brs.curves[0] == BranchCurve{2, -4, 1});
    CHECK(brs.curves[1] == BranchCurve{4, -12, 3});
    CHECK(brs.delta() == 4);

    // No outer involutions: empty descriptor.
    const FiniteGroup& z2 = grp(2, 1);
    MixedExtension e4 = ext_with_o2(z2, 0);
    FiniteGroup z4 = mixed_group(z2, e4);
    CHECK(branch_descriptor(z4, 2, {}, 3).curves.empty());

    // Every curve satisfies 2 (genus - 1) |Z| = 4 (g - 1) and the class
    // sizes sum to the involution count.
    for (auto [g0p, genus] :
         std::vector<std::pair<const FiniteGroup*, long long>>{
             {&z3, 4}, {&v4, 5}, {&s3, 7}}) {
        auto autos = automorphisms(*g0p);
        for (const auto& ext : enumerate_extensions(*g0p, autos)) {
            auto comp = o2_complements(*g0p, ext);
            FiniteGroup mg = mixed_group(*g0p, ext);
            auto desc = branch_descriptor(mg, g0p->order(), comp, genus);
            long long sizes = 0;
            for (const auto& c : desc.curves) {
                sizes += c.class_size;
                long long z = mg.order() / c.class_size;
                CHECK(2 * (c.genus - 1) * z == 4 * (genus - 1));
            }
            CHECK(sizes == static_cast<long long>(comp.size()));
        }
    }
}

TEST_CASE("freeness of the induced action") {
    const FiniteGroup& z2 = grp(2, 1);
    // No branch points: the stabilizer set is trivial, any extension works.
    MixedExtension id1{{0, 1}, 1};
    CHECK(is_semi_isogenous(z2, 2, {1, 1, 0, 1}, id1));

    // The identity automorphism cannot be free once branch points exist.
    CHECK(!is_semi_isogenous(z2, 0, {1, 1}, MixedExtension{{0, 1}, 0}));

    // Klein four-group, branch entries only in one involution: an
    // automorphism moving that involution off itself is free, one fixing
    // it is not.
    const FiniteGroup& v4 = grp(4, 2);
    std::vector<int> v{1, 2, 3, 3};  // handles (1,2), branch entries (3,3)
    REQUIRE(is_generating_vector(v4, 1, {2, 2}, v));
    auto autos = automorphisms(v4);
    int verdicts[2] = {0, 0};
    for (const auto& alpha : autos) {
        if (!is_mixed_extension(v4, alpha, 0)) continue;
        MixedExtension ext{alpha, 0};
        bool free = is_semi_isogenous(v4, 1, v, ext);
        CHECK(free == (alpha[3] != 3));
        ++verdicts[free ? 1 : 0];
    }
    CHECK(verdicts[0] >= 1);
    CHECK(verdicts[1] >= 1);
}

TEST_CASE("post filters on outer involution data") {
    const FiniteGroup& z3 = grp(3, 1);
    auto autos = automorphisms(z3);
    auto exts = enumerate_extensions(z3, autos);

    // K^2 = 7 target: genus 4 over a genus-2 base, one involution wanted.
    CoveringType t7 = make_type(2, {}, 4, 3, 1);
    int pass = 0;
    for (const auto& ext : exts) {
        auto comp = o2_complements(z3, ext);
        FiniteGroup mg = mixed_group(z3, ext);
        auto br = branch_descriptor(mg, 3, comp, t7.g);
        if (post_filters(t7, comp, br)) {
            ++pass;
            CHECK(comp.size() == 1);
        }
    }
    CHECK(pass >= 1);

    // K^2 = 8 target over the order-two subgroup: only the involution-free
    // extension survives.
    const FiniteGroup& z2 = grp(2, 1);
    CoveringType t8 = make_type(2, {}, 3, 2, 0);
    MixedExtension good{{0, 1}, 1}, bad{{0, 1}, 0};
    auto cg = o2_complements(z2, good);
    auto cb = o2_complements(z2, bad);
    FiniteGroup mgg = mixed_group(z2, good);
    FiniteGroup mgb = mixed_group(z2, bad);
    CHECK(post_filters(t8, cg, branch_descriptor(mgg, 2, cg, 3)));
    CHECK(!post_filters(t8, cb, branch_descriptor(mgb, 2, cb, 3)));

    // A branch degree different from 8 chi - K^2 is rejected outright.
    BranchDescriptor wrong;
    wrong.curves.push_back({3, -8, 1});
    CHECK(!post_filters(t7, {0}, wrong));

    // Period caps: with two involutions in an order-four subgroup, a
    // period above |G0|/|O2| = 2 or not dividing |O2| fails, while the
    // genuine period-2 configuration passes.
    const FiniteGroup& v4 = grp(4, 2);
    MixedExtension ed = ext_with_o2(v4, 2);
    auto comp = o2_complements(v4, ed);
    FiniteGroup d4 = mixed_group(v4, ed);
    auto brd = branch_descriptor(d4, 4, comp, 5);
    CHECK(post_filters(make_type(1, {2, 2, 2, 2}, 5, 4, 2), comp, brd));
    CHECK(!post_filters(make_type(1, {4, 4}, 5, 4, 2), comp, brd));
    CHECK(!post_filters(make_type(1, {3, 3}, 5, 4, 2), comp, brd));

    // A period larger than some conjugacy class size is rejected even when
    // the divisibility and centralizer caps hold.
    BranchDescriptor split;
    split.curves = {{2, -4, 1}, {2, -4, 1}};
    CHECK(!post_filters(make_type(1, {2}, 9, 8, 2), {0, 1}, split));
}

namespace {

SurfaceFamily table_family_k2_6() {
    SurfaceFamily f;
    f.k2 = 6;
    f.pg = 2;
    f.q = 2;
    f.chi = 1;
    f.e = 6;
    f.g = 5;
    f.type = make_type(2, {}, 5, 4, 2);
    const FiniteGroup& v4 = grp(4, 2);
    f.extension = ext_with_o2(v4, 2);
    FiniteGroup d4 = mixed_group(v4, f.extension);
    f.branch =
        branch_descriptor(d4, 4, o2_complements(v4, f.extension), f.g);
    f.h1.rank = 4;
    f.h1.torsion = {2};
    f.minus_one_bound = 0;
    return f;
}

}  // namespace

TEST_CASE("family consistency report") {
    SurfaceFamily f = table_family_k2_6();
    auto rep = consistency_check(f);
    CHECK(rep.ok());
    CHECK(rep.violations.empty());

    // A maximal-K^2 family has empty branch locus and e = 4.
    SurfaceFamily m;
    m.k2 = 8;
    m.pg = 2;
    m.q = 2;
    m.chi = 1;
    m.e = 4;
    m.g = 3;
    m.type = make_type(2, {}, 3, 2, 0);
    m.h1.rank = 4;
    CHECK(consistency_check(m).ok());

    // Corrupted branch degree: delta = 3 against 8 chi - K^2 = 2.
    SurfaceFamily bad = table_family_k2_6();
    bad.branch.curves = {{2, -4, 1}, {3, -8, 1}};
    auto repb = consistency_check(bad);
    CHECK(!repb.ok());
    CHECK(std::find(repb.violations.begin(), repb.violations.end(),
                    "delta(B) = 8 chi - K^2") != repb.violations.end());

    // Wrong genus: the covering formulas no longer match.
    SurfaceFamily wg = table_family_k2_6();
    wg.g = 6;
    CHECK(!consistency_check(wg).ok());

    // Wrong homology rank.
    SurfaceFamily wh = table_family_k2_6();
    wh.h1.rank = 3;
    auto reph = consistency_check(wh);
    REQUIRE(!reph.ok());
    CHECK(reph.violations == std::vector<std::string>{"H_1 rank = 2q"});
}

TEST_CASE("Hodge determinant fixtures") {
    CHECK(hodge_det1(8, 6) == -288);
    CHECK(hodge_det1(6, 4) == 8);
    CHECK(hodge_det1(6, 6) == -160);

    const std::map<long long, long long> x2_row{{8, 0}, {7, 2}, {6, 4},
                                                {5, 6}, {4, 8}, {3, 10},
                                                {2, 13}, {1, 17}};
    for (auto [k2, x2] : x2_row) CHECK(hodge_floor_x2(k2) == x2);
    CHECK_THROWS_AS(hodge_floor_x2(0), error);
    CHECK_THROWS_AS(hodge_floor_x2(9), error);

    const std::map<std::pair<long long, long long>, long long> y2_table{
        {{5, 6}, -2}, {{4, 6}, 3},  {{4, 8}, -2}, {{3, 6}, 6},
        {{3, 8}, 4},  {{3, 10}, 0}, {{2, 6}, 9},  {{2, 8}, 7},
        {{2, 10}, 5}, {{2, 12}, 1}, {{1, 6}, 12}, {{1, 8}, 11},
        {{1, 10}, 9}, {{1, 12}, 7}, {{1, 14}, 4}, {{1, 16}, -1}};
    for (auto [k, y] : y2_table) {
        auto got = hodge_floor_y2(k.first, k.second);
        REQUIRE(got.has_value());
        CHECK(*got == y);
    }
    CHECK(!hodge_floor_y2(8, 6).has_value());

    // The staged Gram determinants reduce to the closed-form polynomials.
    for (long long k2 = 1; k2 <= 8; ++k2)
        for (long long a = 6; a <= 18; a += 2) {
            CHECK(detail::gram_det(detail::hodge_gram(k2, {a})) ==
                  hodge_det1(k2, a));
            for (long long b = 6; b <= 18; b += 2)
                CHECK(detail::gram_det(detail::hodge_gram(k2, {a, b})) ==
                      hodge_det2(k2, a, b));
        }
}

TEST_CASE("bound on contractible curves") {
    const std::map<long long, long long> bounds{{8, 0}, {7, 0}, {6, 0},
                                                {5, 1}, {4, 1}, {3, 2},
                                                {2, 2}, {1, 3}};
    for (auto [k2, b] : bounds) CHECK(minus_one_curve_bound(k2) == b);
    CHECK_THROWS_AS(minus_one_curve_bound(0), error);
    CHECK_THROWS_AS(minus_one_curve_bound(9), error);

    // Brute-force cross-check of the first two stages over a wide range.
    for (long long k2 = 1; k2 <= 8; ++k2) {
        bool one = false, two = false;
        for (long long a = 6; a <= 200; a += 2) {
            if (hodge_det1(k2, a) < 0) continue;
            one = true;
            for (long long b = a; b <= 200; b += 2)
                if (hodge_det1(k2, b) >= 0 && hodge_det2(k2, a, b) <= 0)
                    two = true;
        }
        const long long bound = minus_one_curve_bound(k2);
        CHECK((bound == 0) == !one);
        CHECK((bound == 1) == (one && !two));
        CHECK((bound >= 2) == two);
    }
}
