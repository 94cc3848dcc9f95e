#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sp6/rootsys.hpp"

#include <algorithm>
#include <set>

using namespace sp6;

TEST_CASE("root inventory: 18 roots, 6 compact, 12 noncompact") {
    const auto& roots = all_roots();
    CHECK(roots.size() == 18);
    int compact = 0, noncompact = 0;
    std::set<std::array<std::int64_t, 3>> seen;
    for (const Root& r : roots) {
        (r.is_compact() ? compact : noncompact)++;
        seen.insert(r.w.k);
        // every root's negative is also a root, with the same kind
        auto neg = std::find_if(roots.begin(), roots.end(),
                                [&](const Root& s) { return s.w == -r.w; });
        REQUIRE(neg != roots.end());
        CHECK(neg->kind == r.kind);
    }
    CHECK(compact == 6);
    CHECK(noncompact == 12);
    CHECK(seen.size() == 18);  // no duplicates
}

TEST_CASE("compact roots are exactly the e_j - e_k") {
    for (const Root& r : all_roots()) {
        std::int64_t coordsum = r.w[0] + r.w[1] + r.w[2];
        if (r.is_compact())
            CHECK(coordsum == 0);
        else
            CHECK((coordsum == 2 || coordsum == -2));
    }
}

TEST_CASE("positive roots: 9 total, pinned noncompact enumeration") {
    CHECK(positive_roots().size() == 9);
    CHECK(compact_positive_roots().size() == 3);

    // the fixed enumeration 2e1, 2e2, 2e3, e1+e2, e1+e3, e2+e3
    const auto& nc = noncompact_positive_roots();
    REQUIRE(nc.size() == 6);
    CHECK(nc[0].w == Weight{2, 0, 0});
    CHECK(nc[1].w == Weight{0, 2, 0});
    CHECK(nc[2].w == Weight{0, 0, 2});
    CHECK(nc[3].w == Weight{1, 1, 0});
    CHECK(nc[4].w == Weight{1, 0, 1});
    CHECK(nc[5].w == Weight{0, 1, 1});

    // rho is the half-sum of the positive roots
    Weight sum{0, 0, 0};
    for (const Root& r : positive_roots()) sum = sum + r.w;
    CHECK(sum == 2 * rho());
    CHECK(rho() == Weight{3, 2, 1});

    // delta_k is the half-sum of the compact positive roots
    Weight csum{0, 0, 0};
    for (const Root& r : compact_positive_roots()) csum = csum + r.w;
    CHECK(csum == 2 * delta_k());
    CHECK(delta_k() == Weight{1, 0, -1});
}

TEST_CASE("dominance predicates") {
    CHECK(Weight{3, 2, 1}.is_sp6_dominant());
    CHECK(Weight{0, 0, 0}.is_sp6_dominant());
    CHECK(Weight{2, 2, -4}.is_k_dominant());
    CHECK_FALSE(Weight{2, 2, -4}.is_sp6_dominant());
    CHECK_FALSE(Weight{1, 2, 0}.is_k_dominant());
    CHECK(Weight{4, -2, -2}.is_k_dominant());
}

TEST_CASE("Weyl group has order 48 and acts faithfully on rho") {
    const auto& g = group_elements();
    CHECK(g.size() == 48);
    std::set<std::array<std::int64_t, 3>> images;
    for (const auto& w : g) images.insert(w.apply(rho()).k);
    CHECK(images.size() == 48);  // rho is regular
}

TEST_CASE("compose and inverse") {
    const auto& g = group_elements();
    Weight probe{5, 3, 1};
    for (size_t i = 0; i < g.size(); i += 7) {
        for (size_t j = 0; j < g.size(); j += 5) {
            auto c = compose(g[i], g[j]);
            CHECK(c.apply(probe) == g[i].apply(g[j].apply(probe)));
        }
        auto inv = inverse(g[i]);
        CHECK(compose(inv, g[i]).is_identity());
        CHECK(compose(g[i], inv).is_identity());
    }
    CHECK(sigma_flip(2).apply(Weight{1, 2, 3}) == Weight{1, -2, 3});
    CHECK(sigma_swap(1, 3).apply(Weight{1, 2, 3}) == Weight{3, 2, 1});
}

TEST_CASE("coset representatives: 8 elements, pinned rho-images") {
    const auto& reps = coset_representatives();
    REQUIRE(reps.size() == 8);
    const Weight expected[8] = {{3, 2, 1},  {3, 2, -1},  {3, 1, -2},   {2, 1, -3},
                                {3, -1, -2}, {2, -1, -3}, {1, -2, -3}, {-1, -2, -3}};
    for (int i = 0; i < 8; ++i) CHECK(reps[static_cast<size_t>(i)].apply(rho()) == expected[i]);

    // each representative sends rho to a K-dominant weight (Weyl chamber for K)
    for (const auto& w : reps) CHECK(w.apply(rho()).is_k_dominant());

    // distinct modulo W(K): the K-dominant images are pairwise distinct
    std::set<std::array<std::int64_t, 3>> images;
    for (const auto& w : reps) images.insert(w.apply(rho()).k);
    CHECK(images.size() == 8);
}

TEST_CASE("pairing is the standard inner product") {
    CHECK(pairing(Weight{1, 2, 3}, Weight{4, 5, 6}) == 4 + 10 + 18);
    CHECK(pairing(rho(), Weight{2, 0, 0}) == 6);
}
