#include "doctest.h"

#include "colorfix/audit.hpp"
#include "colorfix/coloring.hpp"
#include "colorfix/generate.hpp"

#include "oracles.hpp"

using namespace colorfix;

TEST_CASE("coloring enumeration") {
    CHECK(enumerate_colorings(make_complete(4), 4).size() == 1);
    CHECK(enumerate_colorings(make_fig6(), 4).size() == 2);
    CHECK(enumerate_colorings(make_cycle(5), 3).size() == 5);

    SUBCASE("the two fig6 partitions differ only by swapping e and f") {
        std::vector<Coloring> cols = enumerate_colorings(make_fig6(), 4);
        REQUIRE(cols.size() == 2);
        CHECK(cols[0].classes == std::vector<vertex_set>{make_set({0, 4}), make_set({1, 5}),
                                                         make_set({2}), make_set({3})});
        CHECK(cols[1].classes == std::vector<vertex_set>{make_set({0, 5}), make_set({1, 4}),
                                                         make_set({2}), make_set({3})});
    }
    SUBCASE("classes are independent, disjoint, exhaustive, ordered by minimum") {
        oracles::Rng rng(5);
        for (int t = 0; t < 10; ++t) {
            Graph g = oracles::random_graph(6, 40, rng);
            for (const Coloring& col : enumerate_colorings(g, 4)) {
                vertex_set all = 0;
                int prev_min = -1;
                for (vertex_set c : col.classes) {
                    CHECK(c != 0);
                    CHECK((all & c) == 0);
                    all |= c;
                    CHECK(lowest_vertex(c) > prev_min);
                    prev_min = lowest_vertex(c);
                    for (int v : set_vertices(c)) CHECK((g.neighbors(v) & c) == 0);
                }
                CHECK(all == g.vertices());
            }
        }
    }
    SUBCASE("C5 partition count agrees with the labeled quotient") {
        // 3^5 labelings quotiented by label permutations: the 5 proper
        // 3-labelings-per-partition structure gives 30 = 5 * 3! labelings.
        CHECK(oracles::count_labelings_direct(make_cycle(5), 3) == 30);
    }
}

TEST_CASE("chromatic number") {
    CHECK(chromatic_number(make_cycle(5)) == 3);
    CHECK(chromatic_number(make_complete(4)) == 4);
    CHECK(chromatic_number(oracles::make_petersen()) == 3);
    CHECK(chromatic_number(Graph(0)) == 0);
    CHECK(chromatic_number(Graph(3)) == 1);
    CHECK(chromatic_number(make_cf_chain(3)) == 4);

    SUBCASE("monotone under edge addition") {
        oracles::Rng rng(13);
        for (int t = 0; t < 20; ++t) {
            Graph g = oracles::random_graph(6, 50, rng);
            int chi = chromatic_number(g);
            for (int u = 0; u < 6; ++u) {
                for (int v = u + 1; v < 6; ++v) {
                    if (g.has_edge(u, v)) continue;
                    int chi2 = chromatic_number(g.with_edge(u, v));
                    CHECK(chi2 >= chi);
                    CHECK(chi2 <= chi + 1);
                }
            }
        }
    }
}

TEST_CASE("labeled coloring counts reconcile with partition enumeration") {
    // Sum over partitions with c classes of k!/(k-c)! must equal the
    // deletion-contraction chromatic polynomial at k.
    auto reconciled = [](const Graph& g, int k) {
        long long sum = 0;
        for (const Coloring& col : enumerate_colorings(g, k)) {
            long long ways = 1;
            for (int i = 0; i < col.class_count(); ++i) ways *= (k - i);
            sum += ways;
        }
        return sum == oracles::chromatic_polynomial_at(g, k);
    };
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : audit_detail::all_graphs_upto_iso(n))
            for (int k = 1; k <= 4; ++k) CHECK(reconciled(g, k));

    SUBCASE("polynomial oracle itself matches direct labeling counts") {
        oracles::Rng rng(3);
        for (int t = 0; t < 10; ++t) {
            Graph g = oracles::random_graph(5, 50, rng);
            for (int k = 1; k <= 4; ++k)
                CHECK(oracles::chromatic_polynomial_at(g, k) ==
                      oracles::count_labelings_direct(g, k));
        }
    }
}

TEST_CASE("planar graphs in the corpus never need a fifth color") {
    // A failure here means a bug in the coloring or planarity module, not a
    // four-color-theorem counterexample.
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : audit_detail::all_graphs_upto_iso(n))
            if (g.is_connected() && is_planar(g)) CHECK(chromatic_number(g) <= 4);
}

TEST_CASE("criticality") {
    CHECK(is_k_critical(make_complete(4), 4));
    CHECK(is_k_critical(make_cycle(5), 3));
    CHECK(is_k_critical(make_wheel(5), 4));
    CHECK_FALSE(is_k_critical(make_fig6(), 4));
    CHECK_FALSE(is_k_critical(make_cycle(6), 3));
    CHECK_FALSE(is_k_critical(make_complete(4), 3));

    SUBCASE("deleting any edge of a critical graph drops chi by exactly one") {
        for (const Graph& g : {make_complete(4), make_cycle(5), make_cycle(7), make_wheel(5)}) {
            int k = chromatic_number(g);
            for (auto [u, v] : g.edges())
                CHECK(chromatic_number(g.without_edge(u, v)) == k - 1);
        }
    }
}

TEST_CASE("unique colorability") {
    CHECK(is_uniquely_k_colorable(make_complete(4), 4));
    CHECK_FALSE(is_uniquely_k_colorable(make_fig6(), 4));
    CHECK(is_uniquely_k_colorable(make_apollonian(2, 0), 4));
}

TEST_CASE("apollonian recognition") {
    CHECK(is_apollonian(make_complete(4)));
    CHECK(is_apollonian(make_complete(3)));
    CHECK_FALSE(is_apollonian(make_cycle(5)));
    CHECK_FALSE(is_apollonian(make_fig6()));
    CHECK_FALSE(is_apollonian(oracles::make_octahedron()));
    CHECK_FALSE(is_apollonian(make_complete(2)));

    SUBCASE("generated networks are apollonian and uniquely 4-colorable") {
        for (int steps = 0; steps <= 4; ++steps) {
            for (std::uint64_t seed : {0ULL, 1ULL, 2ULL}) {
                Graph g = make_apollonian(steps, seed);
                CHECK(is_apollonian(g));
                CHECK(is_uniquely_k_colorable(g, 4));
            }
        }
    }
}

TEST_CASE("pinned labelings") {
    SUBCASE("fig6 pins d to the fourth color in both labelings") {
        std::vector<PinnedLabeling> labs = pinned_labelings(make_fig6(), CycleRef{{0, 1, 2}}, 4);
        REQUIRE(labs.size() == 2);
        for (const PinnedLabeling& lab : labs) {
            CHECK(lab.color[0] == 1);
            CHECK(lab.color[1] == 2);
            CHECK(lab.color[2] == 3);
            CHECK(lab.color[3] == 4);
        }
        CHECK(labs[0].color[4] != labs[1].color[4]);
    }
    SUBCASE("K4 pins everything") {
        std::vector<PinnedLabeling> labs = pinned_labelings(make_complete(4), CycleRef{{0, 1, 2}}, 4);
        REQUIRE(labs.size() == 1);
        CHECK(labs[0].color == std::vector<int>{1, 2, 3, 4});
    }
    SUBCASE("a path is not a valid reference") {
        CHECK_THROWS_AS(pinned_labelings(make_fig6(), CycleRef{{0, 1, 2, 3}}, 4), domain_error);
    }
    SUBCASE("an even cycle is not a valid reference") {
        Graph c4 = make_cycle(4);
        Graph host = make_wheel(4);
        CHECK_THROWS_AS(pinned_labelings(host, CycleRef{{0, 1, 2, 3}}, 4), domain_error);
        (void)c4;
    }
    SUBCASE("colorings where the reference spans k classes are excluded") {
        // C5 disjoint from K4: the unique odd cycle can span 3 or 4 classes.
        Graph g(9);
        for (int i = 0; i < 5; ++i) g = g.with_edge(i, (i + 1) % 5);
        for (int u = 5; u < 9; ++u)
            for (int v = u + 1; v < 9; ++v) g = g.with_edge(u, v);
        CycleRef rim{{0, 1, 2, 3, 4}};
        size_t all = enumerate_colorings(g, 4).size();
        std::vector<PinnedLabeling> labs = pinned_labelings(g, rim, 4);
        CHECK(labs.size() < all);
        CHECK(!labs.empty());
        for (const PinnedLabeling& lab : labs) {
            std::set<int> rim_colors;
            for (int i = 0; i < 5; ++i) rim_colors.insert(lab.color[i]);
            CHECK(rim_colors == std::set<int>{1, 2, 3});
        }
    }
    SUBCASE("wrong chromatic number is a domain error") {
        CHECK_THROWS_AS(pinned_labelings(make_complete(4), CycleRef{{0, 1, 2}}, 3), domain_error);
    }
}
