#include "doctest.h"

#include "colorfix/audit.hpp"
#include "colorfix/cycles.hpp"
#include "colorfix/generate.hpp"
#include "colorfix/graph.hpp"
#include "colorfix/io.hpp"
#include "colorfix/planarity.hpp"

#include "oracles.hpp"

using namespace colorfix;

TEST_CASE("edge-list parsing") {
    Graph k3 = parse_edge_list("0 1\n1 2\n0 2");
    CHECK(k3.vertex_count() == 3);
    CHECK(k3.edge_count() == 3);
    CHECK(k3 == make_complete(3));

    SUBCASE("comments, blank lines, header") {
        Graph g = parse_edge_list("# triangle plus isolated vertex\nn 4\n\n0 1 # edge\n1 2\n0 2\n");
        CHECK(g.vertex_count() == 4);
        CHECK(g.edge_count() == 3);
        CHECK(g.degree(3) == 0);
    }
    SUBCASE("self-loop is rejected with a position") {
        try {
            parse_edge_list("0 1\n0 0\n");
            FAIL("expected parse_error");
        } catch (const parse_error& e) {
            CHECK(e.line() == 2);
            CHECK(e.byte_offset() == 4);
        }
    }
    SUBCASE("malformed line") {
        CHECK_THROWS_AS(parse_edge_list("0 1\nnot an edge\n"), parse_error);
        CHECK_THROWS_AS(parse_edge_list("0 -1\n"), parse_error);
    }
    SUBCASE("id above declared count") {
        CHECK_THROWS_AS(parse_edge_list("n 2\n0 2\n"), parse_error);
    }
}

TEST_CASE("graph6 codec") {
    CHECK(parse_graph6("C~") == make_complete(4));
    CHECK(emit_graph6(make_complete(3)) == "Bw");
    CHECK(parse_graph6(">>graph6<<C~") == make_complete(4));
    CHECK_THROWS_AS(parse_graph6("C"), parse_error);

    SUBCASE("agrees with the independent codec on fixtures") {
        std::vector<Graph> fixtures = {make_complete(1), make_complete(4), make_cycle(5),
                                       make_fig6(),      make_wheel(5),    make_cf_chain(2),
                                       make_k5_minus_e()};
        for (const Graph& g : fixtures) {
            CHECK(emit_graph6(g) == oracles::graph6_encode(g));
            CHECK(parse_graph6(oracles::graph6_encode(g)) == g);
            CHECK(oracles::graph6_decode(emit_graph6(g)) == g);
        }
    }
    SUBCASE("round-trips on random graphs") {
        oracles::Rng rng(42);
        for (int t = 0; t < 40; ++t) {
            Graph g = oracles::random_graph(1 + static_cast<int>(rng.next() % 12), 40, rng);
            CHECK(parse_graph6(emit_graph6(g)) == g);
            CHECK(parse_edge_list(emit_edge_list(g)) == g);
        }
    }
    SUBCASE("degenerate orders") {
        CHECK(parse_graph6(emit_graph6(Graph(0))) == Graph(0));
        CHECK(parse_graph6(emit_graph6(Graph(1))) == Graph(1));
    }
    SUBCASE("orders above 62 use the long size header") {
        oracles::Rng rng(99);
        Graph g = oracles::random_graph(64, 5, rng);
        std::string enc = emit_graph6(g);
        CHECK(static_cast<unsigned char>(enc[0]) == 126);
        CHECK(parse_graph6(enc) == g);
        CHECK(enc == oracles::graph6_encode(g));
    }
}

TEST_CASE("dot output") {
    std::string dot = emit_dot(make_complete(3));
    CHECK(dot.find("graph") == 0);
    size_t edges = 0;
    for (size_t pos = 0; (pos = dot.find(" -- ", pos)) != std::string::npos; ++pos) ++edges;
    CHECK(edges == 3);
}

TEST_CASE("common_neighbors") {
    Graph k5e = make_k5_minus_e();
    CHECK(common_neighbors(k5e, make_set({0, 1, 2})) == make_set({3, 4}));
    CHECK(common_neighbors(make_cycle(5), make_set({0, 1})) == 0);
    CHECK(common_neighbors(make_wheel(5), make_set({0, 1})) == make_set({5}));
    CHECK_THROWS_AS(common_neighbors(make_cycle(5), make_set({5})), domain_error);

    SUBCASE("matches a direct scan and avoids the set itself") {
        oracles::Rng rng(7);
        for (int t = 0; t < 30; ++t) {
            Graph g = oracles::random_graph(7, 50, rng);
            vertex_set s = rng.next() & full_set(7);
            if (!s) s = vbit(0);
            vertex_set got = common_neighbors(g, s);
            CHECK((got & s) == 0);
            for (int v = 0; v < 7; ++v) {
                bool expect = !set_contains(s, v);
                for (int u : set_vertices(s))
                    if (!g.has_edge(u, v) || u == v) expect = false;
                CHECK(set_contains(got, v) == expect);
            }
        }
    }
}

TEST_CASE("cycle enumeration") {
    CHECK(enumerate_cycles(make_cycle(5), 5).size() == 1);
    CHECK(enumerate_cycles(make_complete(4), 4).size() == 7);
    CHECK(enumerate_cycles(make_complete(4), 4, CycleParity::odd).size() == 4);
    CHECK(enumerate_cycles(make_complete(4), 3).size() == 4);

    SUBCASE("canonical orientation") {
        for (const CycleRef& c : enumerate_cycles(make_complete(4), 4))
            CHECK(c == canonical_cycle(c.vertices));
    }
    SUBCASE("agrees with the all-sequences brute force up to n=7") {
        for (int n = 3; n <= 7; ++n) {
            for (const Graph& g : audit_detail::all_graphs_upto_iso(n)) {
                auto got = enumerate_cycles(g, n);
                auto want = oracles::all_cycles(g, n);
                std::sort(want.begin(), want.end());
                CHECK(got == want);
            }
        }
    }
    SUBCASE("agrees with the brute force on random 7-vertex graphs, odd filter included") {
        oracles::Rng rng(11);
        for (int t = 0; t < 15; ++t) {
            Graph g = oracles::random_graph(7, 45, rng);
            auto got = enumerate_cycles(g, 7, CycleParity::odd);
            auto want = oracles::all_cycles(g, 7, true);
            std::sort(want.begin(), want.end());
            CHECK(got == want);
        }
    }
    SUBCASE("cap is required above n=12") {
        CHECK_THROWS_AS(enumerate_cycles(make_cf_chain(3)), domain_error);
        CHECK(enumerate_cycles(make_cf_chain(3), 3).size() > 0);
    }
}

TEST_CASE("generators") {
    CHECK(make_wheel(5).vertex_count() == 6);
    CHECK(make_wheel(5).edge_count() == 10);

    Graph fig6 = make_fig6();
    CHECK(fig6.vertex_count() == 6);
    CHECK(fig6.edge_count() == 11);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) CHECK(fig6.has_edge(u, v));

    Graph chain2 = make_cf_chain(2);
    CHECK(chain2.vertex_count() == 9);
    CHECK(chain2.edge_count() == 18);
    CHECK(is_planar(chain2));

    SUBCASE("cf_chain stays planar") {
        for (int m = 1; m <= 6; ++m) {
            Graph g = make_cf_chain(m);
            CHECK(g.vertex_count() == 4 * m + 1);
            CHECK(g.edge_count() == 9 * m);
            CHECK(is_planar(g));
        }
    }
    SUBCASE("family expressions") {
        CHECK(generate("wheel(5)") == make_wheel(5));
        CHECK(generate("fig6") == make_fig6());
        CHECK(generate("apollonian(2,3)") == make_apollonian(2, 3));
        CHECK(generate("apollonian(2,3)") == generate("apollonian(2,3)"));
        CHECK_THROWS_AS(generate("moebius(5)"), domain_error);
        CHECK_THROWS_AS(generate("wheel(5,2)"), domain_error);
        CHECK_THROWS_AS(generate("wheel(x)"), domain_error);
    }
    SUBCASE("branch_chain shape") {
        Graph b = make_branch_chain(3);
        CHECK(b.vertex_count() == 13);
        CHECK(b.degree(0) == 9);
    }
    SUBCASE("apollonian growth") {
        CHECK(make_apollonian(0, 0) == make_complete(4));
        CHECK(make_apollonian(3, 9).vertex_count() == 7);
    }
}

TEST_CASE("graph value semantics") {
    Graph g = make_cycle(4);
    Graph h = g.with_edge(0, 2);
    CHECK(g.edge_count() == 4);
    CHECK(h.edge_count() == 5);
    CHECK(h.without_edge(0, 2) == g);
    CHECK_THROWS_AS(g.with_edge(1, 1), domain_error);
    CHECK_THROWS_AS(g.with_edge(0, 9), domain_error);

    Graph c = h.compacted(make_set({0, 2, 3}));
    CHECK(c.vertex_count() == 3);
    CHECK(c.has_edge(0, 1));  // old 0-2
    CHECK(c.has_edge(1, 2));  // old 2-3
    CHECK(c.has_edge(0, 2));  // old 0-3
}
