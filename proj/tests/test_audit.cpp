#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "colorfix/audit.hpp"
#include "colorfix/generate.hpp"

#include "oracles.hpp"

using namespace colorfix;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& content) {
        path = "colorfix_test_corpus.g6";
        std::ofstream out(path);
        out << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

nlohmann::json stripped(const AuditReport& r) {
    nlohmann::json j = report_json(r);
    j["runtime_ms"] = 0;
    return j;
}

}  // namespace

TEST_CASE("exhaustive corpora") {
    CorpusSpec s4 = CorpusSpec::exhaustive(4);
    CHECK(corpus(s4).size() == 6);
    CHECK(corpus(CorpusSpec::exhaustive(5)).size() == 21);
    CHECK(corpus(CorpusSpec::exhaustive(6)).size() == 112);
    CHECK(corpus(CorpusSpec::exhaustive(3)).size() == 2);
    CHECK(corpus(CorpusSpec::exhaustive(1)).size() == 1);
    CHECK_THROWS_AS(corpus(CorpusSpec::exhaustive(9)), domain_error);
    CHECK_THROWS_AS(corpus(CorpusSpec::exhaustive(0)), domain_error);

    SUBCASE("canonical representatives are pairwise non-isomorphic and connected") {
        std::set<std::uint64_t> codes;
        for (const Graph& g : corpus(CorpusSpec::exhaustive(5))) {
            CHECK(g.is_connected());
            CHECK(codes.insert(audit_detail::canonical_code(g)).second);
        }
    }
    SUBCASE("filters") {
        CorpusSpec planar4 = CorpusSpec::exhaustive(5);
        planar4.filters.planar = true;
        planar4.filters.chromatic = 4;
        std::vector<Graph> graphs = corpus(planar4);
        CHECK(graphs.size() == 3);
        for (const Graph& g : graphs) {
            CHECK(is_planar(g));
            CHECK(chromatic_number(g) == 4);
        }
    }
}

TEST_CASE("ingest corpora") {
    TempFile f("C~\nBw\nDhc\n");
    std::vector<Graph> graphs = corpus(CorpusSpec::ingest(f.path));
    REQUIRE(graphs.size() == 3);
    CHECK(graphs[0] == make_complete(4));
    CHECK(graphs[1] == make_complete(3));

    SUBCASE("malformed line is reported with its number") {
        TempFile bad("C~\n??broken\n");
        try {
            corpus(CorpusSpec::ingest(bad.path));
            FAIL("expected parse_error");
        } catch (const parse_error& e) {
            CHECK(e.line() == 2);
        }
    }
    SUBCASE("missing file") {
        CHECK_THROWS_AS(corpus(CorpusSpec::ingest("no_such_file.g6")), domain_error);
    }
}

TEST_CASE("family corpora") {
    std::vector<Graph> graphs = corpus(CorpusSpec::family({"complete(4)", "wheel(5)", "fig6"}));
    REQUIRE(graphs.size() == 3);
    CHECK(graphs[0] == make_complete(4));
    CHECK(graphs[1] == make_wheel(5));
}

TEST_CASE("minimize") {
    SUBCASE("K5 plus a pendant edge shrinks to K5 under non-planarity") {
        Graph g(6);
        for (int u = 0; u < 5; ++u)
            for (int v = u + 1; v < 5; ++v) g = g.with_edge(u, v);
        g = g.with_edge(0, 5);
        Graph m = minimize(g, [](const Graph& h) { return !is_planar(h); });
        CHECK(m == make_complete(5));
    }
    SUBCASE("K4 plus a pendant edge shrinks to K4 under chi >= 4") {
        Graph g(5);
        for (int u = 0; u < 4; ++u)
            for (int v = u + 1; v < 4; ++v) g = g.with_edge(u, v);
        g = g.with_edge(0, 4);
        auto pred = [](const Graph& h) { return chromatic_number(h) >= 4; };
        Graph m = minimize(g, pred);
        CHECK(m == make_complete(4));
        SUBCASE("idempotent") { CHECK(minimize(m, pred) == m); }
    }
    SUBCASE("result is 1-minimal") {
        Graph g = make_wheel(5);
        auto pred = [](const Graph& h) { return chromatic_number(h) >= 4; };
        Graph m = minimize(g, pred);
        for (auto [u, v] : m.edges()) CHECK_FALSE(pred(m.without_edge(u, v)));
    }
    SUBCASE("false predicate is a domain error") {
        CHECK_THROWS_AS(minimize(make_complete(3), [](const Graph&) { return false; }),
                        domain_error);
    }
}

TEST_CASE("run_audit fixtures") {
    SUBCASE("T3 over K4 and wheel(5): one instance per edge, no violations") {
        AuditReport r = run_audit(ClaimId::T3, CorpusSpec::family({"complete(4)", "wheel(5)"}));
        CHECK(r.instances_checked == 16);
        CHECK(r.graphs_checked == 2);
        CHECK(r.skipped == 0);
        CHECK(r.violations.empty());
    }
    SUBCASE("T4 over the planar 4-chromatic corpus at n=5") {
        CorpusSpec spec = CorpusSpec::exhaustive(5);
        spec.filters.planar = true;
        spec.filters.chromatic = 4;
        AuditReport r = run_audit(ClaimId::T4, spec);
        CHECK(r.violations.empty());
    }
    SUBCASE("L5 over cf_chain(3): all vertex-node pairs non-adjaceable") {
        AuditReport r = run_audit(ClaimId::L5, CorpusSpec::family({"cf_chain(3)"}));
        CHECK(r.instances_checked == 6);
        CHECK(r.violations.empty());
    }
    SUBCASE("T1 and T2 hold over the planar corpus at n=5") {
        CorpusSpec spec = CorpusSpec::exhaustive(5);
        spec.filters.planar = true;
        CHECK(run_audit(ClaimId::T1, spec).violations.empty());
        CHECK(run_audit(ClaimId::T2, spec).violations.empty());
    }
    SUBCASE("CI_COND finds witnesses for the chain fixtures") {
        AuditReport r = run_audit(ClaimId::CI_COND, CorpusSpec::family({"k5_minus_e", "cf_chain(2)"}));
        CHECK(r.instances_checked == 4);  // one pair plus the three v-pairs
        CHECK(r.violations.empty());
    }
    SUBCASE("hypothesis hygiene: non-qualifying graphs are skipped, not checked") {
        AuditReport r = run_audit(ClaimId::T4, CorpusSpec::family({"k4_minus_e", "k5_minus_e"}));
        CHECK(r.skipped == 1);  // k4_minus_e is 3-chromatic
        CHECK(r.graphs_checked == 1);
    }
    SUBCASE("expected L2 findings on the wheel re-verify from their witnesses") {
        AuditReport r = run_audit(ClaimId::L2, CorpusSpec::family({"wheel(5)"}));
        CHECK(r.violations.size() == 10);
        for (const AuditViolation& v : r.violations) CHECK(reverify_violation(ClaimId::L2, v));
        AuditViolation tampered = r.violations[0];
        tampered.witness = "ref (0,1,5): fixed vertex 9 has no fixed universal odd cycle";
        CHECK_FALSE(reverify_violation(ClaimId::L2, tampered));
    }
    SUBCASE("violation lists never exceed the instance count") {
        for (ClaimId id : {ClaimId::L1, ClaimId::L2, ClaimId::L3, ClaimId::L4}) {
            AuditReport r = run_audit(id, CorpusSpec::family({"wheel(5)", "fig6", "k5_minus_e"}));
            CHECK(static_cast<long>(r.violations.size()) <= r.instances_checked);
        }
    }
}

TEST_CASE("reports are deterministic and well-formed") {
    CorpusSpec spec = CorpusSpec::exhaustive(5);
    spec.filters.planar = true;
    AuditConfig cfg;
    AuditReport r1 = run_audit(ClaimId::FOWLER, spec, cfg);
    AuditReport r2 = run_audit(ClaimId::FOWLER, spec, cfg);
    CHECK(stripped(r1) == stripped(r2));

    SUBCASE("parallel execution does not change the report") {
        AuditConfig par;
        par.jobs = 3;
        AuditReport rp = run_audit(ClaimId::FOWLER, spec, par);
        nlohmann::json a = stripped(r1), b = stripped(rp);
        a["config"]["jobs"] = 0;
        b["config"]["jobs"] = 0;
        CHECK(a == b);
    }
    SUBCASE("json shape") {
        nlohmann::json j = report_json(r1);
        for (const char* key :
             {"claim", "config", "instances_checked", "skipped", "violations", "runtime_ms"})
            CHECK(j.contains(key));
        CHECK(j["violations"].is_array());
        AuditReport rl = run_audit(ClaimId::L2, CorpusSpec::family({"wheel(5)"}));
        nlohmann::json jv = report_json(rl)["violations"][0];
        CHECK(jv.contains("graph6"));
        CHECK(jv.contains("witness"));
        CHECK(jv.contains("minimized_graph6"));
    }
    SUBCASE("text summary mentions the claim and counts") {
        std::string text = report_text(r1);
        CHECK(text.find("claim FOWLER") != std::string::npos);
        CHECK(text.find("violation") != std::string::npos);
    }
}

TEST_CASE("claim names round-trip") {
    for (const auto& [id, name] : claim_names()) CHECK(parse_claim(name) == id);
    CHECK_THROWS_AS(parse_claim("T9"), domain_error);
}
