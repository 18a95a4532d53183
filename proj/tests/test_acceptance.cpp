// Acceptance suite: one pass/fail line per criterion.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <iostream>

#include "dpo/match.hpp"
#include "helpers.hpp"

using namespace dpo;

namespace {

void report(int n, const std::string& what, bool ok) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << what << "\n";
    CHECK_MESSAGE(ok, "criterion ", n, ": ", what);
}

// the expected final graph of the coloring derivation, with its own ids
Graph expected_colored_k33() {
    Graph g;
    std::vector<Id> A{"a1", "a2", "a3"}, B{"b1", "b2", "b3"};
    for (const auto& v : A) g.vertex(v);
    for (const auto& v : B) g.vertex(v);
    g.vertex("c1").vertex("c2");
    g.edge("l1", "c1", "c1", "1").edge("l2", "c2", "c2", "2");
    int i = 0;
    for (const auto& a : A)
        for (const auto& b : B) g.undirected("k" + std::to_string(i++), a, b);
    for (const auto& a : A) g.undirected("ca" + a, a, "c1");
    for (const auto& b : B) g.undirected("cb" + b, b, "c2");
    return g;
}

Graph expected_two_triangles() {
    Graph g;
    for (const char* v : {"t1", "t2", "t3", "s1", "s2", "s3"}) g.vertex(v);
    g.undirected("t12", "t1", "t2").undirected("t13", "t1", "t3").undirected("t23", "t2", "t3");
    g.undirected("s12", "s1", "s2").undirected("s13", "s1", "s3").undirected("s23", "s2", "s3");
    return g;
}

Graph expected_moved_final() {
    Graph g = expected_two_triangles();
    g.vertex("c1").vertex("c2");
    g.edge("l1", "c1", "c1", "1").edge("l2", "c2", "c2", "2");
    for (const char* v : {"t1", "t2", "t3"}) g.undirected(std::string("c") + v, v, "c1");
    for (const char* v : {"s1", "s2", "s3"}) g.undirected(std::string("c") + v, v, "c2");
    return g;
}

// column-major evaluation of the same grid, for order independence
Derivation move_column_major(const Derivation& d, const Derivation& d_bar) {
    std::size_t n = d.length(), m = d_bar.length();
    std::vector<std::vector<DerivationStep>> V(n, std::vector<DerivationStep>(m + 1));
    std::vector<std::vector<DerivationStep>> H(n + 1, std::vector<DerivationStep>(m));
    for (std::size_t i = 0; i < n; ++i) V[i][0] = d.steps[i];
    for (std::size_t j = 0; j < m; ++j) H[0][j] = d_bar.steps[j];
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            auto w = parallel_independent(V[i][j], H[i][j]);
            REQUIRE(w.has_value());
            auto [nh, nv] = conflux(V[i][j], H[i][j], *w);
            H[i + 1][j] = std::move(nh);
            V[i][j + 1] = std::move(nv);
        }
    Derivation moved{d_bar.end(), {}};
    for (std::size_t i = 0; i < n; ++i) moved.steps.push_back(V[i][m]);
    return moved;
}

}  // namespace

TEST_CASE("criterion 1: coloring replay ends in the colored graph") {
    const auto& c = helpers::corpus();
    bool ok = c.d_color.length() == 14 && validate_derivation(c.d_color).empty() &&
              find_isomorphism(c.d_color.end(), expected_colored_k33()).has_value();
    report(1, "14-step coloring script ends isomorphic to the colored bipartite graph", ok);
}

TEST_CASE("criterion 2: dualization replay ends in two triangles") {
    const auto& c = helpers::corpus();
    bool ok = c.d_dual.length() == 24 && validate_derivation(c.d_dual).empty() &&
              find_isomorphism(c.d_dual.end(), expected_two_triangles()).has_value();
    report(2, "24-step dualization script ends isomorphic to two disjoint triangles", ok);
}

TEST_CASE("criterion 3: accessed part is exactly the six start vertices") {
    const auto& c = helpers::corpus();
    AccessedPart acc = accessed_part(c.d_color);
    bool ok = acc.handle.vset == c.k33.vertices && acc.handle.eset.empty();
    report(3, "accessed part of the coloring derivation is the discrete vertex set", ok);
}

TEST_CASE("criterion 4: spine golden derivation") {
    const auto& c = helpers::corpus();
    auto [acc, sp] = spine(c.d_color);
    Graph discrete;
    for (const auto& v : c.k33.vertices) discrete.vertex(v);
    auto sf = io::script_from_json(io::load(helpers::corpus_dir() / "d_color.script.json"));
    Derivation expected = run_script(discrete, sf.entries, c.color_rules);
    bool ok = sp.start == discrete && validate_derivation(sp).empty() &&
              derivations_equal_up_to_iso(sp, expected).found() && sp == expected &&
              sp.end().vertices.size() == 8;
    for (const auto& [id, e] : sp.end().edges) ok = ok && !c.k33.has_edge(id);
    report(4, "spine of the coloring derivation replays on the bare vertices", ok);
}

TEST_CASE("criterion 5: the moving grid is fully defined") {
    const auto& c = helpers::corpus();
    bool ok = false;
    try {
        MovedPair grid = move_forward(c.d_color, c.d_dual);
        ok = grid.moved.length() == 14 && grid.moved.start == c.d_dual.end() &&
             validate_derivation(grid.moved).empty() &&
             find_isomorphism(grid.moved.end(), expected_moved_final()).has_value();
    } catch (const MoveError&) {
    }
    report(5, "coloring moves over dualization; 14 steps from the dual graph", ok);
}

TEST_CASE("criterion 6: moving preserves the spine on the corpus pair") {
    const auto& c = helpers::corpus();
    Derivation moved = move_forward(c.d_color, c.d_dual).moved;
    auto res = derivations_equal_up_to_iso(spine(c.d_color).second, spine(moved).second);
    report(6, "spine(coloring) equals spine(moved coloring) up to isomorphism", res.found());
}

TEST_CASE("criterion 7: backward moving recovers the original derivation") {
    const auto& c = helpers::corpus();
    Derivation moved = move_forward(c.d_color, c.d_dual).moved;
    Derivation back = evom(moved, c.d_dual);
    bool ok = back == c.d_color && derivations_equal_up_to_iso(back, c.d_color).found();
    report(7, "evom(move(d, d_bar), d_bar) equals d", ok);
}

TEST_CASE("criterion 8: sequential independence fails on the created edge") {
    const auto& c = helpers::corpus();
    Graph host;
    host.vertex("n").vertex("c1");
    host.edge("nal", "n", "n", "a");
    host.edge("c1l", "c1", "c1", "1");
    auto rep = check_rule_pair_independence(c.dual_rules, c.color_rules, {host}, true);
    bool ok = !rep.clean() && rep.bounded;
    bool named = false;
    for (const auto& cex : rep.counterexamples)
        named = named || cex.find("double_edge") != std::string::npos;
    report(8, "dualization after coloring: counterexample names double_edge", ok && named);
}

TEST_CASE("criterion 9: randomized algebraic-law suite") {
    bool ok = true;
    std::string first_failure;
    auto fail = [&](unsigned seed, const std::string& what) {
        ok = false;
        if (first_failure.empty())
            first_failure = what + " (seed " + std::to_string(seed) + ")";
    };

    for (unsigned seed = 0; seed < 120; ++seed) {
        std::mt19937 rng(seed);
        helpers::RandomInstance inst = helpers::random_instance(rng);

        // (e) every constructed and inverted step is a double pushout
        for (const Derivation* dd : {&inst.d, &inst.d_bar})
            for (const auto& s : dd->steps)
                if (!verify_double_pushout(s) || !verify_double_pushout(invert_step(s)))
                    fail(seed, "double-pushout verification");

        // (f) inversion round trip
        if (invert_derivation(invert_derivation(inst.d)) != inst.d)
            fail(seed, "inversion round trip");

        // (a) moving preserves the spine
        SpineReport sr = check_spine_preservation(inst.d, inst.d_bar);
        if (!sr.pass) fail(seed, "spine preservation: " + sr.detail);

        // (d) grid order independence
        Derivation moved = move_forward(inst.d, inst.d_bar).moved;
        Derivation by_columns = move_column_major(inst.d, inst.d_bar);
        if (moved != by_columns || !derivations_equal_up_to_iso(moved, by_columns).found())
            fail(seed, "grid order independence");
        for (const auto& s : moved.steps)
            if (!verify_double_pushout(s)) fail(seed, "moved step verification");

        // (b) iterated restriction composes strictly
        SubgraphHandle m = helpers::random_superset_handle(rng, inst.d);
        RestrictionCertificate once = restrict_derivation(inst.d, m);
        AccessedPart acc_in = accessed_part(once.restricted);
        SubgraphHandle m_prime{once.restricted.start, acc_in.handle.vset, acc_in.handle.eset};
        for (const auto& v : once.restricted.start.vertices)
            if (v.size() % 2 == 0) m_prime.vset.insert(v);
        for (const auto& [id, e] : once.restricted.start.edges)
            if (m_prime.vset.count(e.src) && m_prime.vset.count(e.tgt)) m_prime.eset.insert(id);
        RestrictionCertificate twice = restrict_derivation(once.restricted, m_prime);
        RestrictionCertificate direct =
            restrict_derivation(inst.d, make_handle(inst.d.start, m_prime.vset, m_prime.eset));
        if (twice.restricted != direct.restricted) fail(seed, "restriction composition");
        if (!validate_restriction(once).empty() || !validate_restriction(twice).empty())
            fail(seed, "restriction certificate");

        // (c) restriction does not change the accessed part
        if (acc_in.handle.vset != accessed_part(inst.d).handle.vset ||
            acc_in.handle.eset != accessed_part(inst.d).handle.eset)
            fail(seed, "accessed part stability");
    }
    report(9, ok ? "120 random instances satisfy laws (a)-(f)"
                 : "law violated: " + first_failure,
           ok);
}

TEST_CASE("criterion 10: matcher agrees with brute-force oracles") {
    bool ok = true;
    std::string first_failure;
    auto key = [](const GraphMorphism& m) { return std::make_pair(m.vmap, m.emap); };
    auto same = [&](const std::vector<GraphMorphism>& a, const std::vector<GraphMorphism>& b) {
        std::set<std::pair<std::map<Id, Id>, std::map<Id, Id>>> sa, sb;
        for (const auto& m : a) sa.insert(key(m));
        for (const auto& m : b) sb.insert(key(m));
        return sa == sb && a.size() == b.size();
    };

    std::mt19937 rng(7);
    auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
    static const std::vector<std::string> labels{"*", "x", "s"};
    auto small_graph = [&](std::size_t maxv, std::size_t maxe, const std::string& prefix) {
        Graph g;
        std::size_t nv = 1 + pick(maxv);
        std::vector<Id> verts;
        for (std::size_t i = 0; i < nv; ++i) {
            verts.push_back(prefix + std::to_string(i));
            g.vertex(verts.back());
        }
        std::size_t ne = pick(maxe + 1);
        for (std::size_t i = 0; i < ne; ++i)
            g.edge(prefix + "e" + std::to_string(i), verts[pick(nv)], verts[pick(nv)],
                   labels[pick(labels.size())]);
        return g;
    };

    for (int sample = 0; sample < 150 && ok; ++sample) {
        Graph L = small_graph(3, 3, "l");
        Graph G = small_graph(6, 6, "g");
        if (!same(enumerate_morphisms(L, G, MatchMode::All),
                  helpers::naive_morphisms(L, G, false)))
            ok = false, first_failure = "all-morphism enumeration";
        if (!same(enumerate_morphisms(L, G, MatchMode::Monomorphisms),
                  helpers::naive_morphisms(L, G, true)))
            ok = false, first_failure = "monomorphism enumeration";

        Graph A = small_graph(5, 6, "a");
        Graph B = small_graph(5, 6, "b");
        bool fast = find_isomorphism(A, B).has_value();
        bool slow = !helpers::naive_isomorphisms(A, B).empty();
        if (fast != slow) ok = false, first_failure = "isomorphism decision";

        // a guaranteed isomorphic pair via renaming
        Graph A2;
        for (const auto& v : A.vertices) A2.vertex("r_" + v);
        for (const auto& [id, e] : A.edges) A2.edge("r_" + id, "r_" + e.src, "r_" + e.tgt, e.label);
        if (!find_isomorphism(A, A2).has_value())
            ok = false, first_failure = "isomorphism on a renamed copy";
    }
    report(10, ok ? "enumeration and iso search agree with naive oracles"
                  : "oracle disagreement: " + first_failure,
           ok);
}
