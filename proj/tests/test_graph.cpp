#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "sclgp/graph.hpp"

using namespace sclgp;

namespace {

SimplicialGraph complete(int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(names[i], names[j]);
    return SimplicialGraph(names, edges);
}

SimplicialGraph edgeless(int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    return SimplicialGraph(names, {});
}

SimplicialGraph cycle(int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(names[i], names[(i + 1) % n]);
    return SimplicialGraph(names, edges);
}

}  // namespace

TEST_CASE("complement") {
    CHECK(complement(complete(3)) == edgeless(3));
    CHECK(complement(edgeless(2)) == complete(2));
    // Delta_2 has the single edge (v0,v2); its complement is the path v0-v1-v2.
    const SimplicialGraph path012({"v0", "v1", "v2"}, {{"v0", "v1"}, {"v1", "v2"}});
    CHECK(complement(opposite_path(2)) == path012);

    Prng rng(11);
    for (int t = 0; t < 50; ++t) {
        const auto g = random_graph(int(rng.next_range(1, 8)), 0.5, rng.next_u64());
        CHECK(complement(complement(g)) == g);
    }
}

TEST_CASE("induced subgraphs") {
    CHECK(induced_subgraph(complete(4), {"v0", "v2", "v3"}).edge_count() == 3);
    CHECK(induced_subgraph(complete(4), std::vector<std::string>{}).empty());
    CHECK_THROWS_AS(induced_subgraph(complete(3), {"zz"}), std::invalid_argument);

    // The hyperbolic-RACG corollary's witness: {v0,v1,v3,v4} induces a
    // 4-cycle in Delta_4.
    const auto sub = induced_subgraph(opposite_path(4), {"v0", "v1", "v3", "v4"});
    CHECK(sub.size() == 4);
    CHECK(sub.edge_count() == 4);
    for (const auto& v : sub.vertex_names()) {
        int deg = 0;
        for (const auto& u : sub.vertex_names())
            if (u != v && sub.adjacent(u, v)) ++deg;
        CHECK(deg == 2);
    }
}

TEST_CASE("maximal cliques") {
    CHECK(maximal_cliques(complete(3)) == std::vector<Clique>{{0, 1, 2}});
    CHECK(maximal_cliques(edgeless(3)) == std::vector<Clique>{{0}, {1}, {2}});
    const auto cliques5 = maximal_cliques(cycle(5));
    CHECK(cliques5.size() == 5);
    for (const auto& q : cliques5) CHECK(q.size() == 2);

    // Oracle: maximal elements of the brute-force all-cliques enumeration.
    Prng rng(5);
    for (int t = 0; t < 40; ++t) {
        const auto g = random_graph(int(rng.next_range(1, 7)), 0.5, rng.next_u64());
        const auto got = maximal_cliques(g);
        const auto all = all_cliques(g);
        std::vector<Clique> expect;
        for (const auto& q : all) {
            bool maximal = true;
            for (const auto& r : all)
                if (r.size() > q.size() && std::includes(r.begin(), r.end(), q.begin(), q.end()))
                    maximal = false;
            if (maximal) expect.push_back(q);
        }
        CHECK(got == expect);
        std::set<std::size_t> covered;
        for (const auto& q : got) {
            CHECK(g.is_clique(q));
            covered.insert(q.begin(), q.end());
        }
        CHECK(covered.size() == g.size());
    }
}

TEST_CASE("opposite path and its length") {
    CHECK(opposite_path(1).edge_count() == 0);
    CHECK(opposite_path(1).size() == 2);
    const auto d2 = opposite_path(2);
    CHECK(d2.edge_count() == 1);
    CHECK(d2.adjacent("v0", "v2"));
    CHECK_THROWS_AS(opposite_path(0), std::invalid_argument);

    for (int m = 1; m <= 8; ++m) CHECK(opposite_path_length(opposite_path(m)) == m);
    CHECK(opposite_path_length(complete(4)) == 0);
    CHECK(oracle::brute_delta(cycle(4)) == 1);
    CHECK(opposite_path_length(cycle(4)) == 1);
    CHECK(opposite_path_length(opposite_path(4)) == 4);
    CHECK_THROWS_AS(opposite_path_length(SimplicialGraph()), std::invalid_argument);

    Prng rng(17);
    for (int t = 0; t < 200; ++t) {
        const auto g = random_graph(int(rng.next_range(1, 7)), rng.next_double(), rng.next_u64());
        CHECK(opposite_path_length(g) == oracle::brute_delta(g));
    }

    // Monotone under induced subgraphs.
    for (int t = 0; t < 30; ++t) {
        const auto g = random_graph(6, 0.5, rng.next_u64());
        std::set<std::size_t> s;
        for (std::size_t v = 0; v < g.size(); ++v)
            if (rng.next_bernoulli(0.6)) s.insert(v);
        if (s.empty()) continue;
        CHECK(opposite_path_length(induced_subgraph(g, s)) <= opposite_path_length(g));
    }
}

TEST_CASE("double graph") {
    const auto one = double_graph(edgeless(1));
    CHECK(one.size() == 2);
    CHECK(one.edge_count() == 0);

    const SimplicialGraph e({"u", "v"}, {{"u", "v"}});
    const auto de = double_graph(e);
    CHECK(de.size() == 4);
    CHECK(de.edge_count() == 4);  // K_4 minus the two doubled pairs
    CHECK(de.adjacent("a:u", "a:v"));
    CHECK(de.adjacent("a:u", "b:v"));
    CHECK(de.adjacent("b:u", "a:v"));
    CHECK(de.adjacent("b:u", "b:v"));
    CHECK(!de.adjacent("a:u", "b:u"));
    CHECK(!de.adjacent("a:v", "b:v"));

    CHECK(double_graph(edgeless(4)).size() == 8);
    CHECK(double_graph(edgeless(4)).edge_count() == 0);

    Prng rng(3);
    for (int t = 0; t < 30; ++t) {
        const auto g = random_graph(int(rng.next_range(1, 8)), 0.5, rng.next_u64());
        const auto d = double_graph(g);
        CHECK(d.size() == 2 * g.size());
        CHECK(d.edge_count() == 4 * g.edge_count());
        for (const auto& v : g.vertex_names()) CHECK(!d.adjacent("a:" + v, "b:" + v));
    }
}

TEST_CASE("gamma_mn") {
    CHECK(gamma_mn(2, 5) == cycle(5));
    CHECK_THROWS_AS(gamma_mn(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(gamma_mn(1, 5), std::invalid_argument);
    CHECK(gamma_mn(2, 4) == cycle(4));  // n = 2m is allowed
    const auto g37 = gamma_mn(3, 7);
    const auto cliques = maximal_cliques(g37);
    CHECK(cliques.size() == 7);
    for (const auto& q : cliques) CHECK(q.size() == 3);
}

TEST_CASE("random graphs") {
    CHECK(random_graph(5, 0.0, 42) == edgeless(5));
    CHECK(random_graph(5, 1.0, 42) == complete(5));
    CHECK(random_graph(25, 0.5, 99) == random_graph(25, 0.5, 99));
    CHECK(!(random_graph(25, 0.5, 99) == random_graph(25, 0.5, 100)));
}
