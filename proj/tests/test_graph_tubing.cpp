#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "cosmoform/graph.hpp"
#include "cosmoform/tubing.hpp"
#include "test_graphs.hpp"

using namespace cosmoform;
namespace tg = testgraphs;

namespace {

using VertsEdges = std::pair<std::vector<int>, std::vector<int>>;

// Union-find over edge subsets; independent of the BFS the library uses.
std::vector<VertsEdges> brute_tubes(const Graph& g) {
    std::vector<VertsEdges> out;
    for (int v = 0; v < g.nv(); ++v) out.push_back({{v}, {}});
    for (std::uint64_t es = 1; es < (std::uint64_t{1} << g.ne()); ++es) {
        std::vector<int> parent(g.nv());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        std::set<int> vs;
        std::vector<int> edges;
        for (int e = 0; e < g.ne(); ++e) {
            if (!(es >> e & 1)) continue;
            edges.push_back(e);
            vs.insert(g.edges[e].u);
            vs.insert(g.edges[e].v);
            parent[find(g.edges[e].u)] = find(g.edges[e].v);
        }
        const int root = find(*vs.begin());
        bool connected = true;
        for (int v : vs) connected = connected && find(v) == root;
        if (connected) out.push_back({{vs.begin(), vs.end()}, edges});
    }
    std::sort(out.begin(), out.end(), [](const VertsEdges& a, const VertsEdges& b) {
        if (a.second.empty() != b.second.empty()) return a.second.empty();
        if (a.second.empty()) return a.first < b.first;
        return a.second < b.second;
    });
    return out;
}

std::vector<std::vector<int>> brute_maximal_tubings(const TubeSet& ts) {
    const int k = ts.size();
    REQUIRE(k <= 20);
    std::vector<std::vector<char>> ok(k, std::vector<char>(k, 0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            ok[i][j] = are_compatible(ts.tubes[i], ts.tubes[j]);
    std::vector<std::uint32_t> cliques;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << k); ++mask) {
        bool clique = true;
        for (int i = 0; i < k && clique; ++i)
            for (int j = i + 1; j < k && clique; ++j)
                if ((mask >> i & 1) && (mask >> j & 1) && !ok[i][j]) clique = false;
        if (clique) cliques.push_back(mask);
    }
    std::vector<std::vector<int>> out;
    for (std::uint32_t m : cliques) {
        bool maximal = true;
        for (std::uint32_t other : cliques)
            if (other != m && (other & m) == m) maximal = false;
        if (!maximal) continue;
        std::vector<int> t;
        for (int i = 0; i < k; ++i)
            if (m >> i & 1) t.push_back(i);
        out.push_back(t);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("graph file parsing") {
    const std::string json = R"({
      "vertices": ["v", "w"],
      "edges": [{"id": "e1", "ends": ["v", "w"]}],
      "multigraph": false
    })";
    Graph g = Graph::parse(json, false);
    CHECK(g.nv() == 2);
    CHECK(g.ne() == 1);
    CHECK(g.n() == 3);
    CHECK(g.edges[0].u == 0);
    CHECK(g.edges[0].v == 1);

    Graph t = Graph::parse("# comment\nv1 v2\n\nv2 v3\n", false);
    CHECK(t.vertices == std::vector<std::string>{"v1", "v2", "v3"});
    CHECK(t.edges[0].id == "e1");
    CHECK(t.edges[1].id == "e2");

    // numeric labels are allowed and stringified
    Graph num = Graph::parse(
        R"({"vertices": [0, 1], "edges": [{"id": 7, "ends": [0, 1]}]})", false);
    CHECK(num.vertices[0] == "0");
    CHECK(num.edges[0].id == "7");

    CHECK_THROWS_AS(Graph::parse("{not json", false), io_error);
    CHECK_THROWS_AS(Graph::parse("", false), io_error);
    CHECK_THROWS_AS(Graph::parse("v1 v2 v3\n", false), io_error);
    CHECK_THROWS_AS(Graph::parse("v1\n", false), io_error);
    CHECK_THROWS_AS(
        Graph::parse(R"({"vertices": ["a"], "edges": [{"id": "e", "ends": ["a", "b"]}]})",
                     false),
        io_error);
    CHECK_THROWS_AS(Graph::parse("v v\n", false), contract_error);      // self-loop
    CHECK_THROWS_AS(Graph::parse("v w\nw v\n", false), contract_error);  // parallel
    CHECK_NOTHROW(Graph::parse("v w\nw v\n", true));
    CHECK_THROWS_AS(
        Graph::parse(R"({"vertices": ["a", "a"], "edges": []})", false),
        contract_error);

    // the file's own multigraph field also enables parallel edges
    const std::string dbl = R"({
      "vertices": ["v", "w"],
      "edges": [{"id": "e1", "ends": ["v", "w"]}, {"id": "e2", "ends": ["v", "w"]}],
      "multigraph": true
    })";
    CHECK(Graph::parse(dbl, false).ne() == 2);
}

TEST_CASE("line graph construction") {
    Graph lp3 = tg::path3().line_graph();
    CHECK(lp3.nv() == 2);
    CHECK(lp3.ne() == 1);

    Graph lc3 = tg::triangle().line_graph();
    CHECK(lc3.nv() == 3);
    CHECK(lc3.ne() == 3);

    // parallel edges share both endpoints but still get a single line edge
    Graph ldbl = tg::double_edge().line_graph();
    CHECK(ldbl.nv() == 2);
    CHECK(ldbl.ne() == 1);

    Graph lstar = tg::star3().line_graph();
    CHECK(lstar.nv() == 3);
    CHECK(lstar.ne() == 3);
}

TEST_CASE("tube enumeration matches brute force") {
    const struct {
        Graph g;
        int count;
    } cases[] = {
        {tg::single_edge(), 3}, {tg::path3(), 6},          {tg::path4(), 10},
        {tg::star3(), 11},      {tg::triangle(), 10},      {tg::cycle4(), 17},
        {tg::double_edge(), 5}, {tg::two_disjoint_edges(), 6},
    };
    for (const auto& c : cases) {
        TubeSet ts = enumerate_tubes(c.g);
        INFO("graph with " << c.g.nv() << " vertices, " << c.g.ne() << " edges");
        CHECK(ts.size() == c.count);
        auto expect = brute_tubes(c.g);
        REQUIRE(ts.size() == static_cast<int>(expect.size()));
        for (int i = 0; i < ts.size(); ++i) {
            CHECK(ts.tubes[i].verts == expect[i].first);
            CHECK(ts.tubes[i].edges == expect[i].second);
        }
    }
}

TEST_CASE("tube labels and order on the three-vertex path") {
    TubeSet ts = enumerate_tubes(tg::path3());
    CHECK(ts.label(0) == "{v1}");
    CHECK(ts.label(1) == "{v2}");
    CHECK(ts.label(2) == "{v3}");
    CHECK(ts.label(3) == "{v1,v2;e1}");
    CHECK(ts.label(4) == "{v1,v2,v3;e1,e2}");
    CHECK(ts.label(5) == "{v2,v3;e2}");
    CHECK(ts.full_tube() == 4);
    CHECK(enumerate_tubes(tg::two_disjoint_edges()).full_tube() == -1);
}

TEST_CASE("compatibility") {
    TubeSet ts = enumerate_tubes(tg::path3());
    CHECK_FALSE(are_compatible(ts.tubes[3], ts.tubes[5]));  // overlap, not nested
    CHECK(are_compatible(ts.tubes[3], ts.tubes[4]));        // nested
    CHECK(are_compatible(ts.tubes[0], ts.tubes[5]));        // vertex-disjoint

    // singletons never obstruct anything
    for (const Graph& g : {tg::single_edge(), tg::path4(), tg::star3(),
                           tg::triangle(), tg::double_edge()}) {
        TubeSet all = enumerate_tubes(g);
        for (const Tube& s : all.tubes) {
            if (!s.singleton()) continue;
            for (const Tube& t : all.tubes) CHECK(are_compatible(s, t));
        }
    }
}

TEST_CASE("maximal tubings match brute force") {
    const struct {
        Graph g;
        std::size_t count;
    } cases[] = {
        {tg::single_edge(), 1}, {tg::path3(), 2},     {tg::path4(), 5},
        {tg::star3(), 6},       {tg::triangle(), 6},  {tg::cycle4(), 20},
        {tg::double_edge(), 2}, {tg::two_disjoint_edges(), 1},
    };
    for (const auto& c : cases) {
        TubeSet ts = enumerate_tubes(c.g);
        std::vector<Tubing> got = enumerate_maximal_tubings(ts);
        INFO("graph with " << c.g.nv() << " vertices, " << c.g.ne() << " edges");
        CHECK(got.size() == c.count);
        CHECK(got == brute_maximal_tubings(ts));
        for (const Tubing& t : got)
            CHECK(static_cast<int>(t.size()) == c.g.n());
    }
}

TEST_CASE("maximal tubings of the three-vertex path") {
    TubeSet ts = enumerate_tubes(tg::path3());
    std::vector<Tubing> m = enumerate_maximal_tubings(ts);
    REQUIRE(m.size() == 2);
    CHECK(m[0] == Tubing{0, 1, 2, 3, 4});
    CHECK(m[1] == Tubing{0, 1, 2, 4, 5});
}

TEST_CASE("uniquely completable almost-maximal tubings") {
    TubeSet ts = enumerate_tubes(tg::path3());
    std::vector<Tubing> m = enumerate_maximal_tubings(ts);
    std::vector<UcTubing> uc = enumerate_uc_almost_maximal(ts, m);
    REQUIRE(uc.size() == 8);
    std::vector<Tubing> got;
    for (const UcTubing& u : uc) got.push_back(u.tubes);
    CHECK(got == std::vector<Tubing>{{0, 1, 2, 3},
                                     {0, 1, 2, 5},
                                     {0, 1, 3, 4},
                                     {0, 1, 4, 5},
                                     {0, 2, 3, 4},
                                     {0, 2, 4, 5},
                                     {1, 2, 3, 4},
                                     {1, 2, 4, 5}});
    const int full = ts.full_tube();
    for (const UcTubing& u : uc) {
        CHECK(ts.tubes[u.removed].singleton() + (u.removed == full) == 1);
        CHECK(std::includes(m[u.parent].begin(), m[u.parent].end(),
                            u.tubes.begin(), u.tubes.end()));
    }

    const struct {
        Graph g;
        std::size_t count;
    } cases[] = {{tg::single_edge(), 3}, {tg::path4(), 25}, {tg::star3(), 30},
                 {tg::triangle(), 24},   {tg::cycle4(), 100}, {tg::double_edge(), 6}};
    for (const auto& c : cases) {
        TubeSet all = enumerate_tubes(c.g);
        CHECK(enumerate_uc_almost_maximal(all, enumerate_maximal_tubings(all)).size() ==
              c.count);
    }

    // no singleton-or-full dichotomy on a disconnected graph, but the
    // unique-parent definition still applies
    TubeSet dis = enumerate_tubes(tg::two_disjoint_edges());
    std::vector<UcTubing> ud =
        enumerate_uc_almost_maximal(dis, enumerate_maximal_tubings(dis));
    CHECK(ud.size() == 6);
}

TEST_CASE("successor inside a tubing") {
    TubeSet ts = enumerate_tubes(tg::path3());
    Tubing t = {0, 1, 2, 3, 4};
    CHECK(tubing_successor(ts, t, 0) == 3);
    CHECK(tubing_successor(ts, t, 1) == 3);
    CHECK(tubing_successor(ts, t, 2) == 4);
    CHECK(tubing_successor(ts, t, 3) == 4);
    CHECK_THROWS_AS(tubing_successor(ts, t, 4), contract_error);
    CHECK_THROWS_AS(tubing_successor(ts, t, 5), contract_error);  // not a member
}

TEST_CASE("predecessors and the introduced edge") {
    TubeSet ts = enumerate_tubes(tg::path3());
    Tubing t = {0, 1, 2, 3, 4};

    Predecessors top = tubing_predecessors(ts, t, 4);
    CHECK(top.tubes == std::vector<int>{2, 3});
    CHECK(top.introduced_edge == 1);

    Predecessors mid = tubing_predecessors(ts, t, 3);
    CHECK(mid.tubes == std::vector<int>{0, 1});
    CHECK(mid.introduced_edge == 0);

    CHECK_THROWS_AS(tubing_predecessors(ts, t, 0), contract_error);

    // every non-singleton member of every maximal tubing decomposes
    for (const Graph& g : {tg::path4(), tg::star3(), tg::triangle(),
                           tg::double_edge()}) {
        TubeSet all = enumerate_tubes(g);
        for (const Tubing& m : enumerate_maximal_tubings(all))
            for (int id : m) {
                if (all.tubes[id].singleton()) continue;
                Predecessors p = tubing_predecessors(all, m, id);
                CHECK(p.tubes.size() >= 1);
                CHECK(p.tubes.size() <= 2);
            }
    }
}

TEST_CASE("singleton-complete tubings biject with line-graph tubings") {
    const struct {
        Graph g;
        std::uint64_t count;
    } cases[] = {{tg::single_edge(), 2}, {tg::path3(), 6},   {tg::star3(), 26},
                 {tg::double_edge(), 6}, {tg::triangle(), 26}};
    for (const auto& c : cases) {
        GaCheck ga = ga_tubing_bijection_check(c.g);
        CHECK(ga.tubings_with_all_singletons == c.count);
        CHECK(ga.line_graph_tubings == c.count);
        CHECK(ga.injective);
        CHECK(ga.image_contained);
        CHECK(ga.bijection);
    }
    CHECK(ga_tubing_bijection_check(tg::cycle4()).bijection);
}

TEST_CASE("budget limits enumeration work") {
    CHECK_THROWS_AS(enumerate_tubes(tg::cycle4(), 3), budget_error);
    TubeSet ts = enumerate_tubes(tg::cycle4());
    CHECK_THROWS_AS(enumerate_maximal_tubings(ts, 5), budget_error);
}
