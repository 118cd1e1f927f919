#include <algorithm>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "cosmoform/polytope.hpp"
#include "cosmoform/triangulation.hpp"
#include "test_graphs.hpp"

using namespace cosmoform;
namespace tg = testgraphs;

TEST_CASE("cell counts of both triangulations") {
    const struct {
        Graph g;
        std::size_t max_cells, boundary_cells;
    } cases[] = {
        {tg::single_edge(), 1, 3}, {tg::path3(), 2, 8},   {tg::path4(), 5, 25},
        {tg::star3(), 6, 30},      {tg::triangle(), 6, 24}, {tg::cycle4(), 20, 100},
        {tg::double_edge(), 2, 6},
    };
    for (const auto& c : cases) {
        TubeSet ts = enumerate_tubes(c.g);
        INFO("graph with " << c.g.nv() << " vertices, " << c.g.ne() << " edges");
        Triangulation tmax = build_max_tubing_triangulation(ts);
        Triangulation tbd = build_boundary_triangulation(ts);
        CHECK(tmax.kind == TriKind::MaxTubing);
        CHECK(tbd.kind == TriKind::BoundaryCone);
        CHECK(tmax.cells.size() == c.max_cells);
        CHECK(tbd.cells.size() == c.boundary_cells);
        for (const SimplexCell& cell : tmax.cells) {
            CHECK_FALSE(cell.has_apex);
            CHECK(cell.tubes.size() == static_cast<std::size_t>(c.g.n()));
        }
        for (const SimplexCell& cell : tbd.cells) {
            CHECK(cell.has_apex);
            CHECK(cell.tubes.size() == static_cast<std::size_t>(c.g.n() - 1));
        }
    }
}

TEST_CASE("cell determinants on small graphs") {
    TubeSet edge = enumerate_tubes(tg::single_edge());
    SimplexCell full{{0, 1, 2}, false};
    CHECK(cell_detvol(edge, full, DetNormalization::RawNormals) == 2);
    CHECK(cell_detvol(edge, full, DetNormalization::NormalizedVertices) ==
          Rational(1, 4));

    SimplexCell cone{{0, 1}, true};
    CHECK(cell_detvol(edge, cone, DetNormalization::RawNormals) == 1);
    CHECK(cell_detvol(edge, cone, DetNormalization::NormalizedVertices) ==
          Rational(1, 12));

    TubeSet p3 = enumerate_tubes(tg::path3());
    for (const SimplexCell& cell : build_max_tubing_triangulation(p3).cells) {
        CHECK(cell_detvol(p3, cell, DetNormalization::RawNormals) == 4);
        CHECK(cell_detvol(p3, cell, DetNormalization::NormalizedVertices) ==
              Rational(1, 27));
    }

    CHECK_THROWS_AS(cell_detvol(edge, SimplexCell{{0, 1}, false},
                                DetNormalization::RawNormals),
                    contract_error);
    CHECK_THROWS_AS(cell_detvol(edge, SimplexCell{{0, 1, 2}, true},
                                DetNormalization::RawNormals),
                    contract_error);
}

TEST_CASE("normalized determinant sums agree across triangulations") {
    const struct {
        Graph g;
        Rational sum;
    } cases[] = {
        {tg::single_edge(), Rational(1, 4)},  {tg::path3(), Rational(2, 27)},
        {tg::path4(), Rational(29, 1296)},    {tg::star3(), Rational(3, 128)},
        {tg::triangle(), Rational(4, 135)},   {tg::cycle4(), Rational(7, 810)},
        {tg::double_edge(), Rational(1, 9)},
    };
    for (const auto& c : cases) {
        TubeSet ts = enumerate_tubes(c.g);
        Rational sum_max(0), sum_bd(0);
        for (const SimplexCell& cell : build_max_tubing_triangulation(ts).cells)
            sum_max += cell_detvol(ts, cell, DetNormalization::NormalizedVertices);
        for (const SimplexCell& cell : build_boundary_triangulation(ts).cells)
            sum_bd += cell_detvol(ts, cell, DetNormalization::NormalizedVertices);
        INFO("graph with " << c.g.nv() << " vertices, " << c.g.ne() << " edges");
        CHECK(sum_max == c.sum);
        CHECK(sum_bd == c.sum);
    }
}

TEST_CASE("ridge dichotomy holds on both triangulations") {
    for (const Graph& g : {tg::single_edge(), tg::path3(), tg::path4(), tg::star3(),
                           tg::triangle(), tg::cycle4(), tg::double_edge()}) {
        TubeSet ts = enumerate_tubes(g);
        for (const Triangulation& tri : {build_max_tubing_triangulation(ts),
                                         build_boundary_triangulation(ts)}) {
            ValidationReport report = validate_ridges(ts, tri);
            INFO((tri.kind == TriKind::MaxTubing ? "max-tubing" : "boundary")
                 << " triangulation, " << g.nv() << " vertices, " << g.ne()
                 << " edges");
            CHECK(report.ok);
            CHECK(report.violations.empty());
            for (const RidgeRecord& r : report.ridges) {
                if (r.kind == "shared") {
                    CHECK(r.cells.size() == 2);
                } else {
                    REQUIRE(r.kind == "boundary");
                    CHECK(r.cells.size() == 1);
                    CHECK(r.facet_tag >= 0);
                    CHECK_FALSE(r.has_apex);
                }
            }
        }
    }
}

TEST_CASE("interior ridge structure of the three-vertex path") {
    TubeSet ts = enumerate_tubes(tg::path3());
    ValidationReport report = validate_ridges(ts, build_max_tubing_triangulation(ts));
    int shared = 0, boundary = 0;
    for (const RidgeRecord& r : report.ridges) {
        if (r.kind == "shared") {
            ++shared;
            CHECK(r.tubes == std::vector<int>{0, 1, 2, 4});
        } else {
            ++boundary;
        }
    }
    CHECK(shared == 1);
    CHECK(boundary == 8);

    // in the cone triangulation every apex ridge joins two cells
    ValidationReport cone = validate_ridges(ts, build_boundary_triangulation(ts));
    CHECK(cone.ok);
    for (const RidgeRecord& r : cone.ridges)
        if (r.has_apex) CHECK(r.kind == "shared");
}

TEST_CASE("separating functionals split incompatible maximal tubings") {
    for (const Graph& g : {tg::path3(), tg::star3(), tg::triangle()}) {
        TubeSet ts = enumerate_tubes(g);
        auto duals = dual_vertices(ts);
        std::vector<Tubing> m = enumerate_maximal_tubings(ts);
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = 0; j < m.size(); ++j) {
                if (i == j) continue;
                QVec a = separating_functional(ts, m[i], m[j]);
                for (int t = 0; t < ts.size(); ++t) {
                    const Rational v = dot(a, duals[t].z);
                    const bool in_i = std::binary_search(m[i].begin(), m[i].end(), t);
                    const bool in_j = std::binary_search(m[j].begin(), m[j].end(), t);
                    INFO("tube " << ts.label(t));
                    if (in_i && in_j) CHECK(v == 0);
                    if (in_i && !in_j) CHECK(v > 0);
                    if (in_j && !in_i) CHECK(v < 0);
                }
            }
    }

    TubeSet p3 = enumerate_tubes(tg::path3());
    std::vector<Tubing> m = enumerate_maximal_tubings(p3);
    CHECK_THROWS_AS(separating_functional(p3, m[0], m[0]), contract_error);
    CHECK_THROWS_AS(separating_functional(p3, Tubing{0, 1, 2}, m[1]), contract_error);
}

TEST_CASE("cells adjacent across shared ridges") {
    const struct {
        Graph g;
        int cells, edges;
    } cases[] = {{tg::path3(), 2, 1},
                 {tg::star3(), 6, 6},
                 {tg::triangle(), 6, 6},
                 {tg::double_edge(), 2, 1}};
    for (const auto& c : cases) {
        TubeSet ts = enumerate_tubes(c.g);
        Triangulation tri = build_max_tubing_triangulation(ts);
        Graph adj = ridge_adjacency_graph(ts, tri);
        INFO("graph with " << c.g.nv() << " vertices, " << c.g.ne() << " edges");
        CHECK(adj.nv() == c.cells);
        CHECK(adj.ne() == c.edges);
        for (const Edge& e : adj.edges) {
            std::vector<int> diff;
            std::set_symmetric_difference(
                tri.cells[e.u].tubes.begin(), tri.cells[e.u].tubes.end(),
                tri.cells[e.v].tubes.begin(), tri.cells[e.v].tubes.end(),
                std::back_inserter(diff));
            CHECK(diff.size() == 2);
        }
    }
}

TEST_CASE("triangulation budget") {
    TubeSet ts = enumerate_tubes(tg::cycle4());
    CHECK_THROWS_AS(build_max_tubing_triangulation(ts, 5), budget_error);
}
