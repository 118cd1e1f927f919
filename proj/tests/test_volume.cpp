#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "cosmoform/polytope.hpp"
#include "cosmoform/triangulation.hpp"
#include "cosmoform/volume.hpp"
#include "test_graphs.hpp"

using namespace cosmoform;
namespace tg = testgraphs;

namespace {

QVec barycentric(int n) { return QVec(n, Rational(1, n)); }

Rational dimension_constant(int n) {
    Rational c(1);
    for (int i = 1; i < n; ++i) {
        Rational f(n, i);
        f.canonicalize();
        c *= f;
    }
    return c;
}

}  // namespace

TEST_CASE("chart projection") {
    QVec v = {Rational(1), Rational(-3, 2), Rational(1, 2)};
    CHECK(veq(project_to_chart(v), QVec{Rational(1), Rational(-3, 2)}));
    CHECK_THROWS_AS(project_to_chart(QVec{Rational(1), Rational(1)}), contract_error);
}

TEST_CASE("shifted dual at the barycenter") {
    TubeSet ts = enumerate_tubes(tg::path3());
    ShiftedDual sd = shifted_dual(ts, barycentric(5));
    REQUIRE(sd.scalars.size() == 6);
    for (const Rational& s : sd.scalars) CHECK(s == 1);
    REQUIRE(sd.chart_vertices.size() == 6);
    for (const QVec& u : sd.chart_vertices) CHECK(u.size() == 4);

    CHECK_THROWS_AS(shifted_dual(ts, QVec(5, Rational(0))), contract_error);
    TubeSet edge = enumerate_tubes(tg::single_edge());
    // a boundary point of the polytope is not an admissible shift
    CHECK_THROWS_AS(shifted_dual(edge, QVec{Rational(1), Rational(0), Rational(0)}),
                    contract_error);
}

TEST_CASE("dual volumes at the barycenter") {
    const struct {
        Graph g;
        Rational vol;
    } cases[] = {
        {tg::single_edge(), Rational(9, 8)},
        {tg::path3(), Rational(625, 324)},
        {tg::path4(), Rational(3411821, 933120)},
        {tg::star3(), Rational(117649, 30720)},
        {tg::triangle(), Rational(48, 25)},
        {tg::cycle4(), Rational(65536, 18225)},
        {tg::double_edge(), Rational(32, 27)},
    };
    for (const auto& c : cases) {
        TubeSet ts = enumerate_tubes(c.g);
        INFO("graph with " << c.g.nv() << " vertices, " << c.g.ne() << " edges");
        CHECK(oracle_volume(shifted_dual(ts, barycentric(c.g.n()))) == c.vol);
    }
}

TEST_CASE("volume equals the determinant sum times a dimension constant") {
    CHECK(dimension_constant(3) == Rational(9, 2));
    CHECK(dimension_constant(5) == Rational(625, 24));
    for (const Graph& g : {tg::single_edge(), tg::path3(), tg::path4(), tg::star3(),
                           tg::triangle(), tg::cycle4(), tg::double_edge()}) {
        TubeSet ts = enumerate_tubes(g);
        Rational sum(0);
        for (const SimplexCell& cell : build_max_tubing_triangulation(ts).cells)
            sum += cell_detvol(ts, cell, DetNormalization::NormalizedVertices);
        INFO("graph with " << g.nv() << " vertices, " << g.ne() << " edges");
        CHECK(oracle_volume(shifted_dual(ts, barycentric(g.n()))) ==
              dimension_constant(g.n()) * sum);
    }
}

TEST_CASE("volume grows toward a facet of the polytope") {
    const struct {
        Graph g;
        Rational v0, v1, v2;  // shift parameters 0, 1/2, 3/4
    } cases[] = {
        {tg::single_edge(), Rational(9, 8), Rational(36, 25), Rational(288, 121)},
        {tg::path3(), Rational(625, 324), Rational(2500, 1029), Rational(320, 81)},
        {tg::triangle(), Rational(48, 25), Rational(1270340288, 545839125),
         Rational(8493936181248, 2247707765875)},
    };
    for (const auto& c : cases) {
        TubeSet ts = enumerate_tubes(c.g);
        const int n = c.g.n();
        const QVec h0 = facet_normal(ts, 0);

        // barycenter of the polytope vertices lying on the first facet
        QVec b(n, Rational(0));
        int on_facet = 0;
        for (const auto& p : polytope_vertices(c.g)) {
            if (dot(h0, p.coords) != 0) continue;
            b = vadd(b, p.coords);
            ++on_facet;
        }
        REQUIRE(on_facet > 0);
        b = vscale(Rational(1, on_facet), b);

        auto vol_at = [&](const Rational& lam) {
            QVec x = vadd(vscale(Rational(1) - lam, barycentric(n)), vscale(lam, b));
            return oracle_volume(shifted_dual(ts, x));
        };
        INFO("graph with " << c.g.nv() << " vertices, " << c.g.ne() << " edges");
        CHECK(vol_at(Rational(0)) == c.v0);
        CHECK(vol_at(Rational(1, 2)) == c.v1);
        CHECK(vol_at(Rational(3, 4)) == c.v2);
        CHECK(c.v0 < c.v1);
        CHECK(c.v1 < c.v2);
    }
}

TEST_CASE("volume rescales by the facet scalars when the dual is a simplex") {
    TubeSet ts = enumerate_tubes(tg::single_edge());
    REQUIRE(ts.size() == 3);  // as many facets as the ambient dimension
    const Rational base = oracle_volume(shifted_dual(ts, barycentric(3)));
    for (const auto& p : polytope_vertices(tg::single_edge())) {
        QVec x = vscale(Rational(1, 2), vadd(barycentric(3), p.coords));
        ShiftedDual sd = shifted_dual(ts, x);
        Rational prod(1);
        for (const Rational& s : sd.scalars) prod *= s;
        CHECK(oracle_volume(sd) * prod == base);
    }
}
