#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "cosmoform/linprog.hpp"
#include "cosmoform/matrix.hpp"
#include "cosmoform/polynomial.hpp"
#include "cosmoform/rational.hpp"

using namespace cosmoform;

namespace {

// Cofactor expansion along the first row; deliberately a different algorithm
// than the fraction-free elimination in the library.
Rational cofactor_det(const QMat& m) {
    const std::size_t n = m.size();
    if (n == 0) return Rational(1);
    if (n == 1) return m[0][0];
    Rational acc(0);
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        QMat minor;
        for (std::size_t r = 1; r < n; ++r) {
            QVec row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        Rational term = m[0][j] * cofactor_det(minor);
        acc += (j % 2 == 0) ? term : Rational(-term);
    }
    return acc;
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
    CHECK(parse_rational("7") == 7);
    CHECK(parse_rational("-3/9") == Rational(-1, 3));
    CHECK(parse_rational("+2/4") == Rational(1, 2));
    CHECK(to_string(parse_rational("-3/9")) == "-1/3");
    CHECK_THROWS_AS(parse_rational("1/0"), contract_error);
    CHECK_THROWS_AS(parse_rational("x"), contract_error);
    CHECK_THROWS_AS(parse_rational(""), contract_error);
    CHECK_THROWS_AS(parse_rational("1/"), contract_error);
}

TEST_CASE("vector helpers") {
    QVec a = {Rational(1), Rational(-1, 2), Rational(0)};
    QVec b = {Rational(2), Rational(2), Rational(3)};
    CHECK(dot(a, b) == 1);
    CHECK(coord_sum(a) == Rational(1, 2));
    CHECK(veq(vadd(a, b), QVec{Rational(3), Rational(3, 2), Rational(3)}));
    CHECK(veq(vsub(b, b), QVec(3, Rational(0))));
    CHECK(veq(vscale(Rational(2), a), QVec{Rational(2), Rational(-1), Rational(0)}));
    CHECK(vec_to_string(a) == "(1, -1/2, 0)");
}

TEST_CASE("determinant agrees with cofactor expansion") {
    QMat id4(4, QVec(4, Rational(0)));
    for (int i = 0; i < 4; ++i) id4[i][i] = 1;
    CHECK(det(id4) == 1);

    QMat repeated = {{Rational(1), Rational(2)}, {Rational(1), Rational(2)}};
    CHECK(det(repeated) == 0);

    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + trial % 5;
        QMat m(n, QVec(n));
        for (auto& row : m)
            for (auto& x : row) {
                x = Rational(num(rng), den(rng));
                x.canonicalize();
            }
        CHECK(det(m) == cofactor_det(m));
    }
}

TEST_CASE("rank and affine dimension") {
    QMat m = {{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
    CHECK(rank(m) == 1);
    m.push_back({Rational(0), Rational(1)});
    CHECK(rank(m) == 2);

    CHECK(affine_dim({}) == -1);
    CHECK(affine_dim({{Rational(5), Rational(5)}}) == 0);
    CHECK(affine_dim({{Rational(0), Rational(0)},
                      {Rational(1), Rational(1)},
                      {Rational(2), Rational(2)}}) == 1);
    CHECK(affine_dim({{Rational(0), Rational(0)},
                      {Rational(1), Rational(0)},
                      {Rational(0), Rational(1)}}) == 2);
}

TEST_CASE("strict feasibility solver") {
    QVec e1 = {Rational(1), Rational(0)};
    QVec e2 = {Rational(0), Rational(1)};
    QVec both = {Rational(1), Rational(1)};

    CHECK(lp_strict_feasible({}, {}));
    CHECK(lp_strict_feasible({e1}, {e2}));
    CHECK(lp_strict_feasible({}, {e1, e2, both}));
    CHECK_FALSE(lp_strict_feasible({e1, e2}, {both}));
    CHECK_FALSE(lp_strict_feasible({}, {e1, {Rational(-1), Rational(0)}}));
    CHECK_FALSE(lp_strict_feasible({both}, {e1, e2}));
}

TEST_CASE("polynomial arithmetic") {
    // (x0 + 2 x1 + 3)(x0 - x2)
    Polynomial a = Polynomial::linear({Rational(1), Rational(2), Rational(0)}, Rational(3));
    Polynomial b = Polynomial::linear({Rational(1), Rational(0), Rational(-1)}, Rational(0));
    Polynomial p = a * b;
    CHECK(p.total_degree() == 2);
    CHECK(p == a.times_linear({Rational(1), Rational(0), Rational(-1)}, Rational(0)));

    QVec x = {Rational(1, 2), Rational(-1), Rational(2)};
    CHECK(p.evaluate(x) == a.evaluate(x) * b.evaluate(x));
    CHECK((p - p).is_zero());
    CHECK((p - p).total_degree() == -1);
    CHECK(p.scaled(Rational(-2)).evaluate(x) == Rational(-2) * p.evaluate(x));

    CHECK(p.to_string({"x0", "x1", "x2"}) ==
          "x0^2 + 2*x0*x1 - x0*x2 - 2*x1*x2 + 3*x0 - 3*x2");
}

TEST_CASE("hyperplane reduction substitutes the chosen variable") {
    Polynomial a = Polynomial::linear({Rational(1), Rational(2), Rational(0)}, Rational(3));
    Polynomial b = Polynomial::linear({Rational(1), Rational(0), Rational(-1)}, Rational(0));
    Polynomial p = (a * b).times_linear({Rational(0), Rational(0), Rational(1)}, Rational(5));
    Polynomial r = p.reduce_mod_hyperplane(2);

    for (const auto& [e, c] : r.terms()) CHECK(e[2] == 0);
    CHECK(r.reduce_mod_hyperplane(2) == r);

    // agreement on the unit-sum hyperplane
    for (int k = 0; k < 5; ++k) {
        QVec x = {Rational(Rational(k) / 7), Rational(Rational(1 - k) / 3), Rational(0)};
        x[2] = Rational(1) - x[0] - x[1];
        CHECK(p.evaluate(x) == r.evaluate(x));
    }

    CHECK((Polynomial::variable(3, 2) - Polynomial::linear(
               {Rational(-1), Rational(-1), Rational(0)}, Rational(1)))
              .reduce_mod_hyperplane(2)
              .is_zero());
}
