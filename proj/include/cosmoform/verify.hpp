#pragma once

#include <random>
#include <string>
#include <vector>

#include "cosmoform/canonical.hpp"
#include "cosmoform/graph.hpp"
#include "cosmoform/matrix.hpp"
#include "cosmoform/polytope.hpp"
#include "cosmoform/serialize.hpp"
#include "cosmoform/triangulation.hpp"
#include "cosmoform/tubing.hpp"
#include "cosmoform/volume.hpp"

namespace cosmoform {

struct VerifyProperty {
    std::string name;
    bool pass = true;
    bool skipped = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyProperty> properties;
    bool ok = true;
    std::string first_failure;

    void add(VerifyProperty p) {
        if (!p.pass && first_failure.empty()) first_failure = p.name;
        ok = ok && p.pass;
        properties.push_back(std::move(p));
    }
};

namespace detail {

// n^(n-1) / (n-1)!; relates the chart volume at the barycenter to the sum of
// raw cell determinants. Row-reducing a matrix of unit-sum rows against the
// all-ones vector drops it to the chart edge matrix, and recentring at the
// barycenter scales every edge by n.
inline Rational chart_volume_constant(int n) {
    Integer num = 1;
    for (int i = 1; i < n; ++i) num *= n;
    Integer den;
    mpz_fac_ui(den.get_mpz_t(), static_cast<unsigned long>(n - 1));
    return Rational(num) / Rational(den);
}

inline QVec random_unit_sum_point(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> dist(-9, 9);
    QVec x(n, Rational(0));
    Rational sum(0);
    for (int i = 0; i + 1 < n; ++i) {
        x[i] = Rational(dist(rng));
        x[i] /= 10;
        sum += x[i];
    }
    x[n - 1] = Rational(1) - sum;
    return x;
}

}  // namespace detail

inline VerifyReport run_verify(const Graph& g, long long budget = kDefaultBudget,
                               unsigned seed = 0) {
    VerifyReport report;
    TubeSet ts = enumerate_tubes(g, budget);
    const int n = g.n();
    std::vector<CosmoVertex> pv = polytope_vertices(g);
    std::vector<DualVertex> dv = dual_vertices(ts);
    std::vector<Tubing> maximal = enumerate_maximal_tubings(ts, budget);

    {
        VerifyProperty p{"tubing_cardinality"};
        for (const Tubing& t : maximal)
            if (static_cast<int>(t.size()) != n) p.pass = false;
        p.detail = std::to_string(maximal.size()) + " maximal tubings, " +
                   (p.pass ? "all" : "not all") + " of size " + std::to_string(n);
        report.add(p);
    }

    {
        VerifyProperty p{"facet_validity"};
        for (int t = 0; t < ts.size() && p.pass; ++t) {
            QVec h = facet_normal(ts, t);
            QMat zero_rows;
            int positive = 0;
            for (const CosmoVertex& v : pv) {
                Rational pr = dot(h, v.coords);
                if (pr < 0) p.pass = false;
                if (pr == 0)
                    zero_rows.push_back(v.coords);
                else
                    ++positive;
            }
            if (positive == 0 || affine_dim(zero_rows) != n - 2) p.pass = false;
            if (!p.pass) p.detail = "violated at tube " + ts.label(t);
        }
        if (p.pass)
            p.detail = std::to_string(ts.size()) +
                       " facet inequalities valid and supporting";
        report.add(p);
    }

    {
        VerifyProperty p{"face_oracle_agreement"};
        int bits = 3 * g.ne();
        if (bits >= 62 || (1LL << bits) > budget) {
            p.skipped = true;
            p.detail = "2^" + std::to_string(bits) + " subsets exceed budget";
        } else {
            std::vector<Cycle> cycles = simple_cycles(g);
            long long faces = 0;
            for (std::uint64_t mask = 0; mask < (1ULL << bits) && p.pass; ++mask) {
                bool comb = is_face_combinatorial(g, mask, cycles);
                bool lp = is_face_lp(g, mask);
                if (comb != lp) {
                    p.pass = false;
                    p.detail = "disagreement at vertex-subset mask " +
                               std::to_string(mask);
                }
                if (comb) ++faces;
            }
            if (p.pass)
                p.detail = std::to_string(1LL << bits) + " subsets, " +
                           std::to_string(faces) + " faces, criteria agree";
        }
        report.add(p);
    }

    Triangulation tri_max = build_max_tubing_triangulation(ts, budget);
    Triangulation tri_bd = build_boundary_triangulation(ts, budget);
    {
        VerifyProperty p{"triangulations_and_ridges"};
        ValidationReport rm = validate_ridges(ts, tri_max);
        ValidationReport rb = validate_ridges(ts, tri_bd);
        p.pass = rm.ok && rb.ok;
        p.detail = std::to_string(tri_max.cells.size()) + " max-tubing cells, " +
                   std::to_string(tri_bd.cells.size()) + " boundary cells";
        if (!rm.ok) p.detail += "; max-tubing: " + rm.violations.front();
        if (!rb.ok) p.detail += "; boundary: " + rb.violations.front();
        report.add(p);
    }

    QVec x1(n, Rational(1, n));
    Rational vol1 = oracle_volume(shifted_dual(ts, x1));
    {
        VerifyProperty p{"volume_additivity"};
        Rational sum_max(0), sum_bd(0);
        for (const SimplexCell& c : tri_max.cells)
            sum_max += cell_detvol(ts, c, DetNormalization::NormalizedVertices);
        for (const SimplexCell& c : tri_bd.cells)
            sum_bd += cell_detvol(ts, c, DetNormalization::NormalizedVertices);
        Rational expect = detail::chart_volume_constant(n) * sum_max;
        p.pass = sum_max == sum_bd && vol1 == expect;
        p.detail = "volume " + to_string(vol1) + ", cell sums " +
                   to_string(sum_max) + " / " + to_string(sum_bd) + ", constant " +
                   to_string(detail::chart_volume_constant(n));
        report.add(p);
    }

    {
        VerifyProperty p{"raw_det_observation"};
        Rational expect(1);
        for (int e = 0; e < g.ne(); ++e) expect *= 2;
        bool all = true;
        for (const SimplexCell& c : tri_max.cells)
            if (cell_detvol(ts, c, DetNormalization::RawNormals) != expect)
                all = false;
        p.detail = all ? "all max-tubing cell determinants equal 2^" +
                             std::to_string(g.ne())
                       : "cell determinants deviate from 2^" +
                             std::to_string(g.ne()) + " (observation only)";
        report.add(p);
    }

    {
        VerifyProperty p{"rep_equality"};
        p.pass = check_equality(ts, budget);
        p.detail = p.pass ? "both numerator polynomials agree on the unit-sum chart"
                          : "numerator polynomials differ";
        report.add(p);
    }

    CanonicalForm fa = rep_a(ts, budget);
    {
        VerifyProperty p{"volume_ratio"};
        QVec x2 = vscale(Rational(1, 2), vadd(x1, pv.front().coords));
        Rational vol2 = oracle_volume(shifted_dual(ts, x2));
        Rational f1 = evaluate(ts, fa, x1);
        Rational f2 = evaluate(ts, fa, x2);
        p.pass = f1 * vol2 == f2 * vol1;
        p.detail = "ratio " + to_string(Rational(vol1 / vol2)) + " at midpoint toward " +
                   pv.front().label;
        report.add(p);
    }

    {
        VerifyProperty p{"scaling_law"};
        if (ts.size() != n) {
            p.skipped = true;
            p.detail = std::to_string(ts.size()) + " facets with dimension " +
                       std::to_string(n) + "; dual is not a simplex";
        } else {
            for (int k = 0; k < 3 && p.pass; ++k) {
                QVec x = vscale(Rational(1, 2),
                                vadd(x1, pv[k % pv.size()].coords));
                ShiftedDual sd = shifted_dual(ts, x);
                Rational prod(1);
                for (const Rational& s : sd.scalars) prod *= s;
                if (oracle_volume(sd) * prod != vol1) p.pass = false;
            }
            p.detail = p.pass ? "rescaled volume constant at 3 interior points"
                              : "rescaled volume varies";
        }
        report.add(p);
    }

    {
        VerifyProperty p{"ga_bijection"};
        GaCheck ga = ga_tubing_bijection_check(g, budget);
        p.pass = ga.bijection;
        p.detail = std::to_string(ga.tubings_with_all_singletons) +
                   " singleton-complete tubings vs " +
                   std::to_string(ga.line_graph_tubings) + " line-graph tubings";
        report.add(p);
    }

    {
        VerifyProperty p{"interior_certificate"};
        QVec c = interior_point(g);
        p.detail = "vertex barycenter " + vec_to_string(c) +
                   " strictly inside every facet";
        report.add(p);
    }

    {
        VerifyProperty p{"adjoint_construction"};
        std::mt19937 rng(seed);
        std::vector<QVec> points;
        for (int k = 0; k < 2; ++k)
            points.push_back(detail::random_unit_sum_point(rng, n));
        CanonicalForm fb = rep_b(ts, budget);
        for (RepKind kind : {RepKind::A, RepKind::B}) {
            const CanonicalForm& form = kind == RepKind::A ? fa : fb;
            Polynomial adj = adjoint_numerator(ts, kind, budget);
            for (const QVec& x : points) {
                QVec pairings(ts.size());
                for (int t = 0; t < ts.size(); ++t)
                    pairings[t] = dot(facet_normal(ts, t), x);
                Rational sum(0);
                for (const CFTerm& term : form.terms) {
                    std::vector<char> in(ts.size(), 0);
                    for (int id : term.tubes) in[id] = 1;
                    Rational prod = term.num;
                    for (int t = 0; t < ts.size(); ++t)
                        if (!in[t]) prod *= pairings[t];
                    sum += prod;
                }
                if (adj.evaluate(x) != sum) p.pass = false;
            }
        }
        p.detail = p.pass ? "numerator matches cleared denominators at " +
                                std::to_string(points.size()) +
                                " random unit-sum points (both reps)"
                          : "numerator mismatch";
        report.add(p);
    }

    return report;
}

inline OrderedJson verify_json(const Graph& g, const VerifyReport& report) {
    OrderedJson j;
    j["graph"] = graph_json(g);
    OrderedJson props = OrderedJson::array();
    for (const VerifyProperty& p : report.properties) {
        OrderedJson row;
        row["name"] = p.name;
        row["status"] = !p.pass ? "fail" : p.skipped ? "skip" : "pass";
        row["detail"] = p.detail;
        props.push_back(row);
    }
    j["properties"] = props;
    j["ok"] = report.ok;
    return j;
}

inline std::string verify_text(const VerifyReport& report) {
    std::string out;
    for (const VerifyProperty& p : report.properties) {
        out += !p.pass ? "FAIL " : p.skipped ? "skip " : "pass ";
        out += p.name + ": " + p.detail + "\n";
    }
    out += report.ok ? "all properties hold\n"
                     : "first failing property: " + report.first_failure + "\n";
    return out;
}

}  // namespace cosmoform
