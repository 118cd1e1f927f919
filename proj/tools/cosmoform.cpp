#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cosmoform/canonical.hpp"
#include "cosmoform/graph.hpp"
#include "cosmoform/serialize.hpp"
#include "cosmoform/triangulation.hpp"
#include "cosmoform/tubing.hpp"
#include "cosmoform/verify.hpp"

namespace {

using namespace cosmoform;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw io_error("cannot open \"" + out_path + "\" for writing");
    out << text;
}

QVec parse_point(const std::string& s, int n) {
    QVec x;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) x.push_back(parse_rational(part));
    if (static_cast<int>(x.size()) != n)
        throw contract_error("expected " + std::to_string(n) +
                             " comma-separated coordinates, got " +
                             std::to_string(x.size()));
    return x;
}

OrderedJson terms_only(OrderedJson j) {
    j.erase("tube_labels");
    j.erase("tube_factors");
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tubings, dual triangulations and rational canonical forms of "
                 "graph-built polytopes"};
    app.require_subcommand(1);

    std::string graph_file, rep = "a", format = "json", at_str, out_path;
    bool boundary = false, check = false, multigraph = false;
    long long budget = kDefaultBudget;
    unsigned seed = 0;

    auto add_common = [&](CLI::App* sub, std::vector<std::string> formats) {
        sub->add_option("graph", graph_file,
                        "graph file, JSON or whitespace edge list")
            ->required();
        sub->add_option("--budget", budget,
                        "work limit in elementary enumeration steps");
        sub->add_flag("--multigraph", multigraph, "accept parallel edges");
        sub->add_option("-o,--output", out_path, "write to file instead of stdout");
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember(formats));
        return sub;
    };
    auto add_rep = [&](CLI::App* sub) {
        sub->add_option("--rep", rep, "which representation to build")
            ->check(CLI::IsMember({"a", "b", "both"}));
    };

    add_common(app.add_subcommand("tubes", "enumerate tubes in canonical order"),
               {"json", "text"});
    add_common(app.add_subcommand("tubings",
                                  "enumerate maximal and uniquely completable "
                                  "almost-maximal tubings"),
               {"json", "text"});
    add_common(app.add_subcommand("dual",
                                  "polytope vertices, facet normals and "
                                  "normalized dual vertices"),
               {"json", "text"});
    CLI::App* tri = add_common(
        app.add_subcommand("triangulate", "triangulate the dual and check ridges"),
        {"json", "text"});
    tri->add_flag("--boundary", boundary,
                  "cone over the uniquely completable boundary cells instead of "
                  "one cell per maximal tubing");
    CLI::App* can = add_common(
        app.add_subcommand("canonical", "rational form attached to the dual"),
        {"json", "text", "latex"});
    add_rep(can);
    can->add_flag("--check", check,
                  "also verify the two representations agree on the unit-sum "
                  "hyperplane");
    CLI::App* ev = add_common(
        app.add_subcommand("evaluate", "evaluate the rational form at a point"),
        {"json", "text"});
    add_rep(ev);
    ev->add_option("--at", at_str, "comma-separated rational coordinates, sum 1")
        ->required();
    CLI::App* ver = add_common(
        app.add_subcommand("verify", "run the structural property suite"),
        {"json", "text"});
    ver->add_option("--seed", seed, "seed for randomized spot checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        Graph g = Graph::parse(read_file(graph_file), multigraph);
        std::string out;

        if (cmd == "tubes") {
            TubeSet ts = enumerate_tubes(g, budget);
            out = format == "text" ? tubes_text(ts) : dump_json(tubes_json(ts));
        } else if (cmd == "tubings") {
            TubeSet ts = enumerate_tubes(g, budget);
            std::vector<Tubing> maximal = enumerate_maximal_tubings(ts, budget);
            std::vector<UcTubing> almost = enumerate_uc_almost_maximal(ts, maximal);
            out = format == "text"
                      ? tubings_text(ts, maximal, almost)
                      : dump_json(tubings_json(ts, maximal, almost));
        } else if (cmd == "dual") {
            TubeSet ts = enumerate_tubes(g, budget);
            out = format == "text" ? dual_text(ts) : dump_json(dual_json(ts));
        } else if (cmd == "triangulate") {
            TubeSet ts = enumerate_tubes(g, budget);
            Triangulation t = boundary ? build_boundary_triangulation(ts, budget)
                                       : build_max_tubing_triangulation(ts, budget);
            ValidationReport report = validate_ridges(ts, t);
            out = format == "text" ? triangulation_text(ts, t, report)
                                   : dump_json(triangulation_json(ts, t, report));
            if (!report.ok) {
                write_output(out, out_path);
                std::cerr << "ridge check failed: " << report.violations.front()
                          << "\n";
                return 1;
            }
        } else if (cmd == "canonical") {
            TubeSet ts = enumerate_tubes(g, budget);
            bool want_a = rep != "b", want_b = rep != "a";
            CanonicalForm fa, fb;
            if (want_a) fa = rep_a(ts, budget);
            if (want_b) fb = rep_b(ts, budget);
            bool equal = false;
            if (check) equal = check_equality(ts, budget);
            if (format == "latex") {
                if (want_a) out += "% rep A\n" + canonical_latex(ts, fa);
                if (want_b) out += "% rep B\n" + canonical_latex(ts, fb);
                if (check)
                    out += std::string("% representations agree on the unit-sum "
                                       "hyperplane: ") +
                           (equal ? "yes" : "no") + "\n";
            } else if (format == "text") {
                if (want_a) out += canonical_text(ts, fa);
                if (want_b) out += canonical_text(ts, fb);
                if (check)
                    out += std::string("equal on unit-sum hyperplane: ") +
                           (equal ? "yes" : "no") + "\n";
            } else {
                OrderedJson j;
                if (want_a && want_b) {
                    j["rep"] = "both";
                    j["A"] = terms_only(canonical_json(ts, fa));
                    j["B"] = terms_only(canonical_json(ts, fb));
                    OrderedJson labels = OrderedJson::array();
                    for (int i = 0; i < ts.size(); ++i)
                        labels.push_back(ts.label(i));
                    j["tube_labels"] = labels;
                    OrderedJson factors = OrderedJson::array();
                    for (int i = 0; i < ts.size(); ++i)
                        factors.push_back(facet_factor_string(ts, i, false));
                    j["tube_factors"] = factors;
                } else {
                    j = canonical_json(ts, want_a ? fa : fb);
                }
                if (check) j["equal_on_hyperplane"] = equal;
                out = dump_json(j);
            }
        } else if (cmd == "evaluate") {
            TubeSet ts = enumerate_tubes(g, budget);
            QVec x = parse_point(at_str, g.n());
            bool want_a = rep != "b", want_b = rep != "a";
            if (format == "text") {
                if (want_a)
                    out += "A " + to_string(evaluate(ts, rep_a(ts, budget), x)) + "\n";
                if (want_b)
                    out += "B " + to_string(evaluate(ts, rep_b(ts, budget), x)) + "\n";
            } else if (want_a && want_b) {
                OrderedJson j;
                j["rep"] = "both";
                j["at"] = rational_vec_json(x);
                j["A"] = to_string(evaluate(ts, rep_a(ts, budget), x));
                j["B"] = to_string(evaluate(ts, rep_b(ts, budget), x));
                out = dump_json(j);
            } else {
                CanonicalForm f = want_a ? rep_a(ts, budget) : rep_b(ts, budget);
                out = dump_json(evaluate_json(ts, f, x));
            }
        } else if (cmd == "verify") {
            VerifyReport report = run_verify(g, budget, seed);
            out = format == "text" ? verify_text(report)
                                   : dump_json(verify_json(g, report));
            write_output(out, out_path);
            if (!report.ok) {
                std::cerr << "property failed: " << report.first_failure << "\n";
                return 1;
            }
            return 0;
        }
        write_output(out, out_path);
    } catch (const budget_error& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 2;
    } catch (const io_error& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 3;
    } catch (const contract_error& e) {
        std::cerr << "contract error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
