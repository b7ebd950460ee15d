#include "sigma_lab/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sigma_lab/classes.hpp"
#include "sigma_lab/enumerate.hpp"
#include "sigma_lab/graph.hpp"
#include "sigma_lab/graph6.hpp"
#include "sigma_lab/spectral.hpp"
#include "sigma_lab/verify.hpp"

namespace sigmalab {

namespace {

std::string format_value(double v) {
    const double r = std::round(v);
    if (std::fabs(v - r) < 1e-9) {
        long long i = static_cast<long long>(std::llround(r));
        if (i == 0) i = 0;  // no "-0"
        return std::to_string(i);
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string format_spectrum(const Spectrum& spec) {
    std::string out;
    for (int i = 0; i < spec.size(); ++i) {
        if (i) out += ", ";
        out += format_value(spec[i]);
    }
    return out;
}

std::string join_ints(const std::vector<int>& xs, const char* sep = " ") {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(xs[i]);
    }
    return out;
}

// Graph inputs shared by the value subcommands.
struct InputOptions {
    std::vector<std::string> graph6;
    std::string file;
    std::string family;
    int n = 0, r = 0, s = 0, k = 0;
    std::string kind = "thin";

    void attach(CLI::App* cmd) {
        cmd->add_option("--graph6", graph6, "graph6-encoded graph (repeatable)");
        cmd->add_option("--file", file, "newline-delimited graph6 file");
        cmd->add_option("--family", family,
                        "one of: complete, star, path, cycle, empty, complete_bipartite, spider");
        cmd->add_option("--n", n, "vertex count for complete/star/path/cycle/empty");
        cmd->add_option("--r", r, "first part size for complete_bipartite");
        cmd->add_option("--s", s, "second part size; spider head size");
        cmd->add_option("--k", k, "spider leg count");
        cmd->add_option("--kind", kind, "spider kind: thin or thick")
            ->check(CLI::IsMember({"thin", "thick"}));
    }

    Graph build_family() const {
        if (family == "complete") return complete(n);
        if (family == "star") return star(n);
        if (family == "path") return path(n);
        if (family == "cycle") return cycle(n);
        if (family == "empty") return Graph::edgeless(n);
        if (family == "complete_bipartite") return complete_bipartite(r, s);
        if (family == "spider")
            return spider(kind == "thin" ? SpiderKind::Thin : SpiderKind::Thick, k,
                          Graph::edgeless(s))
                .graph;
        throw std::runtime_error("unknown family '" + family + "'");
    }

    std::vector<Graph> resolve() const {
        std::vector<Graph> graphs;
        for (const std::string& text : graph6) graphs.push_back(graph6_decode(text));
        if (!file.empty()) {
            std::ifstream in(file);
            if (!in) throw std::runtime_error("cannot open file: " + file);
            for_each_graph6_line(in, [&](Graph&& g, const std::string&) {
                graphs.push_back(std::move(g));
            });
        }
        if (!family.empty()) graphs.push_back(build_family());
        if (graphs.empty())
            throw std::runtime_error("no input graph; use --graph6, --file, or --family");
        return graphs;
    }
};

void print_classification(const Graph& g) {
    std::cout << "graph6: " << graph6_encode(g) << "\n";
    std::cout << "n: " << g.vertex_count() << "\n";
    std::cout << "m: " << g.edge_count() << "\n";
    if (g.vertex_count() >= 1) {
        std::cout << "average_degree: " << average_degree(g).str() << "\n";
        std::cout << "sigma: " << sigma(g) << "\n";
    }
    std::cout << "connected: " << (is_connected(g) ? "yes" : "no") << "\n";
    std::cout << "co_connected: " << (is_co_connected(g) ? "yes" : "no") << "\n";
    std::cout << "anticomponents: " << anticomponent_vertex_sets(g).size() << "\n";
    std::cout << "forest: " << (is_forest(g) ? "yes" : "no") << "\n";
    std::cout << "tree: " << (is_tree(g) ? "yes" : "no") << "\n";
    std::cout << "star: " << (is_star(g) ? "yes" : "no") << "\n";
    if (g.vertex_count() >= 1) {
        const auto diam = diameter(g);
        std::cout << "diameter: " << (diam ? std::to_string(*diam) : "inf") << "\n";
    }
    if (const auto rs = is_complete_bipartite(g))
        std::cout << "complete_bipartite: r=" << rs->first << " s=" << rs->second << "\n";
    else
        std::cout << "complete_bipartite: no\n";
    if (const auto sp = is_split(g))
        std::cout << "split: yes clique={" << join_ints(sp->clique, ",") << "} stable={"
                  << join_ints(sp->stable, ",") << "}\n";
    else
        std::cout << "split: no\n";
    std::cout << "pseudo_split: " << (is_pseudo_split(g) ? "yes" : "no") << "\n";
    std::cout << "cograph: " << (is_cograph(g) ? "yes" : "no") << "\n";
    std::cout << "induced_p4_count: " << count_induced_p4(g) << "\n";
    std::cout << "extended_p4_laden: " << (is_extended_p4_laden(g) ? "yes" : "no") << "\n";
    if (const auto spider = recognize_spider(g))
        std::cout << "spider: " << (spider->kind == SpiderKind::Thin ? "thin" : "thick")
                  << " k=" << spider->leg_count() << " head=" << spider->head.size() << "\n";
    else
        std::cout << "spider: no\n";
    if (const auto form = conjecture_form(g)) {
        switch (form->variant) {
            case ConjectureVariant::K1: std::cout << "conjecture_form: K1\n"; break;
            case ConjectureVariant::K2PlusIsolated:
                std::cout << "conjecture_form: K2_plus_isolated s=" << form->s << "\n";
                break;
            case ConjectureVariant::StarPlusIsolated:
                std::cout << "conjecture_form: star_plus_isolated r=" << form->r
                          << " s=" << form->s << "\n";
                break;
        }
    } else {
        std::cout << "conjecture_form: none\n";
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
    // Flush on every exit path; the entry point is also driven in-process.
    struct Flusher {
        ~Flusher() {
            std::cout.flush();
            std::cerr.flush();
        }
    } flusher;

    CLI::App app{"sigma-lab: exact sigma(G) computation, spectrum calculus, and law auditing"};
    app.require_subcommand(1);

    InputOptions sigma_in, spectrum_in, classify_in, compose_in;
    bool sigma_use_float = false;
    double tie_tol = 1e-9;
    std::string compose_op = "join";
    int enum_n = 0;
    bool enum_cumulative = false;
    std::string verify_file, verify_out, verify_csv, verify_laws = "all";
    int verify_enum = 0, verify_jobs = 1;
    std::vector<std::string> verify_graph6;

    auto* sigma_cmd = app.add_subcommand("sigma", "Print sigma(G), one line per input graph");
    sigma_in.attach(sigma_cmd);
    sigma_cmd->add_flag("--float", sigma_use_float,
                        "use the floating eigenvalue cross-check instead of exact inertia");
    sigma_cmd->add_option("--tie-tol", tie_tol, "tie tolerance for the floating path");

    auto* spectrum_cmd =
        app.add_subcommand("spectrum", "Print the Laplacian spectrum, descending");
    spectrum_in.attach(spectrum_cmd);

    auto* classify_cmd =
        app.add_subcommand("classify", "Print class memberships and structural facts");
    classify_in.attach(classify_cmd);

    auto* compose_cmd = app.add_subcommand(
        "compose", "Combine the spectra of two graphs by the join or union rule");
    compose_in.attach(compose_cmd);
    compose_cmd->add_option("--op", compose_op, "join or union")
        ->check(CLI::IsMember({"join", "union"}));

    auto* enum_cmd =
        app.add_subcommand("enumerate", "Print one graph6 line per isomorphism class");
    enum_cmd->add_option("--n", enum_n, "vertex count (1..8)")->required();
    enum_cmd->add_flag("--cumulative", enum_cumulative, "include all smaller vertex counts");

    auto* verify_cmd = app.add_subcommand(
        "verify", "Audit laws over a corpus; exit 2 if any verdict is 'fails'");
    verify_cmd->add_option("--enumerate", verify_enum,
                           "audit every graph on 1..N vertices (N <= 8)");
    verify_cmd->add_option("--file", verify_file, "newline-delimited graph6 corpus");
    verify_cmd->add_option("--graph6", verify_graph6, "audit a single graph (repeatable)");
    verify_cmd->add_option("--laws", verify_laws, "comma-separated law ids, or 'all'");
    verify_cmd->add_option("--jobs", verify_jobs, "worker threads");
    verify_cmd->add_option("--out", verify_out, "write the JSON report here");
    verify_cmd->add_option("--csv", verify_csv, "write the CSV summary here");

    std::vector<std::string> argv_storage;
    argv_storage.push_back("sigma-lab");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (std::string& s : argv_storage) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (sigma_cmd->parsed()) {
            for (const Graph& g : sigma_in.resolve())
                std::cout << (sigma_use_float ? sigma_float(g, tie_tol) : sigma(g)) << "\n";
            return 0;
        }
        if (spectrum_cmd->parsed()) {
            for (const Graph& g : spectrum_in.resolve())
                std::cout << format_spectrum(eigenvalues(g)) << "\n";
            return 0;
        }
        if (classify_cmd->parsed()) {
            bool first = true;
            for (const Graph& g : classify_in.resolve()) {
                if (!first) std::cout << "\n";
                first = false;
                print_classification(g);
            }
            return 0;
        }
        if (compose_cmd->parsed()) {
            const auto graphs = compose_in.resolve();
            if (graphs.size() != 2)
                throw std::runtime_error("compose needs exactly two input graphs");
            const Spectrum s1 = eigenvalues(graphs[0]);
            const Spectrum s2 = eigenvalues(graphs[1]);
            const Spectrum combined =
                compose_op == "join"
                    ? join_spectrum(s1, graphs[0].vertex_count(), s2, graphs[1].vertex_count())
                    : union_spectrum(s1, s2);
            std::cout << format_spectrum(combined) << "\n";
            return 0;
        }
        if (enum_cmd->parsed()) {
            const int lo = enum_cumulative ? 1 : enum_n;
            for (int n = lo; n <= enum_n; ++n)
                enumerate_nonisomorphic(
                    n, [](const Graph& g) { std::cout << graph6_encode(g) << "\n"; });
            return 0;
        }
        if (verify_cmd->parsed()) {
            RunOptions options;
            options.jobs = verify_jobs;
            if (verify_laws == "all") {
                for (const Law& law : all_laws()) options.law_ids.push_back(law.id);
            } else {
                std::stringstream ss(verify_laws);
                std::string id;
                while (std::getline(ss, id, ','))
                    if (!id.empty()) options.law_ids.push_back(id);
            }

            GraphSource source;
            nlohmann::ordered_json descriptor;
            if (verify_enum > 0) {
                source = enumeration_source(verify_enum);
                descriptor = {{"kind", "enumerate"}, {"max_n", verify_enum}};
            } else if (!verify_file.empty()) {
                source = graph6_file_source(verify_file);
                descriptor = {{"kind", "file"}, {"path", verify_file}};
            } else if (!verify_graph6.empty()) {
                std::vector<Graph> graphs;
                for (const std::string& text : verify_graph6)
                    graphs.push_back(graph6_decode(text));
                source = vector_source(std::move(graphs));
                descriptor = {{"kind", "args"}};
            } else {
                throw std::runtime_error("verify needs --enumerate, --file, or --graph6");
            }

            const VerificationReport report = run_audits(source, options, descriptor);
            std::cout << report_csv_summary(report);
            std::cout << "graphs: " << report.corpus_size() << "\n";
            std::cout << "runtime_ms: " << report.runtime_ms << "\n";
            if (!verify_out.empty()) {
                std::ofstream out(verify_out);
                if (!out) throw std::runtime_error("cannot write report: " + verify_out);
                out << report_to_json(report).dump(2) << "\n";
            }
            if (!verify_csv.empty()) {
                std::ofstream out(verify_csv);
                if (!out) throw std::runtime_error("cannot write CSV summary: " + verify_csv);
                out << report_csv_summary(report);
            }
            if (!report.errors.empty()) {
                for (const auto& [g6, message] : report.errors)
                    std::cerr << "error: " << g6 << ": " << message << "\n";
            }
            return report.has_failures() ? 2 : 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace sigmalab
