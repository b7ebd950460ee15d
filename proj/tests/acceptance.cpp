// Acceptance suite: every release criterion, one pass/fail line each.
// Exit code = number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sigma_lab/classes.hpp"
#include "sigma_lab/enumerate.hpp"
#include "sigma_lab/graph6.hpp"
#include "sigma_lab/laws.hpp"
#include "sigma_lab/spectral.hpp"
#include "sigma_lab/verify.hpp"

using namespace sigmalab;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool passed;
    std::string detail;
};

std::vector<std::vector<Graph>> g_corpus(9);  // index = vertex count, filled once

void require(bool condition, const std::string& message, std::string& failure) {
    if (!condition && failure.empty()) failure = message;
}

Graph remark_family(int s) {
    Graph g = k_copies(4, complete(2));
    for (int i = 0; i < s; ++i) g = join(g, complete(1));
    return g;
}

bool spectrum_matches(const Spectrum& got, const std::vector<double>& want, double tol) {
    if (got.size() != static_cast<int>(want.size())) return false;
    for (int i = 0; i < got.size(); ++i)
        if (std::fabs(got[i] - want[i]) > tol) return false;
    return true;
}

// 1. Star law: sigma(K_{1,n-1}) = 1 for 2 <= n <= 50, and the floating
//    spectrum is {n, 1^(n-2), 0} within 1e-9 for n >= 3. Under 1 second.
Outcome criterion_star_law() {
    std::string failure;
    const auto start = Clock::now();
    for (int n = 2; n <= 50; ++n) {
        const Graph g = star(n);
        require(sigma(g) == 1, "sigma(star(" + std::to_string(n) + ")) != 1", failure);
        if (n >= 3) {
            std::vector<double> want{static_cast<double>(n)};
            want.insert(want.end(), n - 2, 1.0);
            want.push_back(0.0);
            require(spectrum_matches(eigenvalues(g), want, 1e-9),
                    "star spectrum mismatch at n=" + std::to_string(n), failure);
        }
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    require(secs < 1.0, "runtime " + std::to_string(secs) + "s exceeds 1s", failure);
    return {failure.empty(), failure.empty() ? "n=2..50 exact, spectra within 1e-9" : failure};
}

// 2. Bundle-join family: for s = 2..20, 4K2 joined with s K1's has s+1
//    anticomponents, spectrum {(s+8)^s, (s+2)^4, s^3, 0} within 1e-9, exact
//    average degree s+7-48/(s+8), and exact sigma = s. Under 5 seconds.
Outcome criterion_remark_family() {
    std::string failure;
    const auto start = Clock::now();
    for (int s = 2; s <= 20; ++s) {
        const Graph g = remark_family(s);
        require(static_cast<int>(anticomponents(g).size()) == s + 1,
                "anticomponent count wrong at s=" + std::to_string(s), failure);
        std::vector<double> want;
        want.insert(want.end(), s, s + 8.0);
        want.insert(want.end(), 4, s + 2.0);
        want.insert(want.end(), 3, static_cast<double>(s));
        want.push_back(0.0);
        require(spectrum_matches(eigenvalues(g), want, 1e-9),
                "spectrum mismatch at s=" + std::to_string(s), failure);
        require(average_degree(g) == Rational(s + 7) - Rational(48, s + 8),
                "average degree mismatch at s=" + std::to_string(s), failure);
        require(sigma(g) == s, "sigma mismatch at s=" + std::to_string(s), failure);
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    require(secs < 5.0, "runtime " + std::to_string(secs) + "s exceeds 5s", failure);
    return {failure.empty(), failure.empty() ? "s=2..20 exact" : failure};
}

// 3. Named values: sigma(P5) = sigma(C5) = sigma(~P5) = 2, and
//    sigma(K_{1,r} + sK1) = 1 iff s < r-1 for 2 <= r <= 12, 0 <= s <= 12.
Outcome criterion_named_values() {
    std::string failure;
    const auto start = Clock::now();
    require(sigma(path(5)) == 2, "sigma(P5) != 2", failure);
    require(sigma(cycle(5)) == 2, "sigma(C5) != 2", failure);
    require(sigma(complement(path(5))) == 2, "sigma(complement(P5)) != 2", failure);
    for (int r = 2; r <= 12; ++r)
        for (int s = 0; s <= 12; ++s) {
            const Graph g = disjoint_union(star(r + 1), Graph::edgeless(s));
            require((sigma(g) == 1) == (s < r - 1),
                    "sigma(K_{1," + std::to_string(r) + "}+" + std::to_string(s) + "K1) wrong",
                    failure);
        }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    require(secs < 1.0, "runtime " + std::to_string(secs) + "s exceeds 1s", failure);
    return {failure.empty(), failure.empty() ? "all named sigma values match" : failure};
}

// 4. Conjecture sweep: every law over every graph on 1..8 vertices reports
//    zero fails, and the sigma=1 graphs are exactly the accepted shapes.
//    Also pins the per-level class counts. Target under 10 minutes.
Outcome criterion_conjecture_sweep(const VerificationReport& report) {
    std::string failure;
    const std::vector<long long> expected_counts{1, 2, 4, 11, 34, 156, 1044, 12346};
    long long total = 0;
    for (int n = 1; n <= 8; ++n) {
        total += expected_counts[n - 1];
        require(static_cast<long long>(g_corpus[n].size()) == expected_counts[n - 1],
                "class count wrong at n=" + std::to_string(n), failure);
    }
    require(report.corpus_size() == total, "report corpus size mismatch", failure);
    require(report.errors.empty(), "audit errors recorded", failure);
    for (const auto& [id, tally] : report.laws) {
        require(tally.fails == 0, "law '" + id + "' reports fails", failure);
        require(tally.holds + tally.fails + tally.na == total,
                "law '" + id + "' tallies do not sum to the corpus size", failure);
    }

    std::set<std::string> sigma_one, accepted;
    for (int n = 1; n <= 8; ++n)
        for (const Graph& g : g_corpus[n]) {
            if (sigma(g) == 1) sigma_one.insert(graph6_encode(g));
            if (conjecture_form(g)) accepted.insert(graph6_encode(g));
        }
    require(sigma_one == accepted, "sigma=1 set differs from the accepted shapes", failure);
    require(report.runtime_ms < 600000, "sweep exceeded 10 minutes", failure);
    std::ostringstream detail;
    detail << total << " graphs, " << report.laws.size() << " laws, " << sigma_one.size()
           << " sigma=1 graphs, " << report.runtime_ms << " ms";
    return {failure.empty(), failure.empty() ? detail.str() : failure};
}

// 5. Oracle equivalence: exact inertia sigma equals the floating-spectrum
//    sigma with tie tolerance 1e-9 on the whole 1..8 corpus.
Outcome criterion_oracle_equivalence() {
    std::string failure;
    long long checked = 0;
    for (int n = 1; n <= 8 && failure.empty(); ++n)
        for (const Graph& g : g_corpus[n]) {
            ++checked;
            if (sigma(g) != sigma_float(g, 1e-9)) {
                failure = "paths disagree on " + graph6_encode(g);
                break;
            }
        }
    return {failure.empty(),
            failure.empty() ? std::to_string(checked) + " instances agree" : failure};
}

// 6. Composition law: join_spectrum matches the directly computed spectrum
//    of the join on 200 random pairs with n1+n2 <= 12, within 1e-8.
Outcome criterion_composition() {
    std::string failure;
    std::mt19937 rng(20260810);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const int n1 = 1 + static_cast<int>(rng() % 11);
        const int n2 = 1 + static_cast<int>(rng() % (12 - n1));
        auto random_graph = [&](int n) {
            std::vector<std::pair<int, int>> edges;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (rng() % 2) edges.emplace_back(u, v);
            return Graph::from_edges(n, edges);
        };
        const Graph a = random_graph(n1);
        const Graph b = random_graph(n2);
        const Spectrum composed = join_spectrum(eigenvalues(a), n1, eigenvalues(b), n2);
        const Spectrum direct = eigenvalues(join(a, b));
        for (int i = 0; i < composed.size(); ++i)
            worst = std::max(worst, std::fabs(composed[i] - direct[i]));
    }
    require(worst < 1e-8, "max elementwise error " + std::to_string(worst), failure);
    std::ostringstream detail;
    detail << "200 pairs, max error " << std::scientific << worst;
    return {failure.empty(), failure.empty() ? detail.str() : failure};
}

// 7. Proven-law suite: the six supporting audits report zero fails over the
//    1..8 corpus (taken from the same sweep as criterion 4).
Outcome criterion_lemma_suite(const VerificationReport& report) {
    std::string failure;
    const std::vector<std::string> proven{
        "grone",          "second_degree",           "anticomponent_count",
        "nonempty_anticomponents", "anticomponent_inequality", "sigma1_complete_bipartite"};
    for (const std::string& id : proven) {
        bool found = false;
        for (const auto& [law_id, tally] : report.laws) {
            if (law_id != id) continue;
            found = true;
            require(tally.fails == 0, "law '" + id + "' reports fails", failure);
        }
        require(found, "law '" + id + "' missing from the report", failure);
    }
    return {failure.empty(), failure.empty() ? "six proven laws, zero fails" : failure};
}

// 8. Recognizer containments: split => pseudo-split => extended P4-laden and
//    cograph => extended P4-laden on 1..7; the two cograph routes agree on 1..8.
Outcome criterion_recognizer_chains() {
    std::string failure;
    for (int n = 1; n <= 7 && failure.empty(); ++n)
        for (const Graph& g : g_corpus[n]) {
            const bool split = is_split(g).has_value();
            const bool pseudo = is_pseudo_split(g);
            const bool laden = is_extended_p4_laden(g);
            const bool cograph = is_cograph(g);
            if ((split && !pseudo) || (pseudo && !laden) || (cograph && !laden)) {
                failure = "containment violated on " + graph6_encode(g);
                break;
            }
        }
    for (int n = 1; n <= 8 && failure.empty(); ++n)
        for (const Graph& g : g_corpus[n])
            if (is_cograph(g) != !has_induced_p4(g)) {
                failure = "cograph routes disagree on " + graph6_encode(g);
                break;
            }
    return {failure.empty(), failure.empty() ? "chains hold, cograph routes agree" : failure};
}

// 9. graph6 identity: encode(decode(line)) is byte-exact over the reference
//    n=7 corpus file (1044 lines from an independent encoder).
Outcome criterion_graph6_roundtrip() {
    std::string failure;
    std::ifstream in(TEST_DATA_DIR "/n7.g6");
    if (!in) return {false, "reference corpus missing"};
    std::string line;
    int count = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        ++count;
        const Graph g = graph6_decode(line);
        if (graph6_encode(g) != line) {
            failure = "round trip differs on line " + std::to_string(count);
            break;
        }
    }
    require(count == 1044, "expected 1044 lines, saw " + std::to_string(count), failure);
    return {failure.empty(), failure.empty() ? "1044 lines byte-exact" : failure};
}

}  // namespace

int main() {
    // Shared corpus for criteria 4, 5, 7, 8.
    {
        const auto start = Clock::now();
        CumulativeEnumerator stream(8);
        while (auto g = stream.next()) g_corpus[g->vertex_count()].push_back(std::move(*g));
        std::printf("corpus: graphs on 1..8 vertices enumerated in %.1fs\n",
                    std::chrono::duration<double>(Clock::now() - start).count());
    }

    // The full sweep backing criteria 4 and 7.
    VerificationReport sweep;
    {
        std::vector<Graph> all;
        for (int n = 1; n <= 8; ++n)
            all.insert(all.end(), g_corpus[n].begin(), g_corpus[n].end());
        RunOptions options;
        for (const Law& law : all_laws()) options.law_ids.push_back(law.id);
        options.jobs = 2;
        sweep = run_audits(vector_source(std::move(all)), options,
                           {{"kind", "enumerate"}, {"max_n", 8}});
    }

    struct Entry {
        int number;
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Entry> criteria{
        {1, "star law", criterion_star_law},
        {2, "bundle-join family", criterion_remark_family},
        {3, "named sigma values", criterion_named_values},
        {4, "conjecture sweep n<=8", [&] { return criterion_conjecture_sweep(sweep); }},
        {5, "exact/float oracle equivalence", criterion_oracle_equivalence},
        {6, "join spectrum composition", criterion_composition},
        {7, "proven-law suite", [&] { return criterion_lemma_suite(sweep); }},
        {8, "recognizer containment chains", criterion_recognizer_chains},
        {9, "graph6 round trip", criterion_graph6_roundtrip},
    };

    int failed = 0;
    for (const Entry& entry : criteria) {
        const auto start = Clock::now();
        Outcome outcome{false, "exception"};
        try {
            outcome = entry.run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        std::printf("%s  criterion %d (%.2fs): %s — %s\n", outcome.passed ? "PASS" : "FAIL",
                    entry.number, secs, entry.name, outcome.detail.c_str());
        if (!outcome.passed) ++failed;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
                criteria.size());
    return failed;
}
