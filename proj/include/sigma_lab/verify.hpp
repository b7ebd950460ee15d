#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sigma_lab/graph.hpp"
#include "sigma_lab/laws.hpp"

namespace sigmalab {

struct LawTally {
    long long holds = 0;
    long long fails = 0;
    long long na = 0;
    std::vector<AuditRecord> counterexamples;  // the failing records, by graph6

    bool operator==(const LawTally& o) const;
};

/// Corpus-level audit outcome. Deterministic for a given corpus and law
/// selection regardless of worker count; runtime_ms is the only field that
/// varies between runs.
struct VerificationReport {
    nlohmann::ordered_json corpus;
    std::vector<std::pair<std::string, LawTally>> laws;  // registry order
    std::map<int, std::map<int, long long>> sigma_histogram;  // n -> sigma -> count
    long long runtime_ms = 0;
    std::vector<std::pair<std::string, std::string>> errors;  // (graph6, message)

    bool has_failures() const;
    long long corpus_size() const;  // recorded in the corpus descriptor
};

/// Pull-based corpus stream; returns nullopt when exhausted.
using GraphSource = std::function<std::optional<Graph>()>;

GraphSource vector_source(std::vector<Graph> graphs);
GraphSource enumeration_source(int max_n);  // all graphs on 1..max_n vertices
GraphSource graph6_file_source(const std::string& path);

struct RunOptions {
    std::vector<std::string> law_ids;  // must be non-empty; "all" is expanded by callers
    int jobs = 1;
};

/// Applies the selected audits to every graph of the corpus. Worker count
/// only affects wall time: graphs are dispatched round-robin and results are
/// merged by graph6 key. A graph whose audit throws is skipped and recorded
/// under errors.
VerificationReport run_audits(const GraphSource& source, const RunOptions& options,
                              nlohmann::ordered_json corpus_descriptor);

nlohmann::ordered_json report_to_json(const VerificationReport& report);
VerificationReport report_from_json(const nlohmann::ordered_json& j);

/// One line per law: id,holds,fails,na.
std::string report_csv_summary(const VerificationReport& report);

}  // namespace sigmalab
