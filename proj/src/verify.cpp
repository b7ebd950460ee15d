#include "sigma_lab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <condition_variable>
#include <deque>
#include <exception>
#include <fstream>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "sigma_lab/enumerate.hpp"
#include "sigma_lab/graph6.hpp"
#include "sigma_lab/spectral.hpp"

namespace sigmalab {

namespace {

// Everything one worker accumulates; merging is commutative except for the
// record lists, which are sorted afterwards.
struct Accumulator {
    std::vector<LawTally> tallies;
    std::map<int, std::map<int, long long>> histogram;
    std::vector<std::pair<std::string, std::string>> errors;
    long long processed = 0;

    explicit Accumulator(std::size_t law_count) : tallies(law_count) {}
};

void audit_one(const Graph& g, const std::vector<const Law*>& selection, Accumulator& acc) {
    AuditContext ctx(g);
    std::vector<AuditRecord> records;
    records.reserve(selection.size());
    try {
        for (const Law* law : selection) records.push_back(law->fn(ctx));
        if (g.vertex_count() >= 1) acc.histogram[g.vertex_count()][ctx.sigma()] += 1;
    } catch (const std::exception& e) {
        // Skip the whole graph so per-law tallies stay aligned.
        acc.errors.emplace_back(ctx.graph6(), e.what());
        return;
    }
    acc.processed += 1;
    for (std::size_t i = 0; i < records.size(); ++i) {
        switch (records[i].verdict) {
            case Verdict::Holds: acc.tallies[i].holds += 1; break;
            case Verdict::Fails:
                acc.tallies[i].fails += 1;
                acc.tallies[i].counterexamples.push_back(std::move(records[i]));
                break;
            case Verdict::NotApplicable: acc.tallies[i].na += 1; break;
        }
    }
}

// Bounded single-producer single-consumer handoff.
class GraphQueue {
public:
    void push(Graph g) {
        std::unique_lock lock(mutex_);
        space_.wait(lock, [&] { return items_.size() < kCapacity; });
        items_.push_back(std::move(g));
        ready_.notify_one();
    }
    void close() {
        std::lock_guard lock(mutex_);
        closed_ = true;
        ready_.notify_all();
    }
    std::optional<Graph> pop() {
        std::unique_lock lock(mutex_);
        ready_.wait(lock, [&] { return !items_.empty() || closed_; });
        if (items_.empty()) return std::nullopt;
        Graph g = std::move(items_.front());
        items_.pop_front();
        space_.notify_one();
        return g;
    }

private:
    static constexpr std::size_t kCapacity = 128;
    std::mutex mutex_;
    std::condition_variable ready_;
    std::condition_variable space_;
    std::deque<Graph> items_;
    bool closed_ = false;
};

}  // namespace

bool LawTally::operator==(const LawTally& o) const {
    if (holds != o.holds || fails != o.fails || na != o.na) return false;
    if (counterexamples.size() != o.counterexamples.size()) return false;
    for (std::size_t i = 0; i < counterexamples.size(); ++i) {
        const AuditRecord& a = counterexamples[i];
        const AuditRecord& b = o.counterexamples[i];
        if (a.law != b.law || a.graph6 != b.graph6 || a.verdict != b.verdict ||
            a.evidence != b.evidence)
            return false;
    }
    return true;
}

bool VerificationReport::has_failures() const {
    for (const auto& [id, tally] : laws)
        if (tally.fails > 0) return true;
    return false;
}

long long VerificationReport::corpus_size() const {
    if (corpus.contains("count")) return corpus["count"].get<long long>();
    return 0;
}

GraphSource vector_source(std::vector<Graph> graphs) {
    auto state = std::make_shared<std::pair<std::vector<Graph>, std::size_t>>(std::move(graphs), 0);
    return [state]() -> std::optional<Graph> {
        if (state->second >= state->first.size()) return std::nullopt;
        return state->first[state->second++];
    };
}

GraphSource enumeration_source(int max_n) {
    auto state = std::make_shared<CumulativeEnumerator>(max_n);
    return [state]() { return state->next(); };
}

GraphSource graph6_file_source(const std::string& path) {
    auto in = std::make_shared<std::ifstream>(path);
    if (!*in) throw std::runtime_error("cannot open graph6 file: " + path);
    auto lineno = std::make_shared<long long>(0);
    return [in, lineno, path]() -> std::optional<Graph> {
        std::string line;
        while (std::getline(*in, line)) {
            ++*lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
            if (line.empty()) continue;
            try {
                return graph6_decode(line);
            } catch (const Graph6Error& e) {
                throw std::runtime_error(path + ":" + std::to_string(*lineno) + ": " + e.what());
            }
        }
        return std::nullopt;
    };
}

VerificationReport run_audits(const GraphSource& source, const RunOptions& options,
                              nlohmann::ordered_json corpus_descriptor) {
    if (options.law_ids.empty()) throw std::invalid_argument("run_audits: empty law selection");

    // Selection in registry order, duplicates collapsed.
    std::vector<const Law*> selection;
    for (const Law& law : all_laws()) {
        const bool wanted = std::find(options.law_ids.begin(), options.law_ids.end(), law.id) !=
                            options.law_ids.end();
        if (wanted) selection.push_back(&law);
    }
    for (const std::string& id : options.law_ids)
        if (!find_law(id)) throw std::invalid_argument("run_audits: unknown law '" + id + "'");

    const auto start = std::chrono::steady_clock::now();
    const int jobs = std::max(1, options.jobs);

    std::vector<Accumulator> results;
    if (jobs == 1) {
        results.emplace_back(selection.size());
        while (auto g = source()) audit_one(*g, selection, results[0]);
    } else {
        std::vector<std::unique_ptr<GraphQueue>> queues;
        std::vector<std::thread> workers;
        results.reserve(jobs);
        for (int w = 0; w < jobs; ++w) {
            queues.push_back(std::make_unique<GraphQueue>());
            results.emplace_back(selection.size());
        }
        for (int w = 0; w < jobs; ++w) {
            workers.emplace_back([&, w] {
                while (auto g = queues[w]->pop()) audit_one(*g, selection, results[w]);
            });
        }
        std::exception_ptr producer_error;
        try {
            int next = 0;
            while (auto g = source()) {
                queues[next]->push(std::move(*g));
                next = (next + 1) % jobs;
            }
        } catch (...) {
            producer_error = std::current_exception();
        }
        for (auto& q : queues) q->close();
        for (auto& t : workers) t.join();
        if (producer_error) std::rethrow_exception(producer_error);
    }

    VerificationReport report;
    report.corpus = std::move(corpus_descriptor);
    long long processed = 0;
    for (const auto& acc : results) processed += acc.processed;

    for (std::size_t i = 0; i < selection.size(); ++i) {
        LawTally tally;
        for (const auto& acc : results) {
            tally.holds += acc.tallies[i].holds;
            tally.fails += acc.tallies[i].fails;
            tally.na += acc.tallies[i].na;
            tally.counterexamples.insert(tally.counterexamples.end(),
                                         acc.tallies[i].counterexamples.begin(),
                                         acc.tallies[i].counterexamples.end());
        }
        std::sort(tally.counterexamples.begin(), tally.counterexamples.end(),
                  [](const AuditRecord& a, const AuditRecord& b) { return a.graph6 < b.graph6; });
        report.laws.emplace_back(selection[i]->id, std::move(tally));
    }
    for (const auto& acc : results) {
        for (const auto& [n, by_sigma] : acc.histogram)
            for (const auto& [sig, count] : by_sigma) report.sigma_histogram[n][sig] += count;
        report.errors.insert(report.errors.end(), acc.errors.begin(), acc.errors.end());
    }
    std::sort(report.errors.begin(), report.errors.end());

    report.corpus["count"] = processed + static_cast<long long>(report.errors.size());
    report.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return report;
}

nlohmann::ordered_json report_to_json(const VerificationReport& report) {
    nlohmann::ordered_json j;
    j["corpus"] = report.corpus;
    j["laws"] = nlohmann::ordered_json::array();
    for (const auto& [id, tally] : report.laws) {
        nlohmann::ordered_json entry;
        entry["id"] = id;
        entry["holds"] = tally.holds;
        entry["fails"] = tally.fails;
        entry["na"] = tally.na;
        entry["counterexamples"] = nlohmann::ordered_json::array();
        for (const AuditRecord& record : tally.counterexamples)
            entry["counterexamples"].push_back(
                {{"graph6", record.graph6}, {"evidence", record.evidence}});
        j["laws"].push_back(std::move(entry));
    }
    j["sigma_histogram"] = nlohmann::ordered_json::object();
    for (const auto& [n, by_sigma] : report.sigma_histogram) {
        nlohmann::ordered_json row = nlohmann::ordered_json::object();
        for (const auto& [sig, count] : by_sigma) row[std::to_string(sig)] = count;
        j["sigma_histogram"][std::to_string(n)] = std::move(row);
    }
    j["runtime_ms"] = report.runtime_ms;
    j["errors"] = nlohmann::ordered_json::array();
    for (const auto& [g6, message] : report.errors)
        j["errors"].push_back({{"graph6", g6}, {"message", message}});
    return j;
}

VerificationReport report_from_json(const nlohmann::ordered_json& j) {
    VerificationReport report;
    report.corpus = j.at("corpus");
    for (const auto& entry : j.at("laws")) {
        LawTally tally;
        tally.holds = entry.at("holds").get<long long>();
        tally.fails = entry.at("fails").get<long long>();
        tally.na = entry.at("na").get<long long>();
        for (const auto& ce : entry.at("counterexamples")) {
            AuditRecord record;
            record.law = entry.at("id").get<std::string>();
            record.graph6 = ce.at("graph6").get<std::string>();
            record.verdict = Verdict::Fails;
            record.evidence = ce.at("evidence");
            tally.counterexamples.push_back(std::move(record));
        }
        report.laws.emplace_back(entry.at("id").get<std::string>(), std::move(tally));
    }
    for (const auto& [n, row] : j.at("sigma_histogram").items())
        for (const auto& [sig, count] : row.items())
            report.sigma_histogram[std::stoi(n)][std::stoi(sig)] = count.get<long long>();
    report.runtime_ms = j.at("runtime_ms").get<long long>();
    for (const auto& err : j.at("errors"))
        report.errors.emplace_back(err.at("graph6").get<std::string>(),
                                   err.at("message").get<std::string>());
    return report;
}

std::string report_csv_summary(const VerificationReport& report) {
    std::string out = "law,holds,fails,na\n";
    for (const auto& [id, tally] : report.laws)
        out += id + "," + std::to_string(tally.holds) + "," + std::to_string(tally.fails) + "," +
               std::to_string(tally.na) + "\n";
    return out;
}

}  // namespace sigmalab
