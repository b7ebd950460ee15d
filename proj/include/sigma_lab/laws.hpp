#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sigma_lab/classes.hpp"
#include "sigma_lab/graph.hpp"
#include "sigma_lab/rational.hpp"

namespace sigmalab {

enum class Verdict { Holds, Fails, NotApplicable };
std::string_view verdict_name(Verdict v);

/// One law checked on one graph. A Fails verdict carries enough evidence to
/// recheck the claim by hand.
struct AuditRecord {
    std::string law;
    std::string graph6;
    Verdict verdict = Verdict::NotApplicable;
    nlohmann::ordered_json evidence;
};

/// Per-graph cache of the quantities several audits share. Lazily computed;
/// one context serves all laws run against the same graph.
class AuditContext {
public:
    explicit AuditContext(Graph g) : g_(std::move(g)) {}

    const Graph& graph() const { return g_; }
    const std::string& graph6() const;
    const Rational& avg_degree() const;  // n >= 1
    int sigma() const;                   // n >= 1
    const std::vector<std::vector<int>>& components() const;
    const std::vector<Graph>& anticomponents() const;
    const std::vector<int>& degrees_desc() const;

private:
    Graph g_;
    mutable std::optional<std::string> graph6_;
    mutable std::optional<Rational> avg_degree_;
    mutable std::optional<int> sigma_;
    mutable std::optional<std::vector<std::vector<int>>> components_;
    mutable std::optional<std::vector<Graph>> anticomponents_;
    mutable std::optional<std::vector<int>> degrees_desc_;
};

// One audit per supporting result; each returns Holds / Fails /
// NotApplicable with the computed quantities on both sides.

/// mu_1 >= max degree + 1, for graphs with at least one edge.
AuditRecord audit_grone(AuditContext& ctx);
/// mu_2 >= d_2, for graphs on at least two vertices.
AuditRecord audit_second_degree(AuditContext& ctx);
/// anticomponent count k <= sigma + 1.
AuditRecord audit_anticomponent_count(AuditContext& ctx);
/// when k = sigma + 1: at most sigma anticomponents have edges, and if
/// exactly sigma do, the remaining one is edgeless on >= 2 vertices.
AuditRecord audit_nonempty_anticomponents(AuditContext& ctx);
/// when k = sigma + 1 >= 2: the exact integer inequality
/// 2*n_i*sum(m_j) - n_i*sum(n_j^2) + n*n_i^2 - 2*n*m_i - n*n_i > 0
/// for every anticomponent i with an edge.
AuditRecord audit_anticomponent_inequality(AuditContext& ctx);
/// sigma = 1 with disconnected complement forces a complete bipartite graph.
AuditRecord audit_sigma1_complete_bipartite(AuditContext& ctx);
/// disconnected complement: sigma = 1 iff the graph is a star.
AuditRecord audit_star_characterization(AuditContext& ctx);
/// spiders, and graphs obtained from one by adding a twin to a body or leg
/// vertex: d_2 >= average degree and sigma >= 2.
AuditRecord audit_spider_bound(AuditContext& ctx);
/// split graphs with sigma = 1 are a star plus isolated vertices.
AuditRecord audit_split_star_shape(AuditContext& ctx);
/// disconnected with sigma = 1: the component with the largest mu_1 has
/// sigma = 1, the average-degree chain holds, and the rest is edgeless.
AuditRecord audit_component_reduction(AuditContext& ctx);
/// the conjecture under audit: sigma = 1 iff the graph is K1, K2 + sK1, or
/// K_{1,r} + sK1 with s < r - 1. A Fails verdict is a counterexample.
AuditRecord audit_sigma1_conjecture(AuditContext& ctx);

using AuditFn = AuditRecord (*)(AuditContext&);

struct Law {
    std::string id;
    std::string summary;
    AuditFn fn;
};

/// Registry in report order.
const std::vector<Law>& all_laws();
const Law* find_law(std::string_view id);

/// Runs every law against one graph.
std::vector<AuditRecord> audit_all(const Graph& g);

}  // namespace sigmalab
