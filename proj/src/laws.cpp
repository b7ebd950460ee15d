#include "sigma_lab/laws.hpp"

#include <gmpxx.h>

#include "sigma_lab/graph6.hpp"
#include "sigma_lab/spectral.hpp"

namespace sigmalab {

namespace {

AuditRecord make_record(AuditContext& ctx, const char* law, Verdict verdict,
                        nlohmann::ordered_json evidence) {
    return AuditRecord{law, ctx.graph6(), verdict, std::move(evidence)};
}

AuditRecord not_applicable(AuditContext& ctx, const char* law, const char* reason) {
    return make_record(ctx, law, Verdict::NotApplicable, {{"reason", reason}});
}

Verdict verdict_of(bool holds) { return holds ? Verdict::Holds : Verdict::Fails; }

nlohmann::ordered_json form_json(const std::optional<ConjectureForm>& form) {
    if (!form) return nullptr;
    const char* variant = form->variant == ConjectureVariant::K1 ? "K1"
                          : form->variant == ConjectureVariant::K2PlusIsolated
                              ? "K2_plus_isolated"
                              : "star_plus_isolated";
    return {{"variant", variant},
            {"r", form->r},
            {"s", form->s},
            {"size_constraint_ok", form->size_constraint_ok}};
}

// A spider, or a graph that turns into one after deleting a twin added to a
// body or leg vertex. Returns the shape together with how it was reached.
struct SpiderEvidence {
    SpiderShape shape;
    bool via_twin = false;
    bool twin_adjacent = false;
};

std::optional<SpiderEvidence> spider_or_twin_extension(const Graph& g) {
    if (auto shape = recognize_spider(g)) return SpiderEvidence{*shape, false, false};
    const int n = g.vertex_count();
    for (int w = 0; w < n; ++w) {
        for (int v = 0; v < n; ++v) {
            if (v == w || !are_twins(g, v, w)) continue;
            std::vector<int> rest;
            for (int u = 0; u < n; ++u)
                if (u != w) rest.push_back(u);
            const Graph h = induced_subgraph(g, rest);
            const auto shape = recognize_spider(h);
            if (!shape) continue;
            const int v_in_h = v < w ? v : v - 1;  // deletion shifts later labels down
            for (const auto& part : {shape->legs, shape->body}) {
                for (int x : part) {
                    if (x == v_in_h)
                        return SpiderEvidence{*shape, true, g.has_edge(v, w)};
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::Fails: return "fails";
        case Verdict::NotApplicable: return "not-applicable";
    }
    return "?";
}

const std::string& AuditContext::graph6() const {
    if (!graph6_) graph6_ = graph6_encode(g_);
    return *graph6_;
}

const Rational& AuditContext::avg_degree() const {
    if (!avg_degree_) avg_degree_ = average_degree(g_);
    return *avg_degree_;
}

int AuditContext::sigma() const {
    if (!sigma_) sigma_ = sigmalab::sigma(g_);
    return *sigma_;
}

const std::vector<std::vector<int>>& AuditContext::components() const {
    if (!components_) components_ = connected_components(g_);
    return *components_;
}

const std::vector<Graph>& AuditContext::anticomponents() const {
    if (!anticomponents_) anticomponents_ = sigmalab::anticomponents(g_);
    return *anticomponents_;
}

const std::vector<int>& AuditContext::degrees_desc() const {
    if (!degrees_desc_) degrees_desc_ = g_.degrees_sorted_desc();
    return *degrees_desc_;
}

AuditRecord audit_grone(AuditContext& ctx) {
    constexpr const char* kLaw = "grone";
    const Graph& g = ctx.graph();
    if (g.vertex_count() < 1 || g.edge_count() == 0)
        return not_applicable(ctx, kLaw, "requires at least one edge");
    const int bound = g.max_degree() + 1;
    const int count = count_eigenvalues_at_least(g, Rational(bound));
    return make_record(ctx, kLaw, verdict_of(count >= 1),
                       {{"max_degree", g.max_degree()},
                        {"bound", bound},
                        {"eigenvalues_at_least_bound", count}});
}

AuditRecord audit_second_degree(AuditContext& ctx) {
    constexpr const char* kLaw = "second_degree";
    const Graph& g = ctx.graph();
    // The cited bound holds for connected graphs on at least three vertices;
    // K2 + sK1 falsifies the unrestricted reading (mu_2 = 0 < 1 = d_2).
    if (g.vertex_count() < 3 || ctx.components().size() != 1)
        return not_applicable(ctx, kLaw, "requires a connected graph on at least three vertices");
    const int d2 = ctx.degrees_desc()[1];
    const int count = count_eigenvalues_at_least(g, Rational(d2));
    return make_record(ctx, kLaw, verdict_of(count >= 2),
                       {{"d2", d2}, {"eigenvalues_at_least_d2", count}});
}

AuditRecord audit_anticomponent_count(AuditContext& ctx) {
    constexpr const char* kLaw = "anticomponent_count";
    if (ctx.graph().vertex_count() < 1)
        return not_applicable(ctx, kLaw, "requires at least one vertex");
    const int k = static_cast<int>(ctx.anticomponents().size());
    const int sig = ctx.sigma();
    return make_record(ctx, kLaw, verdict_of(k <= sig + 1), {{"k", k}, {"sigma", sig}});
}

AuditRecord audit_nonempty_anticomponents(AuditContext& ctx) {
    constexpr const char* kLaw = "nonempty_anticomponents";
    if (ctx.graph().vertex_count() < 1)
        return not_applicable(ctx, kLaw, "requires at least one vertex");
    const auto& parts = ctx.anticomponents();
    const int k = static_cast<int>(parts.size());
    const int sig = ctx.sigma();
    if (k != sig + 1) return not_applicable(ctx, kLaw, "applicable only when k = sigma + 1");

    int nonempty = 0;
    const Graph* remainder = nullptr;
    for (const Graph& part : parts) {
        if (part.edge_count() > 0)
            ++nonempty;
        else
            remainder = &part;
    }
    nlohmann::ordered_json evidence{{"k", k}, {"sigma", sig}, {"nonempty", nonempty}};
    bool holds = nonempty <= sig;
    if (holds && nonempty == sig) {
        // exactly one anticomponent is left; it must be edgeless and nontrivial
        holds = remainder != nullptr && remainder->vertex_count() >= 2;
        evidence["remainder"] = {{"n", remainder ? remainder->vertex_count() : 0},
                                 {"m", remainder ? remainder->edge_count() : 0}};
    }
    return make_record(ctx, kLaw, verdict_of(holds), std::move(evidence));
}

AuditRecord audit_anticomponent_inequality(AuditContext& ctx) {
    constexpr const char* kLaw = "anticomponent_inequality";
    if (ctx.graph().vertex_count() < 1)
        return not_applicable(ctx, kLaw, "requires at least one vertex");
    const auto& parts = ctx.anticomponents();
    const int k = static_cast<int>(parts.size());
    if (k < 2 || k != ctx.sigma() + 1)
        return not_applicable(ctx, kLaw, "applicable only when k = sigma + 1 >= 2");

    mpz_class sum_m = 0, sum_n2 = 0;
    for (const Graph& part : parts) {
        sum_m += static_cast<long>(part.edge_count());
        sum_n2 += mpz_class(part.vertex_count()) * part.vertex_count();
    }
    const mpz_class n = ctx.graph().vertex_count();

    bool any = false;
    bool holds = true;
    nlohmann::ordered_json values = nlohmann::ordered_json::array();
    for (const Graph& part : parts) {
        if (part.edge_count() == 0) continue;
        any = true;
        const mpz_class ni = part.vertex_count();
        const mpz_class mi = static_cast<long>(part.edge_count());
        const mpz_class value = 2 * ni * sum_m - ni * sum_n2 + n * ni * ni - 2 * n * mi - n * ni;
        if (value <= 0) holds = false;
        values.push_back({{"part_n", part.vertex_count()},
                          {"part_m", part.edge_count()},
                          {"value", value.get_str()}});
    }
    if (!any) return not_applicable(ctx, kLaw, "no anticomponent has an edge");
    return make_record(ctx, kLaw, verdict_of(holds),
                       {{"k", k}, {"sigma", ctx.sigma()}, {"parts", std::move(values)}});
}

AuditRecord audit_sigma1_complete_bipartite(AuditContext& ctx) {
    constexpr const char* kLaw = "sigma1_complete_bipartite";
    if (ctx.graph().vertex_count() < 1)
        return not_applicable(ctx, kLaw, "requires at least one vertex");
    if (ctx.anticomponents().size() < 2)
        return not_applicable(ctx, kLaw, "complement is connected");
    if (ctx.sigma() != 1) return not_applicable(ctx, kLaw, "sigma != 1");
    const auto rs = is_complete_bipartite(ctx.graph());
    nlohmann::ordered_json evidence{{"sigma", 1}};
    if (rs) {
        evidence["r"] = rs->first;
        evidence["s"] = rs->second;
    }
    return make_record(ctx, kLaw, verdict_of(rs.has_value()), std::move(evidence));
}

AuditRecord audit_star_characterization(AuditContext& ctx) {
    constexpr const char* kLaw = "star_characterization";
    if (ctx.graph().vertex_count() < 1)
        return not_applicable(ctx, kLaw, "requires at least one vertex");
    if (ctx.anticomponents().size() < 2)
        return not_applicable(ctx, kLaw, "complement is connected");
    const bool sigma_one = ctx.sigma() == 1;
    const bool star = is_star(ctx.graph());
    return make_record(ctx, kLaw, verdict_of(sigma_one == star),
                       {{"sigma", ctx.sigma()}, {"is_star", star}});
}

AuditRecord audit_spider_bound(AuditContext& ctx) {
    constexpr const char* kLaw = "spider_bound";
    const auto found = spider_or_twin_extension(ctx.graph());
    if (!found)
        return not_applicable(ctx, kLaw, "not a spider or a body/leg twin extension of one");
    const int d2 = ctx.degrees_desc()[1];
    const bool degree_ok = Rational(d2) >= ctx.avg_degree();
    const bool sigma_ok = ctx.sigma() >= 2;
    return make_record(ctx, kLaw, verdict_of(degree_ok && sigma_ok),
                       {{"kind", found->shape.kind == SpiderKind::Thin ? "thin" : "thick"},
                        {"legs", found->shape.leg_count()},
                        {"head_size", static_cast<int>(found->shape.head.size())},
                        {"via_twin", found->via_twin},
                        {"twin_adjacent", found->twin_adjacent},
                        {"d2", d2},
                        {"avg_degree", ctx.avg_degree().str()},
                        {"sigma", ctx.sigma()}});
}

AuditRecord audit_split_star_shape(AuditContext& ctx) {
    constexpr const char* kLaw = "split_star_shape";
    if (ctx.graph().vertex_count() < 1)
        return not_applicable(ctx, kLaw, "requires at least one vertex");
    if (!is_split(ctx.graph())) return not_applicable(ctx, kLaw, "not a split graph");
    if (ctx.sigma() != 1)
        return make_record(ctx, kLaw, Verdict::Holds,
                           {{"sigma", ctx.sigma()}, {"vacuous", true}});
    const auto shape = raw_shape(ctx.graph());
    return make_record(ctx, kLaw, verdict_of(shape.has_value()),
                       {{"sigma", 1}, {"shape", form_json(shape)}});
}

AuditRecord audit_component_reduction(AuditContext& ctx) {
    constexpr const char* kLaw = "component_reduction";
    const Graph& g = ctx.graph();
    if (g.vertex_count() < 1) return not_applicable(ctx, kLaw, "requires at least one vertex");
    const auto& comps = ctx.components();
    if (comps.size() < 2) return not_applicable(ctx, kLaw, "graph is connected");
    if (ctx.sigma() != 1) return not_applicable(ctx, kLaw, "sigma != 1");
    if (g.edge_count() == 0) return not_applicable(ctx, kLaw, "all components are empty");

    // The dominant part: the component with the largest mu_1. With sigma = 1
    // the maximum is attained by a unique component.
    std::size_t dominant = 0;
    double best_mu1 = -1.0;
    std::vector<Graph> parts;
    parts.reserve(comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i) {
        parts.push_back(induced_subgraph(g, comps[i]));
        const double mu1 = eigenvalues(parts.back()).values[0];
        if (mu1 > best_mu1) {
            best_mu1 = mu1;
            dominant = i;
        }
    }

    const Graph& g1 = parts[dominant];
    const long long n1 = g1.vertex_count(), m1 = g1.edge_count();
    const long long n2 = g.vertex_count() - n1, m2 = g.edge_count() - m1;
    const Rational left(2 * m2, n2);
    const Rational mid(2 * (m1 + m2), n1 + n2);
    const Rational right(2 * m1, n1);

    const bool chain_ok = left < mid && mid < right;
    const int sigma_g1 = sigma(g1);
    bool others_empty = true;
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (i != dominant && parts[i].edge_count() > 0) others_empty = false;

    return make_record(ctx, kLaw, verdict_of(chain_ok && sigma_g1 == 1 && others_empty),
                       {{"n1", n1},
                        {"m1", m1},
                        {"n2", n2},
                        {"m2", m2},
                        {"chain", {left.str(), mid.str(), right.str()}},
                        {"chain_ok", chain_ok},
                        {"sigma_dominant", sigma_g1},
                        {"others_empty", others_empty}});
}

AuditRecord audit_sigma1_conjecture(AuditContext& ctx) {
    constexpr const char* kLaw = "sigma1_conjecture";
    if (ctx.graph().vertex_count() < 1)
        return not_applicable(ctx, kLaw, "requires at least one vertex");
    const bool sigma_one = ctx.sigma() == 1;
    const auto form = conjecture_form(ctx.graph());
    return make_record(ctx, kLaw, verdict_of(sigma_one == form.has_value()),
                       {{"sigma", ctx.sigma()}, {"form", form_json(form)}});
}

const std::vector<Law>& all_laws() {
    static const std::vector<Law> registry = {
        {"grone", "largest eigenvalue is at least max degree + 1", audit_grone},
        {"second_degree", "second eigenvalue is at least the second degree", audit_second_degree},
        {"anticomponent_count", "anticomponent count is at most sigma + 1",
         audit_anticomponent_count},
        {"nonempty_anticomponents",
         "at k = sigma + 1, at most sigma anticomponents have edges and the remainder is "
         "edgeless nontrivial",
         audit_nonempty_anticomponents},
        {"anticomponent_inequality",
         "at k = sigma + 1, the exact size/edge inequality holds for each anticomponent with "
         "edges",
         audit_anticomponent_inequality},
        {"sigma1_complete_bipartite",
         "sigma = 1 with disconnected complement forces a complete bipartite graph",
         audit_sigma1_complete_bipartite},
        {"star_characterization",
         "with disconnected complement, sigma = 1 exactly for stars", audit_star_characterization},
        {"spider_bound",
         "spiders and their body/leg twin extensions have d2 >= average degree and sigma >= 2",
         audit_spider_bound},
        {"split_star_shape", "split graphs with sigma = 1 are a star plus isolated vertices",
         audit_split_star_shape},
        {"component_reduction",
         "disconnected sigma = 1 graphs reduce to one dominant component plus isolated vertices",
         audit_component_reduction},
        {"sigma1_conjecture",
         "sigma = 1 exactly for K1, K2 + sK1, and K_{1,r} + sK1 with s < r - 1",
         audit_sigma1_conjecture},
    };
    return registry;
}

const Law* find_law(std::string_view id) {
    for (const Law& law : all_laws())
        if (law.id == id) return &law;
    return nullptr;
}

std::vector<AuditRecord> audit_all(const Graph& g) {
    AuditContext ctx(g);
    std::vector<AuditRecord> records;
    records.reserve(all_laws().size());
    for (const Law& law : all_laws()) records.push_back(law.fn(ctx));
    return records;
}

}  // namespace sigmalab
