#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "permsym/campaign.hpp"
#include "permsym/multiset.hpp"
#include "permsym/promotion.hpp"
#include "permsym/qsym.hpp"
#include "permsym/rs.hpp"
#include "permsym/tableau.hpp"
#include "permsym/verifier.hpp"

namespace permsym {

/// {"degree": n, "basis": "F|M|m|s", "terms": [{"index": [...], "coeff": c}]}
/// with terms in lexicographic index order.
inline nlohmann::json to_json(const qsym::GradedCoefficientVector& v) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [index, c] : v.terms())
        terms.push_back({{"index", index}, {"coeff", c}});
    return {{"degree", v.degree()}, {"basis", qsym::basis_name(v.basis())}, {"terms", terms}};
}

inline nlohmann::json to_json(const PermMultiset& b) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [pi, m] : b.entries())
        entries.push_back({{"word", pi.word()}, {"mult", m}});
    return {{"degree", b.degree()}, {"entries", entries}};
}

inline nlohmann::json to_json(const StandardTableau& t) {
    return {{"rows", t.rows()}};
}

inline nlohmann::json to_json(const TableauPair& pq) {
    return {{"p", pq.p.rows()}, {"q", pq.q.rows()}};
}

inline nlohmann::json to_json(const PromotionTrace& trace) {
    nlohmann::json path = nlohmann::json::array();
    for (const auto& [r, c] : trace.path) path.push_back({r, c});
    return {{"window", {trace.low, trace.high}}, {"path", path}};
}

inline nlohmann::json to_json(const OrderedSetPartition& u) {
    return {{"degree", u.degree()}, {"blocks", u.blocks()}};
}

inline nlohmann::json to_json(const verifier::ConditionReport& report) {
    nlohmann::json out;
    out["degree"] = report.degree;
    out["a_d_symmetric"] = {{"ok", report.a.ok}, {"millis", report.a.millis}};
    if (report.a.witness) out["a_d_symmetric"]["witness_u"] = to_json(*report.a.witness);
    out["b_d_commutative"] = {{"ok", report.b.ok}, {"millis", report.b.millis}};
    if (report.b.witness) out["b_d_commutative"]["witness_j"] = *report.b.witness;
    auto pair_json = [](const verifier::CheckPair& p) {
        nlohmann::json j = {{"ok", p.ok}, {"millis", p.millis}};
        if (p.witness) {
            j["witness_j"] = p.witness->first;
            j["witness_k"] = p.witness->second;
        }
        return j;
    };
    out["c_right_invariant"] = pair_json(report.c);
    out["d_left_invariant"] = pair_json(report.d);
    out["e_symmetric"] = pair_json(report.e);
    out["agreement"] = report.agreement();
    return out;
}

inline nlohmann::json to_json(const verifier::CampaignReport& report) {
    nlohmann::json config;
    config["degree"] = report.config.degree;
    config["mode"] = verifier::campaign_mode_name(report.config.mode);
    if (report.config.mode == verifier::CampaignMode::random_multisets) {
        config["samples"] = report.config.samples;
        config["max_multiplicity"] = report.config.max_multiplicity;
    }

    nlohmann::json population;
    population["items_checked"] = report.items;
    population["multisets_covered"] = report.population_covered;
    population["method"] = report.method;
    if (report.reduction_verified) population["reduction_verified"] = true;
    if (!report.family_counts.empty()) population["families"] = report.family_counts;
    population["classification"] = report.classification_counts;

    nlohmann::json disagreements = nlohmann::json::array();
    for (const auto& [label, rep] : report.disagreement_items)
        disagreements.push_back({{"item", label}, {"report", to_json(rep)}});

    nlohmann::json out;
    out["config"] = config;
    out["population"] = population;
    out["agreement_matrix"] = report.agreement;
    out["condition_true_counts"] = report.true_counts;
    out["disagreement_count"] = report.disagreements;
    out["disagreements"] = disagreements;
    out["specimens"] = {{"symmetric_not_fine", report.symmetric_not_fine},
                        {"symmetric_not_fine_total", report.symmetric_not_fine_total}};
    if (report.seeded) out["seed"] = report.seed_used;
    out["wall_ms"] = report.wall_ms;
    return out;
}

} // namespace permsym
