#pragma once

#include <string>

#include <json.hpp>

#include "abaci/abacus.hpp"
#include "abaci/block.hpp"
#include "abaci/partition.hpp"
#include "abaci/theorems.hpp"

namespace abaci {

inline void to_json(nlohmann::json& j, const Partition& lambda) {
    j = lambda.parts();
}

inline void to_json(nlohmann::json& j, const Node& a) {
    j = nlohmann::json{{"row", a.row}, {"col", a.col}};
}

inline void to_json(nlohmann::json& j, const AbacusDisplay& disp) {
    j = nlohmann::json{
        {"p", disp.p()}, {"r", disp.r()}, {"occupied", disp.positions()}};
}

inline void to_json(nlohmann::json& j, const PQuotient& q) {
    j = q.components();
}

inline void to_json(nlohmann::json& j, const BlockDescriptor& b) {
    j = nlohmann::json{{"p", b.p}, {"core", b.core}, {"weight", b.weight}};
}

inline void to_json(nlohmann::json& j, const NodeDelta& nd) {
    j = nlohmann::json{{"node", nd.node},
                       {"residue", nd.residue},
                       {"predicted_delta", nd.predicted_delta},
                       {"actual_delta", nd.actual_delta}};
}

inline void to_json(nlohmann::json& j, const TheoremReport& rep) {
    j = nlohmann::json{{"partition", rep.partition},
                       {"partition_text", rep.partition.str()},
                       {"p", rep.p},
                       {"weight", rep.weight},
                       {"is_pxp", rep.is_pxp},
                       {"nodes", rep.nodes},
                       {"verdict", rep.verdict},
                       {"failures", rep.failures}};
}

inline void to_json(nlohmann::json& j, const CampaignRow& row) {
    j = nlohmann::json{{"d", row.d},
                       {"partition", row.partition},
                       {"is_pxp", row.is_pxp},
                       {"weight", row.weight},
                       {"min_delta", row.min_delta},
                       {"max_delta", row.max_delta},
                       {"verdict", row.verdict}};
}

inline void to_json(nlohmann::json& j, const CampaignSummary& s) {
    j = nlohmann::json{{"p", s.p},
                       {"d_min", s.d_min},
                       {"d_max", s.d_max},
                       {"partitions_checked", s.partitions_checked},
                       {"counterexamples", s.counterexamples},
                       {"wall_seconds", s.wall_seconds}};
    if (!s.rows.empty()) j["rows"] = s.rows;
}

// Header plus one line per partition checked (needs collect_rows).
inline std::string campaign_to_csv(const CampaignSummary& s) {
    std::string out = "d,partition,is_pxp,weight,min_delta,max_delta,verdict\n";
    for (const auto& row : s.rows) {
        out += std::to_string(row.d);
        out += ",\"" + row.partition + "\",";
        out += row.is_pxp ? "true," : "false,";
        out += std::to_string(row.weight) + ',';
        out += std::to_string(row.min_delta) + ',';
        out += std::to_string(row.max_delta) + ',';
        out += row.verdict ? "true\n" : "false\n";
    }
    return out;
}

}  // namespace abaci
