#include "ei/report.hpp"

#include <json.hpp>

namespace ei {

namespace {

nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json jf = nlohmann::json::array();
    for (const auto& f : r.failures)
        jf.push_back({{"index", f.index}, {"expected", f.expected}, {"got", f.got}});
    nlohmann::json config = r.config.empty()
                                ? nlohmann::json::object()
                                : nlohmann::json::parse(r.config, nullptr, false);
    if (config.is_discarded()) config = r.config;  // keep as opaque string
    return {
        {"check_name", r.check_name},
        {"range", {{"lo", r.range_lo}, {"hi", r.range_hi}}},
        {"passed", r.passed},
        {"failures", jf},
        {"elapsed_ms", r.elapsed_ms},
        {"config", config},
    };
}

}  // namespace

std::string report_to_json_text(const VerificationReport& r, int indent) {
    return to_json(r).dump(indent);
}

std::string reports_to_json_text(const std::vector<VerificationReport>& rs, int indent) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rs) arr.push_back(to_json(r));
    return arr.dump(indent);
}

}  // namespace ei
