#include "mtab/report.hpp"

namespace mtab {

const char* Report::status_name(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Inconclusive: return "inconclusive";
    }
    return "?";
}

nlohmann::json Report::to_json() const {
    nlohmann::json j;
    j["schema_version"] = kReportSchemaVersion;
    j["claim"] = claim;
    j["parameters"] = parameters;
    j["status"] = status_name(status);
    j["data"] = data;
    return j;
}

}  // namespace mtab
