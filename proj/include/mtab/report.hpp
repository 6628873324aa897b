#pragma once

#include <string>

#include <json.hpp>

namespace mtab {

inline constexpr int kReportSchemaVersion = 1;

/// Machine-readable outcome of one verification: serialized as
/// {schema_version, claim, parameters, status, data}.
struct Report {
    std::string claim;
    nlohmann::json parameters = nlohmann::json::object();
    enum class Status { Pass, Fail, Inconclusive } status = Status::Pass;
    nlohmann::json data = nlohmann::json::object();

    bool passed() const { return status == Status::Pass; }
    nlohmann::json to_json() const;
    static const char* status_name(Status s);
};

}  // namespace mtab
