#pragma once

#include "ramsey/witness.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace ramsey {

// CLI-facing result record. Everything except `perf` is a deterministic
// function of the run configuration and inputs; `perf` holds timing and
// search counters and is excluded from byte-identity checks.
struct Report {
    enum class Status { found, not_found, exhausted, capped };

    std::string subcommand;
    Status status = Status::not_found;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    nlohmann::ordered_json result = nlohmann::ordered_json::object();
    std::vector<Witness> witnesses;
    nlohmann::ordered_json counterexamples = nlohmann::ordered_json::array();
    nlohmann::ordered_json provenance = nlohmann::ordered_json::object();
    nlohmann::ordered_json perf = nlohmann::ordered_json::object();

    nlohmann::ordered_json to_json(bool include_perf = true) const;
    int exit_code() const;  // found 0, not_found/exhausted 1, capped 2
    static const char* status_name(Status s);
};

}  // namespace ramsey
