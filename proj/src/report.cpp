#include "ramsey/report.hpp"

namespace ramsey {

const char* Report::status_name(Status s) {
    switch (s) {
        case Status::found:
            return "found";
        case Status::not_found:
            return "not_found";
        case Status::exhausted:
            return "exhausted";
        case Status::capped:
            return "capped";
    }
    return "unknown";
}

nlohmann::ordered_json Report::to_json(bool include_perf) const {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["subcommand"] = subcommand;
    j["status"] = status_name(status);
    j["params"] = params;
    j["result"] = result;
    nlohmann::ordered_json ws = nlohmann::ordered_json::array();
    for (const auto& w : witnesses) ws.push_back(w.to_json());
    j["witnesses"] = std::move(ws);
    j["counterexamples"] = counterexamples;
    j["provenance"] = provenance;
    if (include_perf) j["perf"] = perf;
    return j;
}

int Report::exit_code() const {
    switch (status) {
        case Status::found:
            return 0;
        case Status::not_found:
        case Status::exhausted:
            return 1;
        case Status::capped:
            return 2;
    }
    return 2;
}

}  // namespace ramsey
