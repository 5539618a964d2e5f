#pragma once

#include "paradec/verify.hpp"

#include <string>
#include <vector>

namespace paradec {

inline constexpr const char* kToolVersion = "0.1.0";

// Deterministic run report: canonical key order, no timestamps, stable
// across runs and worker counts.
struct Report {
    Json config = Json::object();
    std::vector<CheckRecord> checks;

    void add(CheckRecord rec);
    void add_all(std::vector<CheckRecord> recs);

    long long count_status(const std::string& status) const;
    bool all_green() const { return records_all_green(checks); }
    int exit_code() const { return all_green() ? 0 : 1; }

    Json to_json() const;
    static Report from_json(const Json& j);
    std::string human() const;  // one line per check plus a summary
};

}  // namespace paradec
