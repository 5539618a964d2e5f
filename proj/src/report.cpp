#include "paradec/report.hpp"

#include <sstream>

namespace paradec {

void Report::add(CheckRecord rec) {
    rec.finalize();  // idempotent; derives pass/fail from the counters
    checks.push_back(std::move(rec));
}

void Report::add_all(std::vector<CheckRecord> recs) {
    for (auto& r : recs) add(std::move(r));
}

long long Report::count_status(const std::string& status) const {
    long long n = 0;
    for (const auto& r : checks)
        if (r.status == status) ++n;
    return n;
}

Json Report::to_json() const {
    Json j;
    j["version"] = kToolVersion;
    j["config"] = config;
    Json cs = Json::array();
    for (const auto& r : checks) cs.push_back(r.to_json());
    j["checks"] = cs;
    Json summary;
    summary["pass"] = count_status("pass");
    summary["fail"] = count_status("fail");
    summary["boundary_unchecked"] = count_status("boundary-unchecked");
    summary["error"] = count_status("error");
    summary["exit"] = exit_code();
    j["summary"] = summary;
    return j;
}

Report Report::from_json(const Json& j) {
    Report r;
    r.config = j.at("config");
    for (const auto& c : j.at("checks")) r.checks.push_back(CheckRecord::from_json(c));
    return r;
}

std::string Report::human() const {
    std::ostringstream os;
    for (const auto& r : checks) {
        os << "[" << r.status << "] " << r.name << "  checked=" << r.checked
           << " passed=" << r.passed << " failed=" << r.failed
           << " boundary=" << r.boundary << "\n";
        for (const auto& w : r.witnesses) os << "    witness: " << w << "\n";
    }
    os << "summary: pass=" << count_status("pass") << " fail=" << count_status("fail")
       << " boundary-unchecked=" << count_status("boundary-unchecked")
       << " error=" << count_status("error") << " exit=" << exit_code() << "\n";
    return os.str();
}

}  // namespace paradec
