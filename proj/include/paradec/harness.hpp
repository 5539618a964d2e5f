#pragma once

#include "paradec/report.hpp"
#include "paradec/trace_poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace paradec {

// Field shorthands used on the command line and in config files:
//   qP     rationals with the P-adic valuation (q2, q3, ...)
//   fPs    F_P(s) with the valuation at s (f2s, f3s, ...)
//   f2s-q  F_2(s) with the valuation at s^2+s+1
//   qx     Q(s) with the valuation at s
//   qx-q   Q(s) with the valuation at 2s+1
//   t0/tP  trivially valued Q resp. F_P(s)
DescPtr field_from_shorthand(const std::string& name);
std::string shorthand_or_json(const DescPtr& d);

// Worker count from PARADEC_WORKERS (default 1).  Reports are byte-identical
// for any value.
int worker_count();

struct RunConfig {
    std::string field = "q2";
    int n = 2;
    std::string target = "sphere0";
    long long radius_exp = 0;
    long long eps_exp = 1;
    int depth = 5;
    std::string center = "default";  // "(x1,..,xn)" over the field grammar
    std::string seeds = "default";   // or "(x1,x2);(y1,y2)"
    std::string out;
};

std::vector<Vec> parse_seed_list(const DescPtr& d, int n, const std::string& text);

// Named exact matrix pairs for the trace audits: Magnus pairs, an
// integer-uni/lower-triangular pair, a rational-entry pair, and the
// function-field pair.
struct MatrixPair {
    std::string name;
    Mat a, b;
};
std::vector<MatrixPair> trace_test_pairs(bool magnus_only);

Report run_verify_traces(int maxlen, const std::string& pairs);
Report run_verify_psi(int maxlen, const std::string& setting);  // char0 | char2 | both
Report run_freeness_audit(int maxlen, const std::string& pair); // magnus | f2s
Report run_isometry_check(const std::string& field, int n, int samples, int vectors);
Report run_cover_ball(const std::string& field, int n, int i, int j);
Report run_build_decomposition(const RunConfig& cfg, Json* certificate_out);
Report run_verify_decomposition(const Json& certificate, int depth, const std::string& seeds);

}  // namespace paradec
