// Acceptance suite: one line per criterion, exit 0 iff everything holds.
// Each criterion pins its thresholds here; nothing is deferred to runtime
// configuration.

#include "paradec/harness.hpp"
#include "paradec/verify.hpp"

#include <chrono>
#include <iostream>

using namespace paradec;

namespace {

int g_failures = 0;

void outcome(int number, const std::string& what, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << number << ": " << what;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool report_green(const Report& rep) { return rep.exit_code() == 0; }

long long total_checked(const Report& rep, const std::string& prefix) {
    long long n = 0;
    for (const auto& c : rep.checks)
        if (c.name.rfind(prefix, 0) == 0) n += c.checked;
    return n;
}

}  // namespace

int main() {
    // 1. Fricke identity: all reduced words of length <= 8 against 5 exact
    //    pairs, zero exceptions, within 60 s single-worker.
    {
        auto start = std::chrono::steady_clock::now();
        Report rep = run_verify_traces(8, "panel");
        double secs = seconds_since(start);
        long long pair_records = 0;
        bool counts_ok = true;
        for (const auto& c : rep.checks)
            if (c.name.rfind("fricke:", 0) == 0) {
                ++pair_records;
                counts_ok = counts_ok && c.checked == reduced_word_count(8);
            }
        outcome(1, "Fricke identity, length <= 8, 5 exact pairs",
                report_green(rep) && pair_records == 5 && counts_ok && secs <= 60.0,
                std::to_string(pair_records) + " pairs, " +
                    std::to_string(total_checked(rep, "fricke:")) + " word checks, " +
                    std::to_string(secs).substr(0, 5) + " s");
    }

    // 2. The special-class table, byte-exact in the canonical monomial order.
    {
        const std::vector<std::pair<const char*, const char*>> table = {
            {"1", "2"},
            {"a", "X"},
            {"A", "X"},
            {"b", "Y"},
            {"B", "Y"},
            {"ab", "Z"},
            {"AB", "Z"},
            {"Ab", "X*Y - Z"},
            {"aB", "X*Y - Z"},
            {"abAB", "-X*Y*Z + X^2 + Y^2 + Z^2 - 2"},
            {"aBAb", "-X*Y*Z + X^2 + Y^2 + Z^2 - 2"},
            {"abAb", "X*Y*Z - X^2 - Z^2 + 2"},
            {"aBAB", "X*Y*Z - X^2 - Z^2 + 2"},
        };
        bool ok = true;
        std::string bad;
        for (const auto& [w, expect] : table) {
            std::string got = phi(Word::parse(w), 0).str();
            if (got != expect) {
                ok = false;
                bad = std::string(w) + " -> " + got;
            }
        }
        outcome(2, "special-class trace polynomials, byte-exact", ok, bad);
    }

    // 3. Nonparabolicity of <A0, A1>: every nonidentity word of length <= 10
    //    has trace outside {2, -2}, within 120 s.
    {
        auto start = std::chrono::steady_clock::now();
        Report rep = run_freeness_audit(10, "magnus");
        double secs = seconds_since(start);
        long long checked = total_checked(rep, "nonparabolic:");
        outcome(3, "nonparabolic traces for Magnus words, length <= 10",
                report_green(rep) && checked == reduced_word_count(10) - 1 && secs <= 120.0,
                std::to_string(checked) + " words, " + std::to_string(secs).substr(0, 5) + " s");
    }

    // 4. The magnitude law for all classes of length <= 8 in both standard
    //    settings, plus the pinned |f| = 2 and |h| = 4 values.
    {
        Report rep = run_verify_psi(8, "both");
        outcome(4, "|Psi(W)| = |f|^la |g|^lb for classes of length <= 8, both settings",
                report_green(rep),
                std::to_string(total_checked(rep, "psi-magnitude-law")) + " class checks");
    }

    // 5. Covering counts: q^(n(j-i)) translates forming an exact partition for
    //    p in {2,3}, n in {2,3}, j-i in {1,2}.
    {
        bool ok = true;
        std::string bad;
        long long cases = 0;
        for (long p : {2L, 3L})
            for (int n = 2; n <= 3; ++n)
                for (int diff = 1; diff <= 2; ++diff) {
                    ValuationRing ring = make_field(make_padic_descriptor(p));
                    std::vector<Vec> t = cover_ball(0, diff, n, ring);
                    CoverCheck check = cover_ball_verify(0, diff, n, ring, t);
                    ++cases;
                    if (!(check.count_ok && check.pairwise_disjoint && check.exhaustive)) {
                        ok = false;
                        bad = "p=" + std::to_string(p) + " n=" + std::to_string(n) +
                              " j-i=" + std::to_string(diff) + ": " + check.note;
                    }
                }
        outcome(5, "ball covering counts and exact partitions", ok,
                ok ? std::to_string(cases) + " cases" : bad);
    }

    // 6. Isometry characterization: 200 mixed samples per field, the exact
    //    conditions agree pairwise and sampling never contradicts them.
    {
        bool ok = true;
        std::string detail;
        for (const char* field : {"q2", "q3", "f2s"}) {
            for (int n : {2, 3}) {
                Report rep = run_isometry_check(field, n, 200, 100);
                if (!report_green(rep)) {
                    ok = false;
                    detail = std::string(field) + " n=" + std::to_string(n);
                }
            }
        }
        outcome(6, "isometry condition equivalence on 200 samples per field", ok, detail);
    }

    // 7 & 9. Certificate table: declared piece counts per target, depth-5
    //    truncation verification with zero failed records, and freeness
    //    injectivity with the fixed-point cross-check on every run.
    bool freeness_ok = true;
    std::string freeness_bad;
    {
        struct Row {
            const char* target;
            int n;
            int pieces;
        };
        const std::vector<Row> rows = {
            {"ball-no-0", 2, 4},   {"ball-no-0", 3, 4},     {"sphere-far", 2, 4},
            {"sphere-far", 3, 4},  {"sphere0", 2, 4},       {"sphere0", 3, 6},
            {"ball0", 2, 4},       {"ball0", 3, 4},         {"sphere-with-0", 2, 4},
            {"sphere-with-0", 3, 4}, {"kn-minus-0", 2, 4},  {"kn-minus-0", 3, 6},
            {"whole-space", 2, 5}, {"whole-space", 3, 5}};
        bool counts_ok = true, verify_ok = true;
        std::string bad;
        auto start = std::chrono::steady_clock::now();
        for (const char* field : {"q2", "f2s"}) {
            for (const Row& row : rows) {
                BuildParams params;
                params.field = field_from_shorthand(field);
                params.n = row.n;
                params.target_id = row.target;
                Certificate cert = build_certificate(params);
                if (cert.pieces != row.pieces) {
                    counts_ok = false;
                    bad = std::string(field) + " " + row.target;
                    continue;
                }
                VerifyOptions opts;
                opts.depth = 5;
                auto recs = verify_certificate(cert, opts);
                long long failed = 0;
                bool free_ok = false, fps_ok = false;
                for (const auto& r : recs) {
                    if (r.status == "fail" || r.status == "error") ++failed;
                    if (r.name == "freeness-injectivity")
                        free_ok = r.status == "pass" && r.failed == 0;
                    if (r.name == "fixed-point-crosscheck") fps_ok = r.status == "pass";
                }
                if (failed != 0) {
                    verify_ok = false;
                    bad = std::string(field) + " " + row.target + " n=" + std::to_string(row.n);
                }
                if (!free_ok || !fps_ok) {
                    freeness_ok = false;
                    bad = std::string(field) + " " + row.target + " n=" + std::to_string(row.n);
                }
            }
        }
        double secs = seconds_since(start);
        freeness_bad = bad;
        outcome(7, "piece counts 4/5/6 with depth-5 verification, zero failures",
                counts_ok && verify_ok, bad.empty() ? std::to_string(secs).substr(0, 5) + " s" : bad);
    }

    // 8. Epsilon-membership: the Magnus index for p = 2, eps = 2^-3 is m = 3,
    //    and the function-field pair passes SL(2,D,eps) at eps = 2^-1.
    {
        DescPtr q2 = field_from_shorthand("q2");
        EpsPair pair = magnus_eps_pair(q2, Magnitude::power(2, 3));
        GroupSpec sl_z{GroupSpec::Family::SL_R_eps, 2, GroupSpec::Ring::Integers,
                       Magnitude::power(2, 3)};
        bool magnus_ok = pair.exp_first == 3 && group_membership(pair.first, sl_z).ok &&
                         group_membership(pair.second, sl_z).ok;

        DescPtr f2s = field_from_shorthand("f2s");
        TransPair tp = transcendental_pair(f2s, Magnitude::power(2, 1));
        GroupSpec sl_d{GroupSpec::Family::SL_R_eps, 2, GroupSpec::Ring::D,
                       Magnitude::power(2, 1)};
        bool trans_ok = group_membership(tp.a, sl_d).ok && group_membership(tp.b, sl_d).ok;
        outcome(8, "epsilon-membership of the selected generator pairs", magnus_ok && trans_ok,
                "magnus m=" + std::to_string(pair.exp_first) +
                    ", function-field t exponent=" + std::to_string(tp.t_exp));
    }

    outcome(9, "freeness evidence: injectivity and fixed-point cross-checks at depth 5",
            freeness_ok, freeness_bad);

    std::cout << (g_failures == 0 ? "acceptance: all criteria hold"
                                  : "acceptance: " + std::to_string(g_failures) + " criteria failed")
              << std::endl;
    return g_failures == 0 ? 0 : 1;
}
