#pragma once

#include "paradec/certificate.hpp"

#include <map>
#include <string>
#include <vector>

namespace paradec {

struct CheckRecord {
    std::string name;
    std::string status;  // pass | fail | boundary-unchecked | error
    long long checked = 0;
    long long passed = 0;
    long long failed = 0;
    long long boundary = 0;
    std::vector<std::string> witnesses;

    static CheckRecord make(std::string name);
    void note_pass();
    void note_fail(std::string witness);
    void note_boundary();
    void finalize();  // derives status from the counters
    Json to_json() const;
    static CheckRecord from_json(const Json& j);
};

bool records_all_green(const std::vector<CheckRecord>& records);  // no fail/error

struct VerifyOptions {
    int depth = 5;
    std::vector<Vec> seeds;  // empty -> target-specific defaults
    size_t max_witnesses = 5;
};

// Deterministic seed lists per target: uniformizer-scaled unit vectors for
// spheres and balls at 0, the center plus in-region perturbations for
// anchored targets, the marked point and generic companions for the
// whole-space scheme.  Seeds act as declared orbit representatives, so
// candidates whose depth-bounded orbits collide with an earlier seed's orbit
// are skipped deterministically.
std::vector<Vec> default_seeds(const Certificate& cert, int depth = 5);

// Truncated-orbit verification of a certificate: structural checks, region
// and locus invariance, freeness evidence, fixed-point cross-checks, the
// C-condition where applicable, and every identity equation with
// boundary-aware bookkeeping.
std::vector<CheckRecord> verify_certificate(const Certificate& cert, const VerifyOptions& opts);

// The bare F2 four-piece scheme for a given pair acting on a region.
std::vector<CheckRecord> verify_four_piece(const AffineMap& sigma, const AffineMap& tau,
                                           const std::vector<Vec>& seeds, int depth,
                                           const Region& region);

}  // namespace paradec
