#pragma once

#include "paradec/geometry.hpp"
#include "paradec/groups.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

// vendored nlohmann/json single header
#include "json.hpp"

namespace paradec {

using Json = nlohmann::ordered_json;

enum class Scheme { FourPiece, ZbcFive, SixPieceOddSphere };
std::string scheme_str(Scheme s);
Scheme scheme_from_str(const std::string& s);

// Word-to-piece assignment rules.  Words are over the generator alphabet
// with a = sigma and b = tau.
//   four-piece: A1 starts with tau; A2 with tau^-1; B1 = starts with sigma,
//               the identity, or a pure sigma^-n; B2 = the rest of W(sigma^-1).
//   zbc:        the same rule with the absorbing piece on the sigma side
//               (A1), used for orbits away from C.
//   zbc-c:      pure first-letter rule on the orbit of C, identity -> C.
//   six-locus:  the per-locus sublabels of the odd-sphere scheme.
std::string assign_piece(const std::string& scheme, const Word& w);

struct TargetSpec {
    std::string id;  // ball-no-0 | sphere-far | sphere0 | ball0 | sphere-with-0 |
                     // kn-minus-0 | whole-space
    DescPtr field;
    int n = 2;
    std::optional<Region> region;
    std::vector<long long> radii_exps;  // kn-minus-0 only
};

struct Certificate {
    TargetSpec target;
    Scheme scheme = Scheme::FourPiece;
    GroupSpec group;
    int pieces = 4;
    std::map<std::string, AffineMap> generators;
    // Identity equations as lists of (piece, group element) pairs; element
    // "1" is the identity, other names refer to `generators`.
    std::vector<std::vector<std::pair<std::string, std::string>>> equations;

    const AffineMap& generator(const std::string& name) const;

    Json to_json() const;
    static Certificate from_json(const Json& j);
};

struct BuildParams {
    DescPtr field;
    int n = 2;
    std::string target_id;
    long long radius_exp = 0;
    long long eps_exp = 1;
    std::optional<Vec> center;          // target-dependent default otherwise
    std::vector<long long> radii_exps;  // kn-minus-0 only
};

Certificate build_certificate(const BuildParams& params);

// Pushes a whole-space certificate through the corner embedding; the piece
// count is preserved and pieces become preimages of the projection onto the
// first coordinates.
Certificate lift_certificate(const Certificate& cert, int m);

// Piece count when two halves of a decomposition and an attached set of l
// pieces are combined; dropping the extra piece needs an invariant half.
int combine_counts(int m, int n, int l, bool invariant);

Json descriptor_to_json(const DescPtr& d);
DescPtr descriptor_from_json(const Json& j);
Json affine_to_json(const AffineMap& f);
AffineMap affine_from_json(const DescPtr& d, const Json& j);

}  // namespace paradec
