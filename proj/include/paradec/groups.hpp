#pragma once

#include "paradec/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace paradec {

// Free basis of SL(2,Z) after Neumann and Magnus: A_0 = [[1,1],[1,2]],
// A_n = [[4n^2+1, 2n],[2n, 1]].
Mat magnus(const DescPtr& d, long i);

struct EpsPair {
    Mat first, second;
    long exp_first = 0, exp_second = 0;  // chosen prime-power exponents m, m+1
};
// Two Magnus matrices A_{p^m}, A_{p^{m+1}} with all entries of A - I of
// magnitude < eps, at the minimal admissible m (field: Q with |.|_p).
EpsPair magnus_eps_pair(const DescPtr& padic_field, const Magnitude& eps);

struct TransPair {
    Mat a, b;
    FieldElement t;
    long long t_exp = 0;  // t = uniformizer^t_exp (0 for the trivial valuation)
    UniPoly q;
};
// The free pair A = [[q(t^2), t],[0, q(t^2)^-1]], B = [[q(t^2), 0],
// [q(t^2)^-2 t, q(t^2)^-1]] over a rational function field, with t the least
// uniformizer power of magnitude < eps (or the generator itself when the
// valuation is trivial).
TransPair transcendental_pair(const DescPtr& fn_field, const Magnitude& eps);

struct GroupSpec {
    enum class Family { GL_D, SL_D, SL_R_eps, SA_D_eps, SA_D_K, SA_L };
    enum class Ring { Integers, D };  // coefficient ring for SL_R_eps / SA_L

    Family family = Family::SL_D;
    int n = 2;
    Ring ring = Ring::D;
    Magnitude eps;  // SL_R_eps / SA_D_eps only

    std::string str() const;
};

struct MembershipReport {
    bool ok = true;
    std::vector<std::string> diagnostics;  // one entry per violated condition
};

MembershipReport group_membership(const Mat& m, const GroupSpec& spec);
MembershipReport group_membership(const AffineMap& f, const GroupSpec& spec);

// Audit of the five equivalent characterizations of a linear isometry;
// condition (1) is evaluated on the given sample vectors, the rest exactly.
struct IsometryReport {
    bool norm_preserving_on_samples = false;  // (1)
    bool det_and_column_max = false;          // (2)
    bool det_and_entries = false;             // (3)
    bool inverse_entries = false;             // (4)
    bool gl_membership = false;               // (5)
    std::vector<std::string> notes;
    bool exact_conditions_agree() const {
        return det_and_column_max == det_and_entries && det_and_entries == inverse_entries &&
               inverse_entries == gl_membership;
    }
};
IsometryReport isometry_audit(const Mat& m, const std::vector<Vec>& samples);

// T_i(x) = A_i x + (I - A_i) anchor; every T_i fixes the anchor.  Throws when
// some basis matrix has det(M - I) = 0.
std::vector<AffineMap> affinize(const std::vector<Mat>& basis, const Vec& anchor);

enum class EmbedMode {
    Corner,      // iota_{n,m}: acts on the first n coordinates
    Diagonal,    // one copy of g on each consecutive pair (even target)
    Shifted1,    // copies on pairs (1,2),...,(2k-1,2k), last coordinate fixed
    Shifted2,    // first coordinate fixed, copies on pairs (2,3),...,(2k,2k+1)
    Permutation  // P g P^-1 for the permutation gamma of coordinates
};
AffineMap embed(const AffineMap& g, int target_n, EmbedMode mode,
                const std::vector<int>& gamma = {});

struct FixedPointSet {
    enum class Kind { NoneNonzero, UniquePoint, Subspace } kind = Kind::NoneNonzero;
    bool any_fixed_point = false;  // false iff the solution set is empty
    std::optional<Vec> point;      // unique fixed point, or a particular solution
    std::vector<Vec> directions;   // basis of the solution subspace (Subspace only)
};
// Solves (L - I) x = -tau exactly and classifies the fixed-point set.
FixedPointSet fixed_points(const AffineMap& f);

}  // namespace paradec
