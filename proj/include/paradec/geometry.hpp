#pragma once

#include "paradec/field.hpp"
#include "paradec/matrix.hpp"

#include <string>
#include <vector>

namespace paradec {

// Standard max-norm on K^n.
Magnitude norm(const Vec& v);

// Exactly decidable subsets of K^n used as decomposition targets.  The
// product kinds split the coordinates at `split` for the odd-dimensional
// sphere loci S[0,r] x B[0,r] and B(0,r) x S[0,r].
struct Region {
    enum class Kind {
        ClosedBall,
        OpenBall,
        Sphere,
        PuncturedBall,        // closed ball minus its center
        ProductSphereBall,    // first `split` coords on the sphere, rest in the closed ball
        ProductOpenBallSphere // first `split` coords in the open ball, rest on the sphere
    };

    Kind kind = Kind::ClosedBall;
    Vec center;
    Magnitude radius;
    int split = 0;

    static Region closed_ball(Vec center, Magnitude r);
    static Region open_ball(Vec center, Magnitude r);
    static Region sphere(Vec center, Magnitude r);
    static Region punctured_ball(Vec center, Magnitude r);
    static Region product_sphere_ball(const DescPtr& d, int n, int split, Magnitude r);
    static Region product_open_ball_sphere(const DescPtr& d, int n, int split, Magnitude r);

    int dim() const { return static_cast<int>(center.size()); }
    bool contains(const Vec& v) const;
    std::string kind_str() const;
};

struct DisplacementReport {
    struct PerGenerator {
        Magnitude displacement;
        bool strict = false;  // ||g(x) - x|| < r
    };
    std::vector<PerGenerator> generators;
    bool all_strict = true;
    // sampled invariance of B[x,r], B(x,r), S[x,r] under every generator
    long long samples_checked = 0;
    long long samples_failed = 0;
};

// Invariance audit: displacement of the center under each generator, plus
// sampled membership preservation for the three regions at (x, r).
DisplacementReport displacement_audit(const std::vector<AffineMap>& generators, const Vec& x,
                                      const Magnitude& r, const std::vector<Vec>& samples);

// Coset translations a with B[0, base^-i] = disjoint union of a + B[0, base^-j]:
// exactly q^(n(j-i)) vectors built from residue digits.  Requires a finite
// residue field.
std::vector<Vec> cover_ball(int i, int j, int n, const ValuationRing& ring);

struct CoverCheck {
    Int expected_count;
    bool count_ok = false;
    bool pairwise_disjoint = false;
    bool exhaustive = false;
    std::string note;
};
// Exact partition check of the cover on the full residue grid of the outer
// ball (plus the deeper perturbations of each grid point).
CoverCheck cover_ball_verify(int i, int j, int n, const ValuationRing& ring,
                             const std::vector<Vec>& translates);

}  // namespace paradec
