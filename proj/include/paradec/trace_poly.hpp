#pragma once

#include "paradec/matrix.hpp"
#include "paradec/tripoly.hpp"
#include "paradec/words.hpp"

#include <map>
#include <mutex>

namespace paradec {

// The trace-polynomial map Conj(F2) -> P[X,Y,Z]: a base table on the special
// classes and three recursion branches keyed off the canonical
// representative.  Values are memoized by representative, so repeated audits
// share subclass work.
class PhiTable {
public:
    TriPoly phi(const ConjClass& cls, long characteristic);
    TriPoly phi(const Word& w, long characteristic);

private:
    TriPoly compute(const ConjClass& cls, long characteristic);

    std::mutex mu_;
    std::map<std::pair<long, std::string>, TriPoly> cache_;
};

PhiTable& global_phi_table();
TriPoly phi(const ConjClass& cls, long characteristic);
TriPoly phi(const Word& w, long characteristic);

struct FrickeReport {
    FieldElement lhs;  // tr(rho(w)) by exact matrix products
    FieldElement rhs;  // Phi([w]) at (tr A, tr B, tr AB)
    bool equal;
};

// Compares the matrix trace against the substituted trace polynomial for
// one word and one unimodular pair.
FrickeReport verify_fricke(const Word& w, const Mat& A, const Mat& B);

struct PsiReport {
    Magnitude actual;
    Magnitude predicted;
    bool equal;
    FieldElement value;  // Psi(W) = Phi(W)(f, g, h)
};

// Magnitude law |Psi(W)| = |f|^l_a |g|^l_b; requires |f| > 1, |g| > 1 and
// |h| = |fg| = |fg - h| (checked) and a nonidentity class.
PsiReport psi_magnitude(const ConjClass& cls, const FieldElement& f, const FieldElement& g,
                        const FieldElement& h);

// The standard trace-law test bench: a rational function field over the
// prime field with the valuation at q, and f = g = q + q^-1,
// h = q^-2 (q^4 + X + 1).
struct PsiSetting {
    DescPtr field;
    UniPoly q;
    FieldElement f, g, h;
};
// characteristic 0 -> Q(s), q = 2s+1; characteristic 2 -> F2(s), q = s^2+s+1;
// other primes p -> F_p(s), q = 2s+1.
PsiSetting eq_fgh_setting(long characteristic);

}  // namespace paradec
