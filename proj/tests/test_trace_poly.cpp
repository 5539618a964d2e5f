#include "doctest.h"

#include "paradec/harness.hpp"
#include "paradec/trace_poly.hpp"

#include <random>
#include <set>

using namespace paradec;

namespace {

DescPtr q2() { return make_padic_descriptor(2); }

FieldElement fe(const DescPtr& d, const std::string& s) { return FieldElement::parse(d, s); }

TriPoly tp(const char* rep, long c = 0) { return phi(Word::parse(rep), c); }

}  // namespace

TEST_CASE("special class table") {
    CHECK(tp("1").str() == "2");
    CHECK(tp("a").str() == "X");
    CHECK(tp("A").str() == "X");
    CHECK(tp("b").str() == "Y");
    CHECK(tp("ab").str() == "Z");
    CHECK(tp("AB").str() == "Z");
    CHECK(tp("Ab").str() == "X*Y - Z");
    CHECK(tp("aB").str() == "X*Y - Z");
    CHECK(tp("abAB").str() == "-X*Y*Z + X^2 + Y^2 + Z^2 - 2");
    CHECK(tp("aBAb").str() == "-X*Y*Z + X^2 + Y^2 + Z^2 - 2");
    CHECK(tp("abAb").str() == "X*Y*Z - X^2 - Z^2 + 2");
    CHECK(tp("aBAB").str() == "X*Y*Z - X^2 - Z^2 + 2");
}

TEST_CASE("phi of a^2 and the matrix-trace oracle") {
    TriPoly x2m2 = tp("aa");
    CHECK(x2m2.str() == "X^2 - 2");
    // oracle: tr(A^2) computed by explicit multiplication for a unimodular A
    DescPtr d = q2();
    Mat a = magnus(d, 1);
    Mat a2 = a * a;
    CHECK(x2m2.eval(a.trace(), fe(d, "0"), fe(d, "0")) == a2.trace());
}

TEST_CASE("phi is conjugation-well-defined and memoizable") {
    CHECK(tp("abA") == tp("b"));
    CHECK(tp("Babb") == tp("ab"));
    CHECK(tp("bbaBB") == tp("a"));  // both cyclically reduce into [a]
}

TEST_CASE("poly_eval") {
    DescPtr d = q2();
    FieldElement x = fe(d, "3"), y = fe(d, "5"), z = fe(d, "7");
    CHECK(TriPoly::Z(0).eval(x, y, z) == z);
    CHECK(tp("aa").eval(x, y, z) == fe(d, "7"));
    FieldElement one = fe(d, "1");
    CHECK(tp("abAB").eval(one, one, one).is_zero());

    // characteristic mismatch is rejected; char-0 polynomials evaluate mod p
    DescPtr f2 = make_ratfunc_descriptor(2, UniPoly::parse(2, "s"));
    CHECK_THROWS_AS(tp("ab", 3).eval(fe(f2, "s"), fe(f2, "s"), fe(f2, "s")),
                    std::invalid_argument);
    CHECK(tp("aa", 0).eval(fe(f2, "s"), fe(f2, "0"), fe(f2, "0")).str() == "s^2");
}

TEST_CASE("verify_fricke on the base cases") {
    DescPtr d = q2();
    Mat A = magnus(d, 0), B = magnus(d, 1);
    FieldElement trAB = (A * B).trace();

    FrickeReport r = verify_fricke(Word::parse("ab"), A, B);
    CHECK(r.equal);
    CHECK(r.lhs == trAB);

    // tr A^-1 B = tr A tr B - tr AB
    r = verify_fricke(Word::parse("Ab"), A, B);
    CHECK(r.equal);
    CHECK(r.lhs == A.trace() * B.trace() - trAB);

    // exact integer values for a longer word, against a hand product
    Word w = Word::parse("aaBab");
    Mat prod = A * A * B.inverse() * A * B;
    r = verify_fricke(w, A, B);
    CHECK(r.equal);
    CHECK(r.lhs == prod.trace());

    Mat nonuni = Mat::from_ints(d, 2, {2, 0, 0, 1});
    CHECK_THROWS_AS(verify_fricke(w, nonuni, B), std::invalid_argument);
}

TEST_CASE("fricke identity for the panel, exhaustive short words") {
    for (const MatrixPair& pr : trace_test_pairs(false)) {
        for (const Word& w : enumerate_reduced(5)) {
            FrickeReport r = verify_fricke(w, pr.a, pr.b);
            REQUIRE(r.equal);
        }
    }
}

TEST_CASE("trace is constant on conjugacy classes (exhaustive 6/3)") {
    DescPtr d = q2();
    Mat A = magnus(d, 0), B = magnus(d, 1);
    std::vector<std::pair<Mat, Mat>> conjugators;  // (rho(u), rho(u)^-1)
    for (const Word& u : enumerate_reduced(3)) {
        Mat ru = rho(u, A, B);
        conjugators.emplace_back(ru, ru.inverse());
    }
    for (const Word& w : enumerate_reduced(6)) {
        Mat rw = rho(w, A, B);
        FieldElement base = rw.trace();
        for (const auto& [ru, rui] : conjugators) REQUIRE((ru * rw * rui).trace() == base);
    }
}

TEST_CASE("tri-polynomial ring laws (spot check)") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> deg(0, 3), coeff(-6, 6);
    auto random_poly = [&](long p) {
        TriPoly out(p);
        for (int t = 0; t < 5; ++t)
            out.add_term({deg(rng), deg(rng), deg(rng)}, coeff(rng));
        return out;
    };
    for (long p : {0L, 5L}) {
        for (int trial = 0; trial < 50; ++trial) {
            TriPoly a = random_poly(p), b = random_poly(p), c = random_poly(p);
            REQUIRE(a + b == b + a);
            REQUIRE(a * b == b * a);
            REQUIRE((a + b) + c == a + (b + c));
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE(a * (b + c) == a * b + a * c);
            for (const auto& [m, v] : (a * b - b * a).terms()) REQUIRE(v != 0);
        }
    }
}

TEST_CASE("characteristic compatibility of phi (classes of length <= 8)") {
    std::set<std::string> seen;
    for (const Word& w : enumerate_reduced(8)) {
        ConjClass cls = canonical_class(w);
        if (!seen.insert(cls.rep.str()).second) continue;
        TriPoly z = phi(cls, 0);
        for (long p : {2L, 3L, 5L}) REQUIRE(z.reduced_mod(p) == phi(cls, p));
    }
}

TEST_CASE("psi_magnitude: pinned values and the length law") {
    for (long c : {0L, 2L}) {
        PsiSetting s = eq_fgh_setting(c);
        CHECK(s.f.magnitude() == Magnitude::power(2, -1));
        CHECK(s.h.magnitude() == Magnitude::power(2, -2));
        CHECK((s.f * s.g - s.h).magnitude() == Magnitude::power(2, -2));

        PsiReport r = psi_magnitude(canonical_class(Word::parse("ab")), s.f, s.g, s.h);
        CHECK(r.equal);
        CHECK(r.actual == Magnitude::power(2, -2));  // value 4

        r = psi_magnitude(canonical_class(Word::parse("aab")), s.f, s.g, s.h);
        CHECK(r.equal);
        CHECK(r.actual == Magnitude::power(2, -3));  // value 8

        CHECK_THROWS_AS(psi_magnitude(canonical_class(Word::parse("1")), s.f, s.g, s.h),
                        std::invalid_argument);
        // violating |h| = |fg| is rejected
        CHECK_THROWS_AS(psi_magnitude(canonical_class(Word::parse("ab")), s.f, s.g, s.f),
                        std::invalid_argument);
    }
}

TEST_CASE("psi magnitude law holds exhaustively for short classes") {
    for (long c : {0L, 2L}) {
        PsiSetting s = eq_fgh_setting(c);
        FieldElement two = FieldElement::integer(s.field, 2);
        std::set<std::string> seen;
        for (const Word& w : enumerate_reduced(5)) {
            ConjClass cls = canonical_class(w);
            if (cls.l() == 0 || !seen.insert(cls.rep.str()).second) continue;
            PsiReport r = psi_magnitude(cls, s.f, s.g, s.h);
            REQUIRE(r.equal);
            REQUIRE(r.value != two);
        }
    }
}

TEST_CASE("tri-polynomial serialization quadruples") {
    auto q = tp("abAB").quadruples();
    REQUIRE(q.size() == 5);
    CHECK(q[0] == std::tuple<int, int, int, std::string>{1, 1, 1, "-1"});
    CHECK(q[1] == std::tuple<int, int, int, std::string>{2, 0, 0, "1"});
    CHECK(q[4] == std::tuple<int, int, int, std::string>{0, 0, 0, "-2"});
}
