#include "doctest.h"

#include "paradec/field.hpp"

#include <random>

using namespace paradec;

namespace {

DescPtr q2() { return make_padic_descriptor(2); }
DescPtr q3() { return make_padic_descriptor(3); }
DescPtr f2s() { return make_ratfunc_descriptor(2, UniPoly::parse(2, "s")); }
DescPtr f2sq() { return make_ratfunc_descriptor(2, UniPoly::parse(2, "s^2+s+1")); }

FieldElement fe(const DescPtr& d, const std::string& s) { return FieldElement::parse(d, s); }

// independent oracle: order of p in an integer by repeated division
long long vp_oracle(long long v, long p) {
    long long k = 0;
    while (v % p == 0) {
        v /= p;
        ++k;
    }
    return k;
}

}  // namespace

TEST_CASE("make_field: p-adic ring data") {
    ValuationRing ring = make_field(q2());
    CHECK(ring.uniformizer->str() == "2");
    CHECK(ring.residue_cardinality->convert_to<long>() == 2);
    CHECK(ring.uniformizer->magnitude() == Magnitude::power(2, 1));
}

TEST_CASE("make_field: residue cardinality of F2[s]/(s^2+s+1)") {
    // oracle: the residues of degree < 2 are pairwise incongruent and exhaust
    // the quotient, so the cardinality is the count of such polynomials
    std::vector<UniPoly> reps = residue_polys(2, 2);
    UniPoly place = UniPoly::parse(2, "s^2+s+1");
    for (size_t i = 0; i < reps.size(); ++i)
        for (size_t j = i + 1; j < reps.size(); ++j)
            CHECK_FALSE((reps[i] - reps[j]).divmod(place).second.is_zero());
    CHECK(reps.size() == 4);

    ValuationRing ring = make_field(f2sq());
    CHECK(ring.residue_cardinality->convert_to<long>() == 4);
}

TEST_CASE("make_field: rejects bad descriptors") {
    CHECK_THROWS_AS(make_padic_descriptor(4), std::invalid_argument);
    // s^2+1 = (s+1)^2 over F2 is reducible
    auto bad = std::make_shared<FieldDescriptor>();
    bad->kind = FieldKind::RationalFunctions;
    bad->p = 2;
    bad->place = UniPoly::parse(2, "s^2+1");
    CHECK_THROWS_AS(make_field(DescPtr(bad)), std::invalid_argument);
}

TEST_CASE("arith: exact rational and function-field results") {
    DescPtr d = q2();
    CHECK((fe(d, "1/2") + fe(d, "1/3")).str() == "5/6");
    FieldElement x = fe(d, "-7/10");
    CHECK((x * x.inverse()).is_one());

    DescPtr f = f2s();
    // polynomial long division oracle: s^2+s = (s+1) s, so the quotient is s
    UniPoly num = UniPoly::parse(2, "s^2+s"), den = UniPoly::parse(2, "s+1");
    auto [quot, rem] = num.divmod(den);
    CHECK(rem.is_zero());
    CHECK(quot.str() == "s");
    CHECK((fe(f, "s^2+s") / fe(f, "s+1")).str() == "s");

    CHECK_THROWS_AS(fe(d, "1") / fe(d, "0"), std::domain_error);
    CHECK_THROWS_AS(fe(d, "1") + fe(q3(), "1"), std::invalid_argument);
}

TEST_CASE("magnitude: p-adic and place-adic orders") {
    CHECK(fe(q2(), "0").magnitude().is_zero());
    CHECK(vp_oracle(12, 2) == 2);
    CHECK(fe(q2(), "12").magnitude() == Magnitude::power(2, 2));
    CHECK(fe(q2(), "1/12").magnitude() == Magnitude::power(2, -2));
    CHECK(fe(q3(), "12").magnitude() == Magnitude::power(3, 1));

    // |q^3 f1/f2|_q = 2^-3 when q divides neither f1 nor f2
    DescPtr f = f2sq();
    FieldElement q = fe(f, "s^2+s+1");
    FieldElement v = q.pow(3) * fe(f, "s+1") / fe(f, "s");
    CHECK(v.magnitude() == Magnitude::power(2, 3));

    CHECK(fe(make_trivial_descriptor(0), "7/3").magnitude() == Magnitude::one(2));
}

TEST_CASE("mag_compare: total order") {
    CHECK(Magnitude::compare(Magnitude::zero(), Magnitude::power(2, 5)) < 0);
    CHECK(Magnitude::compare(Magnitude::power(2, 1), Magnitude::power(2, 3)) > 0);  // 1/2 > 1/8
    CHECK(Magnitude::compare(Magnitude::power(3, 0), Magnitude::power(3, 0)) == 0);
    CHECK_THROWS_AS(Magnitude::compare(Magnitude::power(2, 0), Magnitude::power(3, 0)),
                    std::invalid_argument);
}

namespace {

FieldElement random_element(const DescPtr& d, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-50, 50), den(1, 50), deg(0, 3);
    if (!d->polynomial_elements()) return FieldElement::rational(d, Rat(num(rng), den(rng)));
    long p = d->characteristic();
    auto poly = [&] {
        std::vector<Rat> c(static_cast<size_t>(deg(rng)) + 1);
        for (auto& v : c) v = Rat(num(rng));
        return UniPoly::from_coeffs(p, c);
    };
    UniPoly n = poly(), dn = poly();
    while (dn.is_zero()) dn = poly();
    return FieldElement::rat_func(d, n, dn);
}

}  // namespace

TEST_CASE("valuation laws on random pairs") {
    std::mt19937_64 rng(12345);
    for (const DescPtr& d : {q2(), q3(), f2s(), f2sq()}) {
        for (int k = 0; k < 10000; ++k) {
            FieldElement x = random_element(d, rng), y = random_element(d, rng);
            Magnitude mx = x.magnitude(), my = y.magnitude();
            if (!x.is_zero() && !y.is_zero()) {
                REQUIRE((x * y).magnitude().exp() == mx.exp() + my.exp());
            }
            Magnitude msum = (x + y).magnitude();
            REQUIRE(msum <= Magnitude::max(mx, my));
            if (Magnitude::compare(mx, my) != 0) REQUIRE(msum == Magnitude::max(mx, my));
        }
    }
}

TEST_CASE("canonical form idempotence") {
    std::mt19937_64 rng(777);
    DescPtr f = f2sq();
    for (int k = 0; k < 500; ++k) {
        FieldElement x = random_element(f, rng);
        if (x.is_zero()) continue;
        // rebuild from a blown-up numerator/denominator pair
        UniPoly junk = UniPoly::parse(2, "s^3+s+1");
        FieldElement y = FieldElement::rat_func(f, x.num() * junk, x.den() * junk);
        REQUIRE(x == y);
        REQUIRE(y.num() == x.num());
        REQUIRE(y.den() == x.den());
        REQUIRE(y.den().lead() == 1);
    }
}

TEST_CASE("uniformizer law and ball identity") {
    for (const DescPtr& d : {q2(), q3(), f2sq()}) {
        ValuationRing ring = make_field(d);
        for (long long k = -5; k <= 5; ++k)
            CHECK(ring.uniformizer_pow(k).magnitude() == Magnitude::power(d->mag_base, k));
        // B[0, base^-n] = pi^n D on sampled elements: |x| <= base^-n iff
        // pi^-n x lies in D
        std::mt19937_64 rng(99);
        for (int t = 0; t < 200; ++t) {
            FieldElement x = random_element(d, rng);
            if (x.is_zero()) continue;
            for (long long n = -2; n <= 2; ++n) {
                bool in_ball = x.magnitude() <= Magnitude::power(d->mag_base, n);
                bool in_piD =
                    (x * ring.uniformizer_pow(-n)).magnitude() <= Magnitude::one(d->mag_base);
                REQUIRE(in_ball == in_piD);
            }
        }
    }
}

TEST_CASE("element parsing round-trips") {
    std::mt19937_64 rng(4242);
    for (const DescPtr& d : {q2(), f2s()}) {
        for (int k = 0; k < 200; ++k) {
            FieldElement x = random_element(d, rng);
            CHECK(FieldElement::parse(d, x.str()) == x);
        }
    }
}
