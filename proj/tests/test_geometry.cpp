#include "doctest.h"

#include "paradec/geometry.hpp"
#include "paradec/groups.hpp"

#include <random>

using namespace paradec;

namespace {

DescPtr q2() { return make_padic_descriptor(2); }

FieldElement fe(const DescPtr& d, const std::string& s) { return FieldElement::parse(d, s); }

}  // namespace

TEST_CASE("standard norm") {
    DescPtr d = q2();
    CHECK(norm({fe(d, "0"), fe(d, "0")}).is_zero());
    // max(|1/2|_2, |4|_2) = max(2, 1/4) = 2
    CHECK(norm({fe(d, "1/2"), fe(d, "4")}) == Magnitude::power(2, -1));
    for (int j = 0; j < 3; ++j) CHECK(norm(unit_vec(d, 3, j)) == Magnitude::one(2));
}

TEST_CASE("region membership") {
    DescPtr d = q2();
    Vec zero = zero_vec(d, 2);
    for (long long e : {-2LL, 0LL, 3LL})
        CHECK(Region::closed_ball(zero, Magnitude::power(2, e)).contains(zero));
    CHECK(Region::sphere(zero, Magnitude::one(2)).contains({fe(d, "1"), fe(d, "0")}));
    // max(|2|, |4|) = 2^-1 exactly on the sphere of radius 1/2
    CHECK(Region::sphere(zero, Magnitude::power(2, 1)).contains({fe(d, "2"), fe(d, "4")}));
    CHECK_FALSE(Region::open_ball(zero, Magnitude::one(2)).contains({fe(d, "1"), fe(d, "0")}));
    CHECK_FALSE(Region::punctured_ball(zero, Magnitude::one(2)).contains(zero));
    CHECK(Region::punctured_ball(zero, Magnitude::one(2)).contains({fe(d, "2"), fe(d, "0")}));

    Region sb = Region::product_sphere_ball(d, 3, 2, Magnitude::one(2));
    CHECK(sb.contains({fe(d, "1"), fe(d, "0"), fe(d, "2")}));
    CHECK_FALSE(sb.contains({fe(d, "2"), fe(d, "0"), fe(d, "1")}));
    Region os = Region::product_open_ball_sphere(d, 3, 2, Magnitude::one(2));
    CHECK(os.contains({fe(d, "2"), fe(d, "0"), fe(d, "1")}));
    CHECK_FALSE(os.contains({fe(d, "1"), fe(d, "0"), fe(d, "1")}));
}

TEST_CASE("displacement audit") {
    DescPtr d = q2();
    Vec x = {fe(d, "1"), fe(d, "0")};
    Magnitude r = Magnitude::power(2, 1);
    std::vector<Vec> samples = {{fe(d, "1"), fe(d, "1/2")}, {fe(d, "5/4"), fe(d, "0")}};

    DisplacementReport ok =
        displacement_audit({AffineMap::identity(d, 2)}, x, r, samples);
    CHECK(ok.all_strict);
    CHECK(ok.generators[0].displacement.is_zero());
    CHECK(ok.samples_failed == 0);

    // a translation moving the center by exactly r fails strictness
    AffineMap shift = AffineMap::translation_by(d, {fe(d, "2"), fe(d, "0")});
    DisplacementReport bad = displacement_audit({shift}, x, r, samples);
    CHECK_FALSE(bad.all_strict);
    CHECK(bad.generators[0].displacement == r);
}

TEST_CASE("cover_ball examples") {
    ValuationRing ring = make_field(q2());
    std::vector<Vec> t = cover_ball(0, 1, 2, ring);
    REQUIRE(t.size() == 4);
    std::vector<std::string> strs;
    for (const auto& v : t) strs.push_back(vec_str(v));
    CHECK(strs == std::vector<std::string>{"(0, 0)", "(0, 1)", "(1, 0)", "(1, 1)"});

    CHECK(cover_ball(2, 2, 3, ring).size() == 1);
    CHECK(vec_is_zero(cover_ball(2, 2, 3, ring)[0]));

    ValuationRing r3 = make_field(make_padic_descriptor(3));
    CHECK(cover_ball(0, 2, 2, r3).size() == 81);

    DescPtr qx = make_ratfunc_descriptor(0, UniPoly::parse(0, "s"));
    CHECK_THROWS_AS(cover_ball(0, 1, 2, make_field(qx)), std::invalid_argument);
}

TEST_CASE("cover_ball partitions, exhaustively on the residue grid") {
    for (long p : {2L, 3L}) {
        ValuationRing ring = make_field(make_padic_descriptor(p));
        for (int n = 2; n <= 3; ++n)
            for (int diff = 1; diff <= 2; ++diff) {
                if (p == 3 && n == 3 && diff == 2) continue;  // 729 translates, acceptance covers it
                std::vector<Vec> t = cover_ball(1, 1 + diff, n, ring);
                CoverCheck check = cover_ball_verify(1, 1 + diff, n, ring, t);
                REQUIRE(check.count_ok);
                REQUIRE(check.pairwise_disjoint);
                REQUIRE(check.exhaustive);
            }
    }
    // a function field with finite residue field also covers exactly
    ValuationRing rf = make_field(make_ratfunc_descriptor(2, UniPoly::parse(2, "s^2+s+1")));
    std::vector<Vec> t = cover_ball(0, 1, 2, rf);
    REQUIRE(t.size() == 16);  // q = 4, q^(n(j-i)) = 16
    CoverCheck check = cover_ball_verify(0, 1, 2, rf, t);
    CHECK(check.count_ok);
    CHECK(check.pairwise_disjoint);
    CHECK(check.exhaustive);
}

TEST_CASE("isosceles property on random triples") {
    DescPtr d = q2();
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<long> num(-40, 40), den(1, 40);
    auto rnd = [&] {
        Vec v;
        for (int k = 0; k < 2; ++k) v.push_back(FieldElement::rational(d, Rat(num(rng), den(rng))));
        return v;
    };
    for (int t = 0; t < 10000; ++t) {
        Vec x = rnd(), y = rnd(), z = rnd();
        Magnitude xy = norm(vec_sub(x, y)), yz = norm(vec_sub(y, z)), xz = norm(vec_sub(x, z));
        if (Magnitude::compare(xy, yz) != 0) REQUIRE(xz == Magnitude::max(xy, yz));
    }
}

TEST_CASE("every point of a ball is a center") {
    DescPtr d = q2();
    Magnitude r = Magnitude::power(2, 1);
    Vec x = {fe(d, "1"), fe(d, "1")};
    Region bx = Region::closed_ball(x, r);
    // |2|_2 = 1/2 and |4|_2 = 1/4, so these sit inside B[x, 1/2]
    std::vector<Vec> inside = {{fe(d, "1"), fe(d, "3")}, {fe(d, "5"), fe(d, "1")}};
    std::vector<Vec> probes = {{fe(d, "1"), fe(d, "1")},  {fe(d, "0"), fe(d, "1")},
                               {fe(d, "1"), fe(d, "5/4")}, {fe(d, "7"), fe(d, "1")},
                               {fe(d, "1/2"), fe(d, "1")}, {fe(d, "1"), fe(d, "1/3")}};
    for (const Vec& y : inside) {
        REQUIRE(bx.contains(y));
        Region by = Region::closed_ball(y, r);
        for (const Vec& z : probes) REQUIRE(bx.contains(z) == by.contains(z));
    }
}

TEST_CASE("GL(n,D) members preserve spheres on samples") {
    DescPtr d = q2();
    Magnitude r = Magnitude::power(2, 1);  // radius 1/2
    Region sphere = Region::sphere(zero_vec(d, 2), r);
    std::vector<Mat> members = {magnus(d, 0), magnus(d, 1), magnus(d, 0).inverse(),
                                Mat::from_ints(d, 2, {0, 1, 1, 0})};
    std::vector<Vec> pts = {{fe(d, "2"), fe(d, "0")}, {fe(d, "2"), fe(d, "2")},
                            {fe(d, "2/3"), fe(d, "4")}};
    for (const Mat& m : members) {
        REQUIRE(group_membership(m, {GroupSpec::Family::GL_D, 2}).ok);
        for (const Vec& p : pts) {
            REQUIRE(sphere.contains(p));
            REQUIRE(sphere.contains(m.apply(p)));
        }
    }
}
