#include "doctest.h"

#include "paradec/harness.hpp"
#include "paradec/verify.hpp"

using namespace paradec;

namespace {

DescPtr q2() { return make_padic_descriptor(2); }

FieldElement fe(const DescPtr& d, const std::string& s) { return FieldElement::parse(d, s); }

const CheckRecord& find_record(const std::vector<CheckRecord>& recs, const std::string& name) {
    for (const auto& r : recs)
        if (r.name == name) return r;
    throw std::runtime_error("missing record " + name);
}

bool all_green(const std::vector<CheckRecord>& recs) { return records_all_green(recs); }

Certificate build(const std::string& target, const std::string& field, int n,
                  long long radius_exp = 0, long long eps_exp = 1) {
    BuildParams params;
    params.field = field_from_shorthand(field);
    params.n = n;
    params.target_id = target;
    params.radius_exp = radius_exp;
    params.eps_exp = eps_exp;
    return build_certificate(params);
}

}  // namespace

TEST_CASE("assign_piece: the four-piece rule") {
    CHECK(assign_piece("four-piece", Word::parse("1")) == "B1");
    CHECK(assign_piece("four-piece", Word::parse("AAA")) == "B1");   // sigma^-3
    CHECK(assign_piece("four-piece", Word::parse("Ab")) == "B2");    // sigma^-1 tau
    CHECK(assign_piece("four-piece", Word::parse("bA")) == "A1");    // tau sigma^-1
    CHECK(assign_piece("four-piece", Word::parse("Baa")) == "A2");
    CHECK(assign_piece("four-piece", Word::parse("aB")) == "B1");
    // totality and single-valuedness on all short words
    for (const Word& w : enumerate_reduced(6)) {
        std::string p = assign_piece("four-piece", w);
        REQUIRE((p == "A1" || p == "A2" || p == "B1" || p == "B2"));
    }
}

TEST_CASE("four-piece identities hold word-level (exhaustive)") {
    // E = A1 |_| tau(A2) and E = B1 |_| sigma(B2), checked on all words of
    // length <= 7 directly from the assignment rule
    Word A = Word::parse("A"), B = Word::parse("B");
    for (const Word& w : enumerate_reduced(7)) {
        bool a1 = assign_piece("four-piece", w) == "A1";
        bool in_tau_a2 = assign_piece("four-piece", B * w) == "A2";
        REQUIRE(a1 != in_tau_a2);
        bool b1 = assign_piece("four-piece", w) == "B1";
        bool in_sigma_b2 = assign_piece("four-piece", A * w) == "B2";
        REQUIRE(b1 != in_sigma_b2);
    }
}

TEST_CASE("verify_four_piece on an anchored ball") {
    DescPtr d = q2();
    Magnitude r = Magnitude::one(2);
    Vec center = zero_vec(d, 2);
    Region region = Region::closed_ball(center, r);

    // anchor at distance 2 > r, Magnus pair tight enough for eps0 = r/2
    Vec anchor = {fe(d, "1/2"), fe(d, "0")};
    EpsPair pair = magnus_eps_pair(d, Magnitude::power(2, 2));
    std::vector<AffineMap> gens = affinize({pair.first, pair.second}, anchor);
    std::vector<Vec> seeds = {center, {fe(d, "1"), fe(d, "0")}, {fe(d, "0"), fe(d, "2")}};

    auto recs = verify_four_piece(gens[0], gens[1], seeds, 5, region);
    CHECK(all_green(recs));
    CHECK(find_record(recs, "freeness-injectivity").failed == 0);
    CHECK(find_record(recs, "equation:1").failed == 0);
    CHECK(find_record(recs, "equation:2").failed == 0);
    CHECK(find_record(recs, "equation:1").boundary > 0);  // truncation bookkeeping
}

TEST_CASE("verify_four_piece flags a stabilized seed") {
    DescPtr d = q2();
    Region region = Region::punctured_ball(zero_vec(d, 2), Magnitude::one(2));
    // linear generators fix nothing in the punctured ball, but a common fixed
    // point outside the free part is simulated by seeding the anchor itself
    Vec anchor = {fe(d, "1"), fe(d, "0")};
    std::vector<AffineMap> gens = affinize({magnus(d, 0), magnus(d, 1)}, anchor);
    Region ball = Region::closed_ball(anchor, Magnitude::power(2, 1));
    auto recs = verify_four_piece(gens[0], gens[1], {anchor}, 3, ball);
    const CheckRecord& dup = find_record(recs, "freeness-injectivity");
    CHECK(dup.status == "fail");
    REQUIRE(!dup.witnesses.empty());
    CHECK(dup.witnesses.front().find("duplicate point") != std::string::npos);
}

TEST_CASE("verify_four_piece: depth 0 is vacuous") {
    DescPtr d = q2();
    Vec anchor = {fe(d, "1/2"), fe(d, "0")};
    EpsPair pair = magnus_eps_pair(d, Magnitude::power(2, 2));
    std::vector<AffineMap> gens = affinize({pair.first, pair.second}, anchor);
    Region region = Region::closed_ball(zero_vec(d, 2), Magnitude::one(2));
    auto recs = verify_four_piece(gens[0], gens[1], {zero_vec(d, 2)}, 0, region);
    CHECK(all_green(recs));
}

TEST_CASE("build_certificate: piece-count table") {
    CHECK(build("sphere0", "q2", 2).pieces == 4);
    CHECK(build("sphere0", "q2", 3).pieces == 6);
    CHECK(build("sphere0", "f2s", 3).pieces == 6);
    CHECK(build("ball-no-0", "q2", 2).pieces == 4);
    CHECK(build("sphere-far", "f2s", 3).pieces == 4);
    CHECK(build("ball0", "q2", 2).pieces == 4);
    CHECK(build("sphere-with-0", "q2", 2).pieces == 4);
    CHECK(build("kn-minus-0", "q2", 2).pieces == 4);
    CHECK(build("kn-minus-0", "q2", 3).pieces == 6);
    CHECK(build("whole-space", "q2", 2).pieces == 5);
    CHECK(build("whole-space", "f2s", 2).pieces == 5);
}

TEST_CASE("build_certificate: structure of the whole-space certificate") {
    Certificate c = build("whole-space", "f2s", 2);
    CHECK(c.scheme == Scheme::ZbcFive);
    CHECK(c.generators.count("alpha") == 1);
    CHECK(c.group.family == GroupSpec::Family::SA_L);
    CHECK(c.group.ring == GroupSpec::Ring::D);
    // alpha is the translation along -c for c = (1, 0)
    DescPtr d = c.target.field;
    CHECK(vec_eq(c.generator("alpha").translation, {fe(d, "-1"), fe(d, "0")}));
    // the linear pair comes from the function-field construction
    TransPair tp = transcendental_pair(d, Magnitude::one(2));
    CHECK(c.generator("sigma").linear == tp.a);
    CHECK(c.generator("tau").linear == tp.b);

    Certificate cq = build("whole-space", "q2", 2);
    CHECK(cq.group.ring == GroupSpec::Ring::Integers);
    CHECK(cq.generator("sigma").linear == magnus(cq.target.field, 0));
}

TEST_CASE("build_certificate: unsupported combinations") {
    CHECK_THROWS_AS(build("sphere0", "t0", 2), std::invalid_argument);
    CHECK_THROWS_AS(build("ball-no-0", "t2", 2), std::invalid_argument);
    CHECK_THROWS_AS(build("sphere0", "q2", 1), std::invalid_argument);
    CHECK_THROWS_AS(build("no-such-target", "q2", 2), std::invalid_argument);
    // trivial valuation still carries the whole-space scheme
    CHECK(build("whole-space", "t0", 2).pieces == 5);
    CHECK(build("whole-space", "t2", 2).pieces == 5);
}

TEST_CASE("verify_certificate: all targets at depth 4, both fields") {
    for (const std::string& field : {std::string("q2"), std::string("f2s")}) {
        for (const auto& [target, n] :
             std::vector<std::pair<std::string, int>>{{"ball-no-0", 2},
                                                      {"sphere-far", 2},
                                                      {"sphere0", 2},
                                                      {"sphere0", 3},
                                                      {"ball0", 2},
                                                      {"sphere-with-0", 2},
                                                      {"kn-minus-0", 2},
                                                      {"whole-space", 2},
                                                      {"whole-space", 3}}) {
            Certificate cert = build(target, field, n);
            VerifyOptions opts;
            opts.depth = 4;
            auto recs = verify_certificate(cert, opts);
            INFO(field, " ", target, " n=", n);
            REQUIRE(all_green(recs));
        }
    }
}

TEST_CASE("verify_certificate: equal-characteristic and trivially valued fields") {
    for (const auto& [target, field, n] :
         std::vector<std::tuple<std::string, std::string, int>>{{"sphere0", "qx", 2},
                                                                {"sphere0", "qx-q", 2},
                                                                {"ball0", "qx", 2},
                                                                {"whole-space", "qx", 2},
                                                                {"whole-space", "t0", 2},
                                                                {"whole-space", "t2", 2},
                                                                {"whole-space", "t2", 3}}) {
        Certificate cert = build(target, field, n);
        VerifyOptions opts;
        opts.depth = 3;
        INFO(field, " ", target, " n=", n);
        REQUIRE(all_green(verify_certificate(cert, opts)));
    }
}

TEST_CASE("verify_certificate: zbC C-membership branch with the marked seed") {
    Certificate cert = build("whole-space", "q2", 2);
    DescPtr d = cert.target.field;
    VerifyOptions opts;
    opts.depth = 4;
    opts.seeds = {{fe(d, "1"), fe(d, "0")}};  // the point of C itself
    auto recs = verify_certificate(cert, opts);
    CHECK(all_green(recs));
    CHECK(find_record(recs, "c-condition").status == "pass");
    CHECK(find_record(recs, "equation:2").failed == 0);
}

TEST_CASE("verify_certificate: structural mismatch is an error") {
    Certificate cert = build("sphere0", "q2", 3);
    cert.pieces = 4;  // claim the even-dimensional count on an odd sphere
    VerifyOptions opts;
    opts.depth = 2;
    auto recs = verify_certificate(cert, opts);
    CHECK(find_record(recs, "structure").status == "error");
}

TEST_CASE("verify_certificate: seeds outside the target are rejected") {
    Certificate cert = build("sphere0", "q2", 2);
    DescPtr d = cert.target.field;
    VerifyOptions opts;
    opts.depth = 2;
    opts.seeds = {{fe(d, "2"), fe(d, "0")}};  // norm 1/2, not on the unit sphere
    auto recs = verify_certificate(cert, opts);
    CHECK(find_record(recs, "seeds-in-target").status == "error");
}

TEST_CASE("lift_certificate") {
    Certificate base = build("whole-space", "q2", 2);
    CHECK(lift_certificate(base, 2).target.n == 2);  // identity lift

    Certificate lifted = lift_certificate(base, 3);
    CHECK(lifted.pieces == 5);
    CHECK(lifted.target.n == 3);
    CHECK(lifted.generator("sigma").dim() == 3);

    VerifyOptions opts;
    opts.depth = 4;
    DescPtr d = lifted.target.field;
    opts.seeds = {{fe(d, "1"), fe(d, "0"), fe(d, "0")},
                  {fe(d, "1"), fe(d, "0"), fe(d, "7")},
                  {fe(d, "2"), fe(d, "1"), fe(d, "1/2")}};
    auto recs = verify_certificate(lifted, opts);
    REQUIRE(all_green(recs));

    CHECK_THROWS_AS(lift_certificate(base, 1), std::invalid_argument);
    Certificate ball = build("ball0", "q2", 2);
    CHECK_THROWS_AS(lift_certificate(ball, 3), std::invalid_argument);
}

TEST_CASE("combine_counts") {
    CHECK(combine_counts(2, 2, 1, false) == 6);
    CHECK(combine_counts(2, 2, 1, true) == 5);
    CHECK(combine_counts(1, 1, 1, false) == 4);
    CHECK_THROWS_AS(combine_counts(0, 1, 1, false), std::invalid_argument);
}

TEST_CASE("certificate JSON round-trip") {
    for (const auto& [target, field, n] :
         std::vector<std::tuple<std::string, std::string, int>>{
             {"sphere0", "q2", 3}, {"whole-space", "f2s", 2}, {"ball0", "q2", 2}}) {
        Certificate cert = build(target, field, n);
        Json j = cert.to_json();
        Certificate back = Certificate::from_json(j);
        CHECK(back.to_json().dump() == j.dump());

        VerifyOptions opts;
        opts.depth = 3;
        auto before = verify_certificate(cert, opts);
        auto after = verify_certificate(back, opts);
        REQUIRE(before.size() == after.size());
        for (size_t k = 0; k < before.size(); ++k) {
            CHECK(before[k].status == after[k].status);
            CHECK(before[k].checked == after[k].checked);
        }
    }
}
