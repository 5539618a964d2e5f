#include "doctest.h"

#include "paradec/words.hpp"

#include <stdexcept>

using namespace paradec;

namespace {

// independent stack reducer used as the oracle for reduce_concat
std::string naive_reduce(const std::string& letters) {
    std::string out;
    auto inv = [](char c) {
        switch (c) {
            case 'a': return 'A';
            case 'A': return 'a';
            case 'b': return 'B';
            default: return 'b';
        }
    };
    for (char c : letters) {
        if (!out.empty() && out.back() == inv(c))
            out.pop_back();
        else
            out.push_back(c);
    }
    return out.empty() ? "1" : out;
}

}  // namespace

TEST_CASE("reduce_concat") {
    CHECK((Word::parse("ab") * Word::parse("Ba")).str() == "aa");
    CHECK(naive_reduce("abABab") == (Word::parse("abA") * Word::parse("Bab")).str());
    CHECK(naive_reduce("abAab") == "abb");
    CHECK((Word::parse("abA") * Word::parse("ab")).str() == "abb");
    for (const char* w : {"a", "abAB", "bbaB", "1"}) {
        Word x = Word::parse(w);
        CHECK((x * x.inverse()).empty());
    }
    // associativity spot check
    Word u = Word::parse("abA"), v = Word::parse("aB"), w = Word::parse("bAb");
    CHECK(((u * v) * w) == (u * (v * w)));
}

TEST_CASE("prefix_letter") {
    CHECK(Word::parse("aB").prefix_letter() == 'a');
    CHECK(Word::parse("1").prefix_letter() == '1');
    CHECK(Word::parse("Baa").prefix_letter() == 'B');
}

TEST_CASE("to_syllables") {
    SyllableForm f = to_syllables(Word::parse("aaB"));
    REQUIRE(f.kind == SyllableForm::Kind::Syllables);
    CHECK(f.syl == std::vector<std::pair<long, long>>{{2, -1}});

    f = to_syllables(Word::parse("bbb"));
    CHECK(f.kind == SyllableForm::Kind::BPower);
    CHECK(f.power == 3);

    f = to_syllables(Word::parse("abAAb"));
    CHECK(f.syl == std::vector<std::pair<long, long>>{{1, 1}, {-2, 1}});

    CHECK_THROWS_WITH_AS(to_syllables(Word::parse("ba")),
                         doctest::Contains("not syllable-shaped as written"),
                         std::invalid_argument);
    CHECK_THROWS_AS(to_syllables(Word::parse("aba")), std::invalid_argument);
}

TEST_CASE("canonical_class basics") {
    // oracle for [ba]: the cyclic rotations of the cyclic reduction are ab
    // and ba; only ab is syllable-shaped, so it is the representative
    CHECK(canonical_class(Word::parse("ba")).rep.str() == "ab");
    ConjClass empty = canonical_class(Word::parse("1"));
    CHECK(empty.rep.empty());
    CHECK(empty.l() == 0);

    Word w = Word::parse("abAb");
    Word conj = Word::parse("A") * Word::parse("aabAba").inverse();  // arbitrary junk
    CHECK(canonical_class(Word::parse("A") * w * Word::parse("a")) == canonical_class(w));
    CHECK(canonical_class(conj * w * conj.inverse()) == canonical_class(w));
}

TEST_CASE("canonical_class: conjugation invariance, exhaustive 6/3") {
    std::vector<Word> smalls = enumerate_reduced(3);
    for (const Word& w : enumerate_reduced(6)) {
        ConjClass base = canonical_class(w);
        for (const Word& u : smalls) {
            REQUIRE(canonical_class(u * w * u.inverse()) == base);
        }
    }
}

TEST_CASE("canonical_class: lengths match letter counts of the representative") {
    for (const Word& w : enumerate_reduced(7)) {
        ConjClass cls = canonical_class(w);
        long la = 0, lb = 0;
        for (Letter l : cls.rep.letters()) (l < 2 ? la : lb) += 1;
        REQUIRE(cls.la == la);
        REQUIRE(cls.lb == lb);
        REQUIRE(cls.l() == la + lb);
        // syllable form round-trips to the representative
        REQUIRE(word_from_syllables(cls.form) == cls.rep);
    }
}

TEST_CASE("enumerate_reduced: order and counts") {
    std::vector<Word> w0 = enumerate_reduced(0);
    REQUIRE(w0.size() == 1);
    CHECK(w0[0].empty());

    CHECK(enumerate_reduced(1).size() == 5);
    CHECK(enumerate_reduced(3).size() == 53);
    CHECK(reduced_word_count(3) == 53);

    std::vector<Word> w3 = enumerate_reduced(3);
    for (size_t k = 1; k < w3.size(); ++k) REQUIRE(w3[k - 1] < w3[k]);
    CHECK(w3[1].str() == "a");
    CHECK(w3[2].str() == "A");
    CHECK(w3[3].str() == "b");
    CHECK(w3[4].str() == "B");
    CHECK(w3[5].str() == "aa");

    // closed form up to length 12 via the visitor walk
    for (int maxlen : {10, 12}) {
        long long count = 0;
        walk_reduced(
            maxlen, [](Letter) {}, [] {}, [&](const Word&) { ++count; });
        CHECK(count == reduced_word_count(maxlen));
    }
}

TEST_CASE("words serialize with 1 for the identity") {
    CHECK(Word().str() == "1");
    CHECK(Word::parse("1").empty());
    CHECK(Word::parse("aAbB").str() == "1");
    CHECK(Word::parse("abB") == Word::parse("a"));
}
