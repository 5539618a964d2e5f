#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace paradec {

// Letters of F2 are encoded as a=0, a^-1=1, b=2, b^-1=3, so that the inverse
// is the xor with 1 and the numeric order is the enumeration order
// a < a^-1 < b < b^-1.
using Letter = int8_t;
inline Letter letter_inverse(Letter l) { return static_cast<Letter>(l ^ 1); }
char letter_char(Letter l);
Letter letter_from_char(char c);

// Reduced word in F2; the empty word is the identity and serializes as "1".
class Word {
public:
    Word() = default;
    static Word parse(const std::string& text);       // reduces its input
    static Word from_letters(std::vector<Letter> ls); // reduces its input
    static Word a_power(long n);
    static Word b_power(long n);
    static Word generator(int index, bool inverse = false);  // 0 -> a, 1 -> b

    size_t length() const { return ls_.size(); }
    bool empty() const { return ls_.empty(); }
    const std::vector<Letter>& letters() const { return ls_; }
    Letter at(size_t k) const { return ls_[k]; }

    Word operator*(const Word& o) const;  // reduced concatenation
    Word inverse() const;
    Word conjugated_by(const Word& u) const { return u * (*this) * u.inverse(); }

    bool operator==(const Word& o) const { return ls_ == o.ls_; }
    bool operator!=(const Word& o) const { return ls_ != o.ls_; }
    bool operator<(const Word& o) const;

    // 'a', 'A', 'b', 'B', or '1' for the empty word.
    char prefix_letter() const;
    // n != 0 is written out when the word is a^n (resp. b^n).
    bool is_a_power(long* n = nullptr) const;
    bool is_b_power(long* n = nullptr) const;

    std::string str() const;

private:
    std::vector<Letter> ls_;  // reduced
};

struct SyllableForm {
    enum class Kind { Empty, APower, BPower, Syllables };
    Kind kind = Kind::Empty;
    long power = 0;                             // APower/BPower exponent
    std::vector<std::pair<long, long>> syl;     // (n_i, m_i), all nonzero

    std::string str() const;
};

// Reads w as written: empty, a^n, b^m, or alternating runs
// a^{n_1} b^{m_1} ... a^{n_k} b^{m_k}.  Throws std::invalid_argument
// ("not syllable-shaped as written") otherwise.
SyllableForm to_syllables(const Word& w);

Word word_from_syllables(const SyllableForm& f);

// Conjugacy class data: the canonical representative, its syllable form and
// the a/b-lengths of the class.
struct ConjClass {
    Word rep;
    SyllableForm form;
    long la = 0;
    long lb = 0;
    long l() const { return la + lb; }
    bool operator==(const ConjClass& o) const { return rep == o.rep; }
};

// Cyclically reduces w and rotates to the syllable start that maximizes,
// lexicographically, first (max(|n_i|,|m_i|))_i and then the flattened
// exponent vector.
ConjClass canonical_class(const Word& w);

// Every reduced word of length <= maxlen, ordered by length then
// lexicographically under a < a^-1 < b < b^-1.
std::vector<Word> enumerate_reduced(int maxlen);

// Number of reduced words of length <= maxlen: 1 + sum 4*3^(k-1).
long long reduced_word_count(int maxlen);

// Depth-first traversal of the reduced-word tree, for incremental audits:
// push(letter) extends the current word, pop() retracts it, and visit(word)
// is called for every word of length <= maxlen including the empty one.
void walk_reduced(int maxlen, const std::function<void(Letter)>& push,
                  const std::function<void()>& pop,
                  const std::function<void(const Word&)>& visit);

}  // namespace paradec
