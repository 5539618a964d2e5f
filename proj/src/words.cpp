#include "paradec/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace paradec {

char letter_char(Letter l) {
    switch (l) {
        case 0: return 'a';
        case 1: return 'A';
        case 2: return 'b';
        case 3: return 'B';
    }
    throw std::invalid_argument("bad letter code");
}

Letter letter_from_char(char c) {
    switch (c) {
        case 'a': return 0;
        case 'A': return 1;
        case 'b': return 2;
        case 'B': return 3;
    }
    throw std::invalid_argument(std::string("bad letter '") + c + "'");
}

Word Word::parse(const std::string& text) {
    if (text == "1" || text.empty()) return Word();
    std::vector<Letter> ls;
    ls.reserve(text.size());
    for (char c : text) ls.push_back(letter_from_char(c));
    return from_letters(std::move(ls));
}

Word Word::from_letters(std::vector<Letter> ls) {
    Word w;
    for (Letter l : ls) {
        if (!w.ls_.empty() && w.ls_.back() == letter_inverse(l))
            w.ls_.pop_back();
        else
            w.ls_.push_back(l);
    }
    return w;
}

Word Word::a_power(long n) {
    Word w;
    Letter l = n >= 0 ? 0 : 1;
    w.ls_.assign(static_cast<size_t>(n >= 0 ? n : -n), l);
    return w;
}

Word Word::b_power(long n) {
    Word w;
    Letter l = n >= 0 ? 2 : 3;
    w.ls_.assign(static_cast<size_t>(n >= 0 ? n : -n), l);
    return w;
}

Word Word::generator(int index, bool inverse) {
    Word w;
    w.ls_.push_back(static_cast<Letter>(2 * index + (inverse ? 1 : 0)));
    return w;
}

Word Word::operator*(const Word& o) const {
    Word w = *this;
    for (Letter l : o.ls_) {
        if (!w.ls_.empty() && w.ls_.back() == letter_inverse(l))
            w.ls_.pop_back();
        else
            w.ls_.push_back(l);
    }
    return w;
}

Word Word::inverse() const {
    Word w;
    w.ls_.reserve(ls_.size());
    for (auto it = ls_.rbegin(); it != ls_.rend(); ++it) w.ls_.push_back(letter_inverse(*it));
    return w;
}

bool Word::operator<(const Word& o) const {
    if (ls_.size() != o.ls_.size()) return ls_.size() < o.ls_.size();
    return ls_ < o.ls_;
}

char Word::prefix_letter() const { return ls_.empty() ? '1' : letter_char(ls_.front()); }

bool Word::is_a_power(long* n) const {
    if (ls_.empty()) return false;
    for (Letter l : ls_)
        if (l != ls_.front()) return false;
    if (ls_.front() > 1) return false;
    if (n) *n = ls_.front() == 0 ? static_cast<long>(ls_.size()) : -static_cast<long>(ls_.size());
    return true;
}

bool Word::is_b_power(long* n) const {
    if (ls_.empty()) return false;
    for (Letter l : ls_)
        if (l != ls_.front()) return false;
    if (ls_.front() < 2) return false;
    if (n) *n = ls_.front() == 2 ? static_cast<long>(ls_.size()) : -static_cast<long>(ls_.size());
    return true;
}

std::string Word::str() const {
    if (ls_.empty()) return "1";
    std::string s;
    s.reserve(ls_.size());
    for (Letter l : ls_) s.push_back(letter_char(l));
    return s;
}

std::string SyllableForm::str() const {
    switch (kind) {
        case Kind::Empty: return "1";
        case Kind::APower: return "a^" + std::to_string(power);
        case Kind::BPower: return "b^" + std::to_string(power);
        case Kind::Syllables: {
            std::string s;
            for (const auto& [n, m] : syl) {
                s += "(" + std::to_string(n) + "," + std::to_string(m) + ")";
            }
            return s;
        }
    }
    return "?";
}

SyllableForm to_syllables(const Word& w) {
    SyllableForm f;
    if (w.empty()) return f;
    long n = 0;
    if (w.is_a_power(&n)) {
        f.kind = SyllableForm::Kind::APower;
        f.power = n;
        return f;
    }
    if (w.is_b_power(&n)) {
        f.kind = SyllableForm::Kind::BPower;
        f.power = n;
        return f;
    }
    // alternating a-run / b-run pairs, starting with an a-run
    f.kind = SyllableForm::Kind::Syllables;
    size_t k = 0;
    const auto& ls = w.letters();
    while (k < ls.size()) {
        if (ls[k] > 1) throw std::invalid_argument("not syllable-shaped as written: " + w.str());
        long na = 0;
        Letter al = ls[k];
        while (k < ls.size() && ls[k] == al) {
            ++k;
            ++na;
        }
        if (k >= ls.size() || ls[k] < 2)
            throw std::invalid_argument("not syllable-shaped as written: " + w.str());
        long nb = 0;
        Letter bl = ls[k];
        while (k < ls.size() && ls[k] == bl) {
            ++k;
            ++nb;
        }
        f.syl.emplace_back(al == 0 ? na : -na, bl == 2 ? nb : -nb);
    }
    return f;
}

Word word_from_syllables(const SyllableForm& f) {
    switch (f.kind) {
        case SyllableForm::Kind::Empty: return Word();
        case SyllableForm::Kind::APower: return Word::a_power(f.power);
        case SyllableForm::Kind::BPower: return Word::b_power(f.power);
        case SyllableForm::Kind::Syllables: {
            Word w;
            for (const auto& [n, m] : f.syl) w = w * Word::a_power(n) * Word::b_power(m);
            return w;
        }
    }
    return Word();
}

ConjClass canonical_class(const Word& w) {
    std::vector<Letter> v = w.letters();
    size_t lo = 0, hi = v.size();
    while (hi - lo >= 2 && v[lo] == letter_inverse(v[hi - 1])) {
        ++lo;
        --hi;
    }
    std::vector<Letter> cyc(v.begin() + static_cast<long>(lo), v.begin() + static_cast<long>(hi));

    ConjClass cls;
    Word core = Word::from_letters(cyc);  // already reduced; from_letters is a no-op pass
    if (core.empty()) {
        cls.rep = core;
        return cls;
    }
    long n = 0;
    if (core.is_a_power(&n)) {
        cls.rep = core;
        cls.form.kind = SyllableForm::Kind::APower;
        cls.form.power = n;
        cls.la = std::abs(n);
        return cls;
    }
    if (core.is_b_power(&n)) {
        cls.rep = core;
        cls.form.kind = SyllableForm::Kind::BPower;
        cls.form.power = n;
        cls.lb = std::abs(n);
        return cls;
    }

    // Runs of the cyclic word; the first and last run merge when they share a
    // letter (cyclic reduction guarantees equal signs in that case).
    struct Run {
        bool is_a;
        long count;  // signed
    };
    std::vector<Run> runs;
    const auto& ls = core.letters();
    for (Letter l : ls) {
        bool is_a = l < 2;
        long sgn = (l == 0 || l == 2) ? 1 : -1;
        if (!runs.empty() && runs.back().is_a == is_a)
            runs.back().count += sgn;
        else
            runs.push_back({is_a, sgn});
    }
    if (runs.size() >= 2 && runs.front().is_a == runs.back().is_a) {
        runs.front().count += runs.back().count;
        runs.pop_back();
    }
    if (runs.size() % 2 != 0) throw std::logic_error("odd cyclic run count");
    size_t k = runs.size() / 2;

    // Candidate rotations start at each a-run.
    std::vector<size_t> starts;
    for (size_t i = 0; i < runs.size(); ++i)
        if (runs[i].is_a) starts.push_back(i);
    if (starts.size() != k) throw std::logic_error("a-run count mismatch");

    auto rotation_syllables = [&](size_t start) {
        std::vector<std::pair<long, long>> syl(k);
        for (size_t s = 0; s < k; ++s) {
            size_t ai = (start + 2 * s) % runs.size();
            size_t bi = (ai + 1) % runs.size();
            syl[s] = {runs[ai].count, runs[bi].count};
        }
        return syl;
    };

    std::vector<std::pair<long, long>> best;
    std::vector<long> best_score;
    for (size_t start : starts) {
        auto syl = rotation_syllables(start);
        std::vector<long> score(k);
        for (size_t s = 0; s < k; ++s) score[s] = std::max(std::labs(syl[s].first), std::labs(syl[s].second));
        bool better = false;
        if (best.empty()) {
            better = true;
        } else if (score != best_score) {
            better = score > best_score;
        } else {
            std::vector<long> flat, bflat;
            for (auto& [a, b] : syl) {
                flat.push_back(a);
                flat.push_back(b);
            }
            for (auto& [a, b] : best) {
                bflat.push_back(a);
                bflat.push_back(b);
            }
            if (flat != bflat)
                better = flat > bflat;
            else if (syl != best)
                // a full tie can only come from a rotation fixing the word
                throw std::logic_error("canonical rotation tie with distinct words");
        }
        if (better) {
            best = std::move(syl);
            best_score = std::move(score);
        }
    }

    cls.form.kind = SyllableForm::Kind::Syllables;
    cls.form.syl = best;
    cls.rep = word_from_syllables(cls.form);
    for (auto& [a, b] : best) {
        cls.la += std::labs(a);
        cls.lb += std::labs(b);
    }
    return cls;
}

long long reduced_word_count(int maxlen) {
    long long total = 1, layer = 4;
    for (int k = 1; k <= maxlen; ++k) {
        total += layer;
        layer *= 3;
    }
    return total;
}

std::vector<Word> enumerate_reduced(int maxlen) {
    std::vector<Word> out;
    out.reserve(static_cast<size_t>(reduced_word_count(maxlen)));
    out.push_back(Word());
    size_t level_begin = 0, level_end = 1;
    for (int len = 1; len <= maxlen; ++len) {
        for (size_t i = level_begin; i < level_end; ++i) {
            for (Letter l = 0; l < 4; ++l) {
                const Word& parent = out[i];
                if (!parent.empty() && parent.letters().back() == letter_inverse(l)) continue;
                std::vector<Letter> ls = parent.letters();
                ls.push_back(l);
                Word child;
                child = Word::from_letters(std::move(ls));
                out.push_back(std::move(child));
            }
        }
        level_begin = level_end;
        level_end = out.size();
    }
    return out;
}

namespace {

void walk_rec(int remaining, std::vector<Letter>& cur, const std::function<void(Letter)>& push,
              const std::function<void()>& pop, const std::function<void(const Word&)>& visit) {
    visit(Word::from_letters(cur));
    if (remaining == 0) return;
    for (Letter l = 0; l < 4; ++l) {
        if (!cur.empty() && cur.back() == letter_inverse(l)) continue;
        cur.push_back(l);
        push(l);
        walk_rec(remaining - 1, cur, push, pop, visit);
        pop();
        cur.pop_back();
    }
}

}  // namespace

void walk_reduced(int maxlen, const std::function<void(Letter)>& push,
                  const std::function<void()>& pop,
                  const std::function<void(const Word&)>& visit) {
    std::vector<Letter> cur;
    walk_rec(maxlen, cur, push, pop, visit);
}

}  // namespace paradec
