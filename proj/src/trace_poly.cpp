#include "paradec/trace_poly.hpp"

#include <cstdlib>

namespace paradec {

namespace {

// Base table on the special classes, keyed by canonical representative.
bool special_phi(const std::string& rep, long p, TriPoly* out) {
    const TriPoly X = TriPoly::X(p), Y = TriPoly::Y(p), Z = TriPoly::Z(p);
    auto C = [&](long v) { return TriPoly::constant(p, v); };
    if (rep == "1") {
        *out = C(2);
        return true;
    }
    if (rep == "a" || rep == "A") {
        *out = X;
        return true;
    }
    if (rep == "b" || rep == "B") {
        *out = Y;
        return true;
    }
    if (rep == "ab" || rep == "AB") {
        *out = Z;
        return true;
    }
    if (rep == "Ab" || rep == "aB") {
        *out = X * Y - Z;
        return true;
    }
    if (rep == "abAB" || rep == "aBAb") {
        *out = X * X + Y * Y + Z * Z - X * Y * Z - C(2);
        return true;
    }
    if (rep == "abAb" || rep == "aBAB") {
        *out = -(X * X) - Z * Z + X * Y * Z + C(2);
        return true;
    }
    return false;
}

Word syllable_range(const std::vector<std::pair<long, long>>& syl, size_t from, size_t count) {
    Word w;
    for (size_t s = 0; s < count; ++s) {
        const auto& [n, m] = syl[(from + s) % syl.size()];
        w = w * Word::a_power(n) * Word::b_power(m);
    }
    return w;
}

}  // namespace

PhiTable& global_phi_table() {
    static PhiTable table;
    return table;
}

TriPoly phi(const ConjClass& cls, long characteristic) {
    return global_phi_table().phi(cls, characteristic);
}

TriPoly phi(const Word& w, long characteristic) {
    return global_phi_table().phi(w, characteristic);
}

TriPoly PhiTable::phi(const Word& w, long characteristic) {
    return phi(canonical_class(w), characteristic);
}

TriPoly PhiTable::phi(const ConjClass& cls, long characteristic) {
    if (characteristic != 0 && !is_prime(characteristic))
        throw std::invalid_argument("characteristic must be 0 or prime");
    std::string key = cls.rep.str();
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cache_.find({characteristic, key});
        if (it != cache_.end()) return it->second;
    }
    TriPoly value = compute(cls, characteristic);
    std::lock_guard<std::mutex> lock(mu_);
    return cache_.emplace(std::make_pair(characteristic, key), std::move(value)).first->second;
}

TriPoly PhiTable::compute(const ConjClass& cls, long p) {
    TriPoly out(p);
    if (special_phi(cls.rep.str(), p, &out)) return out;

    const TriPoly X = TriPoly::X(p), Y = TriPoly::Y(p);
    const SyllableForm& f = cls.form;

    if (f.kind == SyllableForm::Kind::APower) {
        long n = f.power;
        long s = n > 0 ? 1 : -1;
        TriPoly p1 = phi(canonical_class(Word::a_power(n - s)), p);
        TriPoly p2 = phi(canonical_class(Word::a_power(n - 2 * s)), p);
        return X * p1 - p2;
    }
    if (f.kind == SyllableForm::Kind::BPower) {
        long m = f.power;
        long s = m > 0 ? 1 : -1;
        TriPoly p1 = phi(canonical_class(Word::b_power(m - s)), p);
        TriPoly p2 = phi(canonical_class(Word::b_power(m - 2 * s)), p);
        return Y * p1 - p2;
    }
    if (f.kind != SyllableForm::Kind::Syllables)
        throw std::logic_error("empty class missing from the special table");

    const auto& syl = f.syl;
    long n1 = syl[0].first, m1 = syl[0].second;

    if (std::labs(n1) >= 2) {
        // w = a^{n1} u: peel one a off the leading run.
        Word u = Word::b_power(m1) * syllable_range(syl, 1, syl.size() - 1);
        long s = n1 > 0 ? 1 : -1;
        TriPoly p1 = phi(canonical_class(Word::a_power(n1 - s) * u), p);
        TriPoly p2 = phi(canonical_class(Word::a_power(n1 - 2 * s) * u), p);
        return X * p1 - p2;
    }
    if (std::labs(m1) >= 2) {
        // [w] = [b^{m1} u] with u ending in the leading a-run.
        Word u = syllable_range(syl, 1, syl.size() - 1) * Word::a_power(n1);
        long s = m1 > 0 ? 1 : -1;
        TriPoly p1 = phi(canonical_class(Word::b_power(m1 - s) * u), p);
        TriPoly p2 = phi(canonical_class(Word::b_power(m1 - 2 * s) * u), p);
        return Y * p1 - p2;
    }

    // All exponents are +-1: split at the lexicographically least (i, j)
    // with n_i = n_j, so that u^-1 v reduces.
    size_t k = syl.size();
    for (size_t i = 0; i < k; ++i) {
        for (size_t j = i + 1; j < k; ++j) {
            if (syl[i].first != syl[j].first) continue;
            Word u = syllable_range(syl, i, j - i);
            Word v = syllable_range(syl, j, k - (j - i));
            TriPoly pu = phi(canonical_class(u), p);
            TriPoly pv = phi(canonical_class(v), p);
            TriPoly puv = phi(canonical_class(u.inverse() * v), p);
            return pu * pv - puv;
        }
    }
    throw std::logic_error("no syllable pair with equal a-exponent in a non-special class: " +
                           cls.rep.str());
}

FrickeReport verify_fricke(const Word& w, const Mat& A, const Mat& B) {
    const DescPtr& d = A.descriptor();
    FieldElement one = FieldElement::one(d);
    if (A.det() != one || B.det() != one)
        throw std::invalid_argument("verify_fricke requires unimodular matrices");
    FieldElement lhs = rho(w, A, B).trace();
    TriPoly poly = phi(canonical_class(w), d->characteristic());
    FieldElement rhs = poly.eval(A.trace(), B.trace(), (A * B).trace());
    bool equal = lhs == rhs;
    return {std::move(lhs), std::move(rhs), equal};
}

PsiReport psi_magnitude(const ConjClass& cls, const FieldElement& f, const FieldElement& g,
                        const FieldElement& h) {
    const DescPtr& d = f.descriptor();
    if (d->kind != FieldKind::RationalFunctions)
        throw std::invalid_argument("psi_magnitude expects a rational function field");
    Magnitude one = Magnitude::one(d->mag_base);
    Magnitude mf = f.magnitude(), mg = g.magnitude(), mh = h.magnitude();
    if (!(mf > one) || !(mg > one))
        throw std::invalid_argument("|f| and |g| must exceed 1");
    FieldElement fg = f * g;
    Magnitude mfg = fg.magnitude();
    Magnitude mfgh = (fg - h).magnitude();
    if (mh != mfg || mfgh != mfg)
        throw std::invalid_argument("|h| = |fg| = |fg - h| violated");
    if (cls.l() == 0) throw std::invalid_argument("identity class excluded");

    TriPoly poly = phi(cls, d->characteristic());
    FieldElement value = poly.eval(f, g, h);
    Magnitude actual = value.magnitude();
    Magnitude predicted = mf.pow(cls.la) * mg.pow(cls.lb);
    bool equal = actual == predicted;
    return {actual, predicted, equal, std::move(value)};
}

PsiSetting eq_fgh_setting(long characteristic) {
    UniPoly q = characteristic == 2 ? UniPoly::parse(2, "s^2+s+1")
                                    : UniPoly::parse(characteristic, "2s+1");
    DescPtr field = make_ratfunc_descriptor(characteristic, q);
    FieldElement qe = FieldElement::rat_func(field, q, UniPoly::constant(characteristic, 1));
    FieldElement s = FieldElement::rat_func(field, UniPoly::variable(characteristic),
                                            UniPoly::constant(characteristic, 1));
    FieldElement one = FieldElement::one(field);
    FieldElement f = qe + qe.inverse();
    FieldElement h = qe.pow(-2) * (qe.pow(4) + s + one);
    return {field, q, f, f, h};
}

}  // namespace paradec
