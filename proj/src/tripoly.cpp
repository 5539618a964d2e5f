#include "paradec/tripoly.hpp"

#include <sstream>

namespace paradec {

Int TriPoly::reduce(const Int& c) const {
    if (p_ == 0) return c;
    Int r = c % p_;
    if (r < 0) r += p_;
    return r;
}

TriPoly TriPoly::constant(long characteristic, const Int& c) {
    TriPoly p(characteristic);
    p.add_term({0, 0, 0}, c);
    return p;
}

TriPoly TriPoly::X(long characteristic) {
    TriPoly p(characteristic);
    p.add_term({1, 0, 0}, 1);
    return p;
}

TriPoly TriPoly::Y(long characteristic) {
    TriPoly p(characteristic);
    p.add_term({0, 1, 0}, 1);
    return p;
}

TriPoly TriPoly::Z(long characteristic) {
    TriPoly p(characteristic);
    p.add_term({0, 0, 1}, 1);
    return p;
}

void TriPoly::add_term(const Mono& m, const Int& c) {
    auto it = t_.find(m);
    Int v = reduce(it == t_.end() ? c : it->second + c);
    if (v == 0) {
        if (it != t_.end()) t_.erase(it);
    } else if (it == t_.end()) {
        t_.emplace(m, v);
    } else {
        it->second = v;
    }
}

TriPoly TriPoly::operator+(const TriPoly& o) const {
    if (p_ != o.p_) throw std::invalid_argument("characteristic mismatch");
    TriPoly r = *this;
    for (const auto& [m, c] : o.t_) r.add_term(m, c);
    return r;
}

TriPoly TriPoly::operator-(const TriPoly& o) const {
    if (p_ != o.p_) throw std::invalid_argument("characteristic mismatch");
    TriPoly r = *this;
    for (const auto& [m, c] : o.t_) r.add_term(m, -c);
    return r;
}

TriPoly TriPoly::operator-() const {
    TriPoly r(p_);
    for (const auto& [m, c] : t_) r.add_term(m, -c);
    return r;
}

TriPoly TriPoly::operator*(const TriPoly& o) const {
    if (p_ != o.p_) throw std::invalid_argument("characteristic mismatch");
    TriPoly r(p_);
    for (const auto& [m1, c1] : t_)
        for (const auto& [m2, c2] : o.t_)
            r.add_term({m1.i + m2.i, m1.j + m2.j, m1.k + m2.k}, c1 * c2);
    return r;
}

TriPoly TriPoly::reduced_mod(long p) const {
    if (p_ != 0) throw std::domain_error("reduced_mod expects a characteristic-0 polynomial");
    TriPoly r(p);
    for (const auto& [m, c] : t_) r.add_term(m, c);
    return r;
}

FieldElement TriPoly::eval(const FieldElement& x, const FieldElement& y,
                           const FieldElement& z) const {
    const DescPtr& d = x.descriptor();
    long field_char = d->characteristic();
    if (p_ != 0 && p_ != field_char)
        throw std::invalid_argument("polynomial characteristic does not match the field");
    int maxi = 0, maxj = 0, maxk = 0;
    for (const auto& [m, c] : t_) {
        maxi = std::max(maxi, m.i);
        maxj = std::max(maxj, m.j);
        maxk = std::max(maxk, m.k);
    }
    auto powers = [&](const FieldElement& v, int upto) {
        std::vector<FieldElement> pw{FieldElement::one(d)};
        for (int e = 1; e <= upto; ++e) pw.push_back(pw.back() * v);
        return pw;
    };
    std::vector<FieldElement> px = powers(x, maxi), py = powers(y, maxj), pz = powers(z, maxk);
    FieldElement acc = FieldElement::zero(d);
    for (const auto& [m, c] : t_) {
        FieldElement term = px[static_cast<size_t>(m.i)] * py[static_cast<size_t>(m.j)] *
                            pz[static_cast<size_t>(m.k)];
        acc = acc + term * FieldElement::integer(d, c);
    }
    return acc;
}

std::string TriPoly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const Mono& m = it->first;
        Int c = it->second;
        bool neg = c < 0;
        Int a = neg ? Int(-c) : c;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        std::string mono;
        auto add_var = [&](const char* v, int e) {
            if (e == 0) return;
            if (!mono.empty()) mono += "*";
            mono += v;
            if (e > 1) mono += "^" + std::to_string(e);
        };
        add_var("X", m.i);
        add_var("Y", m.j);
        add_var("Z", m.k);
        if (mono.empty()) {
            os << a.str();
        } else {
            if (a != 1) os << a.str() << "*";
            os << mono;
        }
    }
    return os.str();
}

std::vector<std::tuple<int, int, int, std::string>> TriPoly::quadruples() const {
    std::vector<std::tuple<int, int, int, std::string>> out;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it)
        out.emplace_back(it->first.i, it->first.j, it->first.k, it->second.str());
    return out;
}

}  // namespace paradec
