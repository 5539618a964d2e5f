#include "paradec/unipoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace paradec {

std::string int_str(const Int& v) { return v.str(); }

std::string rat_str(const Rat& v) {
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

namespace {

// Residue coefficients are stored canonically as integers in [0, p); the
// mod-p kernels below run on plain machine words, which is what keeps the
// long function-field audits fast.
using I64 = long long;

std::vector<I64> to_i64(const std::vector<Rat>& c) {
    std::vector<I64> out(c.size());
    for (size_t k = 0; k < c.size(); ++k) out[k] = numerator(c[k]).convert_to<I64>();
    return out;
}

std::vector<Rat> to_rat(const std::vector<I64>& c) {
    std::vector<Rat> out;
    out.reserve(c.size());
    for (I64 v : c) out.emplace_back(v);
    return out;
}

I64 inv_mod(I64 a, I64 p) {
    I64 t = 0, newt = 1, r = p, newr = a % p;
    if (newr < 0) newr += p;
    while (newr != 0) {
        I64 q = r / newr;
        I64 tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw std::domain_error("non-invertible residue");
    return t < 0 ? t + p : t;
}

void trim_i64(std::vector<I64>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

std::vector<I64> mul_mod(const std::vector<I64>& a, const std::vector<I64>& b, I64 p) {
    if (a.empty() || b.empty()) return {};
    std::vector<I64> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    trim_i64(r);
    return r;
}

// quotient and in-place remainder
std::vector<I64> divmod_mod(std::vector<I64>& r, const std::vector<I64>& d, I64 p) {
    std::vector<I64> q;
    if (r.size() >= d.size()) q.assign(r.size() - d.size() + 1, 0);
    I64 linv = inv_mod(d.back(), p);
    while (r.size() >= d.size()) {
        size_t shift = r.size() - d.size();
        I64 f = (r.back() * linv) % p;
        if (f != 0) {
            q[shift] = f;
            for (size_t k = 0; k < d.size(); ++k) {
                r[shift + k] = (r[shift + k] - f * d[k]) % p;
                if (r[shift + k] < 0) r[shift + k] += p;
            }
        }
        r.pop_back();
        trim_i64(r);
        if (r.size() < d.size()) break;
    }
    return q;
}

}  // namespace

UniPoly UniPoly::constant(long characteristic, const Rat& c) {
    UniPoly r(characteristic);
    Rat v = r.reduce(c);
    if (v != 0) r.c_.push_back(v);
    return r;
}

UniPoly UniPoly::variable(long characteristic) {
    UniPoly r(characteristic);
    r.c_ = {Rat(0), Rat(1)};
    return r;
}

UniPoly UniPoly::from_coeffs(long characteristic, std::vector<Rat> coeffs) {
    UniPoly r(characteristic);
    r.c_ = std::move(coeffs);
    for (auto& v : r.c_) v = r.reduce(v);
    r.trim();
    return r;
}

bool UniPoly::is_one() const { return c_.size() == 1 && c_[0] == 1; }

const Rat& UniPoly::coeff(long k) const {
    static const Rat kZero(0);
    if (k < 0 || k >= static_cast<long>(c_.size())) return kZero;
    return c_[k];
}

const Rat& UniPoly::lead() const {
    if (is_zero()) throw std::domain_error("lead of zero polynomial");
    return c_.back();
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat UniPoly::reduce(const Rat& v) const {
    if (p_ == 0) return v;
    // Residues are stored as integers in [0, p).
    Int num = numerator(v), den = denominator(v);
    Int p(p_);
    Int n = num % p;
    if (n < 0) n += p;
    if (den != 1) {
        Int d = den % p;
        if (d < 0) d += p;
        if (d == 0) throw std::domain_error("denominator divisible by characteristic");
        // modular inverse by extended Euclid
        Int t(0), newt(1), r(p), newr(d);
        while (newr != 0) {
            Int q = r / newr;
            Int tmp = t - q * newt;
            t = newt;
            newt = tmp;
            tmp = r - q * newr;
            r = newr;
            newr = tmp;
        }
        if (r != 1) throw std::domain_error("non-invertible residue");
        if (t < 0) t += p;
        n = (n * t) % p;
    }
    return Rat(n);
}

Rat UniPoly::coeff_inv(const Rat& v) const {
    if (v == 0) throw std::domain_error("inverse of zero coefficient");
    if (p_ == 0) return Rat(1) / v;
    return reduce(Rat(Int(1), numerator(v)));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    if (p_ != o.p_) throw std::invalid_argument("characteristic mismatch");
    UniPoly r(p_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t k = 0; k < r.c_.size(); ++k)
        r.c_[k] = reduce(coeff(static_cast<long>(k)) + o.coeff(static_cast<long>(k)));
    r.trim();
    return r;
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator-() const {
    UniPoly r(p_);
    r.c_ = c_;
    for (auto& v : r.c_) v = reduce(-v);
    return r;
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (p_ != o.p_) throw std::invalid_argument("characteristic mismatch");
    UniPoly r(p_);
    if (is_zero() || o.is_zero()) return r;
    if (p_ > 0) {
        r.c_ = to_rat(mul_mod(to_i64(c_), to_i64(o.c_), p_));
        return r;
    }
    r.c_.assign(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    }
    r.trim();
    return r;
}

UniPoly UniPoly::scaled(const Rat& c) const {
    UniPoly r(p_);
    Rat cc = reduce(c);
    if (cc == 0) return r;
    r.c_ = c_;
    for (auto& v : r.c_) v = reduce(v * cc);
    r.trim();
    return r;
}

UniPoly UniPoly::pow(long long k) const {
    if (k < 0) throw std::invalid_argument("negative polynomial power");
    UniPoly acc = constant(p_, 1);
    UniPoly base = *this;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
    if (p_ != divisor.p_) throw std::invalid_argument("characteristic mismatch");
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    if (p_ > 0) {
        std::vector<I64> rem = to_i64(c_);
        std::vector<I64> quo = divmod_mod(rem, to_i64(divisor.c_), p_);
        UniPoly q(p_), r(p_);
        q.c_ = to_rat(quo);
        r.c_ = to_rat(rem);
        return {q, r};
    }
    UniPoly q(p_), r = *this;
    long dd = divisor.degree();
    Rat linv = coeff_inv(divisor.lead());
    if (r.degree() >= dd) q.c_.assign(r.degree() - dd + 1, Rat(0));
    while (!r.is_zero() && r.degree() >= dd) {
        long shift = r.degree() - dd;
        Rat f = reduce(r.lead() * linv);
        q.c_[shift] = f;
        for (long k = 0; k <= dd; ++k)
            r.c_[shift + k] = reduce(r.c_[shift + k] - f * divisor.c_[k]);
        r.trim();
    }
    q.trim();
    return {q, r};
}

UniPoly UniPoly::exact_div(const UniPoly& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

bool UniPoly::divisible_by(const UniPoly& divisor) const {
    return divmod(divisor).second.is_zero();
}

std::pair<long, UniPoly> UniPoly::order_at(const UniPoly& q) const {
    if (is_zero()) throw std::domain_error("order of the zero polynomial");
    if (q.degree() < 1) throw std::invalid_argument("order at a constant");
    long k = 0;
    UniPoly cur = *this;
    while (true) {
        auto [quo, rem] = cur.divmod(q);
        if (!rem.is_zero()) break;
        cur = quo;
        ++k;
        if (cur.is_constant()) break;
    }
    return {k, cur};
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(coeff_inv(lead()));
}

UniPoly UniPoly::gcd(const UniPoly& a, const UniPoly& b) {
    if (a.p_ != b.p_) throw std::invalid_argument("characteristic mismatch");
    if (a.p_ > 0) {
        std::vector<I64> x = to_i64(a.c_), y = to_i64(b.c_);
        I64 p = a.p_;
        while (!y.empty()) {
            divmod_mod(x, y, p);
            std::swap(x, y);
        }
        if (!x.empty() && x.back() != 1) {
            I64 linv = inv_mod(x.back(), p);
            for (auto& v : x) v = (v * linv) % p;
        }
        UniPoly g(a.p_);
        g.c_ = to_rat(x);
        return g;
    }
    UniPoly x = a.monic(), y = b.monic();
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    while (!y.is_zero()) {
        UniPoly r = x.divmod(y).second;
        x = y;
        y = r.monic();  // keeps rational coefficients small in char 0
    }
    return x.monic();
}

bool UniPoly::irreducible() const {
    long d = degree();
    if (d <= 0) return false;
    if (d == 1) return true;
    if (p_ > 0) {
        // trial division by all monic polynomials of degree <= d/2
        for (long e = 1; 2 * e <= d; ++e) {
            for (const UniPoly& f : residue_polys(p_, e)) {
                UniPoly cand = f + variable(p_).pow(e);  // monic of degree e
                if (divmod(cand).second.is_zero()) return false;
            }
        }
        return true;
    }
    if (d > 3)
        throw std::invalid_argument(
            "irreducibility over the rationals is only decided up to degree 3");
    // degree 2 or 3: reducible over Q iff there is a rational root
    Int lcm(1);
    for (const auto& v : c_) lcm = boost::multiprecision::lcm(lcm, denominator(v));
    std::vector<Int> ic(c_.size());
    for (size_t k = 0; k < c_.size(); ++k)
        ic[k] = numerator(c_[k]) * (lcm / denominator(c_[k]));
    Int a0 = ic.front(), ad = ic.back();
    if (a0 == 0) return false;  // root at 0
    auto divisors = [](Int v) {
        std::vector<Int> out;
        if (v < 0) v = -v;
        for (Int t = 1; t * t <= v; ++t)
            if (v % t == 0) {
                out.push_back(t);
                out.push_back(v / t);
            }
        return out;
    };
    for (const Int& num : divisors(a0))
        for (const Int& den : divisors(ad))
            for (int sign : {1, -1}) {
                Rat cand(sign * num, den);
                if (eval(cand) == 0) return false;
            }
    return true;
}

Rat UniPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    if (p_ > 0) acc = reduce(acc);
    return acc;
}

int UniPoly::cmp(const UniPoly& o) const {
    if (c_.size() != o.c_.size()) return c_.size() < o.c_.size() ? -1 : 1;
    for (size_t k = c_.size(); k-- > 0;) {
        if (c_[k] != o.c_[k]) return c_[k] < o.c_[k] ? -1 : 1;
    }
    return 0;
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long k = degree(); k >= 0; --k) {
        const Rat& v = c_[k];
        if (v == 0) continue;
        Rat a = v;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? "-" : "+");
            if (a < 0) a = -a;
        }
        first = false;
        bool unit = (a == 1);
        if (k == 0) {
            os << rat_str(a);
        } else {
            if (!unit) os << rat_str(a) << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

namespace {

struct PolyParser {
    const std::string& s;
    size_t pos = 0;
    long p;

    explicit PolyParser(const std::string& text, long characteristic)
        : s(text), p(characteristic) {}

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("polynomial parse error at position " + std::to_string(pos) +
                                    ": " + what + " in '" + s + "'");
    }

    UniPoly parse_expr() {
        UniPoly acc = parse_term();
        while (true) {
            skip();
            if (eat('+'))
                acc = acc + parse_term();
            else if (eat('-'))
                acc = acc - parse_term();
            else
                break;
        }
        return acc;
    }

    UniPoly parse_term() {
        UniPoly acc = parse_factor();
        while (true) {
            skip();
            if (eat('*')) {
                acc = acc * parse_factor();
            } else if (pos < s.size() && (s[pos] == '(' || std::isalpha(static_cast<unsigned char>(s[pos])))) {
                acc = acc * parse_factor();  // implicit product like 2X or X(X+1)
            } else {
                break;
            }
        }
        return acc;
    }

    UniPoly parse_factor() {
        UniPoly base = parse_atom();
        skip();
        if (eat('^')) {
            skip();
            bool neg = eat('-');
            if (neg) fail("negative exponent on a polynomial");
            long long e = parse_int();
            base = base.pow(e);
        }
        return base;
    }

    long long parse_int() {
        skip();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected integer");
        return std::stoll(s.substr(start, pos - start));
    }

    UniPoly parse_atom() {
        skip();
        if (pos >= s.size()) fail("unexpected end");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            UniPoly inner = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (c == '-') {
            ++pos;
            return -parse_atom();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            Int num(s.substr(start, pos - start));
            if (eat('/')) {
                size_t dstart = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                if (dstart == pos) fail("expected denominator");
                Int den(s.substr(dstart, pos - dstart));
                return UniPoly::constant(p, Rat(num, den));
            }
            return UniPoly::constant(p, Rat(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            ++pos;
            return UniPoly::variable(p);
        }
        fail("unexpected character");
    }
};

}  // namespace

UniPoly UniPoly::parse(long characteristic, const std::string& text) {
    PolyParser parser(text, characteristic);
    UniPoly out = parser.parse_expr();
    parser.skip();
    if (parser.pos != text.size()) parser.fail("trailing input");
    return out;
}

std::vector<UniPoly> residue_polys(long p, long d) {
    if (p < 2) throw std::invalid_argument("residue_polys needs positive characteristic");
    if (d < 0) throw std::invalid_argument("negative degree bound");
    std::vector<UniPoly> out;
    long long total = 1;
    for (long k = 0; k < d; ++k) total *= p;
    out.reserve(static_cast<size_t>(total));
    for (long long idx = 0; idx < total; ++idx) {
        std::vector<Rat> coeffs(static_cast<size_t>(d), Rat(0));
        long long rest = idx;
        for (long k = 0; k < d; ++k) {
            coeffs[static_cast<size_t>(k)] = Rat(rest % p);
            rest /= p;
        }
        out.push_back(UniPoly::from_coeffs(p, std::move(coeffs)));
    }
    return out;
}

}  // namespace paradec
