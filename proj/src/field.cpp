#include "paradec/field.hpp"

#include <sstream>

namespace paradec {

bool FieldDescriptor::operator==(const FieldDescriptor& o) const {
    return kind == o.kind && p == o.p && mag_base == o.mag_base && place == o.place;
}

std::string FieldDescriptor::str() const {
    switch (kind) {
        case FieldKind::RationalsPadic:
            return "Q|" + std::to_string(p);
        case FieldKind::RationalFunctions: {
            std::string base = p == 0 ? "Q(s)" : "F" + std::to_string(p) + "(s)";
            return base + "@" + place.str();
        }
        case FieldKind::Trivial:
            return p == 0 ? "Q|trivial" : "F" + std::to_string(p) + "(s)|trivial";
    }
    return "?";
}

DescPtr make_padic_descriptor(long p) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    auto d = std::make_shared<FieldDescriptor>();
    d->kind = FieldKind::RationalsPadic;
    d->p = p;
    d->mag_base = p;
    return d;
}

DescPtr make_ratfunc_descriptor(long characteristic, const UniPoly& place, long mag_base) {
    if (characteristic != 0 && !is_prime(characteristic))
        throw std::invalid_argument("characteristic must be 0 or prime");
    if (place.characteristic() != characteristic)
        throw std::invalid_argument("place polynomial has the wrong characteristic");
    if (place.degree() < 1) throw std::invalid_argument("place must be nonconstant");
    auto d = std::make_shared<FieldDescriptor>();
    d->kind = FieldKind::RationalFunctions;
    d->p = characteristic;
    d->place = place;
    d->mag_base = mag_base;
    return d;
}

DescPtr make_trivial_descriptor(long characteristic) {
    if (characteristic != 0 && !is_prime(characteristic))
        throw std::invalid_argument("characteristic must be 0 or prime");
    auto d = std::make_shared<FieldDescriptor>();
    d->kind = FieldKind::Trivial;
    d->p = characteristic;
    d->mag_base = 2;
    return d;
}

FieldElement::FieldElement(DescPtr d, Rat v) : desc_(std::move(d)), rat_(std::move(v)) {}

FieldElement::FieldElement(DescPtr d, UniPoly num, UniPoly den)
    : desc_(std::move(d)), num_(std::move(num)), den_(std::move(den)) {
    canonicalize();
}

FieldElement FieldElement::zero(const DescPtr& d) { return integer(d, 0L); }
FieldElement FieldElement::one(const DescPtr& d) { return integer(d, 1L); }

FieldElement FieldElement::integer(const DescPtr& d, long v) { return integer(d, Int(v)); }

FieldElement FieldElement::integer(const DescPtr& d, const Int& v) {
    if (!d) throw std::invalid_argument("null field descriptor");
    if (d->polynomial_elements()) {
        long p = d->characteristic();
        return FieldElement(d, UniPoly::constant(p, Rat(v)), UniPoly::constant(p, 1));
    }
    return FieldElement(d, Rat(v));
}

FieldElement FieldElement::rational(const DescPtr& d, const Rat& v) {
    if (!d) throw std::invalid_argument("null field descriptor");
    if (d->polynomial_elements()) {
        long p = d->characteristic();
        return FieldElement(d, UniPoly::constant(p, Rat(numerator(v))),
                            UniPoly::constant(p, Rat(denominator(v))));
    }
    return FieldElement(d, v);
}

FieldElement FieldElement::rat_func(const DescPtr& d, UniPoly num, UniPoly den) {
    if (!d || !d->polynomial_elements())
        throw std::invalid_argument("rational-function element in a non-function field");
    return FieldElement(d, std::move(num), std::move(den));
}

void FieldElement::check_same(const FieldElement& o) const {
    if (desc_ == o.desc_) return;
    if (!desc_ || !o.desc_ || !(*desc_ == *o.desc_))
        throw std::invalid_argument("field descriptor mismatch");
}

void FieldElement::canonicalize() {
    if (!desc_->polynomial_elements()) return;
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    if (num_.is_zero()) {
        den_ = UniPoly::constant(den_.characteristic(), 1);
        return;
    }
    // Denominators that are a scalar multiple of a power of the place are the
    // common case in valuation arithmetic; divide the place out directly and
    // skip the general gcd (whose remainder chain is the slow part on long
    // numerators).
    bool reduced = false;
    if (desc_->kind == FieldKind::RationalFunctions && !den_.is_constant()) {
        auto [dk, drest] = den_.order_at(desc_->place);
        if (drest.is_constant()) {
            auto [nk, nrest] = num_.order_at(desc_->place);
            long cancel = std::min(nk, dk);
            if (cancel > 0) {
                UniPoly pw = desc_->place.pow(cancel);
                num_ = num_.exact_div(pw);
                den_ = den_.exact_div(pw);
            }
            reduced = true;
        }
    }
    if (!reduced && !den_.is_constant()) {
        UniPoly g = UniPoly::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_.exact_div(g);
            den_ = den_.exact_div(g);
        }
    }
    Rat lead = den_.lead();
    if (lead != 1) {
        Rat inv = Rat(1) / lead;  // reduce() turns this into the mod-p inverse when needed
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

bool FieldElement::is_zero() const {
    return desc_->polynomial_elements() ? num_.is_zero() : rat_ == 0;
}

bool FieldElement::is_one() const {
    return desc_->polynomial_elements() ? (num_.is_one() && den_.is_one()) : rat_ == 1;
}

bool FieldElement::is_integer_image() const {
    if (desc_->polynomial_elements()) return num_.is_constant() && den_.is_one();
    return denominator(rat_) == 1;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same(o);
    if (desc_->polynomial_elements())
        return FieldElement(desc_, num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    return FieldElement(desc_, rat_ + o.rat_);
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same(o);
    if (desc_->polynomial_elements())
        return FieldElement(desc_, num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    return FieldElement(desc_, rat_ - o.rat_);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same(o);
    if (desc_->polynomial_elements()) return FieldElement(desc_, num_ * o.num_, den_ * o.den_);
    return FieldElement(desc_, rat_ * o.rat_);
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    check_same(o);
    if (o.is_zero()) throw std::domain_error("division by zero");
    if (desc_->polynomial_elements()) return FieldElement(desc_, num_ * o.den_, den_ * o.num_);
    return FieldElement(desc_, rat_ / o.rat_);
}

FieldElement FieldElement::operator-() const {
    if (desc_->polynomial_elements()) return FieldElement(desc_, -num_, den_);
    return FieldElement(desc_, -rat_);
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    if (desc_->polynomial_elements()) return FieldElement(desc_, den_, num_);
    return FieldElement(desc_, Rat(1) / rat_);
}

FieldElement FieldElement::pow(long long k) const {
    if (k < 0) return inverse().pow(-k);
    FieldElement acc = one(desc_);
    FieldElement base = *this;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

bool FieldElement::operator==(const FieldElement& o) const {
    check_same(o);
    if (desc_->polynomial_elements()) return num_ == o.num_ && den_ == o.den_;
    return rat_ == o.rat_;
}

int FieldElement::cmp(const FieldElement& o) const {
    check_same(o);
    if (desc_->polynomial_elements()) {
        int c = num_.cmp(o.num_);
        if (c != 0) return c;
        return den_.cmp(o.den_);
    }
    if (rat_ == o.rat_) return 0;
    return rat_ < o.rat_ ? -1 : 1;
}

namespace {

long long padic_order(Int v, long p) {
    long long k = 0;
    while (v % p == 0) {
        v /= p;
        ++k;
    }
    return k;
}

}  // namespace

Magnitude FieldElement::magnitude() const {
    if (is_zero()) return Magnitude::zero();
    switch (desc_->kind) {
        case FieldKind::RationalsPadic: {
            long long v = padic_order(numerator(rat_), desc_->p) -
                          padic_order(denominator(rat_), desc_->p);
            return Magnitude::power(desc_->mag_base, v);
        }
        case FieldKind::RationalFunctions: {
            long long v = num_.order_at(desc_->place).first - den_.order_at(desc_->place).first;
            return Magnitude::power(desc_->mag_base, v);
        }
        case FieldKind::Trivial:
            return Magnitude::one(desc_->mag_base);
    }
    throw std::logic_error("unreachable");
}

const Rat& FieldElement::rat() const {
    if (desc_->polynomial_elements()) throw std::domain_error("element is not a rational");
    return rat_;
}

const UniPoly& FieldElement::num() const {
    if (!desc_->polynomial_elements()) throw std::domain_error("element is not a rational function");
    return num_;
}

const UniPoly& FieldElement::den() const {
    if (!desc_->polynomial_elements()) throw std::domain_error("element is not a rational function");
    return den_;
}

std::string FieldElement::str() const {
    if (!desc_->polynomial_elements()) return rat_str(rat_);
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

namespace {

// Expression parser over a field: +, -, *, /, ^ with integer (possibly
// negative) exponents, parentheses, integer literals, and the variable for
// function fields.
struct ElemParser {
    const std::string& s;
    size_t pos = 0;
    const DescPtr& desc;

    ElemParser(const std::string& text, const DescPtr& d) : s(text), desc(d) {}

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
        throw std::invalid_argument("field element parse error at position " +
                                    std::to_string(pos) + ": " + what + " in '" + s + "'");
    }

    FieldElement parse_expr() {
        FieldElement acc = parse_term();
        while (true) {
            if (eat('+'))
                acc = acc + parse_term();
            else if (eat('-'))
                acc = acc - parse_term();
            else
                break;
        }
        return acc;
    }

    FieldElement parse_term() {
        FieldElement acc = parse_factor();
        while (true) {
            skip();
            if (eat('*'))
                acc = acc * parse_factor();
            else if (eat('/'))
                acc = acc / parse_factor();
            else if (pos < s.size() &&
                     (s[pos] == '(' || std::isalpha(static_cast<unsigned char>(s[pos]))))
                acc = acc * parse_factor();
            else
                break;
        }
        return acc;
    }

    FieldElement parse_factor() {
        FieldElement base = parse_atom();
        if (eat('^')) {
            skip();
            bool neg = eat('-');
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (start == pos) fail("expected exponent");
            long long e = std::stoll(s.substr(start, pos - start));
            base = base.pow(neg ? -e : e);
        }
        return base;
    }

    FieldElement parse_atom() {
        skip();
        if (pos >= s.size()) fail("unexpected end");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            FieldElement inner = parse_expr();
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
            return FieldElement::integer(desc, Int(s.substr(start, pos - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            if (!desc->polynomial_elements()) fail("variable in a rational field");
            ++pos;
            long p = desc->characteristic();
            return FieldElement::rat_func(desc, UniPoly::variable(p), UniPoly::constant(p, 1));
        }
        fail("unexpected character");
    }
};

}  // namespace

FieldElement FieldElement::parse(const DescPtr& d, const std::string& text) {
    ElemParser parser(text, d);
    FieldElement out = parser.parse_expr();
    parser.skip();
    if (parser.pos != text.size()) parser.fail("trailing input");
    return out;
}

std::vector<FieldElement> ValuationRing::residue_digits() const {
    if (!residue_cardinality) throw std::domain_error("infinite residue field");
    std::vector<FieldElement> out;
    if (desc->kind == FieldKind::RationalsPadic) {
        for (long v = 0; v < desc->p; ++v) out.push_back(FieldElement::integer(desc, v));
        return out;
    }
    long d = desc->place.degree();
    for (const UniPoly& f : residue_polys(desc->p, d))
        out.push_back(FieldElement::rat_func(desc, f, UniPoly::constant(desc->p, 1)));
    return out;
}

FieldElement ValuationRing::uniformizer_pow(long long k) const {
    if (!uniformizer) throw std::domain_error("trivially valued field has no uniformizer");
    return uniformizer->pow(k);
}

ValuationRing make_field(const DescPtr& d) {
    if (!d) throw std::invalid_argument("null field descriptor");
    ValuationRing ring;
    ring.desc = d;
    switch (d->kind) {
        case FieldKind::RationalsPadic: {
            if (!is_prime(d->p)) throw std::invalid_argument(std::to_string(d->p) + " is not prime");
            ring.uniformizer = FieldElement::integer(d, d->p);
            ring.residue_cardinality = Int(d->p);
            break;
        }
        case FieldKind::RationalFunctions: {
            if (d->p != 0 && !is_prime(d->p))
                throw std::invalid_argument("characteristic must be 0 or prime");
            if (!d->place.irreducible())
                throw std::invalid_argument("place polynomial is reducible: " + d->place.str());
            ring.uniformizer =
                FieldElement::rat_func(d, d->place, UniPoly::constant(d->p, 1));
            if (d->p > 0) {
                Int card = 1;
                for (long k = 0; k < d->place.degree(); ++k) card *= d->p;
                ring.residue_cardinality = card;
            }
            break;
        }
        case FieldKind::Trivial: {
            if (d->p != 0 && !is_prime(d->p))
                throw std::invalid_argument("characteristic must be 0 or prime");
            break;
        }
    }
    return ring;
}

}  // namespace paradec
