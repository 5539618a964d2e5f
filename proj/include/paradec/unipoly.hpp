#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace paradec {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

std::string int_str(const Int& v);
std::string rat_str(const Rat& v);

// Dense univariate polynomial over the prime field of characteristic `p`:
// exact rationals when p = 0, residues in [0, p) when p is prime.
class UniPoly {
public:
    explicit UniPoly(long characteristic = 0) : p_(characteristic) {}

    static UniPoly constant(long characteristic, const Rat& c);
    static UniPoly variable(long characteristic);  // the monomial X
    // coeffs[k] is the coefficient of X^k
    static UniPoly from_coeffs(long characteristic, std::vector<Rat> coeffs);

    long characteristic() const { return p_; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const;
    long degree() const { return is_zero() ? -1 : static_cast<long>(c_.size()) - 1; }
    const Rat& coeff(long k) const;
    const Rat& lead() const;
    const std::vector<Rat>& coeffs() const { return c_; }

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator-() const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly scaled(const Rat& c) const;
    UniPoly pow(long long k) const;
    bool operator==(const UniPoly& o) const { return p_ == o.p_ && c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    // Euclidean division; divisor must be nonzero.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;
    // Exact division; throws when the remainder is nonzero.
    UniPoly exact_div(const UniPoly& divisor) const;
    bool divisible_by(const UniPoly& divisor) const;
    // Multiplicity of `q` in *this together with the cofactor *this / q^k.
    std::pair<long, UniPoly> order_at(const UniPoly& q) const;

    UniPoly monic() const;
    static UniPoly gcd(const UniPoly& a, const UniPoly& b);  // monic gcd

    // Irreducibility over the prime field.  Exhaustive for finite
    // characteristic; rational-root based for degrees <= 3 over the rationals.
    bool irreducible() const;

    Rat eval(const Rat& x) const;

    int cmp(const UniPoly& o) const;

    std::string str(const std::string& var = "s") const;
    // Accepts +, -, *, ^, parentheses, integer or a/b literals and the
    // variable (any of the names in `vars`).
    static UniPoly parse(long characteristic, const std::string& text);

private:
    void trim();
    Rat reduce(const Rat& v) const;
    Rat coeff_inv(const Rat& v) const;

    long p_;
    std::vector<Rat> c_;
};

// All p^d residue representatives of degree < d over F_p, in lexicographic
// digit order; used for coset enumeration in covering constructions.
std::vector<UniPoly> residue_polys(long p, long d);

bool is_prime(long p);

}  // namespace paradec
