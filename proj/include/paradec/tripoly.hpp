#pragma once

#include "paradec/field.hpp"

#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace paradec {

// Polynomial in X, Y, Z over the prime ring: arbitrary-precision integers in
// characteristic 0, residues in [0, p) otherwise.  Terms are kept in
// graded-lexicographic order with X > Y > Z.
class TriPoly {
public:
    struct Mono {
        int i = 0, j = 0, k = 0;  // X^i Y^j Z^k
        int degree() const { return i + j + k; }
        bool operator==(const Mono& o) const { return i == o.i && j == o.j && k == o.k; }
    };
    // graded-lex, smallest first (iteration in reverse gives the display order)
    struct MonoLess {
        bool operator()(const Mono& x, const Mono& y) const {
            if (x.degree() != y.degree()) return x.degree() < y.degree();
            return std::tie(x.i, x.j, x.k) < std::tie(y.i, y.j, y.k);
        }
    };

    explicit TriPoly(long characteristic = 0) : p_(characteristic) {}
    static TriPoly constant(long characteristic, const Int& c);
    static TriPoly X(long characteristic);
    static TriPoly Y(long characteristic);
    static TriPoly Z(long characteristic);

    long characteristic() const { return p_; }
    bool is_zero() const { return t_.empty(); }
    size_t term_count() const { return t_.size(); }
    const std::map<Mono, Int, MonoLess>& terms() const { return t_; }

    void add_term(const Mono& m, const Int& c);

    TriPoly operator+(const TriPoly& o) const;
    TriPoly operator-(const TriPoly& o) const;
    TriPoly operator-() const;
    TriPoly operator*(const TriPoly& o) const;
    bool operator==(const TriPoly& o) const { return p_ == o.p_ && t_ == o.t_; }
    bool operator!=(const TriPoly& o) const { return !(*this == o); }

    TriPoly reduced_mod(long p) const;

    // Exact evaluation; a characteristic-0 polynomial evaluates in any field
    // (integer coefficients map through the prime ring), a characteristic-p
    // one only in fields of the same characteristic.
    FieldElement eval(const FieldElement& x, const FieldElement& y,
                      const FieldElement& z) const;

    // Canonical rendering, e.g. "-X*Y*Z + X^2 + Y^2 + Z^2 - 2".
    std::string str() const;
    // Sorted (i, j, k, coefficient) quadruples, highest monomial first.
    std::vector<std::tuple<int, int, int, std::string>> quadruples() const;

private:
    Int reduce(const Int& c) const;

    long p_;
    std::map<Mono, Int, MonoLess> t_;
};

}  // namespace paradec
