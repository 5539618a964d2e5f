#pragma once

#include "paradec/magnitude.hpp"
#include "paradec/unipoly.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace paradec {

enum class FieldKind {
    RationalsPadic,     // Q with the p-adic valuation
    RationalFunctions,  // K0(s) with the valuation at an irreducible place
    Trivial,            // Q or F_p(s) with the trivial valuation
};

struct FieldDescriptor {
    FieldKind kind;
    long p = 0;       // prime for RationalsPadic; characteristic otherwise (0 allowed)
    UniPoly place;    // RationalFunctions only
    long mag_base = 2;

    bool polynomial_elements() const {
        return kind == FieldKind::RationalFunctions || (kind == FieldKind::Trivial && p > 0);
    }
    long characteristic() const { return kind == FieldKind::RationalsPadic ? 0 : p; }
    bool trivially_valued() const { return kind == FieldKind::Trivial; }

    bool operator==(const FieldDescriptor& o) const;
    std::string str() const;
};

using DescPtr = std::shared_ptr<const FieldDescriptor>;

DescPtr make_padic_descriptor(long p);
DescPtr make_ratfunc_descriptor(long characteristic, const UniPoly& place, long mag_base = 2);
DescPtr make_trivial_descriptor(long characteristic);

// Exact element of the configured field: a reduced rational, or a reduced
// rational function over the prime field with monic denominator.
class FieldElement {
public:
    static FieldElement zero(const DescPtr& d);
    static FieldElement one(const DescPtr& d);
    static FieldElement integer(const DescPtr& d, long v);
    static FieldElement integer(const DescPtr& d, const Int& v);
    static FieldElement rational(const DescPtr& d, const Rat& v);
    static FieldElement rat_func(const DescPtr& d, UniPoly num, UniPoly den);
    static FieldElement parse(const DescPtr& d, const std::string& text);

    const DescPtr& descriptor() const { return desc_; }
    bool is_zero() const;
    bool is_one() const;
    bool is_integer_image() const;  // lies in the image of Z (resp. F_p)

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inverse() const;
    FieldElement pow(long long k) const;

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }
    int cmp(const FieldElement& o) const;  // arbitrary total order, for containers
    bool operator<(const FieldElement& o) const { return cmp(o) < 0; }

    Magnitude magnitude() const;

    const Rat& rat() const;
    const UniPoly& num() const;
    const UniPoly& den() const;

    std::string str() const;

private:
    FieldElement(DescPtr d, Rat v);
    FieldElement(DescPtr d, UniPoly num, UniPoly den);
    void canonicalize();
    void check_same(const FieldElement& o) const;

    DescPtr desc_;
    Rat rat_;
    UniPoly num_{0}, den_{0};
};

// Uniformizer and residue data of the valuation ring D = {|x| <= 1}.
struct ValuationRing {
    DescPtr desc;
    std::optional<FieldElement> uniformizer;  // absent for the trivial valuation
    std::optional<Int> residue_cardinality;   // absent when the residue field is infinite

    // Coset representatives of D modulo the maximal ideal (finite residue only).
    std::vector<FieldElement> residue_digits() const;
    FieldElement uniformizer_pow(long long k) const;
};

// Validates the descriptor (primality, irreducibility of the place) and
// returns the ring data.
ValuationRing make_field(const DescPtr& d);

}  // namespace paradec
