#pragma once

#include "paradec/field.hpp"
#include "paradec/words.hpp"

#include <vector>

namespace paradec {

using Vec = std::vector<FieldElement>;

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec zero_vec(const DescPtr& d, int n);
Vec unit_vec(const DescPtr& d, int n, int j);
bool vec_is_zero(const Vec& v);
bool vec_eq(const Vec& a, const Vec& b);
int vec_cmp(const Vec& a, const Vec& b);
std::string vec_str(const Vec& v);

// Exact square matrix over a valued field.
class Mat {
public:
    Mat(DescPtr d, int n);  // zero matrix
    static Mat identity(const DescPtr& d, int n);
    static Mat from_entries(const DescPtr& d, int n, std::vector<FieldElement> entries);
    static Mat from_ints(const DescPtr& d, int n, const std::vector<long>& entries);

    int n() const { return n_; }
    const DescPtr& descriptor() const { return desc_; }
    const FieldElement& at(int i, int j) const { return e_[static_cast<size_t>(i * n_ + j)]; }
    void set(int i, int j, FieldElement v) { e_[static_cast<size_t>(i * n_ + j)] = std::move(v); }

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Vec apply(const Vec& v) const;
    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }

    FieldElement trace() const;
    FieldElement det() const;       // cofactor expansion
    Mat adjugate() const;
    Mat inverse() const;            // adjugate / det; throws on singular input
    Mat sub_identity() const;       // M - I
    bool is_identity() const;

    std::vector<std::string> entry_strings() const;  // row-major

private:
    FieldElement det_minor(const std::vector<int>& rows, const std::vector<int>& cols) const;

    int n_;
    DescPtr desc_;
    std::vector<FieldElement> e_;
};

// Affine map x -> L(x) + tau.
struct AffineMap {
    Mat linear;
    Vec translation;

    static AffineMap from_linear(Mat m);
    static AffineMap make(Mat m, Vec t);
    static AffineMap identity(const DescPtr& d, int n);
    static AffineMap translation_by(const DescPtr& d, const Vec& t);

    int dim() const { return linear.n(); }
    const DescPtr& descriptor() const { return linear.descriptor(); }
    Vec apply(const Vec& v) const;
    AffineMap compose(const AffineMap& inner) const;  // this after inner
    AffineMap inverse() const;
    bool operator==(const AffineMap& o) const;
    bool is_linear() const { return vec_is_zero(translation); }
};

// The homomorphism F2 -> SL(2,.) determined by a -> A, b -> B, taken along a
// reduced word.
Mat rho(const Word& w, const Mat& A, const Mat& B);
AffineMap rho_affine(const Word& w, const AffineMap& A, const AffineMap& B);

}  // namespace paradec
