#include "paradec/matrix.hpp"

#include <sstream>

namespace paradec {

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
    Vec r;
    r.reserve(a.size());
    for (size_t k = 0; k < a.size(); ++k) r.push_back(a[k] + b[k]);
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
    Vec r;
    r.reserve(a.size());
    for (size_t k = 0; k < a.size(); ++k) r.push_back(a[k] - b[k]);
    return r;
}

Vec zero_vec(const DescPtr& d, int n) {
    Vec r;
    r.reserve(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) r.push_back(FieldElement::zero(d));
    return r;
}

Vec unit_vec(const DescPtr& d, int n, int j) {
    Vec r = zero_vec(d, n);
    r[static_cast<size_t>(j)] = FieldElement::one(d);
    return r;
}

bool vec_is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

bool vec_eq(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) return false;
    for (size_t k = 0; k < a.size(); ++k)
        if (a[k] != b[k]) return false;
    return true;
}

int vec_cmp(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t k = 0; k < a.size(); ++k) {
        int c = a[k].cmp(b[k]);
        if (c != 0) return c;
    }
    return 0;
}

std::string vec_str(const Vec& v) {
    std::string s = "(";
    for (size_t k = 0; k < v.size(); ++k) {
        if (k) s += ", ";
        s += v[k].str();
    }
    return s + ")";
}

Mat::Mat(DescPtr d, int n) : n_(n), desc_(std::move(d)) {
    if (n < 1) throw std::invalid_argument("matrix order must be positive");
    e_.reserve(static_cast<size_t>(n) * n);
    for (int k = 0; k < n * n; ++k) e_.push_back(FieldElement::zero(desc_));
}

Mat Mat::identity(const DescPtr& d, int n) {
    Mat m(d, n);
    for (int i = 0; i < n; ++i) m.set(i, i, FieldElement::one(d));
    return m;
}

Mat Mat::from_entries(const DescPtr& d, int n, std::vector<FieldElement> entries) {
    if (entries.size() != static_cast<size_t>(n) * n)
        throw std::invalid_argument("wrong number of matrix entries");
    Mat m(d, n);
    m.e_ = std::move(entries);
    return m;
}

Mat Mat::from_ints(const DescPtr& d, int n, const std::vector<long>& entries) {
    std::vector<FieldElement> es;
    es.reserve(entries.size());
    for (long v : entries) es.push_back(FieldElement::integer(d, v));
    return from_entries(d, n, std::move(es));
}

Mat Mat::operator*(const Mat& o) const {
    if (n_ != o.n_) throw std::invalid_argument("dimension mismatch");
    Mat r(desc_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            FieldElement acc = at(i, 0) * o.at(0, j);
            for (int k = 1; k < n_; ++k) acc = acc + at(i, k) * o.at(k, j);
            r.set(i, j, std::move(acc));
        }
    return r;
}

Mat Mat::operator+(const Mat& o) const {
    if (n_ != o.n_) throw std::invalid_argument("dimension mismatch");
    Mat r(desc_, n_);
    for (int k = 0; k < n_ * n_; ++k) r.e_[static_cast<size_t>(k)] = e_[static_cast<size_t>(k)] + o.e_[static_cast<size_t>(k)];
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    if (n_ != o.n_) throw std::invalid_argument("dimension mismatch");
    Mat r(desc_, n_);
    for (int k = 0; k < n_ * n_; ++k) r.e_[static_cast<size_t>(k)] = e_[static_cast<size_t>(k)] - o.e_[static_cast<size_t>(k)];
    return r;
}

Vec Mat::apply(const Vec& v) const {
    if (static_cast<int>(v.size()) != n_) throw std::invalid_argument("dimension mismatch");
    Vec r;
    r.reserve(v.size());
    for (int i = 0; i < n_; ++i) {
        FieldElement acc = at(i, 0) * v[0];
        for (int k = 1; k < n_; ++k) acc = acc + at(i, k) * v[static_cast<size_t>(k)];
        r.push_back(std::move(acc));
    }
    return r;
}

bool Mat::operator==(const Mat& o) const {
    if (n_ != o.n_) return false;
    for (int k = 0; k < n_ * n_; ++k)
        if (e_[static_cast<size_t>(k)] != o.e_[static_cast<size_t>(k)]) return false;
    return true;
}

FieldElement Mat::trace() const {
    FieldElement acc = at(0, 0);
    for (int i = 1; i < n_; ++i) acc = acc + at(i, i);
    return acc;
}

FieldElement Mat::det_minor(const std::vector<int>& rows, const std::vector<int>& cols) const {
    if (rows.size() == 1) return at(rows[0], cols[0]);
    FieldElement acc = FieldElement::zero(desc_);
    std::vector<int> subrows(rows.begin() + 1, rows.end());
    for (size_t c = 0; c < cols.size(); ++c) {
        if (at(rows[0], cols[c]).is_zero()) continue;
        std::vector<int> subcols;
        subcols.reserve(cols.size() - 1);
        for (size_t t = 0; t < cols.size(); ++t)
            if (t != c) subcols.push_back(cols[t]);
        FieldElement term = at(rows[0], cols[c]) * det_minor(subrows, subcols);
        acc = (c % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

FieldElement Mat::det() const {
    std::vector<int> idx(static_cast<size_t>(n_));
    for (int k = 0; k < n_; ++k) idx[static_cast<size_t>(k)] = k;
    return det_minor(idx, idx);
}

Mat Mat::adjugate() const {
    Mat adj(desc_, n_);
    if (n_ == 1) {
        adj.set(0, 0, FieldElement::one(desc_));
        return adj;
    }
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            std::vector<int> rows, cols;
            for (int k = 0; k < n_; ++k) {
                if (k != i) rows.push_back(k);
                if (k != j) cols.push_back(k);
            }
            FieldElement c = det_minor(rows, cols);
            if ((i + j) % 2 == 1) c = -c;
            adj.set(j, i, std::move(c));  // transposed cofactor
        }
    return adj;
}

Mat Mat::inverse() const {
    FieldElement d = det();
    if (d.is_zero()) throw std::domain_error("singular matrix");
    Mat adj = adjugate();
    FieldElement dinv = d.inverse();
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) adj.set(i, j, adj.at(i, j) * dinv);
    return adj;
}

Mat Mat::sub_identity() const {
    Mat r = *this;
    for (int i = 0; i < n_; ++i) r.set(i, i, r.at(i, i) - FieldElement::one(desc_));
    return r;
}

bool Mat::is_identity() const { return *this == identity(desc_, n_); }

std::vector<std::string> Mat::entry_strings() const {
    std::vector<std::string> out;
    out.reserve(e_.size());
    for (const auto& v : e_) out.push_back(v.str());
    return out;
}

AffineMap AffineMap::from_linear(Mat m) {
    Vec t = zero_vec(m.descriptor(), m.n());
    return {std::move(m), std::move(t)};
}

AffineMap AffineMap::make(Mat m, Vec t) {
    if (static_cast<int>(t.size()) != m.n()) throw std::invalid_argument("dimension mismatch");
    return {std::move(m), std::move(t)};
}

AffineMap AffineMap::identity(const DescPtr& d, int n) {
    return from_linear(Mat::identity(d, n));
}

AffineMap AffineMap::translation_by(const DescPtr& d, const Vec& t) {
    return {Mat::identity(d, static_cast<int>(t.size())), t};
}

Vec AffineMap::apply(const Vec& v) const { return vec_add(linear.apply(v), translation); }

AffineMap AffineMap::compose(const AffineMap& inner) const {
    // (this o inner)(x) = L_this(L_inner x + t_inner) + t_this
    return {linear * inner.linear, vec_add(linear.apply(inner.translation), translation)};
}

AffineMap AffineMap::inverse() const {
    Mat li = linear.inverse();
    Vec t = li.apply(translation);
    for (auto& v : t) v = -v;
    return {std::move(li), std::move(t)};
}

bool AffineMap::operator==(const AffineMap& o) const {
    return linear == o.linear && vec_eq(translation, o.translation);
}

Mat rho(const Word& w, const Mat& A, const Mat& B) {
    Mat acc = Mat::identity(A.descriptor(), A.n());
    if (w.empty()) return acc;
    Mat Ainv = A.inverse(), Binv = B.inverse();
    const Mat* table[4] = {&A, &Ainv, &B, &Binv};
    for (Letter l : w.letters()) acc = acc * (*table[l]);
    return acc;
}

AffineMap rho_affine(const Word& w, const AffineMap& A, const AffineMap& B) {
    AffineMap acc = AffineMap::identity(A.descriptor(), A.dim());
    if (w.empty()) return acc;
    AffineMap Ainv = A.inverse(), Binv = B.inverse();
    const AffineMap* table[4] = {&A, &Ainv, &B, &Binv};
    for (Letter l : w.letters()) acc = acc.compose(*table[l]);
    return acc;
}

}  // namespace paradec
