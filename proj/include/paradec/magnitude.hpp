#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace paradec {

// Exact absolute value in a discretely valued field: either 0 or base^(-exp)
// for an integer exponent.  Kept symbolic so that every comparison and
// product is decided in integer arithmetic.
class Magnitude {
public:
    Magnitude() : zero_(true), base_(0), exp_(0) {}

    static Magnitude zero() { return Magnitude(); }

    static Magnitude power(long base, long long exp) {
        if (base < 2) throw std::invalid_argument("Magnitude base must be >= 2");
        Magnitude m;
        m.zero_ = false;
        m.base_ = base;
        m.exp_ = exp;
        return m;
    }

    static Magnitude one(long base) { return power(base, 0); }

    bool is_zero() const { return zero_; }
    bool is_one() const { return !zero_ && exp_ == 0; }

    long base() const {
        require_nonzero();
        return base_;
    }
    long long exp() const {
        require_nonzero();
        return exp_;
    }

    // Multiplicativity: exponents add, zero absorbs.
    Magnitude operator*(const Magnitude& o) const {
        if (zero_ || o.zero_) return zero();
        check_base(o);
        return power(base_, exp_ + o.exp_);
    }

    Magnitude pow(long long k) const {
        if (zero_) {
            if (k <= 0) throw std::domain_error("0 magnitude to nonpositive power");
            return zero();
        }
        return power(base_, exp_ * k);
    }

    // Total order consistent with the real values base^(-exp); zero is the
    // unique minimum, larger exponents mean smaller magnitudes.
    static int compare(const Magnitude& x, const Magnitude& y) {
        if (x.zero_ && y.zero_) return 0;
        if (x.zero_) return -1;
        if (y.zero_) return 1;
        x.check_base(y);
        if (x.exp_ == y.exp_) return 0;
        return x.exp_ > y.exp_ ? -1 : 1;
    }

    bool operator==(const Magnitude& o) const { return compare(*this, o) == 0; }
    bool operator!=(const Magnitude& o) const { return compare(*this, o) != 0; }
    bool operator<(const Magnitude& o) const { return compare(*this, o) < 0; }
    bool operator<=(const Magnitude& o) const { return compare(*this, o) <= 0; }
    bool operator>(const Magnitude& o) const { return compare(*this, o) > 0; }
    bool operator>=(const Magnitude& o) const { return compare(*this, o) >= 0; }

    static Magnitude max(const Magnitude& x, const Magnitude& y) {
        return compare(x, y) >= 0 ? x : y;
    }
    static Magnitude min(const Magnitude& x, const Magnitude& y) {
        return compare(x, y) <= 0 ? x : y;
    }

    std::string str() const {
        if (zero_) return "0";
        if (exp_ == 0) return "1";
        return std::to_string(base_) + "^" + std::to_string(-exp_);
    }

private:
    void require_nonzero() const {
        if (zero_) throw std::domain_error("zero Magnitude has no base/exponent");
    }
    void check_base(const Magnitude& o) const {
        if (base_ != o.base_)
            throw std::invalid_argument("Magnitude base mismatch: " + std::to_string(base_) +
                                        " vs " + std::to_string(o.base_));
    }

    bool zero_;
    long base_;
    long long exp_;
};

}  // namespace paradec
