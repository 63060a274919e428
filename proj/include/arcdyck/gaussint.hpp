#pragma once

#include <gmpxx.h>
#include <ostream>
#include <string>

namespace arcdyck {

// Exact Gaussian integer a + bi with arbitrary-precision components.
class GaussInt {
public:
    GaussInt() : re_(0), im_(0) {}
    GaussInt(long r) : re_(r), im_(0) {}
    GaussInt(mpz_class r, mpz_class i) : re_(std::move(r)), im_(std::move(i)) {}

    static GaussInt i() { return GaussInt(0, 1); }

    // i^k for any integer k (i^-1 = -i).
    static GaussInt i_pow(long k) {
        switch (((k % 4) + 4) % 4) {
            case 0: return GaussInt(1);
            case 1: return GaussInt(0, 1);
            case 2: return GaussInt(-1);
            default: return GaussInt(0, -1);
        }
    }

    const mpz_class& re() const { return re_; }
    const mpz_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }
    bool is_unit() const {
        return (re_ == 0 && (im_ == 1 || im_ == -1)) ||
               (im_ == 0 && (re_ == 1 || re_ == -1));
    }

    GaussInt operator-() const { return GaussInt(-re_, -im_); }
    GaussInt operator+(const GaussInt& o) const { return GaussInt(re_ + o.re_, im_ + o.im_); }
    GaussInt operator-(const GaussInt& o) const { return GaussInt(re_ - o.re_, im_ - o.im_); }
    GaussInt operator*(const GaussInt& o) const {
        return GaussInt(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
    }
    GaussInt& operator+=(const GaussInt& o) { re_ += o.re_; im_ += o.im_; return *this; }
    GaussInt& operator-=(const GaussInt& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    GaussInt& operator*=(const GaussInt& o) { *this = *this * o; return *this; }

    GaussInt conj() const { return GaussInt(re_, -im_); }

    bool operator==(const GaussInt& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const GaussInt& o) const { return !(*this == o); }
    bool operator<(const GaussInt& o) const {
        if (re_ != o.re_) return re_ < o.re_;
        return im_ < o.im_;
    }

    std::string str() const {
        if (im_ == 0) return re_.get_str();
        if (re_ == 0) {
            if (im_ == 1) return "i";
            if (im_ == -1) return "-i";
            return im_.get_str() + "i";
        }
        std::string s = re_.get_str();
        if (im_ > 0) s += "+";
        if (im_ == 1) s += "i";
        else if (im_ == -1) s += "-i";
        else s += im_.get_str() + "i";
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const GaussInt& z) { return os << z.str(); }

private:
    mpz_class re_, im_;
};

} // namespace arcdyck
