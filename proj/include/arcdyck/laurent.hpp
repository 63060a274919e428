#pragma once

#include <gmpxx.h>
#include <map>
#include <ostream>
#include <string>

namespace arcdyck {

// Sparse Laurent polynomial in q with exact integer coefficients.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(long c) { if (c != 0) coeffs_[0] = c; }

    static LaurentPoly q_pow(long e, mpz_class c = 1) {
        LaurentPoly p;
        if (c != 0) p.coeffs_[e] = std::move(c);
        return p;
    }

    const std::map<long, mpz_class>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    mpz_class coeff(long e) const {
        auto it = coeffs_.find(e);
        return it == coeffs_.end() ? mpz_class(0) : it->second;
    }

    mpz_class eval_at_one() const {
        mpz_class s = 0;
        for (auto& [e, c] : coeffs_) s += c;
        return s;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (auto& [e, c] : o.coeffs_) {
            auto& t = coeffs_[e];
            t += c;
            if (t == 0) coeffs_.erase(e);
        }
        return *this;
    }
    LaurentPoly operator+(const LaurentPoly& o) const { LaurentPoly r = *this; r += o; return r; }

    LaurentPoly operator*(const LaurentPoly& o) const {
        LaurentPoly r;
        for (auto& [e1, c1] : coeffs_)
            for (auto& [e2, c2] : o.coeffs_) {
                auto& t = r.coeffs_[e1 + e2];
                t += c1 * c2;
                if (t == 0) r.coeffs_.erase(e1 + e2);
            }
        return r;
    }

    bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // Text form: "0", "1", "q^8", "3 + 2q^2", "q^-1 - q".
    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::string s;
        bool first = true;
        for (auto& [e, c] : coeffs_) {
            mpz_class a = c;
            if (first) {
                if (a < 0) { s += "-"; a = -a; }
            } else {
                s += (a < 0) ? " - " : " + ";
                if (a < 0) a = -a;
            }
            std::string mono;
            if (e == 0) mono = a.get_str();
            else {
                if (a != 1) mono = a.get_str();
                mono += "q";
                if (e != 1) mono += "^" + std::to_string(e);
            }
            s += mono;
            first = false;
        }
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

private:
    std::map<long, mpz_class> coeffs_; // exponent -> nonzero coefficient
};

} // namespace arcdyck
