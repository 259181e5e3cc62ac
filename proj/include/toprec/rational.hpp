#pragma once
// Arbitrary-precision rational numbers, a thin value-type wrapper around
// GMP's mpq_t. Always kept canonical (gcd(num, den) = 1, den > 0).

#include <gmp.h>

#include <cstdlib>
#include <ostream>
#include <string>
#include <utility>

#include "toprec/errors.hpp"

namespace toprec {

class BigRational {
  public:
    BigRational() { mpq_init(v_); }

    BigRational(long n) {
        mpq_init(v_);
        mpq_set_si(v_, n, 1);
    }

    BigRational(long num, long den) {
        if (den == 0) throw arithmetic_error("BigRational: zero denominator");
        // mpq_set_si takes the denominator unsigned, so fold the sign into
        // the numerator first.
        if (den < 0) {
            num = -num;
            den = -den;
        }
        mpq_init(v_);
        mpq_set_si(v_, num, static_cast<unsigned long>(den));
        mpq_canonicalize(v_);
    }

    // Accepts "123", "-4/7" and similar base-10 strings.
    explicit BigRational(const std::string& s) {
        mpq_init(v_);
        if (mpq_set_str(v_, s.c_str(), 10) != 0 || mpz_sgn(mpq_denref(v_)) == 0) {
            mpq_clear(v_);
            throw arithmetic_error("BigRational: cannot parse '" + s + "'");
        }
        mpq_canonicalize(v_);
    }

    static BigRational from_parts(const std::string& num, const std::string& den) {
        BigRational r(num + "/" + den);
        return r;
    }

    BigRational(const BigRational& o) {
        mpq_init(v_);
        mpq_set(v_, o.v_);
    }

    BigRational(BigRational&& o) noexcept {
        mpq_init(v_);
        mpq_swap(v_, o.v_);
    }

    BigRational& operator=(const BigRational& o) {
        if (this != &o) mpq_set(v_, o.v_);
        return *this;
    }

    BigRational& operator=(BigRational&& o) noexcept {
        if (this != &o) mpq_swap(v_, o.v_);
        return *this;
    }

    ~BigRational() { mpq_clear(v_); }

    bool is_zero() const { return mpq_sgn(v_) == 0; }
    bool is_one() const { return mpq_cmp_si(v_, 1, 1) == 0; }
    bool is_integer() const { return mpz_cmp_si(mpq_denref(v_), 1) == 0; }
    int sign() const { return mpq_sgn(v_); }

    BigRational& operator+=(const BigRational& o) {
        mpq_add(v_, v_, o.v_);
        return *this;
    }
    BigRational& operator-=(const BigRational& o) {
        mpq_sub(v_, v_, o.v_);
        return *this;
    }
    BigRational& operator*=(const BigRational& o) {
        mpq_mul(v_, v_, o.v_);
        return *this;
    }
    BigRational& operator/=(const BigRational& o) {
        if (o.is_zero()) throw arithmetic_error("BigRational: division by zero");
        mpq_div(v_, v_, o.v_);
        return *this;
    }

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

    BigRational operator-() const {
        BigRational r(*this);
        mpq_neg(r.v_, r.v_);
        return r;
    }

    friend bool operator==(const BigRational& a, const BigRational& b) {
        return mpq_equal(a.v_, b.v_) != 0;
    }
    friend bool operator!=(const BigRational& a, const BigRational& b) { return !(a == b); }
    friend bool operator<(const BigRational& a, const BigRational& b) {
        return mpq_cmp(a.v_, b.v_) < 0;
    }
    friend bool operator>(const BigRational& a, const BigRational& b) { return b < a; }
    friend bool operator<=(const BigRational& a, const BigRational& b) { return !(b < a); }
    friend bool operator>=(const BigRational& a, const BigRational& b) { return !(a < b); }

    // Integer power; negative exponents invert (and reject zero base).
    BigRational pow(long e) const {
        if (e == 0) return BigRational(1);
        if (is_zero()) {
            if (e < 0) throw arithmetic_error("BigRational: 0 to a negative power");
            return BigRational(0);
        }
        BigRational base(*this);
        unsigned long ue;
        if (e < 0) {
            base = BigRational(1) / base;
            ue = static_cast<unsigned long>(-(e + 1)) + 1ul;
        } else {
            ue = static_cast<unsigned long>(e);
        }
        BigRational r;
        mpz_pow_ui(mpq_numref(r.v_), mpq_numref(base.v_), ue);
        mpz_pow_ui(mpq_denref(r.v_), mpq_denref(base.v_), ue);
        // num/den coprime stays coprime under powers; no canonicalize needed.
        return r;
    }

    std::string num_str() const { return mpz_str(mpq_numref(v_)); }
    std::string den_str() const { return mpz_str(mpq_denref(v_)); }

    std::string str() const {
        if (is_integer()) return num_str();
        return num_str() + "/" + den_str();
    }

    friend std::ostream& operator<<(std::ostream& os, const BigRational& r) {
        return os << r.str();
    }

  private:
    static std::string mpz_str(mpz_srcptr z) {
        char* raw = mpz_get_str(nullptr, 10, z);
        std::string s(raw);
        std::free(raw);
        return s;
    }

    mpq_t v_;
};

} // namespace toprec
