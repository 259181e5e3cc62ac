#pragma once
// Coefficient ring of the engine: Laurent polynomials in the parameter q0
// over the rationals (CoeffElem), their fraction field kept in a canonical
// reduced form (CoeffFrac), and the quadratic extension by s = (3 q0)^(1/2)
// (SExtended). Also the t-derivative on the coefficient level, induced by
// t = -6 q0^2, i.e. d/dt q0^a = -(a/12) q0^(a-2).

#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "toprec/errors.hpp"
#include "toprec/rational.hpp"

namespace toprec {

// ---------------------------------------------------------------------------
// CoeffElem: sparse Laurent polynomial in q0.
// ---------------------------------------------------------------------------

class CoeffElem {
  public:
    CoeffElem() = default;
    CoeffElem(long n) {
        if (n != 0) t_[0] = BigRational(n);
    }
    CoeffElem(const BigRational& c) {
        if (!c.is_zero()) t_[0] = c;
    }

    static CoeffElem monomial(const BigRational& c, int exp) {
        CoeffElem e;
        if (!c.is_zero()) e.t_[exp] = c;
        return e;
    }

    static CoeffElem q0_power(int exp) { return monomial(BigRational(1), exp); }

    bool is_zero() const { return t_.empty(); }
    bool is_monomial() const { return t_.size() == 1; }
    bool is_one() const { return is_monomial() && t_.begin()->first == 0 && t_.begin()->second.is_one(); }

    int min_exp() const {
        if (is_zero()) throw domain_error("CoeffElem: min_exp of zero");
        return t_.begin()->first;
    }
    int max_exp() const {
        if (is_zero()) throw domain_error("CoeffElem: max_exp of zero");
        return t_.rbegin()->first;
    }

    // Coefficient of q0^exp (zero if absent).
    BigRational coeff(int exp) const {
        auto it = t_.find(exp);
        return it == t_.end() ? BigRational(0) : it->second;
    }

    BigRational leading_coeff() const { return t_.rbegin()->second; }

    const std::map<int, BigRational>& terms() const { return t_; }

    void add_term(int exp, const BigRational& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = t_.emplace(exp, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    CoeffElem& operator+=(const CoeffElem& o) {
        for (const auto& [e, c] : o.t_) add_term(e, c);
        return *this;
    }
    CoeffElem& operator-=(const CoeffElem& o) {
        for (const auto& [e, c] : o.t_) add_term(e, -c);
        return *this;
    }
    friend CoeffElem operator+(CoeffElem a, const CoeffElem& b) { return a += b; }
    friend CoeffElem operator-(CoeffElem a, const CoeffElem& b) { return a -= b; }

    CoeffElem operator-() const {
        CoeffElem r;
        for (const auto& [e, c] : t_) r.t_[e] = -c;
        return r;
    }

    friend CoeffElem operator*(const CoeffElem& a, const CoeffElem& b) {
        CoeffElem r;
        for (const auto& [ea, ca] : a.t_)
            for (const auto& [eb, cb] : b.t_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    CoeffElem& operator*=(const CoeffElem& o) { return *this = *this * o; }

    CoeffElem& scale(const BigRational& c) {
        if (c.is_zero()) {
            t_.clear();
            return *this;
        }
        for (auto& [e, v] : t_) v *= c;
        return *this;
    }

    // Multiply by q0^k.
    CoeffElem shifted(int k) const {
        CoeffElem r;
        for (const auto& [e, c] : t_) r.t_[e + k] = c;
        return r;
    }

    CoeffElem pow(int e) const {
        if (e < 0) throw domain_error("CoeffElem: negative power (use CoeffFrac)");
        CoeffElem r(1);
        for (int i = 0; i < e; ++i) r *= *this;
        return r;
    }

    friend bool operator==(const CoeffElem& a, const CoeffElem& b) { return a.t_ == b.t_; }
    friend bool operator!=(const CoeffElem& a, const CoeffElem& b) { return !(a == b); }

  private:
    std::map<int, BigRational> t_;
};

// d/dt induced on q0-coefficients by t = -6 q0^2: q0^a -> -(a/12) q0^(a-2).
inline CoeffElem d_dt(const CoeffElem& e) {
    CoeffElem r;
    for (const auto& [a, c] : e.terms())
        if (a != 0) r.add_term(a - 2, c * BigRational(-a, 12));
    return r;
}

namespace detail {

// Exact division of ordinary polynomials in q0 (min exponents >= 0, divisor
// nonzero). Used by the gcd reduction in CoeffFrac.
inline CoeffElem poly_divmod(const CoeffElem& num, const CoeffElem& den, CoeffElem* rem_out) {
    if (den.is_zero()) throw arithmetic_error("CoeffElem: polynomial division by zero");
    CoeffElem q;
    CoeffElem r = num;
    const int dd = den.max_exp();
    const BigRational dl = den.leading_coeff();
    while (!r.is_zero() && r.max_exp() >= dd) {
        const int sh = r.max_exp() - dd;
        const BigRational f = r.leading_coeff() / dl;
        q.add_term(sh, f);
        r -= den.shifted(sh).scale(f);
    }
    if (rem_out) *rem_out = r;
    return q;
}

inline CoeffElem poly_gcd(CoeffElem a, CoeffElem b) {
    // Monic Euclid over the rationals.
    auto monic = [](CoeffElem e) {
        if (!e.is_zero()) e.scale(BigRational(1) / e.leading_coeff());
        return e;
    };
    a = monic(std::move(a));
    b = monic(std::move(b));
    while (!b.is_zero()) {
        CoeffElem r;
        poly_divmod(a, b, &r);
        a = std::move(b);
        b = monic(std::move(r));
    }
    return a.is_zero() ? CoeffElem(1) : a;
}

} // namespace detail

// ---------------------------------------------------------------------------
// CoeffFrac: fraction num/den of CoeffElem in canonical form. Invariants:
//   - den is an ordinary polynomial (min exponent 0) with nonzero constant
//     term and leading coefficient 1;
//   - the polynomial parts of num and den are coprime;
//   - zero is represented as 0/1.
// Monomial denominators therefore never survive: they are folded into the
// Laurent numerator, and den == 1 identifies fractions that are plain
// CoeffElem values.
// ---------------------------------------------------------------------------

class CoeffFrac {
  public:
    CoeffFrac() : num_(), den_(1) {}
    CoeffFrac(long n) : num_(n), den_(1) {}
    CoeffFrac(const BigRational& c) : num_(c), den_(1) {}
    CoeffFrac(const CoeffElem& e) : num_(e), den_(1) {}
    CoeffFrac(const CoeffElem& num, const CoeffElem& den) : num_(num), den_(den) {
        canonicalize();
    }

    static CoeffFrac monomial(const BigRational& c, int exp) {
        return CoeffFrac(CoeffElem::monomial(c, exp));
    }

    static CoeffFrac q0_power(int exp) { return monomial(BigRational(1), exp); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.is_one() && num_.is_one(); }

    // True when the fraction is a plain Laurent polynomial in q0.
    bool is_elem() const { return den_.is_one(); }

    const CoeffElem& num() const { return num_; }
    const CoeffElem& den() const { return den_; }

    // Requires is_elem().
    const CoeffElem& elem() const {
        if (!is_elem()) throw domain_error("CoeffFrac: non-polynomial denominator");
        return num_;
    }

    bool is_monomial() const { return is_elem() && num_.is_monomial(); }

    CoeffFrac& operator+=(const CoeffFrac& o) {
        // Fast path: common denominator 1 keeps the bulk of the recursion at
        // plain polynomial adds.
        if (den_ == o.den_) {
            num_ += o.num_;
            canonicalize();
            return *this;
        }
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
        canonicalize();
        return *this;
    }
    CoeffFrac& operator-=(const CoeffFrac& o) { return *this += -o; }
    CoeffFrac& operator*=(const CoeffFrac& o) {
        num_ = num_ * o.num_;
        den_ = den_ * o.den_;
        canonicalize();
        return *this;
    }
    CoeffFrac& operator/=(const CoeffFrac& o) {
        if (o.is_zero()) throw arithmetic_error("CoeffFrac: division by zero");
        num_ = num_ * o.den_;
        den_ = den_ * o.num_;
        canonicalize();
        return *this;
    }

    friend CoeffFrac operator+(CoeffFrac a, const CoeffFrac& b) { return a += b; }
    friend CoeffFrac operator-(CoeffFrac a, const CoeffFrac& b) { return a -= b; }
    friend CoeffFrac operator*(CoeffFrac a, const CoeffFrac& b) { return a *= b; }
    friend CoeffFrac operator/(CoeffFrac a, const CoeffFrac& b) { return a /= b; }

    CoeffFrac operator-() const {
        CoeffFrac r(*this);
        r.num_ = -r.num_;
        return r;
    }

    CoeffFrac inverse() const {
        if (is_zero()) throw arithmetic_error("CoeffFrac: inverse of zero");
        return CoeffFrac(den_, num_);
    }

    CoeffFrac pow(int e) const {
        if (e < 0) return inverse().pow(-e);
        CoeffFrac r(1);
        for (int i = 0; i < e; ++i) r *= *this;
        return r;
    }

    // Canonical form makes structural equality valid.
    friend bool operator==(const CoeffFrac& a, const CoeffFrac& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const CoeffFrac& a, const CoeffFrac& b) { return !(a == b); }

  private:
    void canonicalize() {
        if (den_.is_zero()) throw arithmetic_error("CoeffFrac: zero denominator");
        if (num_.is_zero()) {
            den_ = CoeffElem(1);
            return;
        }
        // Fold the monomial part of den into the Laurent numerator.
        const int dshift = den_.min_exp();
        if (dshift != 0) {
            den_ = den_.shifted(-dshift);
            num_ = num_.shifted(-dshift);
        }
        if (den_.is_monomial()) {
            num_.scale(BigRational(1) / den_.leading_coeff());
            den_ = CoeffElem(1);
            return;
        }
        // Reduce the polynomial parts by their gcd.
        const int nshift = num_.min_exp();
        CoeffElem npoly = num_.shifted(-nshift);
        const CoeffElem g = detail::poly_gcd(npoly, den_);
        if (!g.is_one()) {
            npoly = detail::poly_divmod(npoly, g, nullptr);
            den_ = detail::poly_divmod(den_, g, nullptr);
        }
        num_ = npoly.shifted(nshift);
        // Fold again in case the reduction left a monomial denominator.
        const int dshift2 = den_.min_exp();
        if (dshift2 != 0) {
            den_ = den_.shifted(-dshift2);
            num_ = num_.shifted(-dshift2);
        }
        if (den_.is_monomial()) {
            num_.scale(BigRational(1) / den_.leading_coeff());
            den_ = CoeffElem(1);
            return;
        }
        const BigRational lead = den_.leading_coeff();
        if (!lead.is_one()) {
            den_.scale(BigRational(1) / lead);
            num_.scale(BigRational(1) / lead);
        }
    }

    CoeffElem num_;
    CoeffElem den_;
};

inline CoeffFrac d_dt(const CoeffFrac& f) {
    if (f.is_elem()) return CoeffFrac(d_dt(f.num()));
    // Quotient rule; canonicalization restores the invariants.
    const CoeffElem dn = d_dt(f.num());
    const CoeffElem dd = d_dt(f.den());
    return CoeffFrac(dn * f.den() - f.num() * dd, f.den() * f.den());
}

// ---------------------------------------------------------------------------
// SExtended: values in the quadratic extension by s with s^2 = 3 q0,
// represented as ev + od * s. Needed when expressions are evaluated at the
// preimages z = +-s of the double turning point.
// ---------------------------------------------------------------------------

struct SExtended {
    CoeffFrac ev; // s-free part
    CoeffFrac od; // coefficient of s

    SExtended() = default;
    SExtended(const CoeffFrac& even_part) : ev(even_part) {}
    SExtended(const CoeffFrac& even_part, const CoeffFrac& odd_part)
        : ev(even_part), od(odd_part) {}

    static SExtended s() { return SExtended(CoeffFrac(0), CoeffFrac(1)); }

    bool is_zero() const { return ev.is_zero() && od.is_zero(); }

    SExtended& operator+=(const SExtended& o) {
        ev += o.ev;
        od += o.od;
        return *this;
    }
    SExtended& operator-=(const SExtended& o) {
        ev -= o.ev;
        od -= o.od;
        return *this;
    }
    friend SExtended operator+(SExtended a, const SExtended& b) { return a += b; }
    friend SExtended operator-(SExtended a, const SExtended& b) { return a -= b; }

    SExtended operator-() const { return SExtended(-ev, -od); }

    friend SExtended operator*(const SExtended& a, const SExtended& b) {
        static const CoeffFrac three_q0 = CoeffFrac::monomial(BigRational(3), 1);
        return SExtended(a.ev * b.ev + three_q0 * (a.od * b.od), a.ev * b.od + a.od * b.ev);
    }
    SExtended& operator*=(const SExtended& o) { return *this = *this * o; }

    SExtended inverse() const {
        static const CoeffFrac three_q0 = CoeffFrac::monomial(BigRational(3), 1);
        const CoeffFrac norm = ev * ev - three_q0 * (od * od);
        if (norm.is_zero()) throw arithmetic_error("SExtended: inverse of zero norm");
        return SExtended(ev / norm, -(od / norm));
    }

    friend SExtended operator/(const SExtended& a, const SExtended& b) {
        return a * b.inverse();
    }

    friend bool operator==(const SExtended& a, const SExtended& b) {
        return a.ev == b.ev && a.od == b.od;
    }
    friend bool operator!=(const SExtended& a, const SExtended& b) { return !(a == b); }
};

// Value of s^e in the extension; s^2 = 3 q0 also fixes negative powers via
// 1/s = s/(3 q0).
inline SExtended s_power(int e) {
    const int half = (e >= 0 ? e : e - 1) / 2; // floor(e/2)
    const CoeffFrac even_part = CoeffFrac::monomial(BigRational(3), 1).pow(half);
    if (e % 2 == 0) return SExtended(even_part);
    return SExtended(CoeffFrac(0), even_part);
}

} // namespace toprec
