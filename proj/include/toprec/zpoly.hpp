#pragma once
// Univariate layer over the coefficient ring: sparse Laurent polynomials in
// the curve coordinate z (ZLaurentPoly) and rational functions of z kept in
// reduced canonical form (ZRationalFn). Both carry the derivations the
// engine needs: d/dz, d/dx = (1/(2z)) d/dz (from x = z^2 - 2 q0), the
// involution z -> -z, evaluation at z = s, and the t-derivative at fixed x,
//   (d/dt|_x f)(z) = (d_dt on coefficients) f - (1/(12 q0 z)) df/dz,
// which follows from dq0/dt = -1/(12 q0) and dz/dt|_x = -1/(12 q0 z).

#include <map>
#include <utility>

#include "toprec/coeff.hpp"
#include "toprec/errors.hpp"

namespace toprec {

class ZLaurentPoly {
  public:
    ZLaurentPoly() = default;
    ZLaurentPoly(long n) {
        if (n != 0) t_[0] = CoeffFrac(n);
    }
    ZLaurentPoly(const CoeffFrac& c) {
        if (!c.is_zero()) t_[0] = c;
    }

    static ZLaurentPoly monomial(const CoeffFrac& c, int exp) {
        ZLaurentPoly p;
        if (!c.is_zero()) p.t_[exp] = c;
        return p;
    }

    static ZLaurentPoly z_power(int exp) { return monomial(CoeffFrac(1), exp); }

    bool is_zero() const { return t_.empty(); }

    int min_exp() const {
        if (is_zero()) throw domain_error("ZLaurentPoly: min_exp of zero");
        return t_.begin()->first;
    }
    int max_exp() const {
        if (is_zero()) throw domain_error("ZLaurentPoly: max_exp of zero");
        return t_.rbegin()->first;
    }

    CoeffFrac coeff(int exp) const {
        auto it = t_.find(exp);
        return it == t_.end() ? CoeffFrac(0) : it->second;
    }

    const std::map<int, CoeffFrac>& terms() const { return t_; }

    void add_term(int exp, const CoeffFrac& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = t_.emplace(exp, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    ZLaurentPoly& operator+=(const ZLaurentPoly& o) {
        for (const auto& [e, c] : o.t_) add_term(e, c);
        return *this;
    }
    ZLaurentPoly& operator-=(const ZLaurentPoly& o) {
        for (const auto& [e, c] : o.t_) add_term(e, -c);
        return *this;
    }
    friend ZLaurentPoly operator+(ZLaurentPoly a, const ZLaurentPoly& b) { return a += b; }
    friend ZLaurentPoly operator-(ZLaurentPoly a, const ZLaurentPoly& b) { return a -= b; }

    ZLaurentPoly operator-() const {
        ZLaurentPoly r;
        for (const auto& [e, c] : t_) r.t_[e] = -c;
        return r;
    }

    friend ZLaurentPoly operator*(const ZLaurentPoly& a, const ZLaurentPoly& b) {
        ZLaurentPoly r;
        for (const auto& [ea, ca] : a.t_)
            for (const auto& [eb, cb] : b.t_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    ZLaurentPoly& operator*=(const ZLaurentPoly& o) { return *this = *this * o; }

    ZLaurentPoly& scale(const CoeffFrac& c) {
        if (c.is_zero()) {
            t_.clear();
            return *this;
        }
        for (auto& [e, v] : t_) v *= c;
        return *this;
    }

    ZLaurentPoly scaled(const CoeffFrac& c) const {
        ZLaurentPoly r(*this);
        r.scale(c);
        return r;
    }

    // Multiply by z^k.
    ZLaurentPoly shifted(int k) const {
        ZLaurentPoly r;
        for (const auto& [e, c] : t_) r.t_[e + k] = c;
        return r;
    }

    ZLaurentPoly pow(int e) const {
        if (e < 0) throw domain_error("ZLaurentPoly: negative power (use ZRationalFn)");
        ZLaurentPoly r(1);
        for (int i = 0; i < e; ++i) r *= *this;
        return r;
    }

    ZLaurentPoly dz() const {
        ZLaurentPoly r;
        for (const auto& [e, c] : t_)
            if (e != 0) r.t_[e - 1] = c * CoeffFrac(e);
        return r;
    }

    // d/dx = (1/(2z)) d/dz; stays Laurent because d/dz kills constants.
    ZLaurentPoly dx() const {
        ZLaurentPoly r;
        for (const auto& [e, c] : t_)
            if (e != 0) r.t_[e - 2] = c * CoeffFrac(BigRational(e, 2));
        return r;
    }

    // d/dt at fixed x (see header comment).
    ZLaurentPoly dt_fixed_x() const {
        ZLaurentPoly r;
        static const CoeffFrac inv12q0 = CoeffFrac::monomial(BigRational(1, 12), -1);
        for (const auto& [e, c] : t_) {
            r.add_term(e, d_dt(c));
            if (e != 0) r.add_term(e - 2, -(c * CoeffFrac(e) * inv12q0));
        }
        return r;
    }

    // Pullback under the involution z -> -z.
    ZLaurentPoly subst_neg() const {
        ZLaurentPoly r;
        for (const auto& [e, c] : t_) r.t_[e] = (e % 2 == 0) ? c : -c;
        return r;
    }

    // Evaluation at z = s with s^2 = 3 q0.
    SExtended eval_s() const {
        SExtended r;
        for (const auto& [e, c] : t_) {
            SExtended term = s_power(e);
            term.ev *= c;
            term.od *= c;
            r += term;
        }
        return r;
    }

    // Substitute z -> c z for a scalar c (used for parity bookkeeping and
    // simple rescalings in tests).
    ZLaurentPoly subst_scaled(const CoeffFrac& c) const {
        ZLaurentPoly r;
        for (const auto& [e, v] : t_) r.add_term(e, v * c.pow(e));
        return r;
    }

    friend bool operator==(const ZLaurentPoly& a, const ZLaurentPoly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const ZLaurentPoly& a, const ZLaurentPoly& b) { return !(a == b); }

  private:
    std::map<int, CoeffFrac> t_;
};

// Coefficient-wise d/dt at fixed z (no z-motion); building block used when
// the chain-rule term is handled by the caller.
inline ZLaurentPoly d_dt_coeffs(const ZLaurentPoly& p) {
    ZLaurentPoly r;
    for (const auto& [e, c] : p.terms()) r.add_term(e, d_dt(c));
    return r;
}

namespace detail {

// Quotient and remainder for z-polynomials with min exponent >= 0 over the
// CoeffFrac field.
inline ZLaurentPoly zpoly_divmod(const ZLaurentPoly& num, const ZLaurentPoly& den,
                                 ZLaurentPoly* rem_out) {
    if (den.is_zero()) throw arithmetic_error("ZLaurentPoly: division by zero");
    ZLaurentPoly q;
    ZLaurentPoly r = num;
    const int dd = den.max_exp();
    const CoeffFrac dl = den.coeff(dd);
    while (!r.is_zero() && r.max_exp() >= dd) {
        const int sh = r.max_exp() - dd;
        const CoeffFrac f = r.coeff(r.max_exp()) / dl;
        q.add_term(sh, f);
        r -= den.shifted(sh).scaled(f);
    }
    if (rem_out) *rem_out = r;
    return q;
}

inline ZLaurentPoly zpoly_gcd(ZLaurentPoly a, ZLaurentPoly b) {
    auto monic = [](ZLaurentPoly p) {
        if (!p.is_zero()) p.scale(p.coeff(p.max_exp()).inverse());
        return p;
    };
    a = monic(std::move(a));
    b = monic(std::move(b));
    while (!b.is_zero()) {
        ZLaurentPoly r;
        zpoly_divmod(a, b, &r);
        a = std::move(b);
        b = monic(std::move(r));
    }
    return a.is_zero() ? ZLaurentPoly(1) : a;
}

} // namespace detail

// ---------------------------------------------------------------------------
// ZRationalFn: num/den with den an ordinary z-polynomial (min exponent 0,
// nonzero constant term, leading z-coefficient normalized to 1) and the
// polynomial parts coprime. Pure z-power denominators are folded into the
// Laurent numerator, exactly as CoeffFrac does with q0 monomials, so den(0)
// never vanishes and series expansion about z = 0 is always defined.
// ---------------------------------------------------------------------------

class ZRationalFn {
  public:
    ZRationalFn() : num_(), den_(1) {}
    ZRationalFn(long n) : num_(n), den_(1) {}
    ZRationalFn(const CoeffFrac& c) : num_(c), den_(1) {}
    ZRationalFn(const ZLaurentPoly& p) : num_(p), den_(1) {}
    ZRationalFn(const ZLaurentPoly& num, const ZLaurentPoly& den) : num_(num), den_(den) {
        canonicalize();
    }

    bool is_zero() const { return num_.is_zero(); }
    bool is_laurent() const { return den_ == ZLaurentPoly(1); }

    const ZLaurentPoly& num() const { return num_; }
    const ZLaurentPoly& den() const { return den_; }

    const ZLaurentPoly& laurent() const {
        if (!is_laurent()) throw domain_error("ZRationalFn: non-trivial denominator");
        return num_;
    }

    ZRationalFn& operator+=(const ZRationalFn& o) {
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
    ZRationalFn& operator-=(const ZRationalFn& o) { return *this += -o; }
    ZRationalFn& operator*=(const ZRationalFn& o) {
        num_ = num_ * o.num_;
        den_ = den_ * o.den_;
        canonicalize();
        return *this;
    }
    ZRationalFn& operator/=(const ZRationalFn& o) {
        if (o.is_zero()) throw arithmetic_error("ZRationalFn: division by zero");
        num_ = num_ * o.den_;
        den_ = den_ * o.num_;
        canonicalize();
        return *this;
    }

    friend ZRationalFn operator+(ZRationalFn a, const ZRationalFn& b) { return a += b; }
    friend ZRationalFn operator-(ZRationalFn a, const ZRationalFn& b) { return a -= b; }
    friend ZRationalFn operator*(ZRationalFn a, const ZRationalFn& b) { return a *= b; }
    friend ZRationalFn operator/(ZRationalFn a, const ZRationalFn& b) { return a /= b; }

    ZRationalFn operator-() const {
        ZRationalFn r(*this);
        r.num_ = -r.num_;
        return r;
    }

    ZRationalFn inverse() const {
        if (is_zero()) throw arithmetic_error("ZRationalFn: inverse of zero");
        return ZRationalFn(den_, num_);
    }

    ZRationalFn dz() const {
        if (is_laurent()) return ZRationalFn(num_.dz());
        return ZRationalFn(num_.dz() * den_ - num_ * den_.dz(), den_ * den_);
    }

    ZRationalFn dx() const {
        ZRationalFn d = dz();
        d.num_ = d.num_.shifted(-1).scaled(CoeffFrac(BigRational(1, 2)));
        d.canonicalize();
        return d;
    }

    ZRationalFn dt_fixed_x() const {
        if (is_laurent()) return ZRationalFn(num_.dt_fixed_x());
        // Quotient rule; the operator is a derivation.
        return ZRationalFn(num_.dt_fixed_x() * den_ - num_ * den_.dt_fixed_x(),
                           den_ * den_);
    }

    ZRationalFn subst_neg() const {
        return ZRationalFn(num_.subst_neg(), den_.subst_neg());
    }

    SExtended eval_s() const {
        const SExtended d = den_.eval_s();
        if (d.is_zero()) throw pole_error("ZRationalFn: pole at z = s");
        return num_.eval_s() * d.inverse();
    }

    friend bool operator==(const ZRationalFn& a, const ZRationalFn& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const ZRationalFn& a, const ZRationalFn& b) { return !(a == b); }

  private:
    void canonicalize() {
        if (den_.is_zero()) throw arithmetic_error("ZRationalFn: zero denominator");
        if (num_.is_zero()) {
            den_ = ZLaurentPoly(1);
            return;
        }
        const int dshift = den_.min_exp();
        if (dshift != 0) {
            den_ = den_.shifted(-dshift);
            num_ = num_.shifted(-dshift);
        }
        if (den_.max_exp() == 0) {
            num_.scale(den_.coeff(0).inverse());
            den_ = ZLaurentPoly(1);
            return;
        }
        const int nshift = num_.min_exp();
        ZLaurentPoly npoly = num_.shifted(-nshift);
        const ZLaurentPoly g = detail::zpoly_gcd(npoly, den_);
        if (g.max_exp() > 0) {
            npoly = detail::zpoly_divmod(npoly, g, nullptr);
            den_ = detail::zpoly_divmod(den_, g, nullptr);
        }
        num_ = npoly.shifted(nshift);
        const int dshift2 = den_.min_exp();
        if (dshift2 != 0) {
            den_ = den_.shifted(-dshift2);
            num_ = num_.shifted(-dshift2);
        }
        if (den_.max_exp() == 0) {
            num_.scale(den_.coeff(0).inverse());
            den_ = ZLaurentPoly(1);
            return;
        }
        const CoeffFrac lead = den_.coeff(den_.max_exp());
        if (!lead.is_one()) {
            const CoeffFrac inv = lead.inverse();
            den_.scale(inv);
            num_.scale(inv);
        }
    }

    ZLaurentPoly num_;
    ZLaurentPoly den_;
};

} // namespace toprec
