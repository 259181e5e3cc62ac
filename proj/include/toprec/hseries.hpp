#pragma once
// Formal series in the semiclassical parameter hbar whose coefficients are
// rational functions of z. The expansion order is the only grading; all
// derivations (d/dx, d/dt at fixed x) act coefficientwise. Windows follow
// the same discipline as TruncSeriesT: base is the lowest order that may be
// nonzero, trunc is the exclusive bound below which coefficients are known.

#include <map>

#include "toprec/errors.hpp"
#include "toprec/zpoly.hpp"

namespace toprec {

class HSeries {
  public:
    HSeries() : base_(0), trunc_(0) {}
    HSeries(int base, int trunc) : base_(base), trunc_(trunc) {
        if (trunc < base) throw domain_error("HSeries: empty window, trunc < base");
    }

    int base() const { return base_; }
    int trunc() const { return trunc_; }
    bool is_zero() const { return t_.empty(); }

    const std::map<int, ZRationalFn>& terms() const { return t_; }

    ZRationalFn coeff(int m) const {
        if (m >= trunc_) throw truncation_error("HSeries: coefficient request beyond truncation");
        auto it = t_.find(m);
        return it == t_.end() ? ZRationalFn() : it->second;
    }

    void add_term(int m, const ZRationalFn& c) {
        if (m >= trunc_ || c.is_zero()) return;
        if (m < base_) base_ = m;
        auto [it, fresh] = t_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    HSeries& operator+=(const HSeries& o) {
        if (o.trunc_ < trunc_) truncate_to(o.trunc_);
        if (o.base_ < base_) base_ = o.base_;
        for (const auto& [m, c] : o.t_) add_term(m, c);
        return *this;
    }
    HSeries& operator-=(const HSeries& o) {
        if (o.trunc_ < trunc_) truncate_to(o.trunc_);
        if (o.base_ < base_) base_ = o.base_;
        for (const auto& [m, c] : o.t_) add_term(m, -c);
        return *this;
    }
    friend HSeries operator+(HSeries a, const HSeries& b) { return a += b; }
    friend HSeries operator-(HSeries a, const HSeries& b) { return a -= b; }

    HSeries operator-() const {
        HSeries r(base_, trunc_);
        for (const auto& [m, c] : t_) r.t_[m] = -c;
        return r;
    }

    friend HSeries operator*(const HSeries& a, const HSeries& b) {
        const int tr = std::min(a.trunc_ + b.base_, b.trunc_ + a.base_);
        HSeries r(a.base_ + b.base_, tr);
        for (const auto& [ma, ca] : a.t_)
            for (const auto& [mb, cb] : b.t_) r.add_term(ma + mb, ca * cb);
        return r;
    }
    HSeries& operator*=(const HSeries& o) { return *this = *this * o; }

    HSeries& scale(const ZRationalFn& c) {
        if (c.is_zero()) {
            t_.clear();
            return *this;
        }
        for (auto& [m, v] : t_) v *= c;
        return *this;
    }

    HSeries scaled(const ZRationalFn& c) const {
        HSeries r(*this);
        r.scale(c);
        return r;
    }

    // Multiply by hbar^k.
    HSeries shifted(int k) const {
        HSeries r(base_ + k, trunc_ + k);
        for (const auto& [m, c] : t_) r.t_[m + k] = c;
        return r;
    }

    void truncate_to(int tr) {
        if (tr > trunc_) throw truncation_error("HSeries: cannot extend truncation");
        trunc_ = tr;
        if (trunc_ < base_) base_ = trunc_;
        t_.erase(t_.lower_bound(trunc_), t_.end());
    }

    HSeries inverse() const {
        if (t_.empty()) throw arithmetic_error("HSeries: inverse of zero");
        const int s = t_.begin()->first;
        const ZRationalFn lead_inv = t_.begin()->second.inverse();
        const int order = trunc_ - s;
        HSeries u(1, order);
        for (auto it = std::next(t_.begin()); it != t_.end(); ++it)
            u.add_term(it->first - s, it->second * lead_inv);
        HSeries acc(0, order);
        acc.add_term(0, ZRationalFn(1));
        HSeries upow(0, order);
        upow.add_term(0, ZRationalFn(1));
        for (int k = 1; k < order; ++k) {
            upow = upow * u;
            upow.truncate_to(order);
            if (upow.is_zero()) break;
            if (k % 2 == 0)
                acc += upow;
            else
                acc -= upow;
        }
        HSeries r = acc.shifted(-s);
        r.scale(lead_inv);
        return r;
    }

    // Coefficientwise d/dx.
    HSeries dx() const {
        HSeries r(base_, trunc_);
        for (const auto& [m, c] : t_) r.add_term(m, c.dx());
        return r;
    }

    // Coefficientwise d/dt at fixed x.
    HSeries dt_fixed_x() const {
        HSeries r(base_, trunc_);
        for (const auto& [m, c] : t_) r.add_term(m, c.dt_fixed_x());
        return r;
    }

    // Coefficientwise pullback under z -> -z.
    HSeries subst_neg() const {
        HSeries r(base_, trunc_);
        for (const auto& [m, c] : t_) r.t_[m] = c.subst_neg();
        return r;
    }

    // Keep only the orders with m mod 2 == parity.
    HSeries order_parity_part(int parity) const {
        HSeries r(base_, trunc_);
        for (const auto& [m, c] : t_)
            if (((m % 2) + 2) % 2 == parity) r.t_[m] = c;
        return r;
    }

    friend bool operator==(const HSeries& a, const HSeries& b) {
        return a.trunc_ == b.trunc_ && a.t_ == b.t_;
    }
    friend bool operator!=(const HSeries& a, const HSeries& b) { return !(a == b); }

  private:
    int base_;
    int trunc_;
    std::map<int, ZRationalFn> t_;
};

// d/dx of log(H^(-1/2)) as a formal series, i.e. -(1/2) H'(x)/H. The
// leading coefficient must be exactly z; that pins the branch implicit in
// the intended use and catches malformed inputs early.
inline HSeries hseries_log_dx(const HSeries& H) {
    if (H.is_zero()) throw normalization_error("hseries_log_dx: zero input");
    if (H.terms().begin()->second != ZRationalFn(ZLaurentPoly::z_power(1)))
        throw normalization_error("hseries_log_dx: leading coefficient must equal z");
    HSeries r = H.dx() * H.inverse();
    r.scale(ZRationalFn(CoeffFrac(BigRational(-1, 2))));
    return r;
}

} // namespace toprec
