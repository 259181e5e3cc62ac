#pragma once
// Truncated Laurent series with an explicit truncation window. A series
// knows its variable (z near the ramification point, or zeta = 1/z near
// infinity), the lowest exponent that may carry a nonzero coefficient, and
// the exclusive upper bound below which coefficients are trusted. All
// arithmetic propagates the window pessimistically, so reading a
// coefficient at or beyond the truncation bound is a hard error rather
// than a silent zero.

#include <map>

#include "toprec/coeff.hpp"
#include "toprec/errors.hpp"
#include "toprec/rational.hpp"
#include "toprec/zpoly.hpp"

namespace toprec {

enum class SeriesVar { Z, Zeta };

inline const char* series_var_name(SeriesVar v) { return v == SeriesVar::Z ? "z" : "zeta"; }

template <class C>
class TruncSeriesT {
  public:
    TruncSeriesT() : var_(SeriesVar::Z), start_(0), trunc_(0) {}
    TruncSeriesT(SeriesVar var, int start, int trunc) : var_(var), start_(start), trunc_(trunc) {
        if (trunc < start) throw domain_error("TruncSeries: empty window, trunc < start");
    }

    SeriesVar var() const { return var_; }
    int start() const { return start_; }
    int trunc() const { return trunc_; }

    bool is_zero() const { return t_.empty(); }

    // Lowest exponent with a nonzero coefficient, or fallback when the
    // series vanishes identically on its window.
    int min_exp_or(int fallback) const { return t_.empty() ? fallback : t_.begin()->first; }

    const std::map<int, C>& terms() const { return t_; }

    C coeff(int exp) const {
        if (exp >= trunc_)
            throw truncation_error("TruncSeries: coefficient request beyond truncation");
        auto it = t_.find(exp);
        return it == t_.end() ? C() : it->second;
    }

    // Terms at or beyond the truncation bound are unknown, so adding into
    // that region is a no-op by the window semantics.
    void add_term(int exp, const C& c) {
        if (exp >= trunc_ || c.is_zero()) return;
        if (exp < start_) start_ = exp;
        auto [it, fresh] = t_.emplace(exp, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    TruncSeriesT& operator+=(const TruncSeriesT& o) {
        require_same_var(o);
        if (o.trunc_ < trunc_) truncate_to(o.trunc_);
        if (o.start_ < start_) start_ = o.start_;
        for (const auto& [e, c] : o.t_) add_term(e, c);
        return *this;
    }
    TruncSeriesT& operator-=(const TruncSeriesT& o) {
        require_same_var(o);
        if (o.trunc_ < trunc_) truncate_to(o.trunc_);
        if (o.start_ < start_) start_ = o.start_;
        for (const auto& [e, c] : o.t_) add_term(e, -c);
        return *this;
    }
    friend TruncSeriesT operator+(TruncSeriesT a, const TruncSeriesT& b) { return a += b; }
    friend TruncSeriesT operator-(TruncSeriesT a, const TruncSeriesT& b) { return a -= b; }

    TruncSeriesT operator-() const {
        TruncSeriesT r(var_, start_, trunc_);
        for (const auto& [e, c] : t_) r.t_[e] = -c;
        return r;
    }

    friend TruncSeriesT operator*(const TruncSeriesT& a, const TruncSeriesT& b) {
        a.require_same_var(b);
        // Unknown tails poison the product from their own offset onward.
        const int tr = std::min(a.trunc_ + b.start_, b.trunc_ + a.start_);
        TruncSeriesT r(a.var_, a.start_ + b.start_, tr);
        for (const auto& [ea, ca] : a.t_)
            for (const auto& [eb, cb] : b.t_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    TruncSeriesT& operator*=(const TruncSeriesT& o) { return *this = *this * o; }

    TruncSeriesT& scale(const C& c) {
        if (c.is_zero()) {
            t_.clear();
            return *this;
        }
        for (auto& [e, v] : t_) v = v * c;
        return *this;
    }

    TruncSeriesT scaled(const C& c) const {
        TruncSeriesT r(*this);
        r.scale(c);
        return r;
    }

    // Multiply by var^k.
    TruncSeriesT shifted(int k) const {
        TruncSeriesT r(var_, start_ + k, trunc_ + k);
        for (const auto& [e, c] : t_) r.t_[e + k] = c;
        return r;
    }

    void truncate_to(int tr) {
        if (tr > trunc_) throw truncation_error("TruncSeries: cannot extend truncation");
        trunc_ = tr;
        if (trunc_ < start_) start_ = trunc_;
        t_.erase(t_.lower_bound(trunc_), t_.end());
    }

    // Pullback under var -> -var.
    TruncSeriesT subst_neg() const {
        TruncSeriesT r(var_, start_, trunc_);
        for (const auto& [e, c] : t_) r.t_[e] = (e % 2 == 0) ? c : -c;
        return r;
    }

    bool even_on_window() const {
        for (const auto& [e, c] : t_)
            if (e % 2 != 0 && !c.is_zero()) return false;
        return true;
    }

    // d/dz for a z-series.
    TruncSeriesT dz() const {
        require_z("dz");
        TruncSeriesT r(var_, start_ - 1, trunc_ - 1);
        for (const auto& [e, c] : t_)
            if (e != 0) r.t_[e - 1] = c * C(e);
        return r;
    }

    // d/dx = (1/(2z)) d/dz for a z-series.
    TruncSeriesT dx() const {
        require_z("dx");
        TruncSeriesT r(var_, start_ - 2, trunc_ - 2);
        for (const auto& [e, c] : t_)
            if (e != 0) r.t_[e - 2] = c * C(BigRational(e, 2));
        return r;
    }

    // Multiplicative inverse; the lowest-order coefficient must be a unit.
    TruncSeriesT inverse() const {
        if (t_.empty()) throw arithmetic_error("TruncSeries: inverse of zero");
        const int s = t_.begin()->first;
        const C lead = t_.begin()->second;
        const C lead_inv = lead.inverse();
        // f = lead var^s (1 + u), u starting at order >= 1 after peeling.
        const int order = trunc_ - s; // relative orders we can trust
        TruncSeriesT u(var_, 1, order);
        for (auto it = std::next(t_.begin()); it != t_.end(); ++it)
            u.add_term(it->first - s, it->second * lead_inv);
        TruncSeriesT acc(var_, 0, order);
        acc.add_term(0, C(1));
        TruncSeriesT upow(var_, 0, order);
        upow.add_term(0, C(1));
        for (int k = 1; k < order; ++k) {
            upow = upow * u;
            upow.truncate_to(order);
            if (upow.is_zero()) break;
            if (k % 2 == 0)
                acc += upow;
            else
                acc -= upow;
        }
        TruncSeriesT r = acc.shifted(-s);
        r.scale(lead_inv);
        return r;
    }

    // Coefficient of var^(-1). The window must demonstrably cover that
    // exponent; callers that know a slice is regular skip the call.
    C residue_at_zero() const {
        if (start_ > -1 || trunc_ < 0)
            throw truncation_error("TruncSeries: window does not cover the residue exponent");
        auto it = t_.find(-1);
        return it == t_.end() ? C() : it->second;
    }

    friend bool operator==(const TruncSeriesT& a, const TruncSeriesT& b) {
        return a.var_ == b.var_ && a.trunc_ == b.trunc_ && a.t_ == b.t_;
    }
    friend bool operator!=(const TruncSeriesT& a, const TruncSeriesT& b) { return !(a == b); }

  private:
    void require_same_var(const TruncSeriesT& o) const {
        if (var_ != o.var_) throw domain_error("TruncSeries: mixed series variables");
    }
    void require_z(const char* op) const {
        if (var_ != SeriesVar::Z)
            throw domain_error(std::string("TruncSeries: ") + op + " requires the z variable");
    }

    SeriesVar var_;
    int start_;
    int trunc_;
    std::map<int, C> t_;
};

using ZSeries = TruncSeriesT<CoeffFrac>;

// Expansion of 1/(z^2 - a) about z = 0: the coefficient of z^(2k) is
// -a^(-(k+1)).
inline ZSeries geom_expand(const CoeffFrac& a, int trunc) {
    if (a.is_zero()) throw pole_error("geom_expand: expansion point sits on the pole");
    ZSeries r(SeriesVar::Z, 0, trunc);
    const CoeffFrac ainv = a.inverse();
    CoeffFrac c = -ainv;
    for (int k = 0; 2 * k < trunc; ++k) {
        r.add_term(2 * k, c);
        c *= ainv;
    }
    return r;
}

// (1 + u)^alpha for rational alpha and a series u with positive valuation.
template <class C>
TruncSeriesT<C> puiseux_binomial(const TruncSeriesT<C>& u, const BigRational& alpha) {
    if (!u.is_zero() && u.min_exp_or(1) < 1)
        throw normalization_error("puiseux_binomial: expansion term must vanish at the base point");
    const int order = u.trunc();
    TruncSeriesT<C> acc(u.var(), 0, order);
    acc.add_term(0, C(1));
    TruncSeriesT<C> upow(u.var(), 0, order);
    upow.add_term(0, C(1));
    BigRational binom(1);
    for (int k = 1; k < order; ++k) {
        upow = upow * u;
        upow.truncate_to(order);
        if (upow.is_zero()) break;
        // binom(alpha, k) = binom(alpha, k-1) * (alpha - k + 1) / k
        binom *= alpha - BigRational(k - 1);
        binom /= BigRational(k);
        acc += upow.scaled(C(binom));
    }
    return acc;
}

// Laurent expansion of a rational function of z about z = 0. Well defined
// because canonical denominators never vanish there.
inline ZSeries expand_at_zero(const ZRationalFn& f, int trunc) {
    if (f.is_zero()) return ZSeries(SeriesVar::Z, 0, trunc);
    const int nmin = f.num().min_exp();
    if (trunc <= nmin) return ZSeries(SeriesVar::Z, trunc, trunc);
    ZSeries num(SeriesVar::Z, nmin, trunc);
    for (const auto& [e, c] : f.num().terms()) num.add_term(e, c);
    if (f.is_laurent()) return num;
    ZSeries den(SeriesVar::Z, 0, trunc - nmin);
    for (const auto& [e, c] : f.den().terms()) den.add_term(e, c);
    ZSeries r = num * den.inverse();
    r.truncate_to(trunc);
    return r;
}

// Expansion of a rational function of z about z = infinity, written in
// zeta = 1/z: the coefficient of zeta^j is the coefficient of z^(-j).
inline TruncSeriesT<CoeffFrac> expand_at_infinity(const ZRationalFn& f, int trunc) {
    using S = TruncSeriesT<CoeffFrac>;
    if (f.is_zero()) return S(SeriesVar::Zeta, 0, trunc);
    const int nstart = -f.num().max_exp();
    const int dstart = -f.den().max_exp();
    // Both factors are exact, so their windows are free parameters; pick
    // them just wide enough that the product window reaches trunc.
    S num(SeriesVar::Zeta, nstart, std::max(trunc + dstart, nstart + 1));
    for (const auto& [e, c] : f.num().terms()) num.add_term(-e, c);
    S den(SeriesVar::Zeta, dstart, std::max(trunc + 2 * dstart - nstart, dstart + 1));
    for (const auto& [e, c] : f.den().terms()) den.add_term(-e, c);
    S r = num * den.inverse();
    if (r.trunc() < trunc)
        throw truncation_error("expand_at_infinity: window bookkeeping fell short");
    r.truncate_to(trunc);
    return r;
}

using ZetaSeries = TruncSeriesT<CoeffFrac>;

} // namespace toprec
