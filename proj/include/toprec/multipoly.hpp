#pragma once
// Multivariate Laurent polynomials in the point coordinates z_1..z_n and a
// small rational-function layer over them. The denominators that appear in
// the open free energy identities are products of the fixed factors
// z_a^2 - z_b^2 and z_a^2 - 3 q0, so instead of general multivariate gcd
// arithmetic the accumulator MRat tracks explicit powers of those factors
// and equality is decided by cross-multiplication and exact division.

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "toprec/coeff.hpp"
#include "toprec/errors.hpp"

namespace toprec {

class MultiPoly {
  public:
    using Key = std::vector<int>;

    MultiPoly() : nvars_(0) {}
    explicit MultiPoly(int nvars) : nvars_(nvars) {
        if (nvars < 1) throw domain_error("MultiPoly: needs at least one variable");
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return t_.empty(); }
    const std::map<Key, CoeffFrac>& terms() const { return t_; }

    void add_term(const Key& k, const CoeffFrac& c) {
        if (static_cast<int>(k.size()) != nvars_)
            throw domain_error("MultiPoly: key size mismatch");
        if (c.is_zero()) return;
        auto [it, fresh] = t_.emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        require_same(o);
        for (const auto& [k, c] : o.t_) add_term(k, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        require_same(o);
        for (const auto& [k, c] : o.t_) add_term(k, -c);
        return *this;
    }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

    MultiPoly operator-() const {
        MultiPoly r(nvars_);
        for (const auto& [k, c] : t_) r.t_[k] = -c;
        return r;
    }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.require_same(b);
        MultiPoly r(a.nvars_);
        Key k(a.nvars_);
        for (const auto& [ka, ca] : a.t_) {
            for (const auto& [kb, cb] : b.t_) {
                for (int i = 0; i < a.nvars_; ++i) k[i] = ka[i] + kb[i];
                r.add_term(k, ca * cb);
            }
        }
        return r;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly& scale(const CoeffFrac& c) {
        if (c.is_zero()) {
            t_.clear();
            return *this;
        }
        for (auto& [k, v] : t_) v *= c;
        return *this;
    }

    MultiPoly scaled(const CoeffFrac& c) const {
        MultiPoly r(*this);
        r.scale(c);
        return r;
    }

    // Multiply by z_var^k.
    MultiPoly shifted(int var, int k) const {
        MultiPoly r(nvars_);
        for (const auto& [key, c] : t_) {
            Key kk = key;
            kk[var] += k;
            r.t_.emplace(std::move(kk), c);
        }
        return r;
    }

    MultiPoly derivative(int var) const {
        MultiPoly r(nvars_);
        for (const auto& [key, c] : t_) {
            if (key[var] == 0) continue;
            Key kk = key;
            kk[var] -= 1;
            r.add_term(kk, c * CoeffFrac(key[var]));
        }
        return r;
    }

    // Split into the part with even exponent in z_var (returned .first,
    // exponent kept) and the odd part (.second, with one power of z_var
    // stripped). Substituting z_var = s with s^2 = 3 q0 sends the term
    // groups to first + s * second after replacing z_var^2 by 3 q0; the
    // substitution itself is performed by eval_var_at_s.
    std::pair<MultiPoly, MultiPoly> eval_var_at_s(int var) const {
        MultiPoly ev(nvars_), od(nvars_);
        for (const auto& [key, c] : t_) {
            const int e = key[var];
            Key kk = key;
            kk[var] = 0;
            const int half = (e >= 0 ? e : e - 1) / 2; // floor(e / 2)
            const CoeffFrac w = c * CoeffFrac::monomial(BigRational(3), 1).pow(half);
            if (((e % 2) + 2) % 2 == 0)
                ev.add_term(kk, w);
            else
                od.add_term(kk, w);
        }
        return {ev, od};
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars_ == b.nvars_ && a.t_ == b.t_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  private:
    void require_same(const MultiPoly& o) const {
        if (nvars_ != o.nvars_) throw domain_error("MultiPoly: variable count mismatch");
    }

    int nvars_;
    std::map<Key, CoeffFrac> t_;
};

// Denominator factors tracked by MRat: z_a^2 - z_b^2 (kind Diff) and
// z_a^2 - 3 q0 (kind QRoot). Variables are 0-based indices.
struct MPFactor {
    enum Kind { Diff, QRoot } kind;
    int a;
    int b; // unused for QRoot
};

inline MultiPoly mp_factor(const MPFactor& f, int nvars) {
    MultiPoly r(nvars);
    MultiPoly::Key k(nvars, 0);
    k[f.a] = 2;
    r.add_term(k, CoeffFrac(1));
    k[f.a] = 0;
    if (f.kind == MPFactor::Diff) {
        k[f.b] = 2;
        r.add_term(k, CoeffFrac(-1));
    } else {
        r.add_term(k, CoeffFrac::monomial(BigRational(-3), 1));
    }
    return r;
}

// Exact division by a factor; throws consistency_error when the division
// leaves a remainder. The divisor is monic of degree 2 in z_a, so the
// quotient is produced by peeling the top z_a-degree group repeatedly.
inline MultiPoly mp_divexact(const MultiPoly& p, const MPFactor& f) {
    if (p.is_zero()) return p;
    MultiPoly rem = p;
    MultiPoly quo(p.nvars());
    int min_exp = 0;
    for (const auto& [k, c] : p.terms()) min_exp = std::min(min_exp, k[f.a]);
    while (!rem.is_zero()) {
        int top = min_exp;
        for (const auto& [k, c] : rem.terms()) top = std::max(top, k[f.a]);
        if (top < min_exp + 2) {
            // Cannot be a multiple once the degree window is exhausted.
            throw consistency_error("mp_divexact: factor does not divide the polynomial");
        }
        MultiPoly group(p.nvars());
        for (const auto& [k, c] : rem.terms()) {
            if (k[f.a] != top) continue;
            MultiPoly::Key kk = k;
            kk[f.a] = top - 2;
            group.add_term(kk, c);
        }
        quo += group;
        // rem -= group * (z_a^2 - ...): the z_a^2 part cancels the top
        // group exactly, so only the second product term survives.
        if (f.kind == MPFactor::Diff)
            rem += group.shifted(f.b, 2);
        else
            rem += group.scaled(CoeffFrac::monomial(BigRational(3), 1));
        for (const auto& [k, c] : group.terms()) {
            MultiPoly::Key kk = k;
            kk[f.a] = top;
            rem.add_term(kk, -c);
        }
    }
    return quo;
}

// Rational accumulator over a fixed ordered factor list. Terms are added
// with the powers of each factor in their denominator; everything is kept
// over the running least common denominator.
class MRat {
  public:
    MRat(int nvars, std::vector<MPFactor> factors)
        : nvars_(nvars), fs_(std::move(factors)), pow_(fs_.size(), 0), num_(nvars) {}

    const MultiPoly& num() const { return num_; }
    const std::vector<int>& powers() const { return pow_; }
    const std::vector<MPFactor>& factors() const { return fs_; }

    void add(MultiPoly term, const std::vector<int>& dpow) {
        if (dpow.size() != fs_.size()) throw domain_error("MRat: factor power size mismatch");
        // Lift both the accumulator and the incoming term to the common
        // denominator before adding.
        for (size_t i = 0; i < fs_.size(); ++i) {
            if (dpow[i] > pow_[i]) {
                const MultiPoly f = mp_factor(fs_[i], nvars_);
                for (int r = pow_[i]; r < dpow[i]; ++r) num_ *= f;
                pow_[i] = dpow[i];
            }
        }
        for (size_t i = 0; i < fs_.size(); ++i) {
            if (pow_[i] > dpow[i]) {
                const MultiPoly f = mp_factor(fs_[i], nvars_);
                for (int r = dpow[i]; r < pow_[i]; ++r) term *= f;
            }
        }
        num_ += term;
    }

    // Clear all denominator factors by exact division, certifying that
    // the accumulated sum has no pole at any tracked factor. Each QRoot
    // factor is additionally certified by checking that the numerator
    // vanishes identically at z_a = s and z_a = -s, which is the
    // statement that both branch values are regular points of the sum.
    MultiPoly reduced() const {
        MultiPoly n = num_;
        for (size_t i = 0; i < fs_.size(); ++i) {
            for (int r = 0; r < pow_[i]; ++r) {
                if (fs_[i].kind == MPFactor::QRoot) {
                    auto [ev, od] = n.eval_var_at_s(fs_[i].a);
                    TOPREC_CHECK(ev.is_zero() && od.is_zero(),
                                 "MRat: numerator does not vanish at the branch point");
                }
                n = mp_divexact(n, fs_[i]);
            }
        }
        return n;
    }

    friend bool operator==(const MRat& a, const MRat& b) {
        if (a.nvars_ != b.nvars_ || a.fs_.size() != b.fs_.size())
            throw domain_error("MRat: comparing accumulators over different contexts");
        // Cross-multiply up to the common denominator.
        MultiPoly na = a.num_;
        MultiPoly nb = b.num_;
        for (size_t i = 0; i < a.fs_.size(); ++i) {
            const MultiPoly f = mp_factor(a.fs_[i], a.nvars_);
            for (int r = a.pow_[i]; r < b.pow_[i]; ++r) na *= f;
            for (int r = b.pow_[i]; r < a.pow_[i]; ++r) nb *= f;
        }
        return na == nb;
    }

  private:
    int nvars_;
    std::vector<MPFactor> fs_;
    std::vector<int> pow_;
    MultiPoly num_;
};

} // namespace toprec
