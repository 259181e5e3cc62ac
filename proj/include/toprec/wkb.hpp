#pragma once
// Differential equation side: the formal Painleve I solution on the
// equilibrium branch, the scalar Lax functions, the order-by-order
// Riccati expansion of the logarithmic derivative of the wave function,
// its parity structure and half integer asymptotics in x, and the
// comparisons against the spectral curve side (quantum curve, tau
// function, isomonodromy residue pairing).

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "toprec/coeff.hpp"
#include "toprec/curve.hpp"
#include "toprec/errors.hpp"
#include "toprec/hseries.hpp"
#include "toprec/openfe.hpp"
#include "toprec/series.hpp"
#include "toprec/zpoly.hpp"

namespace toprec {

// Formal solution q(t, h) = q0 + sum_{k>=1} h^{2k} q_{2k} of
// h^2 q'' = 6 q^2 + t on the branch with q0^2 = -t/6, together with
// p = h dq/dt and sigma = p^2/2 - 2 q^3 - t q. Order h^{2(k+1)} of the
// equation gives
//   q_{2(k+1)} = (q_{2k}'' - 6 sum_{k1+k2=k+1, ki>=1} q_{2k1} q_{2k2}) / (12 q0),
// and every coefficient is a rational multiple of a single power of q0,
// which is asserted as orders are produced.
class PainleveData {
  public:
    explicit PainleveData(int trunc) : trunc_(trunc), q_(0, trunc), p_(0, trunc), sigma_(0, trunc) {
        if (trunc < 1) throw domain_error("PainleveData: empty order window");
        std::vector<CoeffFrac> qs;
        qs.push_back(CoeffFrac::q0_power(1));
        const CoeffFrac inv12q0 = CoeffFrac::monomial(BigRational(1, 12), -1);
        for (int k = 1; 2 * k < trunc; ++k) {
            CoeffFrac acc = d_dt(d_dt(qs[k - 1]));
            for (int k1 = 1; k1 <= k - 1; ++k1) acc -= CoeffFrac(6) * qs[k1] * qs[k - k1];
            CoeffFrac qk = acc * inv12q0;
            TOPREC_CHECK(qk.is_monomial() && qk.elem().min_exp() == 1 - 5 * k,
                         "PainleveData: q coefficient is not the expected q0 monomial");
            qs.push_back(qk);
        }
        for (size_t k = 0; k < qs.size(); ++k) {
            q_.add_term(2 * static_cast<int>(k), ZRationalFn(qs[k]));
            p_.add_term(2 * static_cast<int>(k) + 1, ZRationalFn(d_dt(qs[k])));
        }
        const HSeries q3 = q_ * q_ * q_;
        sigma_ = (p_ * p_).scaled(ZRationalFn(CoeffFrac(BigRational(1, 2)))) -
                 q3.scaled(ZRationalFn(CoeffFrac(2))) - q_.scaled(ZRationalFn(curve_t()));
        sigma_.truncate_to(trunc);
        TOPREC_CHECK(sigma_.order_parity_part(1).is_zero(), "PainleveData: sigma has odd orders");
        for (int m = 0; m < trunc; m += 2) {
            const CoeffFrac s = constant_of(sigma_, m);
            TOPREC_CHECK(s.is_zero() || (s.is_monomial() && s.elem().min_exp() == 3 - 5 * (m / 2)),
                         "PainleveData: sigma coefficient is not the expected q0 monomial");
        }
    }

    int trunc() const { return trunc_; }
    const HSeries& q() const { return q_; }
    const HSeries& p() const { return p_; }
    const HSeries& sigma() const { return sigma_; }

    CoeffFrac q_coeff(int m) const { return constant_of(q_, m); }
    CoeffFrac p_coeff(int m) const { return constant_of(p_, m); }
    CoeffFrac sigma_coeff(int m) const { return constant_of(sigma_, m); }

  private:
    static CoeffFrac constant_of(const HSeries& h, int m) {
        const ZRationalFn c = h.coeff(m);
        const ZLaurentPoly& l = c.laurent();
        for (const auto& [e, v] : l.terms())
            if (e != 0) throw consistency_error("PainleveData: coefficient depends on z");
        return l.coeff(0);
    }

    int trunc_;
    HSeries q_;
    HSeries p_;
    HSeries sigma_;
};

// x - q(t, h); order zero is x - q0 = z^2 - 3 q0.
inline HSeries x_minus_q(const PainleveData& pd) {
    HSeries r = pd.q().scaled(ZRationalFn(CoeffFrac(-1)));
    r.add_term(0, ZRationalFn(curve_x()));
    return r;
}

// Scalar coefficient functions of the Riccati equation for hP:
//   hP^2 + h d/dx(hP) + f hP + g = 0,
// with f = -h/(x - q) and g = -(4x^3 + 2tx + 2 sigma) + h p/(x - q).
// f carries only odd orders and g only even ones.
inline HSeries lax_f(const PainleveData& pd) {
    HSeries f = x_minus_q(pd).inverse().shifted(1).scaled(ZRationalFn(CoeffFrac(-1)));
    f.truncate_to(pd.trunc());
    TOPREC_CHECK(f.order_parity_part(0).is_zero(), "lax_f: even orders appear");
    return f;
}

inline HSeries lax_g(const PainleveData& pd) {
    const ZLaurentPoly x = curve_x();
    ZLaurentPoly poly = x * x * x;
    poly.scale(CoeffFrac(4));
    poly += x.scaled(curve_t() * CoeffFrac(2));
    HSeries g(0, pd.trunc());
    g.add_term(0, ZRationalFn(poly.scaled(CoeffFrac(-1))));
    g -= pd.sigma().scaled(ZRationalFn(CoeffFrac(2)));
    g += (pd.p() * x_minus_q(pd).inverse()).shifted(1);
    g.truncate_to(pd.trunc());
    TOPREC_CHECK(g.order_parity_part(1).is_zero(), "lax_g: odd orders appear");
    return g;
}

// Residual of the Riccati equation for a candidate combination hP.
inline HSeries riccati_residual(const PainleveData& pd, const HSeries& hp) {
    HSeries r = hp * hp;
    r += hp.dx().shifted(1);
    r += lax_f(pd) * hp;
    r += lax_g(pd);
    return r;
}

// Order-by-order solution with P_0 = y fixed by the leading equation
// P_0^2 = -g_0. Each order divides by 2 P_0 = 4z (z^2 - 3 q0); the
// branch factor must clear from the result, and P_m flips z-parity with
// (-1)^(m+1). Both are asserted per order.
inline HSeries riccati_hp(const PainleveData& pd) {
    const int trunc = pd.trunc();
    const HSeries f = lax_f(pd);
    const HSeries g = lax_g(pd);
    HSeries hp(0, trunc);
    hp.add_term(0, ZRationalFn(curve_y()));
    const ZRationalFn inv2p0 = ZRationalFn(curve_y().scaled(CoeffFrac(2))).inverse();
    for (int m = 1; m < trunc; ++m) {
        ZRationalFn rhs(0);
        for (int a = 1; a <= m - 1; ++a) rhs += hp.coeff(a) * hp.coeff(m - a);
        rhs += hp.coeff(m - 1).dx();
        for (int k = 1; k <= m; k += 2) rhs += f.coeff(k) * hp.coeff(m - k);
        rhs += g.coeff(m);
        const ZRationalFn pm = -(rhs * inv2p0);
        TOPREC_CHECK(!pm.den().eval_s().is_zero(),
                     "riccati_hp: branch factor survives the division");
        TOPREC_CHECK(pm.subst_neg() == (m % 2 == 0 ? -pm : pm),
                     "riccati_hp: order has the wrong z-parity");
        hp.add_term(m, pm);
    }
    return hp;
}

// The z-even part of hP is the logarithmic x-derivative of
// hP_odd / (2 (x - q)), carrying one explicit power of h.
inline HSeries odd_even_residual(const PainleveData& pd, const HSeries& hp) {
    const HSeries ratio =
        hp.order_parity_part(0) * x_minus_q(pd).scaled(ZRationalFn(CoeffFrac(2))).inverse();
    HSeries rhs = hseries_log_dx(ratio).shifted(1);
    rhs.truncate_to(hp.trunc());
    HSeries lhs = hp.order_parity_part(1);
    lhs.truncate_to(rhs.trunc());
    return lhs - rhs;
}

inline bool odd_even_check(const PainleveData& pd, const HSeries& hp) {
    return odd_even_residual(pd, hp).is_zero();
}

// Exchange of the t- and x-derivatives at fixed x: the full combination
// moves p, the z-odd part closes on itself. Two residuals, in that order.
inline std::pair<HSeries, HSeries> dt_exchange_residuals(const PainleveData& pd,
                                                         const HSeries& hp) {
    const HSeries inv2xq = x_minus_q(pd).scaled(ZRationalFn(CoeffFrac(2))).inverse();
    HSeries lhs_full = hp.dt_fixed_x();
    HSeries rhs_full = ((hp - pd.p()) * inv2xq).dx();
    const int tr_full = std::min(lhs_full.trunc(), rhs_full.trunc());
    lhs_full.truncate_to(tr_full);
    rhs_full.truncate_to(tr_full);

    const HSeries podd = hp.order_parity_part(0);
    HSeries lhs_odd = podd.dt_fixed_x();
    HSeries rhs_odd = (podd * inv2xq).dx();
    const int tr_odd = std::min(lhs_odd.trunc(), rhs_odd.trunc());
    lhs_odd.truncate_to(tr_odd);
    rhs_odd.truncate_to(tr_odd);
    return {lhs_full - rhs_full, lhs_odd - rhs_odd};
}

inline bool dt_exchange_check(const PainleveData& pd, const HSeries& hp) {
    const auto [full, odd] = dt_exchange_residuals(pd, hp);
    return full.is_zero() && odd.is_zero();
}

// Greedy expansion in descending half integer powers of x at z = infinity:
// the basis function x^(j/2) = z^j (1 - 2 q0 zeta^2)^(j/2) with the
// largest remaining j is peeled off in turn. Coefficients are returned
// for every j >= j_min; the remainder is O(x^((j_min - 1)/2)).
inline std::map<int, CoeffFrac> x_asymptotics(const ZRationalFn& fn, int j_min) {
    const int trunc = -j_min + 1;
    ZetaSeries phi = expand_at_infinity(fn, trunc);
    std::map<int, CoeffFrac> out;
    while (!phi.is_zero() && phi.min_exp_or(trunc) <= -j_min) {
        const int e = phi.min_exp_or(trunc);
        const int j = -e;
        const CoeffFrac c = phi.coeff(e);
        out.emplace(j, c);
        ZetaSeries u(SeriesVar::Zeta, 2, std::max(trunc + j, 2));
        u.add_term(2, CoeffFrac::monomial(BigRational(-2), 1));
        ZetaSeries basis = puiseux_binomial(u, BigRational(j, 2)).shifted(-j);
        basis.truncate_to(trunc);
        phi -= basis.scaled(c);
    }
    return out;
}

namespace detail {

inline CoeffFrac asym_coeff(const std::map<int, CoeffFrac>& as, int j) {
    const auto it = as.find(j);
    return it == as.end() ? CoeffFrac(0) : it->second;
}

} // namespace detail

// Asymptotic template down to x^(-3/2):
//   P_0 ~ 2 x^(3/2) + (t/2) x^(-1/2) + (sigma_0/2) x^(-3/2) + O(x^-2)
//   P_1 ~ -(1/4) x^(-1) + O(x^-2)
//   P_m ~ (sigma_m/2) x^(-3/2) + O(x^-2)   for even m >= 2
//   P_m ~ O(x^-2)                          for odd m >= 3
// with every coefficient between the stated ones vanishing.
inline bool asymp_order_check(const PainleveData& pd, const HSeries& hp, int m) {
    const CoeffFrac half(BigRational(1, 2));
    const auto as = x_asymptotics(hp.coeff(m), -3);
    for (const auto& [j, c] : as)
        if (j > 3 && !c.is_zero()) return false;
    CoeffFrac e32(0), em12(0), em1(0), em32(0);
    if (m == 0) {
        e32 = CoeffFrac(2);
        em12 = curve_t() * half;
        em32 = pd.sigma_coeff(0) * half;
    } else if (m == 1) {
        em1 = CoeffFrac(BigRational(-1, 4));
    } else if (m % 2 == 0) {
        em32 = pd.sigma_coeff(m) * half;
    }
    if (detail::asym_coeff(as, 3) != e32) return false;
    if (!detail::asym_coeff(as, 2).is_zero()) return false;
    if (!detail::asym_coeff(as, 1).is_zero()) return false;
    if (!detail::asym_coeff(as, 0).is_zero()) return false;
    if (detail::asym_coeff(as, -1) != em12) return false;
    if (detail::asym_coeff(as, -2) != em1) return false;
    if (detail::asym_coeff(as, -3) != em32) return false;
    return true;
}

inline bool asymp_check(const PainleveData& pd, const HSeries& hp) {
    for (int m = 0; m < hp.trunc(); ++m)
        if (!asymp_order_check(pd, hp, m)) return false;
    return true;
}

// sigma_m recovered from the x^(-3/2) coefficient of order m.
inline CoeffFrac sigma_from_hp(const HSeries& hp, int m) {
    return detail::asym_coeff(x_asymptotics(hp.coeff(m), -3), -3) * CoeffFrac(2);
}

// The (1,1) entry of the gauge-transformed wave function combination:
// with A11 = p and A12 = 4 (x - q),
//   h W1 = hP + h * (A12 / (2 hP_odd)) d/dx[(hP - p)/A12].
inline HSeries jmu_w1(const PainleveData& pd, const HSeries& hp) {
    const HSeries a12 = x_minus_q(pd).scaled(ZRationalFn(CoeffFrac(4)));
    const HSeries corr = a12 * hp.order_parity_part(0).scaled(ZRationalFn(CoeffFrac(2))).inverse() *
                         ((hp - pd.p()) * a12.inverse()).dx();
    HSeries w1 = hp;
    w1 += corr.shifted(1);
    w1.truncate_to(hp.trunc());
    return w1;
}

// Isomonodromy residue pairing at even order m: [W1]_m has no x^(-1)
// term, and -2 Res_{x=inf} x^(1/2) [W1]_m reproduces sigma_m. The
// product with x^(1/2) shifts every half power up by one, so its x^(-1)
// coefficient is the j = -3 entry and the residue at infinity is minus
// that coefficient. Returns (x^(-1) coefficient of [W1]_m, pairing value).
inline std::pair<CoeffFrac, CoeffFrac> jmu_pairing(const PainleveData& pd, const HSeries& hp,
                                                   int m) {
    const HSeries w1 = jmu_w1(pd, hp);
    const auto as = x_asymptotics(w1.coeff(m), -3);
    const CoeffFrac res = -detail::asym_coeff(as, -3);
    return {detail::asym_coeff(as, -2), res * CoeffFrac(-2)};
}

inline bool jmu_check(const PainleveData& pd, const HSeries& hp, int m) {
    const auto [bad, pairing] = jmu_pairing(pd, hp, m);
    return bad.is_zero() && pairing == pd.sigma_coeff(m);
}

// Quantum curve: the x-derivatives of the principal specialization
// assemble into the same Riccati solution order by order, and the
// t-derivatives satisfy the shift identity
//   d/dt S = (h d/dx S - p) / (2 (x - q)).
inline bool quantum_curve_check(WStore& store, const PainleveData& pd, int trunc) {
    if (trunc > pd.trunc())
        throw truncation_error("quantum_curve_check: Painleve data window too small");
    HSeries hsx(0, trunc);
    for (int m = 0; m < trunc; ++m) hsx.add_term(m, ZRationalFn(s_prime(store, m)));
    if (!riccati_residual(pd, hsx).is_zero()) return false;
    HSeries hp = riccati_hp(pd);
    hp.truncate_to(trunc);
    if (hsx != hp) return false;
    HSeries hst(0, trunc);
    for (int m = 0; m < trunc; ++m) hst.add_term(m, ZRationalFn(s_t(store, m)));
    HSeries rhs = (hsx - pd.p()) * x_minus_q(pd).scaled(ZRationalFn(CoeffFrac(2))).inverse();
    rhs.truncate_to(trunc);
    return hst == rhs;
}

// The closed free energies drive the same constants: dF_g/dt equals
// sigma_{2g} for every g up to gmax.
inline bool tau_check(WStore& store, const PainleveData& pd, int gmax) {
    for (int g = 0; g <= gmax; ++g)
        if (closed_F_dt(g, store) != pd.sigma_coeff(2 * g)) return false;
    return true;
}

} // namespace toprec
