#pragma once
// Open free energies F_{g,n} (per-variable primitives of the correlators
// that vanish at infinity), their principal specialization S_m, and the
// function identities relating them: the difference recursion satisfied
// by the F's, the edge functions G_{g,n} and E_{g,n}, and the diagonal
// identities that feed the Riccati form of the quantum curve.

#include <initializer_list>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "toprec/coeff.hpp"
#include "toprec/curve.hpp"
#include "toprec/errors.hpp"
#include "toprec/multipoly.hpp"
#include "toprec/recursion.hpp"
#include "toprec/symtable.hpp"
#include "toprec/zpoly.hpp"

namespace toprec {

// F_{g,n} integrates W_{g,n} once in each variable with the constant
// fixed by decay at z = infinity. All correlator exponents are at most
// -2, so the per-slot map v -> v + 1 never produces a logarithm.
inline SymTable open_f_table(WStore& store, int g, int n) {
    return store.get(g, n).map_all_slots([](int v) {
        return std::pair<int, CoeffFrac>(v + 1, CoeffFrac(BigRational(1, v + 1)));
    });
}

namespace detail {

// Slot-1 derivative with the first argument split off: for each
// remaining multiset mu the Laurent polynomial in the split variable u
// collecting c * v * u^(v-1) over decompositions key = {v} + mu.
inline std::map<SymKey, ZLaurentPoly> d1_profiles(const SymTable& t) {
    std::map<SymKey, ZLaurentPoly> out;
    const auto profs = t.slot_profiles(1);
    for (const auto& [mu, pol] : profs) out.emplace(mu, pol.dz());
    return out;
}

// Mixed second derivative in the first two slots restricted to the
// diagonal u1 = u2 = u: for each remaining mu, the sum over ordered
// value pairs (v1, v2) removable from the key of c * v1 * v2 * u^(v1+v2-2).
inline std::map<SymKey, ZLaurentPoly> d2_diag_profiles(const SymTable& t) {
    if (t.slots() < 2) throw domain_error("d2_diag_profiles: needs at least two slots");
    std::map<SymKey, ZLaurentPoly> out;
    for (const auto& [key, c] : t.terms()) {
        int prev1 = 0;
        bool first1 = true;
        for (size_t i = 0; i < key.size(); ++i) {
            const int v1 = key[i];
            if (!first1 && v1 == prev1) continue;
            first1 = false;
            prev1 = v1;
            const SymKey rest = sym_key_remove(key, v1);
            int prev2 = 0;
            bool first2 = true;
            for (size_t j = 0; j < rest.size(); ++j) {
                const int v2 = rest[j];
                if (!first2 && v2 == prev2) continue;
                first2 = false;
                prev2 = v2;
                out[sym_key_remove(rest, v2)].add_term(
                    v1 + v2 - 2, c * CoeffFrac(v1) * CoeffFrac(v2));
            }
        }
    }
    return out;
}

// The second-derivative bracket of the recursion with k spectator slots:
//   block[mu](u) = d2_diag of F_{g-1, k+2}
//               + sum over stable g1 + g2 = g and mu1 + mu2 = mu of
//                 d1 F_{g1,|mu1|+1}(u) * d1 F_{g2,|mu2|+1}(u),
// the multiset merge carrying the count of variable splittings.
inline std::map<SymKey, ZLaurentPoly> second_derivative_block(WStore& store, int g, int k) {
    std::map<SymKey, ZLaurentPoly> out;
    if (g >= 1 && stable_pair(g - 1, k + 2))
        out = d2_diag_profiles(open_f_table(store, g - 1, k + 2));
    for (int g1 = 0; g1 <= g; ++g1) {
        for (int a = 0; a <= k; ++a) {
            const int g2 = g - g1;
            const int b = k - a;
            if (!stable_pair(g1, a + 1) || !stable_pair(g2, b + 1)) continue;
            const auto p1 = d1_profiles(open_f_table(store, g1, a + 1));
            const auto p2 = d1_profiles(open_f_table(store, g2, b + 1));
            for (const auto& [mu1, f1] : p1) {
                for (const auto& [mu2, f2] : p2) {
                    SymKey nu = mu1;
                    nu.insert(nu.end(), mu2.begin(), mu2.end());
                    nu = sym_sorted(nu);
                    const CoeffFrac mult(BigRational(sym_merge_multiplicity(mu1, nu)));
                    out[nu] += (f1 * f2).scaled(mult);
                }
            }
        }
    }
    return out;
}

// Evaluate profile polynomials at the branch point u = s. Any surviving
// odd part would leave a factor of s in a quantity that must live in the
// base field, so it is an internal consistency failure.
inline std::map<SymKey, CoeffFrac> profiles_at_s(const std::map<SymKey, ZLaurentPoly>& m) {
    std::map<SymKey, CoeffFrac> out;
    for (const auto& [mu, pol] : m) {
        const SExtended v = pol.eval_s();
        TOPREC_CHECK(v.od.is_zero(), "profiles_at_s: odd part survives at the branch point");
        if (!v.ev.is_zero()) out.emplace(mu, v.ev);
    }
    return out;
}

// Monomial symmetric expansion of a multiset over explicit variables.
inline MultiPoly expand_multiset(const SymKey& mu, const std::vector<int>& vars, int nvars) {
    if (mu.size() != vars.size())
        throw domain_error("expand_multiset: multiset and variable list differ in size");
    MultiPoly out(nvars);
    SymKey perm = sym_sorted(mu);
    if (perm.empty()) {
        out.add_term(MultiPoly::Key(nvars, 0), CoeffFrac(1));
        return out;
    }
    do {
        MultiPoly::Key k(nvars, 0);
        for (size_t i = 0; i < perm.size(); ++i) k[vars[i]] += perm[i];
        out.add_term(k, CoeffFrac(1));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// Symmetric table written out as an explicit Laurent polynomial in the
// given variables.
inline MultiPoly expand_table(const SymTable& t, const std::vector<int>& vars, int nvars) {
    if (static_cast<int>(vars.size()) != t.slots())
        throw domain_error("expand_table: variable list does not match slot count");
    MultiPoly out(nvars);
    for (const auto& [key, c] : t.terms()) out += expand_multiset(key, vars, nvars).scaled(c);
    return out;
}

// Univariate Laurent polynomial placed on one context variable.
inline MultiPoly embed_zpoly(const ZLaurentPoly& p, int var, int nvars) {
    MultiPoly out(nvars);
    for (const auto& [e, c] : p.terms()) {
        MultiPoly::Key k(nvars, 0);
        k[var] = e;
        out.add_term(k, c);
    }
    return out;
}

// Profile map with the split variable sent to uvar and the remaining
// multisets expanded over vars.
inline MultiPoly embed_profiles(const std::map<SymKey, ZLaurentPoly>& m, int uvar,
                                const std::vector<int>& vars, int nvars) {
    MultiPoly out(nvars);
    for (const auto& [mu, pol] : m)
        out += embed_zpoly(pol, uvar, nvars) * expand_multiset(mu, vars, nvars);
    return out;
}

// Profile values at the branch point expanded over vars.
inline MultiPoly embed_profiles_s(const std::map<SymKey, CoeffFrac>& m,
                                  const std::vector<int>& vars, int nvars) {
    MultiPoly out(nvars);
    for (const auto& [mu, c] : m) out += expand_multiset(mu, vars, nvars).scaled(c);
    return out;
}

// Diagonal restriction of branch point profile data:
// sum over mu of c_mu * (number of distinct orderings) * z^(sum mu).
inline ZLaurentPoly diag_from_s_profiles(const std::map<SymKey, CoeffFrac>& m) {
    ZLaurentPoly out;
    for (const auto& [mu, c] : m) {
        const int sum = std::accumulate(mu.begin(), mu.end(), 0);
        out.add_term(sum, c * CoeffFrac(sym_orderings_count(mu)));
    }
    return out;
}

inline CoeffFrac inv_factorial(int n) {
    CoeffFrac r(1);
    for (int i = 2; i <= n; ++i) r *= CoeffFrac(BigRational(1, i));
    return r;
}

} // namespace detail

// Difference recursion for the open free energies, 2g - 2 + n >= 2:
// d/dz_1 F_{g,n} is reproduced from lower tables through pairings over
// the two sheets plus a branch point term. The right-hand side is
// accumulated over the common denominator built from the fixed factors
// z_1^2 - z_j^2 and z_i^2 - 3 q0, every factor is certified to divide
// the numerator exactly (so each apparent pole cancels, including both
// points z_i = +-s), and the cleared numerator is compared with the
// expanded derivative. The residual form returns their difference,
// which is identically zero exactly when the identity holds.
inline MultiPoly diffrec_residual(WStore& store, int g, int n) {
    if (!stable_pair(g, n) || 2 * g - 2 + n < 2)
        throw domain_error("diffrec_residual: needs 2g - 2 + n >= 2");
    const int nv = n;
    std::vector<MPFactor> fs;
    for (int j = 1; j < n; ++j) fs.push_back({MPFactor::Diff, 0, j});
    for (int i = 0; i < n; ++i) fs.push_back({MPFactor::QRoot, i, 0});
    const auto diff_idx = [&](int j) { return j - 1; };
    const auto qroot_idx = [&](int i) { return (n - 1) + i; };

    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    std::vector<int> rest(all.begin() + 1, all.end());

    const MultiPoly lhs = detail::expand_table(open_f_table(store, g, n), all, nv).derivative(0);

    MRat rhs(nv, fs);
    const CoeffFrac res_fac = branch_residue_factor();

    if (n >= 2) {
        const SymTable fm = open_f_table(store, g, n - 1);
        const auto d1s = detail::profiles_at_s(detail::d1_profiles(fm));
        for (int j = 1; j < n; ++j) {
            std::vector<int> keep0 = {0};
            std::vector<int> keep;
            for (int i = 1; i < n; ++i) {
                if (i == j) continue;
                keep0.push_back(i);
                keep.push_back(i);
            }
            std::vector<int> pw(fs.size(), 0);
            // -2 z_j / ((z_1^2 - z_j^2) 8 z_1^2 (z_1^2 - 3 q0)) * d/dz_1 F(z_1, rest without j)
            MultiPoly a = detail::expand_table(fm, keep0, nv)
                              .derivative(0)
                              .shifted(0, -2)
                              .shifted(j, 1)
                              .scaled(CoeffFrac(BigRational(-1, 4)));
            pw[diff_idx(j)] = 1;
            pw[qroot_idx(0)] = 1;
            rhs.add(std::move(a), pw);
            // +2 z_j / ((z_1^2 - z_j^2) 8 z_j^2 (z_j^2 - 3 q0)) * d/dz_j F(rest)
            MultiPoly b = detail::expand_table(fm, rest, nv)
                              .derivative(j)
                              .shifted(j, -1)
                              .scaled(CoeffFrac(BigRational(1, 4)));
            std::fill(pw.begin(), pw.end(), 0);
            pw[diff_idx(j)] = 1;
            pw[qroot_idx(j)] = 1;
            rhs.add(std::move(b), pw);
            // branch point j-term: -2 z_j / ((z_j^2 - 3 q0)(z_1^2 - 3 q0) 24 q0)
            //                      * d1 F at u = s with spectators rest without j
            MultiPoly c = detail::embed_profiles_s(d1s, keep, nv)
                              .shifted(j, 1)
                              .scaled(res_fac * CoeffFrac(-2));
            std::fill(pw.begin(), pw.end(), 0);
            pw[qroot_idx(0)] = 1;
            pw[qroot_idx(j)] = 1;
            rhs.add(std::move(c), pw);
        }
    }

    const auto block = detail::second_derivative_block(store, g, n - 1);
    {
        // -1 / (8 z_1^2 (z_1^2 - 3 q0)) * block at u = z_1
        MultiPoly bm = detail::embed_profiles(block, 0, rest, nv)
                           .shifted(0, -2)
                           .scaled(CoeffFrac(BigRational(-1, 8)));
        std::vector<int> pw(fs.size(), 0);
        pw[qroot_idx(0)] = 1;
        rhs.add(std::move(bm), pw);
        // + block at u = s over 24 q0 (z_1^2 - 3 q0)
        MultiPoly bs = detail::embed_profiles_s(detail::profiles_at_s(block), rest, nv)
                           .scaled(res_fac);
        std::fill(pw.begin(), pw.end(), 0);
        pw[qroot_idx(0)] = 1;
        rhs.add(std::move(bs), pw);
    }

    return rhs.reduced() - lhs;
}

inline bool diffrec_check(WStore& store, int g, int n) {
    return diffrec_residual(store, g, n).is_zero();
}

// E_{g,n} gathers the t-derivative of F_{g,n} from the tables: sheet
// terms in each variable plus branch point terms mirroring the
// recursion. Defined for 2g - 2 + n >= 1.
inline MultiPoly e_residual(WStore& store, int g, int n) {
    if (!stable_pair(g, n)) throw domain_error("e_residual: needs a stable (g, n)");
    const int nv = n;
    std::vector<MPFactor> fs;
    for (int i = 0; i < n; ++i) fs.push_back({MPFactor::QRoot, i, 0});

    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);

    const SymTable f = open_f_table(store, g, n);
    const MultiPoly lhs = detail::expand_table(dt_fixed_x_table(f), all, nv);

    MRat rhs(nv, fs);
    const CoeffFrac res_fac = branch_residue_factor();
    const MultiPoly ff = detail::expand_table(f, all, nv);
    const auto d1s = detail::profiles_at_s(detail::d1_profiles(f));
    for (int j = 0; j < n; ++j) {
        std::vector<int> pw(fs.size(), 0);
        pw[j] = 1;
        // 1 / (4 z_j (z_j^2 - 3 q0)) * d/dz_j F
        rhs.add(ff.derivative(j).shifted(j, -1).scaled(CoeffFrac(BigRational(1, 4))), pw);
        // -2 z_j / (24 q0 (z_j^2 - 3 q0)) * d1 F at u = s, spectators without j
        std::vector<int> keep;
        for (int i = 0; i < n; ++i)
            if (i != j) keep.push_back(i);
        rhs.add(detail::embed_profiles_s(d1s, keep, nv)
                    .shifted(j, 1)
                    .scaled(res_fac * CoeffFrac(-2)),
                pw);
    }
    {
        const auto bs = detail::profiles_at_s(detail::second_derivative_block(store, g, n));
        std::vector<int> pw(fs.size(), 0);
        rhs.add(detail::embed_profiles_s(bs, all, nv).scaled(res_fac), pw);
    }

    return rhs.reduced() - lhs;
}

inline bool e_check(WStore& store, int g, int n) { return e_residual(store, g, n).is_zero(); }

// G_{g,n} on the diagonal z_1 = .. = z_n = z through its branch point
// representation; needs 2g - 2 + n >= 2.
inline ZRationalFn g_diag(WStore& store, int g, int n) {
    if (!stable_pair(g, n) || 2 * g - 2 + n < 2)
        throw domain_error("g_diag: needs 2g - 2 + n >= 2");
    const ZRationalFn x2((x_minus_q0()));
    ZRationalFn sum(0);
    if (n >= 2) {
        const ZLaurentPoly d1 = detail::diag_from_s_profiles(
            detail::profiles_at_s(detail::d1_profiles(open_f_table(store, g, n - 1))));
        sum += ZRationalFn(d1.shifted(1).scaled(CoeffFrac(-2 * (n - 1)))) / x2;
    }
    sum += ZRationalFn(detail::diag_from_s_profiles(
        detail::profiles_at_s(detail::second_derivative_block(store, g, n - 1))));
    return sum * ZRationalFn(branch_residue_factor()) / x2;
}

// E_{g,n} on the diagonal; needs 2g - 2 + n >= 1. The variable sum of
// first derivatives collapses to d/dz of the diagonal restriction.
inline ZRationalFn e_diag(WStore& store, int g, int n) {
    if (!stable_pair(g, n)) throw domain_error("e_diag: needs a stable (g, n)");
    const SymTable f = open_f_table(store, g, n);
    const ZRationalFn x2((x_minus_q0()));
    const CoeffFrac res_fac = branch_residue_factor();
    ZRationalFn out =
        ZRationalFn(f.eval_all_diagonal().dz().shifted(-1).scaled(CoeffFrac(BigRational(1, 4)))) /
        x2;
    const ZLaurentPoly d1 =
        detail::diag_from_s_profiles(detail::profiles_at_s(detail::d1_profiles(f)));
    out += ZRationalFn(d1.shifted(1).scaled(res_fac * CoeffFrac(-2 * n))) / x2;
    out += ZRationalFn(detail::diag_from_s_profiles(
                           detail::profiles_at_s(detail::second_derivative_block(store, g, n)))
                           .scaled(res_fac));
    return out;
}

// Principal specialization: S_m = sum over 2g - 2 + n = m - 1 of
// F_{g,n}(z, .., z) / n! for m >= 2. Every term decays at infinity.
inline ZLaurentPoly s_principal(WStore& store, int m) {
    if (m < 2) throw domain_error("s_principal: defined for m >= 2");
    ZLaurentPoly out;
    for (int n = 1; n <= m + 1; ++n) {
        const int twice_g = m + 1 - n;
        if (twice_g < 0 || twice_g % 2 != 0) continue;
        const int g = twice_g / 2;
        if (!stable_pair(g, n)) continue;
        out += open_f_table(store, g, n).eval_all_diagonal().scaled(detail::inv_factorial(n));
    }
    for (const auto& [e, c] : out.terms())
        TOPREC_CHECK(e < 0, "s_principal: non-decaying term in the principal specialization");
    return out;
}

// x-derivatives d S_m / dx including the two unstable orders, which are
// fixed by the curve and by the Bergman kernel: S_0' = y and
// S_1' = -1/(4 z^2).
inline ZLaurentPoly s_prime(WStore& store, int m) {
    if (m < 0) throw domain_error("s_prime: negative order");
    if (m == 0) return curve_y();
    if (m == 1) return ZLaurentPoly::monomial(CoeffFrac(BigRational(-1, 4)), -2);
    return s_principal(store, m).dx();
}

// t-derivatives at fixed x, with the unstable orders d S_0/dt = z and
// d S_1/dt = 1/(24 q0 z^2).
inline ZLaurentPoly s_t(WStore& store, int m) {
    if (m < 0) throw domain_error("s_t: negative order");
    if (m == 0) return ZLaurentPoly::z_power(1);
    if (m == 1) return ZLaurentPoly::monomial(branch_residue_factor(), -2);
    return s_principal(store, m).dt_fixed_x();
}

// Riccati form of the diagonal G sum at Euler characteristic m >= 2:
// (2y/x') sum over 2g-2+n = m of G_{g,n}(z,..,z)/(n-1)! equals
// sum_{a+b=m+1} S_a' S_b' + S_m'' - S_m'/(x - q0).
inline ZRationalFn partial_riccati_residual(WStore& store, int m) {
    if (m < 2) throw domain_error("partial_riccati_residual: needs m >= 2");
    ZRationalFn lhs(0);
    for (int n = 1; n <= m + 2; ++n) {
        const int twice_g = m + 2 - n;
        if (twice_g < 0 || twice_g % 2 != 0) continue;
        const int g = twice_g / 2;
        if (!stable_pair(g, n)) continue;
        lhs += g_diag(store, g, n) * ZRationalFn(detail::inv_factorial(n - 1));
    }
    lhs *= ZRationalFn(two_y_over_xprime());
    ZRationalFn rhs(0);
    for (int a = 0; a <= m + 1; ++a)
        rhs += ZRationalFn(s_prime(store, a)) * ZRationalFn(s_prime(store, m + 1 - a));
    rhs += ZRationalFn(s_prime(store, m).dx());
    rhs -= ZRationalFn(s_prime(store, m)) / ZRationalFn(x_minus_q0());
    return lhs - rhs;
}

inline bool partial_riccati_check(WStore& store, int m) {
    return partial_riccati_residual(store, m).is_zero();
}

// Pointwise form of the G and E comparison, n >= 2 and 2g - 2 + n >= 2:
// (2y/x') G_{g,n}(diag) - 2 E_{g,n-1}(diag) == -d/dz[F_{g,n-1}(diag)] / (2z (z^2 - 3q0)).
inline ZRationalFn principal_g_e_pointwise_residual(WStore& store, int g, int n) {
    if (n < 2 || 2 * g - 2 + n < 2)
        throw domain_error("principal_g_e_pointwise_residual: needs n >= 2 and 2g - 2 + n >= 2");
    const ZRationalFn lhs = ZRationalFn(two_y_over_xprime()) * g_diag(store, g, n) -
                            ZRationalFn(CoeffFrac(2)) * e_diag(store, g, n - 1);
    const ZLaurentPoly fd = open_f_table(store, g, n - 1).eval_all_diagonal();
    const ZRationalFn rhs =
        -(ZRationalFn(fd.dz().shifted(-1).scaled(CoeffFrac(BigRational(1, 2)))) /
          ZRationalFn(x_minus_q0()));
    return lhs - rhs;
}

inline bool principal_g_e_pointwise_check(WStore& store, int g, int n) {
    return principal_g_e_pointwise_residual(store, g, n).is_zero();
}

// Summed form at Euler characteristic m >= 2:
// sum_{2g-2+n=m, n>=2} [(2y/x') G_{g,n}(diag) - 2 E_{g,n-1}(diag)]/(n-1)!
//   == -S_m' / (x - q0).
inline ZRationalFn principal_g_e_sum_residual(WStore& store, int m) {
    if (m < 2) throw domain_error("principal_g_e_sum_residual: needs m >= 2");
    ZRationalFn acc(0);
    for (int n = 2; n <= m + 2; ++n) {
        const int twice_g = m + 2 - n;
        if (twice_g < 0 || twice_g % 2 != 0) continue;
        const int g = twice_g / 2;
        if (!stable_pair(g, n)) continue;
        const ZRationalFn w((detail::inv_factorial(n - 1)));
        acc += (ZRationalFn(two_y_over_xprime()) * g_diag(store, g, n) -
                ZRationalFn(CoeffFrac(2)) * e_diag(store, g, n - 1)) *
               w;
    }
    return acc + ZRationalFn(s_prime(store, m)) / ZRationalFn(x_minus_q0());
}

inline bool principal_g_e_sum_check(WStore& store, int m) {
    return principal_g_e_sum_residual(store, m).is_zero();
}

// The matching E sum reproduces the t-derivative of S_m:
// sum_{2g-2+n=m, n>=2} 2 E_{g,n-1}(diag)/(n-1)! == 2 dS_m/dt, m >= 2.
inline ZRationalFn e_sum_dt_residual(WStore& store, int m) {
    if (m < 2) throw domain_error("e_sum_dt_residual: needs m >= 2");
    ZRationalFn acc(0);
    for (int n = 2; n <= m + 2; ++n) {
        const int twice_g = m + 2 - n;
        if (twice_g < 0 || twice_g % 2 != 0) continue;
        const int g = twice_g / 2;
        if (!stable_pair(g, n)) continue;
        acc += e_diag(store, g, n - 1) *
               ZRationalFn(detail::inv_factorial(n - 1) * CoeffFrac(2));
    }
    return acc - ZRationalFn(s_t(store, m).scaled(CoeffFrac(2)));
}

inline bool e_sum_dt_check(WStore& store, int m) {
    return e_sum_dt_residual(store, m).is_zero();
}

// n = 1 closure for g >= 2: the derivative representation of G_{g,1}
// collapses at the branch point, (2y/x') G_{g,1} is the constant
// [d1d2 F_{g-1,2}(s,s) + sum d1 F_{g1,1}(s) d1 F_{g2,1}(s)] / (12 q0),
// and that constant equals 2 dF_g/dt. Three residuals, in that order.
inline std::vector<ZRationalFn> g1_residuals(WStore& store, int g) {
    if (g < 2) throw domain_error("g1_residuals: needs g >= 2");
    const auto block = detail::second_derivative_block(store, g, 0);
    const auto bs_map = detail::profiles_at_s(block);
    const auto it = bs_map.find(SymKey{});
    const CoeffFrac bs = it == bs_map.end() ? CoeffFrac(0) : it->second;

    // derivative representation at u = z_1
    ZLaurentPoly block_z;
    for (const auto& [mu, pol] : block) {
        TOPREC_CHECK(mu.empty(), "g1_check: spectator slots in an n = 1 block");
        block_z += pol;
    }
    const ZRationalFn route1 =
        ZRationalFn(open_f_table(store, g, 1).eval_all_diagonal().dz()) +
        inv_two_y_xprime() * ZRationalFn(block_z);
    const ZRationalFn route2 = g_diag(store, g, 1);

    const CoeffFrac explicit_form = bs * CoeffFrac::monomial(BigRational(1, 12), -1);
    return {route1 - route2,
            ZRationalFn(two_y_over_xprime()) * route2 - ZRationalFn(explicit_form),
            ZRationalFn(explicit_form - closed_F_dt(g, store) * CoeffFrac(2))};
}

inline bool g1_check(WStore& store, int g) {
    for (const ZRationalFn& r : g1_residuals(store, g))
        if (!r.is_zero()) return false;
    return true;
}

} // namespace toprec
