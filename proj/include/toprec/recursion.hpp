#pragma once
// Topological recursion for the correlators W_{g,n} of the spectral curve.
// The recursion integrates against the kernel at the single ramification
// point z = 0: with z1 the spectator point and z the integration variable,
//
//   W_{g,n}(z1, rest) = Res_{z=0} K(z1, z) B_{g,n}(z; rest),
//
//   B = -[ sum_j W_{g,n-1}(z, rest_j) ((z-z_j)^-2 + (z+z_j)^-2)
//          + W_{g-1,n+1}(z, z, rest)
//          + sum' W_{g1}(z, I) W_{g2}(z, J) ],
//
// where sum' runs over ordered stable splits g1+g2 = g, I disjoint-union
// J = rest. The unstable (0,2) pairings are the explicit double-pole
// factors in the first sum; (0,3) and (1,1), whose brackets consist purely
// of unstable pieces, are assembled directly from the double-pole series.
//
// Everything is organized per remaining-variable exponent multiset nu: the
// bracket restricted to nu is an even Laurent series in z (checked), the
// kernel contributes kappa_m(z1) z^(2m-1), and the residue pairs kappa_m
// with the z^(-2m) profile coefficient. Every coefficient of the result is
// checked for permutation symmetry, parity, pole bounds and homogeneity in
// q0 before the table is accepted.

#include <map>
#include <utility>
#include <vector>

#include "toprec/coeff.hpp"
#include "toprec/curve.hpp"
#include "toprec/errors.hpp"
#include "toprec/series.hpp"
#include "toprec/symtable.hpp"

namespace toprec {

inline bool stable_pair(int g, int n) { return g >= 0 && n >= 1 && 2 * g - 2 + n > 0; }

class WStore;
SymTable compute_W(int g, int n, WStore& store, int window);

// Lazily computed collection of correlator tables, keyed by (g, n). The
// window is the number of nonnegative z-orders carried through the bracket
// profiles beyond what the residue needs; results must not depend on it,
// which the regression suite checks by recomputing with a wider window.
class WStore {
  public:
    explicit WStore(int window = 4) : window_(window) {
        if (window < 1) throw domain_error("WStore: window must be positive");
    }

    int window() const { return window_; }

    const SymTable& get(int g, int n) {
        if (!stable_pair(g, n))
            throw domain_error("WStore: correlator requested outside the stable range");
        auto it = w_.find({g, n});
        if (it != w_.end()) return it->second;
        SymTable t = compute_W(g, n, *this, window_);
        return w_.emplace(std::make_pair(g, n), std::move(t)).first->second;
    }

    bool has(int g, int n) const { return w_.count({g, n}) != 0; }

    // Trusted insert used by the cache loader; the table still has to pass
    // the structural invariants.
    void put(int g, int n, SymTable t);

    const std::map<std::pair<int, int>, SymTable>& tables() const { return w_; }

  private:
    int window_;
    std::map<std::pair<int, int>, SymTable> w_;
};

namespace detail {

// Structural invariants every correlator table must satisfy: exponents
// even and at most -2, per-slot and total pole depth bounded by the genus
// and point count, and each coefficient a single power of q0 whose
// exponent is fixed by scaling weight.
inline void verify_w_invariants(int g, int n, const SymTable& t) {
    const int chi = 2 * g - 2 + n;
    const int per_slot = 3 * g - 2 + n;
    const int total = 3 * g - 3 + 2 * n;
    TOPREC_CHECK(5 * chi + n >= 0 && (5 * chi + n) % 2 == 0,
                 "correlator invariants: weight bookkeeping is inconsistent");
    const int weight_shift = (5 * chi + n) / 2;
    for (const auto& [key, c] : t.terms()) {
        int sum_half = 0;
        for (int e : key) {
            TOPREC_CHECK(e <= -2 && e % 2 == 0, "correlator invariants: exponent parity or sign");
            TOPREC_CHECK(-e / 2 <= per_slot, "correlator invariants: per-slot pole bound");
            sum_half += -e / 2;
        }
        TOPREC_CHECK(sum_half <= total, "correlator invariants: total pole bound");
        TOPREC_CHECK(c.is_elem() && c.elem().is_monomial(),
                     "correlator invariants: coefficient must be a q0 monomial");
        TOPREC_CHECK(c.elem().min_exp() == sum_half - weight_shift,
                     "correlator invariants: q0 weight");
    }
}

// Accumulator for bracket profiles: remaining-exponent multiset -> even
// Laurent series in the integration variable.
using ProfileMap = std::map<SymKey, ZSeries>;

inline ZSeries& profile_at(ProfileMap& m, const SymKey& nu, int window) {
    auto it = m.find(nu);
    if (it == m.end()) it = m.emplace(nu, ZSeries(SeriesVar::Z, 0, window)).first;
    return it->second;
}

// Bracket of the (1,1) correlator: only the unstable diagonal term
// contributes, and it folds to -1/(4 z^2).
inline ProfileMap bracket_11(int window) {
    ProfileMap m;
    ZSeries& p = profile_at(m, SymKey{}, window);
    p.add_term(-2, CoeffFrac(BigRational(-1, 4)));
    return m;
}

// Bracket of the (0,3) correlator: two products of double-pole series,
//   -[ (z - z2)^-2 (z + z3)^-2 + (z - z3)^-2 (z + z2)^-2 ].
// The coefficient attached to the ordered exponent pair
// (p, q) = (-(a+2), -(b+2)) is (a+1)(b+1)((-1)^a + (-1)^b) z^(a+b); odd
// z-orders vanish through the cancellation between the two products.
inline ProfileMap bracket_03(int window) {
    ProfileMap m;
    for (int a = 0; a < window; ++a) {
        for (int b = a; a + b < window; ++b) {
            long s = ((a % 2 == 0) ? 1 : -1) + ((b % 2 == 0) ? 1 : -1);
            const CoeffFrac v(BigRational(-(static_cast<long>(a) + 1) * (b + 1) * s));
            if (v.is_zero()) continue;
            SymKey nu = sym_sorted(SymKey{-(a + 2), -(b + 2)});
            profile_at(m, nu, window).add_term(a + b, v);
        }
    }
    return m;
}

// General bracket for stable (g, n) beyond the two base cases.
inline ProfileMap bracket_general(int g, int n, WStore& store, int window) {
    ProfileMap m;

    // Unstable pairings: W_{g,n-1}(z, rest_j) against the folded double
    // pole sum_{k even} 2 (k+1) z^k z_j^(-(k+2)). Summing over j turns the
    // z_j exponent into one more entry of the output multiset, weighted by
    // its multiplicity there.
    if (n >= 2) {
        const SymTable& t = store.get(g, n - 1);
        for (const auto& [mu, prof] : t.slot_profiles(1)) {
            for (const auto& [v, c] : prof.terms()) {
                for (int k = 0; v + k < window; k += 2) {
                    SymKey nu = mu;
                    nu.push_back(-(k + 2));
                    nu = sym_sorted(std::move(nu));
                    const CoeffFrac w =
                        c * CoeffFrac(BigRational(2L * (k + 1) * sym_key_mult(nu, -(k + 2))));
                    profile_at(m, nu, window).add_term(v + k, w);
                }
            }
        }
    }

    // Genus-lowering term: both marked slots of W_{g-1,n+1} at the
    // integration point.
    if (g >= 1 && stable_pair(g - 1, n + 1)) {
        const SymTable& t = store.get(g - 1, n + 1);
        for (const auto& [nu, prof] : t.slot_profiles(2)) {
            ZSeries& p = profile_at(m, nu, window);
            for (const auto& [v, c] : prof.terms()) p.add_term(v, c);
        }
    }

    // Stable splits, ordered in (g1, g2). The merge multiplicity counts
    // the ways to distribute the remaining points between the factors.
    for (int g1 = 0; g1 <= g; ++g1) {
        const int g2 = g - g1;
        for (int a = 0; a <= n - 1; ++a) {
            const int b = n - 1 - a;
            if (!stable_pair(g1, 1 + a) || !stable_pair(g2, 1 + b)) continue;
            const auto pa = store.get(g1, 1 + a).slot_profiles(1);
            const auto pb = store.get(g2, 1 + b).slot_profiles(1);
            for (const auto& [mu1, prof1] : pa) {
                for (const auto& [mu2, prof2] : pb) {
                    SymKey nu = mu1;
                    nu.insert(nu.end(), mu2.begin(), mu2.end());
                    nu = sym_sorted(std::move(nu));
                    const CoeffFrac mult(BigRational(sym_merge_multiplicity(mu1, nu)));
                    ZSeries& p = profile_at(m, nu, window);
                    for (const auto& [v1, c1] : prof1.terms())
                        for (const auto& [v2, c2] : prof2.terms())
                            p.add_term(v1 + v2, c1 * c2 * mult);
                }
            }
        }
    }

    for (auto& [nu, p] : m) p = -p;
    return m;
}

} // namespace detail

inline SymTable compute_W(int g, int n, WStore& store, int window) {
    if (!stable_pair(g, n)) throw domain_error("compute_W: outside the stable range");

    detail::ProfileMap profiles;
    if (g == 0 && n == 3)
        profiles = detail::bracket_03(window);
    else if (g == 1 && n == 1)
        profiles = detail::bracket_11(window);
    else
        profiles = detail::bracket_general(g, n, store, window);

    // Residue against the kernel. seen records every decomposition
    // (first-slot exponent, remaining multiset) of every key, zeros
    // included, so that permutation symmetry can be verified exactly: all
    // decompositions of a key must carry the same coefficient, and a key
    // must be reached through all of its decompositions.
    std::map<SymKey, CoeffFrac> seen;
    std::map<SymKey, int> decomp_count;
    for (const auto& [nu, prof] : profiles) {
        TOPREC_CHECK(prof.even_on_window(), "compute_W: bracket profile has odd z-orders");
        if (prof.is_zero() || prof.min_exp_or(1) > 0) continue;
        ZLaurentPoly amp;
        for (int mm = 0; -2 * mm >= prof.min_exp_or(1); ++mm) {
            const CoeffFrac c = prof.coeff(-2 * mm);
            if (c.is_zero()) continue;
            amp += kernel_kappa(mm).scaled(c);
        }
        for (const auto& [e1, c] : amp.terms()) {
            SymKey key = nu;
            key.push_back(e1);
            key = sym_sorted(std::move(key));
            ++decomp_count[key];
            auto it = seen.find(key);
            if (it == seen.end()) {
                seen.emplace(std::move(key), c);
            } else {
                TOPREC_CHECK(it->second == c, "compute_W: permutation symmetry violated");
            }
        }
    }

    SymTable out(n);
    for (const auto& [key, c] : seen) {
        if (c.is_zero()) continue;
        int distinct = 0;
        for (size_t i = 0; i < key.size(); ++i)
            if (i == 0 || key[i] != key[i - 1]) ++distinct;
        TOPREC_CHECK(decomp_count[key] == distinct,
                     "compute_W: key missing one of its decompositions");
        out.insert_checked(key, c);
    }

    detail::verify_w_invariants(g, n, out);
    return out;
}

inline void WStore::put(int g, int n, SymTable t) {
    if (!stable_pair(g, n)) throw domain_error("WStore: cannot store an unstable correlator");
    if (t.slots() != n) throw domain_error("WStore: slot count disagrees with n");
    detail::verify_w_invariants(g, n, t);
    w_[{g, n}] = std::move(t);
}

// ---------------------------------------------------------------------------
// Closed free energies.
// ---------------------------------------------------------------------------

// Genus 0: F_0 = -(48/5) q0^5.
inline CoeffFrac closed_F0() { return CoeffFrac::monomial(BigRational(-48, 5), 5); }

// Genus 1 is logarithmic, F_1 = -(1/24) log(-3 q0); only its t-derivative
// is rational: dF_1/dt = 1/(288 q0^2).
inline CoeffFrac closed_F1_dt() { return CoeffFrac::monomial(BigRational(1, 288), -2); }

// Genus g >= 2 from the dilaton-type residue against the primitive of
// y dx: F_g = 1/(2-2g) Res_{z=0} phi(z) W_{g,1}(z) dz, which picks out the
// z^(-4) and z^(-6) coefficients of W_{g,1}.
inline CoeffFrac closed_F(int g, WStore& store) {
    if (g < 2) throw domain_error("closed_F: use the dedicated genus 0 and 1 forms");
    const SymTable& w = store.get(g, 1);
    const CoeffFrac c2 = w.coeff(SymKey{-4});
    const CoeffFrac c3 = w.coeff(SymKey{-6});
    CoeffFrac r = CoeffFrac(BigRational(4, 5)) * c3 -
                  CoeffFrac::monomial(BigRational(4), 1) * c2;
    return r * CoeffFrac(BigRational(1, 2 - 2 * g));
}

// dF_g/dt for any genus: the closed forms below 2, the simple-pole slice
// of W_{g,1} from genus 2 on.
inline CoeffFrac closed_F_dt(int g, WStore& store) {
    if (g == 0) return d_dt(closed_F0());
    if (g == 1) return closed_F1_dt();
    return store.get(g, 1).coeff(SymKey{-2});
}

// ---------------------------------------------------------------------------
// Deformation of the correlators along t.
// ---------------------------------------------------------------------------

// Coefficientwise d/dt at frozen exponents.
inline SymTable dt_coeffwise(const SymTable& t) {
    SymTable r(t.slots());
    for (const auto& [k, c] : t.terms()) r.accumulate(k, d_dt(c));
    return r;
}

// Convert a correlator table to x-densities: divide each slot by
// dx/dz = 2 z.
inline SymTable x_density(const SymTable& t) {
    return t.map_all_slots([](int v) {
        return std::make_pair(v - 1, CoeffFrac(BigRational(1, 2)));
    });
}

// d/dt at fixed x applied to a table of x-densities: the coefficient
// derivative plus the motion term -(1/(12 q0 z_i)) d/dz_i in every slot.
inline SymTable dt_fixed_x_table(const SymTable& t) {
    SymTable r = dt_coeffwise(t);
    r += t.apply_per_var([](int v) {
        std::vector<std::pair<int, CoeffFrac>> out;
        if (v != 0) out.emplace_back(v - 2, CoeffFrac::monomial(BigRational(-v, 12), -1));
        return out;
    });
    return r;
}

// The t-variation identity: d/dt at fixed x of the x-density of W_{g,n}
// equals the x-density of the simple-pole slice of W_{g,n+1} in one extra
// point. Returns both sides for reporting; they must compare equal.
inline std::pair<SymTable, SymTable> variation_sides(int g, int n, WStore& store) {
    if (!stable_pair(g, n)) throw domain_error("variation_sides: outside the stable range");
    const SymTable lhs = dt_fixed_x_table(x_density(store.get(g, n)));

    const SymTable& wup = store.get(g, n + 1);
    SymTable slice(n);
    for (const auto& [mu, prof] : wup.slot_profiles(1)) slice.insert_checked(mu, prof.coeff(-2));
    return {lhs, x_density(slice)};
}

inline bool variation_check(int g, int n, WStore& store) {
    auto [lhs, rhs] = variation_sides(g, n, store);
    return lhs == rhs;
}

} // namespace toprec
