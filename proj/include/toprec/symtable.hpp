#pragma once
// Coefficient tables for symmetric rational functions of n points on the
// curve. A function W(z_1, ..., z_n) = sum_kappa c_kappa m_kappa, where
// m_kappa is the monomial symmetric function of the exponent multiset
// kappa (one term per distinct ordering), is stored as the map
// kappa -> c_kappa with kappa sorted ascending. Storing the coefficient
// per distinct ordering makes permutation symmetry a checkable invariant:
// any routine that produces the same sorted key along two different routes
// must produce the same coefficient, and insert_checked enforces that.

#include <algorithm>
#include <map>
#include <vector>

#include "toprec/coeff.hpp"
#include "toprec/errors.hpp"
#include "toprec/zpoly.hpp"

namespace toprec {

using SymKey = std::vector<int>;

inline SymKey sym_sorted(SymKey k) {
    std::sort(k.begin(), k.end());
    return k;
}

inline SymKey sym_key_remove(const SymKey& k, int v) {
    SymKey r;
    r.reserve(k.size() - 1);
    bool removed = false;
    for (int e : k) {
        if (!removed && e == v) {
            removed = true;
            continue;
        }
        r.push_back(e);
    }
    if (!removed) throw domain_error("sym_key_remove: value not present");
    return r;
}

inline int sym_key_mult(const SymKey& k, int v) {
    return static_cast<int>(std::count(k.begin(), k.end(), v));
}

// Number of distinct orderings of a multiset: n! / prod_v mult(v)!.
inline long sym_orderings_count(const SymKey& k) {
    long num = 1;
    for (size_t p = 1; p <= k.size(); ++p) num *= static_cast<long>(p);
    long den = 1;
    size_t run = 1;
    for (size_t p = 1; p <= k.size(); ++p) {
        if (p < k.size() && k[p] == k[p - 1]) {
            ++run;
        } else {
            for (size_t r = 2; r <= run; ++r) den *= static_cast<long>(r);
            run = 1;
        }
    }
    return num / den;
}

class SymTable {
  public:
    SymTable() : slots_(0) {}
    explicit SymTable(int slots) : slots_(slots) {
        if (slots < 1) throw domain_error("SymTable: needs at least one slot");
    }

    int slots() const { return slots_; }
    bool empty() const { return t_.empty(); }
    size_t size() const { return t_.size(); }
    const std::map<SymKey, CoeffFrac>& terms() const { return t_; }

    CoeffFrac coeff(const SymKey& key) const {
        auto it = t_.find(sym_sorted(key));
        return it == t_.end() ? CoeffFrac(0) : it->second;
    }

    // Insert a coefficient computed for one specific decomposition of the
    // key. A collision must agree exactly; disagreement means the stored
    // function is not permutation symmetric, which is a logic error.
    void insert_checked(const SymKey& key, const CoeffFrac& c) {
        require_size(key);
        SymKey k = sym_sorted(key);
        auto it = t_.find(k);
        if (it == t_.end()) {
            if (!c.is_zero()) t_.emplace(std::move(k), c);
        } else {
            TOPREC_CHECK(it->second == c, "SymTable: permutation symmetry violated on insert");
        }
    }

    void accumulate(const SymKey& key, const CoeffFrac& c) {
        if (c.is_zero()) return;
        require_size(key);
        SymKey k = sym_sorted(key);
        auto [it, fresh] = t_.emplace(std::move(k), c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    SymTable& operator+=(const SymTable& o) {
        if (o.slots_ != slots_) throw domain_error("SymTable: slot count mismatch");
        for (const auto& [k, c] : o.t_) accumulate(k, c);
        return *this;
    }

    SymTable scaled(const CoeffFrac& f) const {
        SymTable r(slots_);
        if (f.is_zero()) return r;
        for (const auto& [k, c] : t_) r.t_[k] = c * f;
        return r;
    }

    // Sum over all slots of a single-variable operator z^v -> sum f(v)
    // applied in that slot. f maps an exponent to (exponent, factor)
    // pairs. For each table key e, each distinct value v in e and each
    // image (v', w), the output key sort(e - v + v') receives
    // c_e * w * mult_out(v'), the multiplicity factor accounting for the
    // orderings that merge.
    template <class F>
    SymTable apply_per_var(F&& f) const {
        SymTable r(slots_);
        for (const auto& [e, c] : t_) {
            int prev = 0;
            bool first = true;
            for (size_t i = 0; i < e.size(); ++i) {
                const int v = e[i];
                if (!first && v == prev) continue;
                first = false;
                prev = v;
                for (const auto& [vp, w] : f(v)) {
                    SymKey out = sym_sorted(replace_one(e, i, vp));
                    r.accumulate(out, c * w * CoeffFrac(sym_key_mult(out, vp)));
                }
            }
        }
        return r;
    }

    // Apply an injective exponent map to every slot at once; the optional
    // per-slot factor multiplies once per slot.
    template <class F>
    SymTable map_all_slots(F&& f) const {
        SymTable r(slots_);
        for (const auto& [e, c] : t_) {
            SymKey out;
            out.reserve(e.size());
            CoeffFrac w = c;
            for (int v : e) {
                auto [vp, fac] = f(v);
                out.push_back(vp);
                w *= fac;
            }
            SymKey k = sym_sorted(out);
            TOPREC_CHECK(r.t_.find(k) == r.t_.end(),
                         "SymTable: map_all_slots image keys collide, map not injective");
            if (!w.is_zero()) r.t_.emplace(std::move(k), w);
        }
        return r;
    }

    // Evaluate every slot at the same point z (principal specialization):
    // each key contributes c * (number of distinct orderings) * z^(sum).
    ZLaurentPoly eval_all_diagonal() const {
        ZLaurentPoly out;
        for (const auto& [e, c] : t_) {
            int sum = 0;
            for (int v : e) sum += v;
            out.add_term(sum, c * CoeffFrac(sym_orderings_count(e)));
        }
        return out;
    }

    // Set r of the slots (r = 1 or 2) to the series variable z and keep
    // the remaining slots symbolic. Returns the z-profile attached to each
    // remaining-exponent multiset, with the stored coefficient still
    // counting once per distinct ordering of that multiset.
    std::map<SymKey, ZLaurentPoly> slot_profiles(int r) const {
        if (r != 1 && r != 2) throw domain_error("SymTable: slot_profiles supports r = 1 or 2");
        if (slots_ < r) throw domain_error("SymTable: not enough slots");
        std::map<SymKey, ZLaurentPoly> out;
        for (const auto& [e, c] : t_) {
            if (r == 1) {
                for_each_distinct(e, [&](size_t i, int v) {
                    out[remove_one(e, i)].add_term(v, c);
                });
            } else {
                // Ordered pairs of removable values: distinct values count
                // twice, a repeated value once per unordered pick.
                for_each_distinct(e, [&](size_t i, int v1) {
                    if (sym_key_mult(e, v1) >= 2) {
                        SymKey rest = remove_one(e, i);
                        out[sym_key_remove(rest, v1)].add_term(2 * v1, c);
                    }
                    for_each_distinct(e, [&](size_t, int v2) {
                        if (v2 <= v1) return;
                        SymKey rest = remove_one(e, i);
                        out[sym_key_remove(rest, v2)].add_term(v1 + v2, c * CoeffFrac(2));
                    });
                });
            }
        }
        for (auto it = out.begin(); it != out.end();) {
            if (it->second.is_zero())
                it = out.erase(it);
            else
                ++it;
        }
        return out;
    }

    friend bool operator==(const SymTable& a, const SymTable& b) {
        return a.slots_ == b.slots_ && a.t_ == b.t_;
    }
    friend bool operator!=(const SymTable& a, const SymTable& b) { return !(a == b); }

  private:
    void require_size(const SymKey& key) const {
        if (static_cast<int>(key.size()) != slots_)
            throw domain_error("SymTable: key size does not match slot count");
    }

    static SymKey remove_one(const SymKey& e, size_t i) {
        SymKey r;
        r.reserve(e.size() - 1);
        for (size_t p = 0; p < e.size(); ++p)
            if (p != i) r.push_back(e[p]);
        return r;
    }

    static SymKey replace_one(const SymKey& e, size_t i, int v) {
        SymKey r = e;
        r[i] = v;
        return r;
    }

    template <class F>
    static void for_each_distinct(const SymKey& e, F&& f) {
        for (size_t i = 0; i < e.size(); ++i) {
            if (i > 0 && e[i] == e[i - 1]) continue;
            f(i, e[i]);
        }
    }

    int slots_;
    std::map<SymKey, CoeffFrac> t_;
};

// All ways to split the slots of a sorted multiset nu into two groups
// realizing mu1 and mu2 as value multisets: the count is the product of
// binomials prod_v C(mult_nu(v), mult_mu1(v)). Used when merging two
// symmetric factors over a shared alphabet.
inline long sym_merge_multiplicity(const SymKey& mu1, const SymKey& nu) {
    auto choose = [](long n, long k) {
        long r = 1;
        for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
        return r;
    };
    long total = 1;
    size_t p = 0;
    while (p < nu.size()) {
        size_t q = p;
        while (q < nu.size() && nu[q] == nu[p]) ++q;
        total *= choose(static_cast<long>(q - p), sym_key_mult(mu1, nu[p]));
        p = q;
    }
    return total;
}

} // namespace toprec
