#pragma once
// Deterministic text, LaTeX, and JSON rendering for the algebra types.
// Terms are always ordered by descending z-exponent and then by descending
// q0-exponent, so repeated runs produce byte-identical output. Text and
// LaTeX can display either the z coordinate or the x coordinate, where
// z^2 = x + 2 q0 turns z-powers into half integer powers of (x + 2 q0)
// and branch factors z^2 - 3 q0 in denominators print as x - q0. JSON
// output always carries the z coordinate with big integers as decimal
// strings.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "toprec/coeff.hpp"
#include "toprec/curve.hpp"
#include "toprec/errors.hpp"
#include "toprec/hseries.hpp"
#include "toprec/multipoly.hpp"
#include "toprec/symtable.hpp"
#include "toprec/zpoly.hpp"

namespace toprec {

enum class Coord { Z, X };

namespace render_detail {

inline bool is_negative(const BigRational& r) { return r < BigRational(0); }

inline BigRational abs_val(const BigRational& r) { return is_negative(r) ? -r : r; }

// Signed term list joined with " + " / " - "; empty sums print as "0".
inline std::string join_terms(const std::vector<std::pair<bool, std::string>>& ts) {
    if (ts.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < ts.size(); ++i) {
        if (i == 0) {
            if (ts[i].first) out += "-";
        } else {
            out += ts[i].first ? " - " : " + ";
        }
        out += ts[i].second;
    }
    return out;
}

inline std::string text_q0(int k) {
    if (k == 1) return "q0";
    return "q0^" + std::to_string(k);
}

// z^e in the chosen coordinate; e = 0 yields an empty factor.
inline std::string text_zpow(int e, Coord coord) {
    if (e == 0) return "";
    if (coord == Coord::Z) {
        if (e == 1) return "z";
        return "z^" + std::to_string(e);
    }
    if (e % 2 == 0) {
        const int k = e / 2;
        if (k == 1) return "(x + 2*q0)";
        return "(x + 2*q0)^" + std::to_string(k);
    }
    return "(x + 2*q0)^(" + std::to_string(e) + "/2)";
}

// One monomial r * q0^a * <zpow>; the magnitude goes into the returned
// body and the sign into the flag.
inline std::pair<bool, std::string> text_monomial(const BigRational& r, int a, int e,
                                                  Coord coord) {
    const bool neg = is_negative(r);
    const BigRational mag = abs_val(r);
    std::vector<std::string> parts;
    if (!mag.is_one()) parts.push_back(mag.str());
    if (a != 0) parts.push_back(text_q0(a));
    const std::string zp = text_zpow(e, coord);
    if (!zp.empty()) parts.push_back(zp);
    if (parts.empty()) parts.push_back("1");
    std::string body = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) body += " * " + parts[i];
    return {neg, body};
}

} // namespace render_detail

inline std::string render_rational(const BigRational& r) { return r.str(); }

// Canonical text for a q0-polynomial, descending q0-exponent.
inline std::string render_elem(const CoeffElem& e) {
    std::vector<std::pair<bool, std::string>> ts;
    for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it)
        ts.push_back(render_detail::text_monomial(it->second, it->first, 0, Coord::Z));
    return render_detail::join_terms(ts);
}

inline std::string render_coeff(const CoeffFrac& c) {
    if (c.is_elem()) return render_elem(c.elem());
    return "(" + render_elem(c.num()) + ") / (" + render_elem(c.den()) + ")";
}

// Laurent polynomial text, descending z-exponent.
inline std::string render_poly(const ZLaurentPoly& p, Coord coord = Coord::Z) {
    std::vector<std::pair<bool, std::string>> ts;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const CoeffFrac& c = it->second;
        if (c.is_elem()) {
            const CoeffElem& el = c.elem();
            for (auto jt = el.terms().rbegin(); jt != el.terms().rend(); ++jt)
                ts.push_back(
                    render_detail::text_monomial(jt->second, jt->first, it->first, coord));
        } else {
            std::string body = "(" + render_coeff(c) + ")";
            const std::string zp = render_detail::text_zpow(it->first, coord);
            if (!zp.empty()) body += " * " + zp;
            ts.emplace_back(false, body);
        }
    }
    return render_detail::join_terms(ts);
}

namespace render_detail {

// Split den = (z^2 - 3 q0)^b * rest by exact division.
inline std::pair<int, ZLaurentPoly> peel_branch_factor(const ZLaurentPoly& den) {
    int b = 0;
    ZLaurentPoly rest = den;
    const ZLaurentPoly factor = x_minus_q0();
    while (rest.terms().size() >= 2) {
        ZLaurentPoly rem;
        ZLaurentPoly quo = detail::zpoly_divmod(rest, factor, &rem);
        if (!rem.is_zero()) break;
        rest = quo;
        ++b;
    }
    return {b, rest};
}

inline bool is_const_one(const ZLaurentPoly& p) {
    return p.terms().size() == 1 && p.terms().begin()->first == 0 &&
           p.terms().begin()->second.is_elem() && p.terms().begin()->second.elem().is_one();
}

} // namespace render_detail

inline std::string render_fn(const ZRationalFn& f, Coord coord = Coord::Z) {
    if (f.is_laurent()) return render_poly(f.laurent(), coord);
    if (coord == Coord::Z) return "(" + render_poly(f.num()) + ") / (" + render_poly(f.den()) + ")";
    auto [b, rest] = render_detail::peel_branch_factor(f.den());
    std::string den;
    if (b > 0) {
        den = "(x - q0)";
        if (b > 1) den += "^" + std::to_string(b);
    }
    if (!render_detail::is_const_one(rest) || b == 0) {
        if (!den.empty()) den += " * ";
        den += "(" + render_poly(rest, coord) + ")";
    }
    return "(" + render_poly(f.num(), coord) + ") / (" + den + ")";
}

// ---------------------------------------------------------------------------
// LaTeX output. Laurent data folds into a single fraction: one positive
// integer denominator times a q0-power times a z-power (or half integer
// (x + 2 q0)-power), numerator expanded with integer coefficients in
// descending powers, and an overall sign when every term is negative.
// ---------------------------------------------------------------------------

namespace render_detail {

struct LatexTriple {
    int zexp;
    int q0exp;
    BigRational r;
};

inline std::vector<LatexTriple> collect_triples(const ZLaurentPoly& p) {
    std::vector<LatexTriple> ts;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        if (!it->second.is_elem())
            throw domain_error("latex rendering needs polynomial q0 coefficients");
        const CoeffElem& el = it->second.elem();
        for (auto jt = el.terms().rbegin(); jt != el.terms().rend(); ++jt)
            ts.push_back({it->first, jt->first, jt->second});
    }
    return ts;
}

inline std::string latex_q0(int k) {
    if (k == 1) return "q_0";
    return "q_0^{" + std::to_string(k) + "}";
}

inline std::string latex_zpow(int e, Coord coord) {
    if (e == 0) return "";
    if (coord == Coord::Z) {
        if (e == 1) return "z";
        return "z^{" + std::to_string(e) + "}";
    }
    if (e % 2 == 0) {
        const int k = e / 2;
        if (k == 1) return "\\left(x + 2 q_0\\right)";
        return "\\left(x + 2 q_0\\right)^{" + std::to_string(k) + "}";
    }
    return "\\left(x + 2 q_0\\right)^{" + std::to_string(e) + "/2}";
}

struct LatexFraction {
    bool negative = false;
    std::string num;
    std::string den;

    std::string str() const {
        std::string out = negative ? "-" : "";
        if (den.empty()) return out + num;
        return out + "\\frac{" + num + "}{" + den + "}";
    }
};

// Fold the triples into the single-fraction normal form. Extra factors
// (rendered denominator pieces like (x - q_0)^2) are appended verbatim.
inline LatexFraction latex_fold(std::vector<LatexTriple> ts, Coord coord,
                                const std::string& extra_den) {
    LatexFraction out;
    if (ts.empty()) {
        out.num = "0";
        out.den = extra_den;
        return out;
    }
    BigRational d(1);
    for (const auto& t : ts) {
        const BigRational scaled = t.r * d;
        if (!scaled.is_integer()) d = d * BigRational::from_parts(scaled.den_str(), "1");
    }
    int a_min = 0;
    int e_min = 0;
    for (const auto& t : ts) {
        a_min = std::min(a_min, t.q0exp);
        e_min = std::min(e_min, t.zexp);
    }
    bool all_negative = true;
    for (const auto& t : ts)
        if (!is_negative(t.r)) all_negative = false;
    out.negative = all_negative;

    std::vector<std::pair<bool, std::string>> numterms;
    for (const auto& t : ts) {
        BigRational n = t.r * d;
        if (all_negative) n = -n;
        const bool neg = is_negative(n);
        const BigRational mag = abs_val(n);
        std::vector<std::string> parts;
        if (!mag.is_one()) parts.push_back(mag.str());
        if (t.q0exp - a_min != 0) parts.push_back(latex_q0(t.q0exp - a_min));
        const std::string zp = latex_zpow(t.zexp - e_min, coord);
        if (!zp.empty()) parts.push_back(zp);
        if (parts.empty()) parts.push_back("1");
        std::string body = parts[0];
        for (size_t i = 1; i < parts.size(); ++i) body += " " + parts[i];
        numterms.emplace_back(neg, body);
    }
    out.num = join_terms(numterms);
    if (numterms.size() > 1 && !extra_den.empty()) out.num = "\\left(" + out.num + "\\right)";

    std::vector<std::string> denparts;
    if (!d.is_one()) denparts.push_back(d.str());
    if (a_min < 0) denparts.push_back(latex_q0(-a_min));
    if (e_min < 0) denparts.push_back(latex_zpow(-e_min, coord));
    if (!extra_den.empty()) denparts.push_back(extra_den);
    std::string den;
    for (size_t i = 0; i < denparts.size(); ++i) den += (i ? " " : "") + denparts[i];
    out.den = den;
    return out;
}

} // namespace render_detail

inline std::string latex_poly(const ZLaurentPoly& p, Coord coord = Coord::Z) {
    return render_detail::latex_fold(render_detail::collect_triples(p), coord, "").str();
}

inline std::string latex_fn(const ZRationalFn& f, Coord coord = Coord::Z) {
    if (f.is_laurent()) return latex_poly(f.laurent(), coord);
    auto [b, rest] = render_detail::peel_branch_factor(f.den());
    std::string extra;
    if (b > 0) {
        extra = coord == Coord::X ? "\\left(x - q_0\\right)" : "\\left(z^{2} - 3 q_0\\right)";
        if (b > 1) extra += "^{" + std::to_string(b) + "}";
    }
    if (!render_detail::is_const_one(rest)) {
        if (!extra.empty()) extra += " ";
        extra += "\\left(" + latex_poly(rest, coord) + "\\right)";
    }
    return render_detail::latex_fold(render_detail::collect_triples(f.num()), coord, extra).str();
}

// ---------------------------------------------------------------------------
// Symmetric tables. Every multiset of exponents prints once, least
// singular first, with the distinct variable orderings expanded inside
// parentheses. The optional differential suffix marks multidifferentials.
// ---------------------------------------------------------------------------

namespace render_detail {

inline std::vector<SymKey> key_orderings(const SymKey& key) {
    SymKey k = sym_sorted(key);
    std::vector<SymKey> out;
    do {
        out.push_back(k);
    } while (std::next_permutation(k.begin(), k.end()));
    return out;
}

inline std::string text_vars_monomial(const SymKey& ordering) {
    std::vector<std::string> parts;
    for (size_t i = 0; i < ordering.size(); ++i) {
        if (ordering[i] == 0) continue;
        std::string p = "z" + std::to_string(i + 1);
        if (ordering[i] != 1) p += "^" + std::to_string(ordering[i]);
        parts.push_back(p);
    }
    if (parts.empty()) return "1";
    std::string out = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) out += " * " + parts[i];
    return out;
}

inline std::string latex_vars_monomial(const SymKey& ordering) {
    std::string pos;
    std::string neg;
    for (size_t i = 0; i < ordering.size(); ++i) {
        const int e = ordering[i];
        if (e == 0) continue;
        std::string p = "z_{" + std::to_string(i + 1) + "}";
        if (e != 1 && e != -1) p += "^{" + std::to_string(e < 0 ? -e : e) + "}";
        if (e > 0)
            pos += (pos.empty() ? "" : " ") + p;
        else
            neg += (neg.empty() ? "" : " ") + p;
    }
    if (neg.empty()) return pos.empty() ? "1" : pos;
    return "\\frac{" + (pos.empty() ? std::string("1") : pos) + "}{" + neg + "}";
}

} // namespace render_detail

inline std::string render_table(const SymTable& t, bool differentials = false) {
    std::vector<std::pair<bool, std::string>> ts;
    for (auto it = t.terms().rbegin(); it != t.terms().rend(); ++it) {
        const auto orderings = render_detail::key_orderings(it->first);
        auto [neg, coeffbody] = [&] {
            const CoeffFrac& c = it->second;
            if (c.is_elem() && c.elem().is_monomial()) {
                const auto& [a, r] = *c.elem().terms().begin();
                return render_detail::text_monomial(r, a, 0, Coord::Z);
            }
            return std::make_pair(false, "(" + render_coeff(c) + ")");
        }();
        std::string body = coeffbody;
        if (orderings.size() == 1) {
            const std::string vars = render_detail::text_vars_monomial(orderings[0]);
            if (vars != "1") body += " * " + vars;
        } else {
            std::string sum;
            for (size_t i = 0; i < orderings.size(); ++i)
                sum += (i ? " + " : "") + render_detail::text_vars_monomial(orderings[i]);
            body += " * (" + sum + ")";
        }
        ts.emplace_back(neg, body);
    }
    std::string out = render_detail::join_terms(ts);
    if (differentials) {
        std::string suffix;
        for (int i = 1; i <= t.slots(); ++i) suffix += " dz" + std::to_string(i);
        out = (ts.size() > 1 ? "(" + out + ")" : out) + " *" + suffix;
    }
    return out;
}

inline std::string latex_table(const SymTable& t, bool differentials = false) {
    std::vector<std::pair<bool, std::string>> ts;
    for (auto it = t.terms().rbegin(); it != t.terms().rend(); ++it) {
        if (!it->second.is_elem() || !it->second.elem().is_monomial())
            throw domain_error("latex rendering needs q0 monomial table entries");
        const auto& [a, r] = *it->second.elem().terms().begin();
        const bool neg = render_detail::is_negative(r);
        render_detail::LatexFraction cf = render_detail::latex_fold(
            {{0, a, neg ? -r : r}}, Coord::Z, "");
        const auto orderings = render_detail::key_orderings(it->first);
        std::string body = cf.str();
        if (orderings.size() == 1) {
            const std::string vars = render_detail::latex_vars_monomial(orderings[0]);
            if (vars != "1") body += " \\, " + vars;
        } else {
            std::string sum;
            for (size_t i = 0; i < orderings.size(); ++i)
                sum += (i ? " + " : "") + render_detail::latex_vars_monomial(orderings[i]);
            body += " \\left(" + sum + "\\right)";
        }
        ts.emplace_back(neg, body);
    }
    std::string out = render_detail::join_terms(ts);
    if (differentials) {
        std::string suffix;
        for (int i = 1; i <= t.slots(); ++i) suffix += " \\, dz_{" + std::to_string(i) + "}";
        out = (ts.size() > 1 ? "\\left(" + out + "\\right)" : out) + suffix;
    }
    return out;
}

// Multivariate polynomials, z coordinate only; used for residual reports.
inline std::string render_multipoly(const MultiPoly& p) {
    std::vector<std::pair<bool, std::string>> ts;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const CoeffFrac& c = it->second;
        auto [neg, coeffbody] = [&] {
            if (c.is_elem() && c.elem().is_monomial()) {
                const auto& [a, r] = *c.elem().terms().begin();
                return render_detail::text_monomial(r, a, 0, Coord::Z);
            }
            return std::make_pair(false, "(" + render_coeff(c) + ")");
        }();
        const std::string vars = render_detail::text_vars_monomial(it->first);
        ts.emplace_back(neg, vars == "1" ? coeffbody : coeffbody + " * " + vars);
    }
    return render_detail::join_terms(ts);
}

// ---------------------------------------------------------------------------
// Order-by-order listings for h-expansions.
// ---------------------------------------------------------------------------

inline std::string render_hseries(const HSeries& h, Coord coord = Coord::Z) {
    std::string out;
    for (const auto& [m, fn] : h.terms()) {
        if (fn.is_zero()) continue;
        out += "h^" + std::to_string(m) + ": " + render_fn(fn, coord) + "\n";
    }
    if (out.empty()) out = "0\n";
    return out;
}

inline std::string latex_hseries(const HSeries& h, Coord coord = Coord::Z) {
    std::vector<std::pair<bool, std::string>> ts;
    for (const auto& [m, fn] : h.terms()) {
        if (fn.is_zero()) continue;
        std::string body = latex_fn(fn, coord);
        bool neg = false;
        if (!body.empty() && body[0] == '-') {
            neg = true;
            body = body.substr(1);
        }
        if (body.find(" + ") != std::string::npos || body.find(" - ") != std::string::npos)
            body = "\\left(" + body + "\\right)";
        if (m != 0) {
            body += " \\hbar";
            if (m != 1) body += "^{" + std::to_string(m) + "}";
        }
        ts.emplace_back(neg, body);
    }
    return render_detail::join_terms(ts);
}

// ---------------------------------------------------------------------------
// JSON output, z coordinate, all integers as decimal strings.
// ---------------------------------------------------------------------------

inline nlohmann::json json_rational(const BigRational& r) {
    return nlohmann::json{{"num", r.num_str()}, {"den", r.den_str()}};
}

inline nlohmann::json json_elem(const CoeffElem& e) {
    nlohmann::json out = nlohmann::json::array();
    for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it)
        out.push_back(nlohmann::json{
            {"exp", it->first}, {"num", it->second.num_str()}, {"den", it->second.den_str()}});
    return out;
}

inline nlohmann::json json_coeff(const CoeffFrac& c) {
    return nlohmann::json{{"num", json_elem(c.num())}, {"den", json_elem(c.den())}};
}

inline nlohmann::json json_poly(const ZLaurentPoly& p) {
    nlohmann::json out = nlohmann::json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        out.push_back(nlohmann::json{{"z", it->first}, {"coeff", json_coeff(it->second)}});
    return out;
}

inline nlohmann::json json_fn(const ZRationalFn& f) {
    return nlohmann::json{{"num", json_poly(f.num())}, {"den", json_poly(f.den())}};
}

inline nlohmann::json json_table(const SymTable& t) {
    nlohmann::json out = nlohmann::json::array();
    for (auto it = t.terms().rbegin(); it != t.terms().rend(); ++it)
        out.push_back(nlohmann::json{{"exponents", it->first}, {"coeff", json_coeff(it->second)}});
    return out;
}

inline nlohmann::json json_hseries(const HSeries& h) {
    nlohmann::json orders = nlohmann::json::array();
    for (const auto& [m, fn] : h.terms()) {
        if (fn.is_zero()) continue;
        orders.push_back(nlohmann::json{{"order", m}, {"value", json_fn(fn)}});
    }
    return nlohmann::json{{"trunc", h.trunc()}, {"orders", orders}};
}

} // namespace toprec
