#pragma once

// Multivariate Laurent polynomials with exact integer coefficients, and
// quotients of them with equality by cross-multiplication.  Division is the
// one nontrivial operation: it decides the Laurent phenomenon.

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hallcat/numeric.hpp"

namespace hallcat {

struct LaurentPoly {
    int nvars = 0;
    std::map<std::vector<int>, Int> coeff;

    static LaurentPoly zero(int n) { return {n, {}}; }
    static LaurentPoly constant(int n, Int c) {
        LaurentPoly r{n, {}};
        if (c != 0) r.coeff.emplace(std::vector<int>(n, 0), std::move(c));
        return r;
    }
    static LaurentPoly one(int n) { return constant(n, 1); }
    static LaurentPoly monomial(int n, const std::vector<int>& e, Int c = 1) {
        LaurentPoly r{n, {}};
        if (c != 0) r.coeff.emplace(e, std::move(c));
        return r;
    }
    static LaurentPoly var(int n, int i, int power = 1) {
        std::vector<int> e(n, 0);
        e[i] = power;
        return monomial(n, e);
    }

    bool is_zero() const { return coeff.empty(); }
    void add_term(const std::vector<int>& e, const Int& c) {
        if (c == 0) return;
        auto [it, fresh] = coeff.emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) coeff.erase(it);
        }
    }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.coeff == b.coeff;
    }
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (const auto& [e, c] : b.coeff) r.add_term(e, c);
        return r;
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (const auto& [e, c] : b.coeff) r.add_term(e, -c);
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = LaurentPoly::zero(a.nvars);
        for (const auto& [ea, ca] : a.coeff)
            for (const auto& [eb, cb] : b.coeff) {
                std::vector<int> e(a.nvars);
                for (int i = 0; i < a.nvars; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    LaurentPoly scaled(const Int& s) const {
        LaurentPoly r = zero(nvars);
        for (const auto& [e, c] : coeff) r.add_term(e, c * s);
        return r;
    }

    // deterministic human form: terms in map order, variables x1..xn
    std::string str() const {
        if (coeff.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) {
            const auto& [e, c] = *it;
            Int a = c;
            if (first) {
                if (a < 0) { os << "-"; a = -a; }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            bool has_var = false;
            for (int i = 0; i < nvars; ++i) has_var = has_var || e[i] != 0;
            if (a != 1 || !has_var) os << a.str();
            bool star = a != 1;
            for (int i = 0; i < nvars; ++i) {
                if (e[i] == 0) continue;
                if (star) os << "*";
                os << "x" << i + 1;
                if (e[i] != 1) os << "^" << e[i];
                star = true;
            }
            first = false;
        }
        return os.str();
    }
};

namespace detail {
inline void laurent_box(const LaurentPoly& f, std::vector<int>& lo, std::vector<int>& hi) {
    lo.assign(f.nvars, 0);
    hi.assign(f.nvars, 0);
    bool first = true;
    for (const auto& [e, c] : f.coeff) {
        for (int i = 0; i < f.nvars; ++i) {
            lo[i] = first ? e[i] : std::min(lo[i], e[i]);
            hi[i] = first ? e[i] : std::max(hi[i], e[i]);
        }
        first = false;
    }
}
}  // namespace detail

// Exact division f / g in the Laurent ring; nullopt when g does not divide f.
// Monomial-order greedy loop; termination rests on the fact that an exact
// quotient's exponents live in the box max/min(f) - max/min(g) per variable
// (top and bottom homogeneous parts of a product never cancel).
inline std::optional<LaurentPoly> laurent_divide(const LaurentPoly& f,
                                                 const LaurentPoly& g) {
    if (g.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    if (f.is_zero()) return LaurentPoly::zero(f.nvars);
    int n = f.nvars;
    std::vector<int> flo, fhi, glo, ghi;
    detail::laurent_box(f, flo, fhi);
    detail::laurent_box(g, glo, ghi);
    // leading term of g in the map (lex) order
    auto glead = g.coeff.rbegin();
    std::map<std::vector<int>, Rat> rem;
    for (const auto& [e, c] : f.coeff) rem.emplace(e, Rat(c));
    std::map<std::vector<int>, Rat> quot;
    while (!rem.empty()) {
        auto rlead = rem.rbegin();
        std::vector<int> de(n);
        for (int i = 0; i < n; ++i) {
            de[i] = rlead->first[i] - glead->first[i];
            if (de[i] < flo[i] - glo[i] || de[i] > fhi[i] - ghi[i]) return std::nullopt;
        }
        Rat dc = rlead->second / Rat(glead->second);
        quot[de] += dc;
        for (const auto& [e, c] : g.coeff) {
            std::vector<int> te(n);
            for (int i = 0; i < n; ++i) te[i] = e[i] + de[i];
            auto it = rem.emplace(te, Rat(0)).first;
            it->second -= dc * Rat(c);
            if (it->second == 0) rem.erase(it);
        }
    }
    LaurentPoly q = LaurentPoly::zero(n);
    for (const auto& [e, c] : quot) {
        if (c == 0) continue;
        if (denominator(c) != 1) return std::nullopt;
        q.add_term(e, numerator(c));
    }
    // exactness is checked, not assumed
    if (!(q * g == f)) return std::nullopt;
    return q;
}

struct RationalExpr {
    LaurentPoly num, den;

    static RationalExpr of(LaurentPoly p) {
        int n = p.nvars;
        return {std::move(p), LaurentPoly::one(n)};
    }
    static RationalExpr var(int n, int i) { return of(LaurentPoly::var(n, i)); }

    friend RationalExpr operator+(const RationalExpr& a, const RationalExpr& b) {
        return {a.num * b.den + b.num * a.den, a.den * b.den};
    }
    friend RationalExpr operator-(const RationalExpr& a, const RationalExpr& b) {
        return {a.num * b.den - b.num * a.den, a.den * b.den};
    }
    friend RationalExpr operator*(const RationalExpr& a, const RationalExpr& b) {
        return {a.num * b.num, a.den * b.den};
    }
    friend RationalExpr operator/(const RationalExpr& a, const RationalExpr& b) {
        if (b.num.is_zero()) throw std::invalid_argument("division by zero expression");
        return {a.num * b.den, a.den * b.num};
    }
    friend bool operator==(const RationalExpr& a, const RationalExpr& b) {
        return a.num * b.den == b.num * a.den;
    }
};

// The Laurent phenomenon test: a quotient that reduces to a Laurent polynomial.
inline std::optional<LaurentPoly> laurent_check(const RationalExpr& e) {
    return laurent_divide(e.num, e.den);
}

}  // namespace hallcat
