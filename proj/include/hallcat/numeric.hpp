#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace hallcat {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Thrown when a counting task would exceed its configured ceiling.
struct GuardExceeded : std::runtime_error {
    Int demanded;
    Int ceiling;
    GuardExceeded(const std::string& what, Int demanded_, Int ceiling_)
        : std::runtime_error(what + " (demanded " + demanded_.str() + ", ceiling " +
                             ceiling_.str() + ")"),
          demanded(std::move(demanded_)),
          ceiling(std::move(ceiling_)) {}
};

struct Guards {
    Int hom_scan = 1000000;      // p^dim Hom scans (iso / aut / hom strata)
    Int ext_scan = 1000000;      // p^dim Ext scans
    Int point_scan = 10000000;   // |E_d(Q,R)(F_p)| full point scans
    Int subspace_scan = 10000000;// Gaussian-binomial products in submodule scans
};

inline const Guards& default_guards() {
    static Guards g;
    return g;
}

inline Int int_pow(Int base, unsigned exp) {
    Int r = 1;
    while (exp--) r *= base;
    return r;
}

// a + b*v with v^2 = p; the coefficient ring for the twisted Hall algebra.
struct TwistScalar {
    Rat a{0};
    Rat b{0};
    long p{0};  // 0 acts as a wildcard for plain rationals

    TwistScalar() = default;
    TwistScalar(Rat a_, Rat b_, long p_) : a(std::move(a_)), b(std::move(b_)), p(p_) {}
    static TwistScalar rational(Rat r, long p = 0) { return {std::move(r), 0, p}; }
    // v^e for e of either sign: v^{-1} = v/p.
    static TwistScalar v_power(long e, long p) {
        TwistScalar r{1, 0, p};
        TwistScalar v{0, 1, p};
        TwistScalar vinv{0, Rat(1, p), p};
        for (long i = 0; i < e; ++i) r = r * v;
        for (long i = 0; i > e; --i) r = r * vinv;
        return r;
    }

    bool is_zero() const { return a == 0 && b == 0; }

    friend long merge_p(const TwistScalar& x, const TwistScalar& y) {
        if (x.p != 0 && y.p != 0 && x.p != y.p)
            throw std::invalid_argument("TwistScalar: mixed moduli");
        return x.p != 0 ? x.p : y.p;
    }
    friend TwistScalar operator+(const TwistScalar& x, const TwistScalar& y) {
        return {x.a + y.a, x.b + y.b, merge_p(x, y)};
    }
    friend TwistScalar operator-(const TwistScalar& x, const TwistScalar& y) {
        return {x.a - y.a, x.b - y.b, merge_p(x, y)};
    }
    friend TwistScalar operator*(const TwistScalar& x, const TwistScalar& y) {
        long p = merge_p(x, y);
        // (a+bv)(c+dv) = (ac + bd p) + (ad + bc) v
        return {x.a * y.a + x.b * y.b * p, x.a * y.b + x.b * y.a, p};
    }
    friend bool operator==(const TwistScalar& x, const TwistScalar& y) {
        return x.a == y.a && x.b == y.b;
    }
    std::string str() const {
        std::string s = a.str();
        if (b != 0) s += (b > 0 ? "+" : "") + b.str() + "v";
        return s;
    }
};

}  // namespace hallcat
