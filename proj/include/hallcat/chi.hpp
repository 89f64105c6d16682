#pragma once

// Counting polynomials: a family of finite sets indexed by primes whose
// cardinality is a polynomial in q is pinned down by sampling at the first
// degree+1 primes and checked at one more (the control prime).  The value at
// q = 1 serves as the Euler characteristic of the family.

#include <functional>
#include <vector>

#include "hallcat/numeric.hpp"

namespace hallcat {

struct CountPoly {
    std::vector<Rat> coeffs;  // coeffs[k] * q^k

    Rat eval(const Rat& q) const {
        Rat r = 0;
        for (size_t k = coeffs.size(); k-- > 0;) r = r * q + coeffs[k];
        return r;
    }
    Int eval_int(long q) const {
        Rat r = eval(Rat(q));
        if (denominator(r) != 1)
            throw std::logic_error("counting polynomial not integral at an integer");
        return numerator(r);
    }
    int degree() const {
        for (size_t k = coeffs.size(); k-- > 0;)
            if (coeffs[k] != 0) return static_cast<int>(k);
        return -1;
    }
    std::string str() const {
        std::string s;
        bool first = true;
        for (size_t k = coeffs.size(); k-- > 0;) {
            if (coeffs[k] == 0) continue;
            if (!first) s += " + ";
            if (k == 0 || coeffs[k] != 1) s += coeffs[k].str();
            if (k > 0) {
                if (coeffs[k] != 1) s += "*";
                s += "q";
                if (k > 1) s += "^" + std::to_string(k);
            }
            first = false;
        }
        return first ? "0" : s;
    }
};

inline std::vector<long> first_primes(int n) {
    std::vector<long> out;
    for (long c = 2; static_cast<int>(out.size()) < n; ++c) {
        bool prime = true;
        for (long d = 2; d * d <= c; ++d)
            if (c % d == 0) { prime = false; break; }
        if (prime) out.push_back(c);
    }
    return out;
}

// Thrown when the sampled counts are not explained by one polynomial of the
// declared degree (the control prime disagreed).
struct NotPolynomialCount : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Lagrange fit on the first degree_bound+1 primes, verified at the next one.
inline CountPoly interpolate(const std::function<Int(long)>& counter, int degree_bound) {
    std::vector<long> primes = first_primes(degree_bound + 2);
    long control = primes.back();
    int n = degree_bound + 1;

    // Newton's divided differences keep everything rational and exact.
    std::vector<Rat> x(n), f(n);
    for (int i = 0; i < n; ++i) {
        x[i] = Rat(primes[i]);
        f[i] = Rat(counter(primes[i]));
    }
    std::vector<std::vector<Rat>> dd(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i) dd[i][0] = f[i];
    for (int j = 1; j < n; ++j)
        for (int i = 0; i + j < n; ++i)
            dd[i][j] = (dd[i + 1][j - 1] - dd[i][j - 1]) / (x[i + j] - x[i]);

    // expand the Newton form into monomial coefficients
    CountPoly cp;
    cp.coeffs.assign(n, Rat(0));
    std::vector<Rat> basis = {Rat(1)};  // product (q - x_0)...(q - x_{k-1})
    for (int k = 0; k < n; ++k) {
        for (size_t t = 0; t < basis.size(); ++t) cp.coeffs[t] += dd[0][k] * basis[t];
        // basis *= (q - x_k)
        std::vector<Rat> next(basis.size() + 1, Rat(0));
        for (size_t t = 0; t < basis.size(); ++t) {
            next[t + 1] += basis[t];
            next[t] -= basis[t] * x[k];
        }
        basis = std::move(next);
    }

    Rat predicted = cp.eval(Rat(control));
    Int actual = counter(control);
    if (predicted != Rat(actual))
        throw NotPolynomialCount("control prime " + std::to_string(control) +
                                 " disagrees: polynomial gives " + predicted.str() +
                                 ", count gives " + actual.str());
    return cp;
}

inline Int chi(const CountPoly& cp) {
    Rat v = cp.eval(Rat(1));
    if (denominator(v) != 1)
        throw std::logic_error("Euler value of a counting polynomial must be integral");
    return numerator(v);
}

inline Int chi_of(const std::function<Int(long)>& counter, int degree_bound) {
    return chi(interpolate(counter, degree_bound));
}

// Exact division by (q - 1): the projectivization of a cone.  When the count
// includes the zero point it is removed first.
inline CountPoly projectivize(CountPoly cone, bool zero_included) {
    if (zero_included) cone.coeffs[0] -= 1;
    if (cone.eval(Rat(1)) != 0)
        throw std::logic_error("cone count not divisible by q-1");
    // synthetic division by (q - 1)
    std::vector<Rat> out(cone.coeffs.size() > 0 ? cone.coeffs.size() - 1 : 0, Rat(0));
    Rat carry = 0;
    for (size_t k = cone.coeffs.size(); k-- > 1;) {
        carry += cone.coeffs[k];
        out[k - 1] = carry;
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    CountPoly cp;
    cp.coeffs = std::move(out);
    return cp;
}

inline Int projective_chi(const std::function<Int(long)>& cone_counter,
                          bool zero_included, int degree_bound) {
    return chi(projectivize(interpolate(cone_counter, degree_bound), zero_included));
}

}  // namespace hallcat
