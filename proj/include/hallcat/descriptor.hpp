#pragma once

// Symbolic module descriptors: the same iso class can be named uniformly over
// every prime (simples, projectives, injectives, type-A intervals, Kronecker
// regulars, AR translates, direct sums).  A tiny expression syntax backs the
// CLI and the cross-prime interpolation machinery.
//
//   S1  P2  I3  [1..3]  reg(0)  reg(inf)  tau(X)  tauinv(X)  X + Y  0
//
// Vertex numbers are 1-based in the text form.

#include <cctype>
#include <functional>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "hallcat/artranslate.hpp"

namespace hallcat {

struct Descriptor {
    enum Kind { Zero, Simple, Proj, Inj, Interval, Regular, Tau, TauInv, Sum };
    Kind kind = Zero;
    int a = 0, b = 0;       // vertex / interval endpoints (0-based); Regular: a = lambda, -1 = infinity
    std::vector<Descriptor> parts;  // Tau/TauInv: one part; Sum: many

    static Descriptor zero() { return {}; }
    static Descriptor simple(int v) { return {Simple, v, 0, {}}; }
    static Descriptor proj(int v) { return {Proj, v, 0, {}}; }
    static Descriptor inj(int v) { return {Inj, v, 0, {}}; }
    static Descriptor interval(int lo, int hi) { return {Interval, lo, hi, {}}; }
    static Descriptor regular(int lambda) { return {Regular, lambda, 0, {}}; }
    static Descriptor tau(Descriptor d) { return {Tau, 0, 0, {std::move(d)}}; }
    static Descriptor tau_inv(Descriptor d) { return {TauInv, 0, 0, {std::move(d)}}; }
    static Descriptor sum(std::vector<Descriptor> ds) {
        if (ds.empty()) return zero();
        if (ds.size() == 1) return ds[0];
        return {Sum, 0, 0, std::move(ds)};
    }

    Rep build(std::shared_ptr<const Quiver> q, long p) const {
        switch (kind) {
            case Zero: return Rep::zero(q, p);
            case Simple: return simple_rep(q, p, a);
            case Proj: return proj_rep(q, p, a);
            case Inj: return inj_rep(q, p, a);
            case Interval: return interval_rep(q, p, a, b);
            case Regular: return kronecker_regular(q, p, a);
            case Tau: return ar_translate(parts[0].build(q, p));
            case TauInv: return ar_translate_inverse(parts[0].build(q, p));
            case Sum: {
                Rep r = Rep::zero(q, p);
                for (const Descriptor& d : parts) r = direct_sum(r, d.build(q, p));
                return r;
            }
        }
        throw std::logic_error("unreachable");
    }

    std::string str() const {
        std::ostringstream os;
        switch (kind) {
            case Zero: os << "0"; break;
            case Simple: os << "S" << a + 1; break;
            case Proj: os << "P" << a + 1; break;
            case Inj: os << "I" << a + 1; break;
            case Interval: os << "[" << a + 1 << ".." << b + 1 << "]"; break;
            case Regular:
                if (a < 0) os << "reg(inf)";
                else os << "reg(" << a << ")";
                break;
            case Tau: os << "tau(" << parts[0].str() << ")"; break;
            case TauInv: os << "tauinv(" << parts[0].str() << ")"; break;
            case Sum:
                for (size_t i = 0; i < parts.size(); ++i)
                    os << (i ? "+" : "") << parts[i].str();
                break;
        }
        return os.str();
    }
};

// Parses the expression syntax above.  Whitespace is ignored.
inline Descriptor parse_descriptor(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s += c;
    size_t pos = 0;
    std::function<Descriptor()> expr;
    auto fail = [&](const std::string& why) -> Descriptor {
        throw std::invalid_argument("descriptor parse error at position " +
                                    std::to_string(pos) + ": " + why);
    };
    auto number = [&]() {
        size_t start = pos;
        while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected a number");
        return std::stoi(s.substr(start, pos - start));
    };
    std::function<Descriptor()> atom = [&]() -> Descriptor {
        if (pos >= s.size()) return fail("unexpected end");
        char c = s[pos];
        if (c == '0' && (pos + 1 == s.size() || !isdigit(static_cast<unsigned char>(s[pos + 1])))) {
            ++pos;
            return Descriptor::zero();
        }
        if (c == 'S' || c == 'P' || c == 'I') {
            ++pos;
            int v = number() - 1;
            if (v < 0) fail("vertices are 1-based");
            if (c == 'S') return Descriptor::simple(v);
            if (c == 'P') return Descriptor::proj(v);
            return Descriptor::inj(v);
        }
        if (c == '[') {
            ++pos;
            int lo = number() - 1;
            if (s.compare(pos, 2, "..") != 0) fail("expected ..");
            pos += 2;
            int hi = number() - 1;
            if (pos >= s.size() || s[pos] != ']') fail("expected ]");
            ++pos;
            if (lo < 0 || hi < lo) fail("bad interval");
            return Descriptor::interval(lo, hi);
        }
        if (s.compare(pos, 4, "reg(") == 0) {
            pos += 4;
            int lam;
            if (s.compare(pos, 3, "inf") == 0) {
                pos += 3;
                lam = -1;
            } else {
                lam = number();
            }
            if (pos >= s.size() || s[pos] != ')') fail("expected )");
            ++pos;
            return Descriptor::regular(lam);
        }
        if (s.compare(pos, 7, "tauinv(") == 0) {
            pos += 7;
            Descriptor inner = expr();
            if (pos >= s.size() || s[pos] != ')') fail("expected )");
            ++pos;
            return Descriptor::tau_inv(std::move(inner));
        }
        if (s.compare(pos, 4, "tau(") == 0) {
            pos += 4;
            Descriptor inner = expr();
            if (pos >= s.size() || s[pos] != ')') fail("expected )");
            ++pos;
            return Descriptor::tau(std::move(inner));
        }
        return fail("unrecognized token");
    };
    expr = [&]() -> Descriptor {
        std::vector<Descriptor> parts;
        parts.push_back(atom());
        while (pos < s.size() && s[pos] == '+') {
            ++pos;
            parts.push_back(atom());
        }
        return Descriptor::sum(std::move(parts));
    };
    Descriptor d = expr();
    if (pos != s.size()) throw std::invalid_argument("trailing descriptor text");
    return d;
}

}  // namespace hallcat
