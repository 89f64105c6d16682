#pragma once

// Text formats for quivers and modules.
//
// Quiver file:  statements separated by newlines or ';', '#' comments.
//   vertices=3
//   arrows=[(1,2),(2,3)]          # 1-based vertex numbers
//   rel: 1*[a2,a1]                # paths written target-to-source
// A relation is a signed sum of coeff*[a_k,...,a_1] terms; the arrow lists
// are reversed on input so paths are stored in application order.
//
// Module file:  dims=[...] plus one integer matrix per arrow,
//   mat 1 = [[0,1],[0,0]]         # rows indexed by the target vertex
// entries are reduced mod the run prime.

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "hallcat/rep.hpp"

namespace hallcat {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
};

namespace detail {

inline std::string trimmed(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

// statements: one per line, further split on ';', comments stripped
inline std::vector<std::pair<int, std::string>> statements(const std::string& text) {
    std::vector<std::pair<int, std::string>> out;
    std::istringstream in(text);
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream parts(line);
        std::string stmt;
        while (std::getline(parts, stmt, ';')) {
            stmt = trimmed(stmt);
            if (!stmt.empty()) out.emplace_back(no, stmt);
        }
    }
    return out;
}

// cursor over one statement
struct Cur {
    const std::string& s;
    size_t i = 0;
    int line;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) { ++i; return true; }
        return false;
    }
    void expect(char c) {
        if (!eat(c))
            throw ParseError(line, std::string("expected '") + c + "' at column " +
                                       std::to_string(i + 1));
    }
    long integer() {
        skip_ws();
        size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            throw ParseError(line, "expected an integer at column " + std::to_string(start + 1));
        return std::stol(s.substr(start, i - start));
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
};

inline std::vector<long> int_list(Cur& c) {
    std::vector<long> out;
    c.expect('[');
    if (!c.eat(']')) {
        do out.push_back(c.integer());
        while (c.eat(','));
        c.expect(']');
    }
    return out;
}

// one relation term: coeff*[aK,...,a1], returning the path already reversed
inline Relation::Term relation_term(Cur& c, int arrow_count, long sign) {
    Relation::Term t;
    t.coeff = sign * c.integer();
    c.expect('*');
    c.expect('[');
    std::vector<int> rev;
    do {
        c.skip_ws();
        if (!c.eat('a')) throw ParseError(c.line, "expected arrow name aK");
        long a = c.integer();
        if (a < 1 || a > arrow_count)
            throw ParseError(c.line, "arrow a" + std::to_string(a) + " of " +
                                         std::to_string(arrow_count));
        rev.push_back(static_cast<int>(a - 1));
    } while (c.eat(','));
    c.expect(']');
    t.path.arrows.assign(rev.rbegin(), rev.rend());
    return t;
}

}  // namespace detail

inline Quiver parse_quiver(const std::string& text) {
    int nv = -1;
    std::vector<Arrow> arrows;
    std::vector<Relation> rels;
    bool arrows_seen = false;
    for (const auto& [line, stmt] : detail::statements(text)) {
        detail::Cur c{stmt, 0, line};
        if (stmt.rfind("vertices", 0) == 0) {
            c.i = 8;
            c.expect('=');
            long n = c.integer();
            if (n < 1) throw ParseError(line, "vertex count must be positive");
            nv = static_cast<int>(n);
        } else if (stmt.rfind("arrows", 0) == 0) {
            if (nv < 0) throw ParseError(line, "vertices= must come first");
            c.i = 6;
            c.expect('=');
            c.expect('[');
            arrows_seen = true;
            if (!c.eat(']')) {
                do {
                    c.expect('(');
                    long s = c.integer();
                    c.expect(',');
                    long t = c.integer();
                    c.expect(')');
                    if (s < 1 || s > nv || t < 1 || t > nv)
                        throw ParseError(line, "arrow endpoint out of range 1.." +
                                                   std::to_string(nv));
                    arrows.push_back({static_cast<int>(s - 1), static_cast<int>(t - 1)});
                } while (c.eat(','));
                c.expect(']');
            }
        } else if (stmt.rfind("rel", 0) == 0) {
            if (!arrows_seen) throw ParseError(line, "arrows= must come before relations");
            c.i = 3;
            c.expect(':');
            Relation r;
            long sign = 1;
            c.skip_ws();
            if (c.eat('-')) sign = -1;
            r.terms.push_back(detail::relation_term(c, static_cast<int>(arrows.size()), sign));
            while (!c.done()) {
                if (c.eat('+')) sign = 1;
                else if (c.eat('-')) sign = -1;
                else throw ParseError(line, "expected '+' or '-' between relation terms");
                r.terms.push_back(
                    detail::relation_term(c, static_cast<int>(arrows.size()), sign));
            }
            rels.push_back(std::move(r));
        } else {
            throw ParseError(line, "unrecognized statement: " + stmt);
        }
        if (!c.done() && stmt.rfind("rel", 0) != 0)
            throw ParseError(line, "trailing input at column " + std::to_string(c.i + 1));
    }
    if (nv < 0) throw ParseError(0, "missing vertices=");
    try {
        return Quiver(nv, std::move(arrows), std::move(rels));
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, e.what());
    }
}

inline Rep parse_module(const std::string& text, std::shared_ptr<const Quiver> q, long p) {
    DimVector dims;
    bool dims_seen = false;
    std::vector<std::vector<std::vector<long>>> mats(q->arrow_count());
    std::vector<bool> given(q->arrow_count(), false);
    for (const auto& [line, stmt] : detail::statements(text)) {
        detail::Cur c{stmt, 0, line};
        if (stmt.rfind("dims", 0) == 0) {
            c.i = 4;
            c.expect('=');
            for (long d : detail::int_list(c)) {
                if (d < 0) throw ParseError(line, "negative dimension");
                dims.push_back(static_cast<int>(d));
            }
            if (static_cast<int>(dims.size()) != q->vertex_count())
                throw ParseError(line, "dims length " + std::to_string(dims.size()) +
                                           " for " + std::to_string(q->vertex_count()) +
                                           " vertices");
            dims_seen = true;
        } else if (stmt.rfind("mat", 0) == 0) {
            if (!dims_seen) throw ParseError(line, "dims= must come first");
            c.i = 3;
            long a = c.integer();
            if (a < 1 || a > q->arrow_count())
                throw ParseError(line, "arrow index " + std::to_string(a) + " of " +
                                           std::to_string(q->arrow_count()));
            c.expect('=');
            c.expect('[');
            std::vector<std::vector<long>> rows;
            if (!c.eat(']')) {
                do rows.push_back(detail::int_list(c));
                while (c.eat(','));
                c.expect(']');
            }
            const Arrow& ar = q->arrows()[a - 1];
            if (static_cast<int>(rows.size()) != dims[ar.target])
                throw ParseError(line, "matrix for arrow a" + std::to_string(a) +
                                           " needs " + std::to_string(dims[ar.target]) +
                                           " rows");
            for (const auto& row : rows)
                if (static_cast<int>(row.size()) != dims[ar.source])
                    throw ParseError(line, "matrix for arrow a" + std::to_string(a) +
                                               " needs " + std::to_string(dims[ar.source]) +
                                               " columns");
            mats[a - 1] = std::move(rows);
            given[a - 1] = true;
        } else {
            throw ParseError(line, "unrecognized statement: " + stmt);
        }
    }
    if (!dims_seen) throw ParseError(0, "missing dims=");
    Rep m = Rep::make(std::move(q), p, std::move(dims));
    for (int a = 0; a < m.quiver->arrow_count(); ++a) {
        if (!given[a]) continue;  // omitted matrices stay zero
        for (size_t r = 0; r < mats[a].size(); ++r)
            for (size_t col = 0; col < mats[a][r].size(); ++col)
                m.mats[a].at(static_cast<int>(r), static_cast<int>(col)) =
                    ((mats[a][r][col] % p) + p) % p;
    }
    if (!m.satisfies_relations())
        throw ParseError(0, "module violates a quiver relation");
    return m;
}

}  // namespace hallcat
