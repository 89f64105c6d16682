#pragma once

// Dense exact linear algebra over prime fields F_p, plus canonical (RREF)
// subspace representations and duplicate-free subspace enumeration.

#include <cassert>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hallcat/numeric.hpp"

namespace hallcat {

class FfMatrix {
public:
    FfMatrix() = default;
    FfMatrix(long p, int rows, int cols)
        : p_(p), rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, 0) {}

    static FfMatrix identity(long p, int n) {
        FfMatrix m(p, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    static FfMatrix from_rows(long p, const std::vector<std::vector<long>>& rows) {
        int r = static_cast<int>(rows.size());
        int c = r ? static_cast<int>(rows[0].size()) : 0;
        FfMatrix m(p, r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) m.at(i, j) = ((rows[i][j] % p) + p) % p;
        return m;
    }

    long p() const { return p_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    long& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
    long at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

    bool is_zero() const {
        for (long x : e_)
            if (x) return false;
        return true;
    }

    std::vector<long> row(int r) const {
        return {e_.begin() + static_cast<size_t>(r) * cols_,
                e_.begin() + static_cast<size_t>(r + 1) * cols_};
    }

    friend bool operator==(const FfMatrix& a, const FfMatrix& b) {
        return a.p_ == b.p_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

    friend FfMatrix operator+(const FfMatrix& a, const FfMatrix& b) {
        assert(a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.p_ == b.p_);
        FfMatrix r = a;
        for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = (r.e_[i] + b.e_[i]) % r.p_;
        return r;
    }
    friend FfMatrix operator-(const FfMatrix& a, const FfMatrix& b) {
        assert(a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.p_ == b.p_);
        FfMatrix r = a;
        for (size_t i = 0; i < r.e_.size(); ++i)
            r.e_[i] = (r.e_[i] - b.e_[i] % r.p_ + r.p_) % r.p_;
        return r;
    }
    friend FfMatrix operator*(const FfMatrix& a, const FfMatrix& b) {
        assert(a.cols_ == b.rows_ && a.p_ == b.p_);
        FfMatrix r(a.p_, a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                long aik = a.at(i, k);
                if (!aik) continue;
                for (int j = 0; j < b.cols_; ++j)
                    r.at(i, j) = (r.at(i, j) + aik * b.at(k, j)) % a.p_;
            }
        return r;
    }
    FfMatrix scaled(long c) const {
        c = ((c % p_) + p_) % p_;
        FfMatrix r = *this;
        for (auto& x : r.e_) x = x * c % p_;
        return r;
    }
    FfMatrix transposed() const {
        FfMatrix r(p_, cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    std::vector<long> apply(const std::vector<long>& v) const {
        assert(static_cast<int>(v.size()) == cols_);
        std::vector<long> r(rows_, 0);
        for (int i = 0; i < rows_; ++i) {
            long s = 0;
            for (int j = 0; j < cols_; ++j) s = (s + at(i, j) * v[j]) % p_;
            r[i] = s;
        }
        return r;
    }

    long inv_mod(long a) const {
        long r = 1, b = ((a % p_) + p_) % p_, e = p_ - 2;
        while (e) {
            if (e & 1) r = r * b % p_;
            b = b * b % p_;
            e >>= 1;
        }
        return r;
    }

    // In-place reduction to reduced row echelon form; returns pivot columns.
    std::vector<int> rref() {
        std::vector<int> pivots;
        int r = 0;
        for (int c = 0; c < cols_ && r < rows_; ++c) {
            int sel = -1;
            for (int i = r; i < rows_; ++i)
                if (at(i, c)) { sel = i; break; }
            if (sel < 0) continue;
            if (sel != r)
                for (int j = 0; j < cols_; ++j) std::swap(at(sel, j), at(r, j));
            long inv = inv_mod(at(r, c));
            for (int j = 0; j < cols_; ++j) at(r, j) = at(r, j) * inv % p_;
            for (int i = 0; i < rows_; ++i) {
                if (i == r || !at(i, c)) continue;
                long f = at(i, c);
                for (int j = 0; j < cols_; ++j)
                    at(i, j) = (at(i, j) - f * at(r, j) % p_ + p_) % p_;
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    int rank() const {
        FfMatrix m = *this;
        return static_cast<int>(m.rref().size());
    }

    bool is_invertible() const { return rows_ == cols_ && rank() == rows_; }

    // Basis of {x : A x = 0}, one vector per non-pivot column.
    std::vector<std::vector<long>> kernel_basis() const {
        FfMatrix m = *this;
        std::vector<int> pivots = m.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (int c : pivots) is_pivot[c] = true;
        std::vector<std::vector<long>> basis;
        for (int c = 0; c < cols_; ++c) {
            if (is_pivot[c]) continue;
            std::vector<long> v(cols_, 0);
            v[c] = 1;
            for (size_t i = 0; i < pivots.size(); ++i)
                v[pivots[i]] = (p_ - m.at(static_cast<int>(i), c)) % p_;
            basis.push_back(std::move(v));
        }
        return basis;
    }

    // One solution of A x = b, or nullopt.
    std::optional<std::vector<long>> solve(const std::vector<long>& b) const {
        assert(static_cast<int>(b.size()) == rows_);
        FfMatrix aug(p_, rows_, cols_ + 1);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
            aug.at(i, cols_) = ((b[i] % p_) + p_) % p_;
        }
        std::vector<int> pivots = aug.rref();
        if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
        std::vector<long> x(cols_, 0);
        for (size_t i = 0; i < pivots.size(); ++i)
            x[pivots[i]] = aug.at(static_cast<int>(i), cols_);
        return x;
    }

private:
    long p_ = 0;
    int rows_ = 0;
    int cols_ = 0;
    std::vector<long> e_;
};

// A subspace of F_p^n held as an RREF basis (rows). The RREF form is the
// canonical representative, so equality of subspaces is row-wise equality.
struct Subspace {
    FfMatrix basis;  // k x n, RREF

    long p() const { return basis.p(); }
    int dim() const { return basis.rows(); }
    int ambient() const { return basis.cols(); }

    static Subspace zero(long p, int n) { return {FfMatrix(p, 0, n)}; }
    static Subspace full(long p, int n) { return {FfMatrix::identity(p, n)}; }
    static Subspace span(FfMatrix rows) {
        std::vector<int> piv = rows.rref();
        FfMatrix b(rows.p(), static_cast<int>(piv.size()), rows.cols());
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) b.at(i, j) = rows.at(i, j);
        return {b};
    }

    // Residual of v after reduction by the basis; zero iff v is a member.
    std::vector<long> reduce(std::vector<long> v) const {
        long p = basis.p();
        for (int i = 0; i < basis.rows(); ++i) {
            int c = 0;
            while (c < basis.cols() && basis.at(i, c) == 0) ++c;
            if (c == basis.cols()) continue;
            long f = v[c] % p;
            if (!f) continue;
            for (int j = 0; j < basis.cols(); ++j)
                v[j] = (v[j] - f * basis.at(i, j) % p + p) % p;
        }
        return v;
    }
    bool contains(const std::vector<long>& v) const {
        for (long x : reduce(v))
            if (x % basis.p()) return false;
        return true;
    }
    // Coordinates of v in the RREF basis; nullopt if v is not a member.
    std::optional<std::vector<long>> coordinates(const std::vector<long>& v) const {
        if (basis.rows() == 0) {
            for (long x : v)
                if (x % basis.p()) return std::nullopt;
            return std::vector<long>{};
        }
        return basis.transposed().solve(v);
    }
    std::vector<int> pivot_columns() const {
        std::vector<int> piv;
        for (int i = 0; i < basis.rows(); ++i)
            for (int c = 0; c < basis.cols(); ++c)
                if (basis.at(i, c)) { piv.push_back(c); break; }
        return piv;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.basis == b.basis;
    }
};

inline Subspace intersect(const Subspace& a, const Subspace& b) {
    // Kernel trick: x in both spans iff x = uA = vB; solve [A^T | -B^T].
    long p = a.p();
    int n = a.ambient();
    int ka = a.dim(), kb = b.dim();
    FfMatrix m(p, n, ka + kb);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < ka; ++j) m.at(i, j) = a.basis.at(j, i);
        for (int j = 0; j < kb; ++j) m.at(i, ka + j) = (p - b.basis.at(j, i)) % p;
    }
    auto ker = m.kernel_basis();
    FfMatrix rows(p, static_cast<int>(ker.size()), n);
    for (size_t r = 0; r < ker.size(); ++r) {
        for (int i = 0; i < n; ++i) {
            long s = 0;
            for (int j = 0; j < ka; ++j) s = (s + ker[r][j] * a.basis.at(j, i)) % p;
            rows.at(static_cast<int>(r), i) = s;
        }
    }
    return Subspace::span(rows);
}

inline Subspace sum(const Subspace& a, const Subspace& b) {
    FfMatrix rows(a.p(), a.dim() + b.dim(), a.ambient());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.ambient(); ++j) rows.at(i, j) = a.basis.at(i, j);
    for (int i = 0; i < b.dim(); ++i)
        for (int j = 0; j < a.ambient(); ++j) rows.at(a.dim() + i, j) = b.basis.at(i, j);
    return Subspace::span(rows);
}

inline Int gaussian_binomial(long p, int n, int k) {
    if (k < 0 || k > n) return 0;
    Rat r = 1;
    for (int i = 0; i < k; ++i)
        r *= Rat(int_pow(p, n - i) - 1, int_pow(p, k - i) - 1);
    assert(denominator(r) == 1);
    return numerator(r);
}

// Visits each k-dimensional subspace of F_p^n exactly once, in canonical RREF
// form, by iterating over pivot patterns and free entries.
inline void for_each_subspace(long p, int n, int k,
                              const std::function<void(const Subspace&)>& visit,
                              const Guards& guards = default_guards()) {
    Int count = gaussian_binomial(p, n, k);
    if (count > guards.subspace_scan)
        throw GuardExceeded("subspace enumeration too large", count, guards.subspace_scan);
    if (k == 0) {
        visit(Subspace::zero(p, n));
        return;
    }
    if (k > n) return;
    std::vector<int> piv(k);
    for (int i = 0; i < k; ++i) piv[i] = i;
    while (true) {
        // free entries: (row i, col j) with j > piv[i], j not a pivot column
        std::vector<bool> is_pivot(n, false);
        for (int c : piv) is_pivot[c] = true;
        std::vector<std::pair<int, int>> free_pos;
        for (int i = 0; i < k; ++i)
            for (int j = piv[i] + 1; j < n; ++j)
                if (!is_pivot[j]) free_pos.emplace_back(i, j);
        std::vector<long> vals(free_pos.size(), 0);
        while (true) {
            FfMatrix b(p, k, n);
            for (int i = 0; i < k; ++i) b.at(i, piv[i]) = 1;
            for (size_t t = 0; t < free_pos.size(); ++t)
                b.at(free_pos[t].first, free_pos[t].second) = vals[t];
            visit(Subspace{b});
            size_t t = 0;
            while (t < vals.size() && vals[t] == p - 1) vals[t++] = 0;
            if (t == vals.size()) break;
            ++vals[t];
        }
        // next pivot combination
        int i = k - 1;
        while (i >= 0 && piv[i] == n - k + i) --i;
        if (i < 0) break;
        ++piv[i];
        for (int j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
    }
}

inline std::vector<Subspace> subspaces(long p, int n, int k,
                                       const Guards& guards = default_guards()) {
    std::vector<Subspace> out;
    for_each_subspace(p, n, k, [&](const Subspace& s) { out.push_back(s); }, guards);
    return out;
}

}  // namespace hallcat
