#pragma once

/**
 * @file linalg.hpp
 * @brief Exact linear algebra over the rationals and integers.
 *
 * Everything here is elimination-based and deterministic: pivots are chosen
 * by position, never by magnitude heuristics, so identical inputs yield
 * identical reduced forms on every run.
 */

#include <optional>
#include <vector>

#include "okounkov/rational.hpp"

namespace okounkov {

struct Rref {
    std::vector<QVec> rows;      // nonzero rows of the reduced echelon form
    std::vector<int> pivot_cols; // one per row, strictly increasing
    int cols = 0;

    int rank() const { return static_cast<int>(rows.size()); }
};

/// Reduced row echelon form; zero rows are dropped.
inline Rref rref(std::vector<QVec> rows) {
    Rref out;
    out.cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    std::size_t rank = 0;
    for (int col = 0; col < out.cols && rank < rows.size(); ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        Rat lead = rows[rank][col];
        for (auto& x : rows[rank]) x /= lead;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][col] == 0) continue;
            Rat f = rows[i][col];
            for (int j = 0; j < out.cols; ++j) rows[i][j] -= f * rows[rank][j];
        }
        out.pivot_cols.push_back(col);
        ++rank;
    }
    rows.resize(rank);
    out.rows = std::move(rows);
    return out;
}

inline int rank_of(const std::vector<QVec>& rows) { return rref(rows).rank(); }

inline int rank_of(const std::vector<ZVec>& rows) {
    std::vector<QVec> q;
    q.reserve(rows.size());
    for (const auto& r : rows) q.push_back(to_qvec(r));
    return rank_of(q);
}

/// Any exact solution of the (possibly non-square) system A x = b, with free
/// variables set to 0; nullopt when inconsistent.
inline std::optional<QVec> solve_linear(const std::vector<QVec>& a, const QVec& b) {
    if (a.size() != b.size()) throw dimension_mismatch("solve_linear: row count mismatch");
    if (a.empty()) return QVec{};
    int n = static_cast<int>(a[0].size());
    std::vector<QVec> aug;
    aug.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        QVec row = a[i];
        row.push_back(b[i]);
        aug.push_back(std::move(row));
    }
    Rref rr = rref(std::move(aug));
    for (int p : rr.pivot_cols)
        if (p == n) return std::nullopt;  // 0 = 1 row
    QVec x(n, Rat(0));
    for (std::size_t i = 0; i < rr.rows.size(); ++i) x[rr.pivot_cols[i]] = rr.rows[i][n];
    return x;
}

/// Primitive integer basis of {x : A x = 0}, in the canonical RREF
/// parametrization, lex-sorted.
inline std::vector<ZVec> kernel_basis(const std::vector<QVec>& a, int n) {
    Rref rr = rref(a);
    std::vector<bool> is_pivot(n, false);
    for (int p : rr.pivot_cols) is_pivot[p] = true;
    std::vector<ZVec> basis;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        QVec x(n, Rat(0));
        x[f] = 1;
        for (std::size_t i = 0; i < rr.rows.size(); ++i) x[rr.pivot_cols[i]] = -rr.rows[i][f];
        basis.push_back(primitive_of(x));
    }
    std::sort(basis.begin(), basis.end(), lex_less<ZVec>);
    return basis;
}

inline std::vector<ZVec> kernel_basis(const std::vector<ZVec>& a, int n) {
    std::vector<QVec> q;
    q.reserve(a.size());
    for (const auto& r : a) q.push_back(to_qvec(r));
    return kernel_basis(q, n);
}

/// Primitive integer basis of the row space (RREF rows cleared of
/// denominators), lex-sorted.
inline std::vector<ZVec> rowspace_basis(const std::vector<ZVec>& a) {
    std::vector<QVec> q;
    q.reserve(a.size());
    for (const auto& r : a) q.push_back(to_qvec(r));
    Rref rr = rref(std::move(q));
    std::vector<ZVec> basis;
    basis.reserve(rr.rows.size());
    for (const auto& row : rr.rows) basis.push_back(primitive_of(row));
    std::sort(basis.begin(), basis.end(), lex_less<ZVec>);
    return basis;
}

/// Incremental rank tracker: accepts a row iff it enlarges the span.
/// Used to pick deterministic independent subsets in insertion order.
class SpanTracker {
public:
    explicit SpanTracker(int cols) : cols_(cols) {}

    bool try_add(const ZVec& row) {
        QVec r = to_qvec(row);
        reduce(r);
        if (is_zero(r)) return false;
        int col = 0;
        while (r[col] == 0) ++col;
        Rat lead = r[col];
        for (auto& x : r) x /= lead;
        for (auto& [c, existing] : rows_)
            if (existing[col] != 0) {
                Rat f = existing[col];
                for (int j = 0; j < cols_; ++j) existing[j] -= f * r[j];
            }
        rows_.emplace_back(col, std::move(r));
        return true;
    }

    int rank() const { return static_cast<int>(rows_.size()); }

private:
    void reduce(QVec& r) const {
        for (const auto& [col, row] : rows_) {
            if (r[col] == 0) continue;
            Rat f = r[col];
            for (int j = 0; j < cols_; ++j) r[j] -= f * row[j];
        }
    }

    int cols_;
    std::vector<std::pair<int, QVec>> rows_;  // (pivot col, normalized row)
};

/// Fraction-free determinant (Bareiss). Exact for any square integer matrix.
inline Int determinant(std::vector<ZVec> a) {
    std::size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw dimension_mismatch("determinant: not square");
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a[piv][k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(a[piv], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

/// Determinant over the rationals by Gaussian elimination.
inline Rat determinant_q(std::vector<QVec> a) {
    std::size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw dimension_mismatch("determinant_q: not square");
    Rat det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a[piv][k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(a[piv], a[k]);
            det = -det;
        }
        det *= a[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            Rat f = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return det;
}

/// Smith normal form diagonal of the row lattice: the nonzero diagonal
/// entries (positive, divisibility chain not enforced). Their product is the
/// covolume of the lattice spanned by the rows inside its saturation.
inline std::vector<Int> smith_diagonal(std::vector<ZVec> m) {
    if (m.empty()) return {};
    std::size_t rows = m.size(), cols = m[0].size();
    std::vector<Int> diag;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // locate a minimal-magnitude nonzero pivot in the trailing block
        std::size_t pi = rows, pj = cols;
        Int best = 0;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                if (m[i][j] == 0) continue;
                Int mag = abs(m[i][j]);
                if (best == 0 || mag < best) {
                    best = mag;
                    pi = i;
                    pj = j;
                }
            }
        if (best == 0) break;
        std::swap(m[t], m[pi]);
        for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pj]);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0) continue;
                Int q = m[i][t] / m[t][t];
                for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
                if (m[i][t] != 0) {  // remainder smaller than pivot: swap up
                    std::swap(m[i], m[t]);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0) continue;
                Int q = m[t][j] / m[t][t];
                for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
                if (m[t][j] != 0) {
                    for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][j], m[i][t]);
                    clean = false;
                }
            }
        }
        diag.push_back(abs(m[t][t]));
        ++t;
    }
    return diag;
}

/// Floor of the n-th root of a nonnegative integer.
inline Int iroot(const Int& x, unsigned n) {
    if (x < 0) throw error("iroot: negative radicand");
    if (n == 0) throw error("iroot: zeroth root");
    if (x == 0 || x == 1 || n == 1) return x;
    unsigned bits = boost::multiprecision::msb(x) + 1;
    Int r = Int(1) << (bits / n + 1);
    // Newton iteration for r -> ((n-1)r + x / r^(n-1)) / n, monotone from above
    while (true) {
        Int rp = boost::multiprecision::pow(r, n - 1);
        Int next = ((n - 1) * r + x / rp) / n;
        if (next >= r) break;
        r = next;
    }
    while (boost::multiprecision::pow(r, n) > x) --r;
    while (boost::multiprecision::pow(r + 1, n) <= x) ++r;
    return r;
}

/// If x = root^n for a rational root >= 0, returns it.
inline std::optional<Rat> exact_nth_root(const Rat& x, unsigned n) {
    if (x < 0) return std::nullopt;
    Int rn = iroot(numerator(x), n);
    Int rd = iroot(denominator(x), n);
    if (boost::multiprecision::pow(rn, n) != numerator(x)) return std::nullopt;
    if (boost::multiprecision::pow(rd, n) != denominator(x)) return std::nullopt;
    return Rat(rn, rd);
}

}  // namespace okounkov
