#pragma once

#include "whittle/integer_matrix.hpp"

#include <cstdlib>
#include <optional>
#include <vector>

namespace whittle {

/// Result of Smith normal form: D = U * M * V with U, V unimodular and
/// D diagonal with d1 | d2 | ... (nonnegative diagonal).
struct SmithForm {
    IntegerMatrix D;
    IntegerMatrix U;
    IntegerMatrix V;

    std::size_t rank() const
    {
        std::size_t r = 0;
        const std::size_t n = std::min(D.rows(), D.cols());
        for (std::size_t i = 0; i < n; ++i)
            if (D(i, i) != 0)
                ++r;
        return r;
    }

    /// Diagonal entries > 1 (the nontrivial invariant factors).
    std::vector<Int> invariant_factors_above_one() const
    {
        std::vector<Int> out;
        const std::size_t n = std::min(D.rows(), D.cols());
        for (std::size_t i = 0; i < n; ++i)
            if (D(i, i) > 1)
                out.push_back(D(i, i));
        return out;
    }
};

namespace detail {

inline Int abs_int(const Int& v) { return v < 0 ? -v : v; }

// Smallest-nonzero-absolute-value pivot in the trailing submatrix at (k,k).
inline bool find_pivot(const IntegerMatrix& m, std::size_t k, std::size_t& pi, std::size_t& pj)
{
    bool found = false;
    Int best;
    for (std::size_t i = k; i < m.rows(); ++i)
        for (std::size_t j = k; j < m.cols(); ++j) {
            if (m(i, j) == 0)
                continue;
            Int a = abs_int(m(i, j));
            if (!found || a < best) {
                found = true;
                best = a;
                pi = i;
                pj = j;
            }
        }
    return found;
}

// Clear row k and column k. The smallest-absolute-value entry of the
// trailing submatrix is re-selected as the pivot before every reduction
// sweep; a sweep that leaves a remainder makes the next pivot strictly
// smaller, so the loop terminates and entries stay tame.
inline bool clear_cross(SmithForm& s, std::size_t k)
{
    IntegerMatrix& d = s.D;
    for (;;) {
        std::size_t pi = k, pj = k;
        if (!find_pivot(d, k, pi, pj))
            return false; // trailing submatrix is zero
        d.swap_rows(k, pi);
        s.U.swap_rows(k, pi);
        d.swap_cols(k, pj);
        s.V.swap_cols(k, pj);
        bool dirty = false;
        for (std::size_t i = k + 1; i < d.rows(); ++i) {
            if (d(i, k) == 0)
                continue;
            Int q = d(i, k) / d(k, k);
            if (q != 0) {
                d.add_row_multiple(i, k, -q);
                s.U.add_row_multiple(i, k, -q);
            }
            if (d(i, k) != 0)
                dirty = true;
        }
        for (std::size_t j = k + 1; j < d.cols(); ++j) {
            if (d(k, j) == 0)
                continue;
            Int q = d(k, j) / d(k, k);
            if (q != 0) {
                d.add_col_multiple(j, k, -q);
                s.V.add_col_multiple(j, k, -q);
            }
            if (d(k, j) != 0)
                dirty = true;
        }
        if (!dirty)
            return true;
    }
}

inline void diagonalize_from(SmithForm& s, std::size_t start)
{
    const std::size_t nmin = std::min(s.D.rows(), s.D.cols());
    for (std::size_t k = start; k < nmin; ++k) {
        if (!clear_cross(s, k))
            break;
        if (s.D(k, k) < 0) {
            s.D.scale_row(k, -1);
            s.U.scale_row(k, -1);
        }
    }
}

} // namespace detail

/// Smith normal form over Z. Pivoting picks the smallest nonzero
/// absolute value in the remaining submatrix, which keeps coefficient
/// growth tame on the small matrices this library deals in.
inline SmithForm smith_normal_form(const IntegerMatrix& m)
{
    SmithForm s{m, IntegerMatrix::identity(m.rows()), IntegerMatrix::identity(m.cols())};
    const std::size_t nmin = std::min(m.rows(), m.cols());
    detail::diagonalize_from(s, 0);

    // Enforce d_k | d_j for k < j: fold the offending entry into column k
    // and rediagonalize, which replaces (d_k, d_j) by (gcd, lcm).
    for (;;) {
        std::size_t bad_k = nmin;
        for (std::size_t k = 0; k < nmin && bad_k == nmin; ++k) {
            if (s.D(k, k) == 0)
                break;
            for (std::size_t j = k + 1; j < nmin; ++j)
                if (s.D(j, j) % s.D(k, k) != 0) {
                    bad_k = k;
                    s.D.add_col_multiple(k, j, 1);
                    s.V.add_col_multiple(k, j, 1);
                    break;
                }
        }
        if (bad_k == nmin)
            break;
        detail::diagonalize_from(s, bad_k);
    }
    return s;
}

inline std::size_t rank(const IntegerMatrix& m)
{
    return smith_normal_form(m).rank();
}

/// Solve M x = b exactly over Z via SNF; returns nullopt when no integral
/// solution exists.
inline std::optional<std::vector<Int>> solve_integer(const IntegerMatrix& m,
                                                     const std::vector<Int>& b)
{
    if (b.size() != m.rows())
        throw std::invalid_argument("solve_integer: rhs size mismatch");
    SmithForm s = smith_normal_form(m);
    // D = U M V, so M x = b  <=>  D y = U b with x = V y.
    std::vector<Int> ub(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Int acc = 0;
        for (std::size_t j = 0; j < m.rows(); ++j)
            acc += s.U(i, j) * b[j];
        ub[i] = acc;
    }
    std::vector<Int> y(m.cols());
    const std::size_t nmin = std::min(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i < nmin && s.D(i, i) != 0) {
            if (ub[i] % s.D(i, i) != 0)
                return std::nullopt;
            y[i] = ub[i] / s.D(i, i);
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    std::vector<Int> x(m.cols());
    for (std::size_t i = 0; i < m.cols(); ++i) {
        Int acc = 0;
        for (std::size_t j = 0; j < m.cols(); ++j)
            acc += s.V(i, j) * y[j];
        x[i] = acc;
    }
    return x;
}

} // namespace whittle
