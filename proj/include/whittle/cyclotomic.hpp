#pragma once

#include "whittle/errors.hpp"
#include "whittle/group_ring.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace whittle {

using Rational = boost::multiprecision::cpp_rational;

/// Polynomial over Q, dense, normalized (no trailing zero coefficients).
class RationalPoly {
  public:
    RationalPoly() = default;
    RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static RationalPoly constant(Rational v)
    {
        return RationalPoly(std::vector<Rational>{std::move(v)});
    }

    /// x^k
    static RationalPoly power(std::size_t k)
    {
        std::vector<Rational> c(k + 1);
        c[k] = 1;
        return RationalPoly(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool operator==(const RationalPoly& o) const { return c_ == o.c_; }

    RationalPoly operator+(const RationalPoly& o) const
    {
        std::vector<Rational> out(std::max(c_.size(), o.c_.size()));
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = coeff(i) + o.coeff(i);
        return RationalPoly(std::move(out));
    }

    RationalPoly operator-(const RationalPoly& o) const
    {
        std::vector<Rational> out(std::max(c_.size(), o.c_.size()));
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = coeff(i) - o.coeff(i);
        return RationalPoly(std::move(out));
    }

    RationalPoly operator-() const
    {
        std::vector<Rational> out(c_);
        for (auto& v : out)
            v = -v;
        return RationalPoly(std::move(out));
    }

    RationalPoly operator*(const RationalPoly& o) const
    {
        if (is_zero() || o.is_zero())
            return RationalPoly();
        std::vector<Rational> out(c_.size() + o.c_.size() - 1);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0)
                continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                out[i + j] += c_[i] * o.c_[j];
        }
        return RationalPoly(std::move(out));
    }

    /// Exact division with remainder by a nonzero divisor.
    std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& divisor) const
    {
        if (divisor.is_zero())
            throw Error("polynomial division by zero");
        std::vector<Rational> rem(c_);
        const int dd = divisor.degree();
        const Rational lead = divisor.c_.back();
        std::vector<Rational> quo;
        if (degree() >= dd)
            quo.assign(degree() - dd + 1, Rational(0));
        for (int k = degree(); k >= dd; --k) {
            Rational q = rem[k] / lead;
            if (q == 0)
                continue;
            quo[k - dd] = q;
            for (int j = 0; j <= dd; ++j)
                rem[k - dd + j] -= q * divisor.c_[j];
        }
        return {RationalPoly(std::move(quo)), RationalPoly(std::move(rem))};
    }

    std::string to_string() const
    {
        if (is_zero())
            return "0";
        std::string s;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (c_[k] == 0)
                continue;
            if (!s.empty())
                s += " + ";
            s += c_[k].str();
            if (k > 0)
                s += "*x^" + std::to_string(k);
        }
        return s;
    }

  private:
    void normalize()
    {
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
    }

    std::vector<Rational> c_;
};

/// Positive divisors in increasing order.
inline std::vector<int> divisors(int n)
{
    std::vector<int> out;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0)
            out.push_back(d);
    return out;
}

/// x^n - 1
inline RationalPoly x_pow_minus_one(int n)
{
    std::vector<Rational> c(n + 1);
    c[0] = -1;
    c[n] = 1;
    return RationalPoly(std::move(c));
}

/// The d-th cyclotomic polynomial by the recursive division formula
/// Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e.
inline RationalPoly cyclotomic_polynomial(int d)
{
    RationalPoly num = x_pow_minus_one(d);
    for (int e : divisors(d)) {
        if (e == d)
            continue;
        auto [q, r] = num.divmod(cyclotomic_polynomial(e));
        if (!r.is_zero())
            throw InternalInconsistency("cyclotomic polynomial division left a remainder");
        num = std::move(q);
    }
    return num;
}

/// The field Q[x]/Phi_d(x); elements are polynomials of degree < deg Phi_d.
class CyclotomicField {
  public:
    explicit CyclotomicField(int d) : d_(d), phi_(cyclotomic_polynomial(d)) {}

    int conductor() const { return d_; }
    const RationalPoly& modulus() const { return phi_; }

    RationalPoly reduce(const RationalPoly& p) const { return p.divmod(phi_).second; }

    RationalPoly add(const RationalPoly& a, const RationalPoly& b) const { return a + b; }
    RationalPoly sub(const RationalPoly& a, const RationalPoly& b) const { return a - b; }
    RationalPoly mul(const RationalPoly& a, const RationalPoly& b) const
    {
        return reduce(a * b);
    }

    /// Inverse modulo Phi_d by the extended Euclidean algorithm.
    RationalPoly inv(const RationalPoly& a) const
    {
        if (a.is_zero())
            throw Error("cyclotomic field: division by zero");
        // extended gcd(phi, a): r0 = phi, r1 = a
        RationalPoly r0 = phi_, r1 = reduce(a);
        RationalPoly s0, s1 = RationalPoly::constant(1); // coefficients of a
        while (!r1.is_zero()) {
            auto [q, r2] = r0.divmod(r1);
            RationalPoly s2 = s0 - q * s1;
            r0 = std::move(r1);
            r1 = std::move(r2);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        if (r0.degree() != 0)
            throw InternalInconsistency("cyclotomic field: modulus not coprime to element");
        Rational lead = r0.coeff(0);
        std::vector<Rational> scaled(s0.coeffs());
        for (auto& v : scaled)
            v /= lead;
        return reduce(RationalPoly(std::move(scaled)));
    }

    /// Image of a group ring element under t -> x (mod Phi_d).
    RationalPoly project(const GroupRingElement& g) const
    {
        std::vector<Rational> c(static_cast<std::size_t>(g.modulus()));
        for (int k = 0; k < g.modulus(); ++k)
            c[k] = Rational(g.coeff(k));
        return reduce(RationalPoly(std::move(c)));
    }

  private:
    int d_;
    RationalPoly phi_;
};

/// Dense matrix over a cyclotomic field (entries reduced mod Phi).
class FieldMatrix {
  public:
    FieldMatrix() = default;
    FieldMatrix(const CyclotomicField* field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), data_(rows * cols)
    {
    }

    static FieldMatrix identity(const CyclotomicField* field, std::size_t n)
    {
        FieldMatrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = RationalPoly::constant(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const CyclotomicField* field() const { return field_; }

    RationalPoly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const RationalPoly& operator()(std::size_t i, std::size_t j) const
    {
        return data_[i * cols_ + j];
    }

    bool operator==(const FieldMatrix& o) const
    {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    bool is_zero() const
    {
        for (const auto& v : data_)
            if (!v.is_zero())
                return false;
        return true;
    }

    FieldMatrix operator*(const FieldMatrix& o) const
    {
        if (cols_ != o.rows_)
            throw Error("field matrix: shape mismatch in product");
        FieldMatrix out(field_, rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const RationalPoly& a = (*this)(i, k);
                if (a.is_zero())
                    continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    if (o(k, j).is_zero())
                        continue;
                    out(i, j) = out(i, j) + field_->mul(a, o(k, j));
                }
            }
        return out;
    }

    FieldMatrix operator+(const FieldMatrix& o) const
    {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw Error("field matrix: shape mismatch in sum");
        FieldMatrix out = *this;
        for (std::size_t i = 0; i < data_.size(); ++i)
            out.data_[i] = out.data_[i] + o.data_[i];
        return out;
    }

    FieldMatrix operator-(const FieldMatrix& o) const
    {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw Error("field matrix: shape mismatch in difference");
        FieldMatrix out = *this;
        for (std::size_t i = 0; i < data_.size(); ++i)
            out.data_[i] = out.data_[i] - o.data_[i];
        return out;
    }

    FieldMatrix negated() const
    {
        FieldMatrix out = *this;
        for (auto& v : out.data_)
            v = -v;
        return out;
    }

    std::size_t rank() const
    {
        FieldMatrix a = *this;
        std::size_t r = 0;
        for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
            std::size_t pivot = r;
            while (pivot < rows_ && a(pivot, col).is_zero())
                ++pivot;
            if (pivot == rows_)
                continue;
            a.swap_rows(r, pivot);
            RationalPoly inv = field_->inv(a(r, col));
            for (std::size_t i = r + 1; i < rows_; ++i) {
                if (a(i, col).is_zero())
                    continue;
                RationalPoly factor = field_->mul(a(i, col), inv);
                for (std::size_t j = col; j < cols_; ++j)
                    a(i, j) = a(i, j) - field_->mul(factor, a(r, j));
            }
            ++r;
        }
        return r;
    }

    /// Determinant by Gaussian elimination; exact.
    RationalPoly determinant() const
    {
        if (rows_ != cols_)
            throw Error("field matrix: determinant of a non-square matrix");
        if (rows_ == 0)
            return RationalPoly::constant(1);
        FieldMatrix a = *this;
        RationalPoly det = RationalPoly::constant(1);
        for (std::size_t col = 0; col < cols_; ++col) {
            std::size_t pivot = col;
            while (pivot < rows_ && a(pivot, col).is_zero())
                ++pivot;
            if (pivot == rows_)
                return RationalPoly();
            if (pivot != col) {
                a.swap_rows(col, pivot);
                det = -det;
            }
            det = field_->mul(det, a(col, col));
            RationalPoly inv = field_->inv(a(col, col));
            for (std::size_t i = col + 1; i < rows_; ++i) {
                if (a(i, col).is_zero())
                    continue;
                RationalPoly factor = field_->mul(a(i, col), inv);
                for (std::size_t j = col; j < cols_; ++j)
                    a(i, j) = a(i, j) - field_->mul(factor, a(col, j));
            }
        }
        return det;
    }

    /// Inverse of a square matrix by augmented elimination.
    FieldMatrix inverted() const
    {
        if (rows_ != cols_)
            throw Error("field matrix: inverse of a non-square matrix");
        FieldMatrix a = *this;
        FieldMatrix inv = identity(field_, rows_);
        for (std::size_t col = 0; col < cols_; ++col) {
            std::size_t pivot = col;
            while (pivot < rows_ && a(pivot, col).is_zero())
                ++pivot;
            if (pivot == rows_)
                throw Error("field matrix: singular matrix");
            a.swap_rows(col, pivot);
            inv.swap_rows(col, pivot);
            RationalPoly pi = field_->inv(a(col, col));
            for (std::size_t j = 0; j < cols_; ++j) {
                a(col, j) = field_->mul(a(col, j), pi);
                inv(col, j) = field_->mul(inv(col, j), pi);
            }
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == col || a(i, col).is_zero())
                    continue;
                RationalPoly factor = a(i, col);
                for (std::size_t j = 0; j < cols_; ++j) {
                    a(i, j) = a(i, j) - field_->mul(factor, a(col, j));
                    inv(i, j) = inv(i, j) - field_->mul(factor, inv(col, j));
                }
            }
        }
        return inv;
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }

  private:
    const CyclotomicField* field_ = nullptr;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<RationalPoly> data_;
};

/// Chinese remainder over Q[x]: given one value per divisor d of n
/// (reduced mod Phi_d), the unique polynomial mod x^n - 1 reducing to each
/// value. Exact rational arithmetic throughout.
inline RationalPoly crt_combine(int n, const std::vector<std::pair<int, RationalPoly>>& values)
{
    RationalPoly modulus = x_pow_minus_one(n);
    RationalPoly acc;
    for (const auto& [d, val] : values) {
        CyclotomicField f(d);
        auto [m_d, rem] = modulus.divmod(f.modulus());
        if (!rem.is_zero())
            throw InternalInconsistency("crt: cyclotomic factor does not divide x^n - 1");
        RationalPoly w_d = f.inv(f.reduce(m_d));
        // idempotent e_d = m_d * w_d (mod x^n - 1) and acc += val * e_d
        RationalPoly term = (val * w_d).divmod(f.modulus()).second * m_d;
        acc = (acc + term).divmod(modulus).second;
    }
    return acc;
}

/// Round a rational polynomial mod x^n - 1 back into Z[Z/n]; fails unless
/// every coefficient is an integer.
inline GroupRingElement to_group_ring(int n, const RationalPoly& p)
{
    if (p.degree() >= n)
        throw InternalInconsistency("to_group_ring: degree out of range");
    std::vector<Int> coeffs(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        Rational c = p.coeff(k);
        if (boost::multiprecision::denominator(c) != 1)
            throw InternalInconsistency("to_group_ring: non-integral coefficient " + c.str());
        coeffs[k] = boost::multiprecision::numerator(c);
    }
    return GroupRingElement(n, std::move(coeffs));
}

} // namespace whittle
