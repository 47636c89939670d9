#pragma once

#include "whittle/errors.hpp"
#include "whittle/smith.hpp"

#include <optional>
#include <string>
#include <vector>

namespace whittle {

/// Element of Z[Z/n]: integer coefficients of 1, t, ..., t^{n-1}.
class GroupRingElement {
  public:
    GroupRingElement() = default;

    explicit GroupRingElement(int n) : n_(n), coeffs_(static_cast<std::size_t>(n))
    {
        if (n < 1)
            throw Error("group ring: modulus must be >= 1");
    }

    GroupRingElement(int n, std::vector<Int> coeffs) : n_(n), coeffs_(std::move(coeffs))
    {
        if (n < 1 || coeffs_.size() != static_cast<std::size_t>(n))
            throw Error("group ring: coefficient vector length must equal the modulus");
    }

    static GroupRingElement zero(int n) { return GroupRingElement(n); }

    static GroupRingElement one(int n)
    {
        GroupRingElement e(n);
        e.coeffs_[0] = 1;
        return e;
    }

    /// c * t^k (k taken mod n).
    static GroupRingElement monomial(int n, long long k, Int c = 1)
    {
        GroupRingElement e(n);
        long long r = ((k % n) + n) % n;
        e.coeffs_[static_cast<std::size_t>(r)] = std::move(c);
        return e;
    }

    int modulus() const { return n_; }
    const std::vector<Int>& coeffs() const { return coeffs_; }
    const Int& coeff(int k) const { return coeffs_[static_cast<std::size_t>(k)]; }

    bool is_zero() const
    {
        for (const auto& c : coeffs_)
            if (c != 0)
                return false;
        return true;
    }

    bool operator==(const GroupRingElement& o) const
    {
        return n_ == o.n_ && coeffs_ == o.coeffs_;
    }

    GroupRingElement operator+(const GroupRingElement& o) const
    {
        check_same(o);
        GroupRingElement out(n_);
        for (int k = 0; k < n_; ++k)
            out.coeffs_[k] = coeffs_[k] + o.coeffs_[k];
        return out;
    }

    GroupRingElement operator-(const GroupRingElement& o) const
    {
        check_same(o);
        GroupRingElement out(n_);
        for (int k = 0; k < n_; ++k)
            out.coeffs_[k] = coeffs_[k] - o.coeffs_[k];
        return out;
    }

    GroupRingElement operator-() const
    {
        GroupRingElement out(n_);
        for (int k = 0; k < n_; ++k)
            out.coeffs_[k] = -coeffs_[k];
        return out;
    }

    /// Cyclic convolution: polynomial product mod t^n - 1.
    GroupRingElement operator*(const GroupRingElement& o) const
    {
        check_same(o);
        GroupRingElement out(n_);
        for (int i = 0; i < n_; ++i) {
            if (coeffs_[i] == 0)
                continue;
            for (int j = 0; j < n_; ++j) {
                if (o.coeffs_[j] == 0)
                    continue;
                out.coeffs_[(i + j) % n_] += coeffs_[i] * o.coeffs_[j];
            }
        }
        return out;
    }

    /// Matrix of multiplication by this element on the basis 1, t, ...,
    /// t^{n-1}: the circulant with this coefficient vector as first column.
    IntegerMatrix circulant() const
    {
        IntegerMatrix m(n_, n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                m(i, j) = coeffs_[((i - j) % n_ + n_) % n_];
        return m;
    }

    /// Renders like "-1 + t + t^4 (mod t^5 - 1)".
    std::string to_string() const
    {
        std::string body;
        for (int k = 0; k < n_; ++k) {
            const Int& c = coeffs_[k];
            if (c == 0)
                continue;
            Int a = c < 0 ? Int(-c) : c;
            if (body.empty())
                body += c < 0 ? "-" : "";
            else
                body += c < 0 ? " - " : " + ";
            std::string term;
            if (k == 0)
                term = a.str();
            else {
                if (a != 1)
                    term = a.str() + "*";
                term += (k == 1) ? "t" : "t^" + std::to_string(k);
            }
            body += term;
        }
        if (body.empty())
            body = "0";
        if (n_ > 1)
            body += " (mod t^" + std::to_string(n_) + " - 1)";
        return body;
    }

  private:
    void check_same(const GroupRingElement& o) const
    {
        if (n_ != o.n_)
            throw Error("group ring: modulus mismatch");
    }

    int n_ = 1;
    std::vector<Int> coeffs_ = {Int(0)};
};

/// Sum of coefficients (the ring map t -> 1).
inline Int augmentation(const GroupRingElement& a)
{
    Int s = 0;
    for (const auto& c : a.coeffs())
        s += c;
    return s;
}

/// Multiplicative inverse in Z[Z/n] if one exists, found by solving the
/// circulant system over Z.
inline std::optional<GroupRingElement> inverse(const GroupRingElement& u)
{
    const int n = u.modulus();
    std::vector<Int> e0(static_cast<std::size_t>(n));
    e0[0] = 1;
    auto x = solve_integer(u.circulant(), e0);
    if (!x)
        return std::nullopt;
    GroupRingElement v(n, std::move(*x));
    if (!((u * v) == GroupRingElement::one(n)))
        throw InternalInconsistency("inverse: solver returned a non-inverse");
    return v;
}

inline bool is_unit(const GroupRingElement& u) { return inverse(u).has_value(); }

/// Equality modulo the trivial units ±t^k, by exhausting the 2n candidates.
inline bool wh_equal(const GroupRingElement& u, const GroupRingElement& v)
{
    if (u.modulus() != v.modulus())
        throw Error("wh_equal: modulus mismatch");
    if (!is_unit(u) || !is_unit(v))
        throw Error("wh_equal: inputs must be units");
    const int n = u.modulus();
    for (int k = 0; k < n; ++k) {
        GroupRingElement tv = GroupRingElement::monomial(n, k) * v;
        if (u == tv || u == -tv)
            return true;
    }
    return false;
}

/// Dense matrix over Z[Z/n], row-major; all entries share one modulus.
class GroupRingMatrix {
  public:
    GroupRingMatrix() = default;

    GroupRingMatrix(int n, std::size_t rows, std::size_t cols)
        : n_(n), rows_(rows), cols_(cols), data_(rows * cols, GroupRingElement::zero(n))
    {
    }

    int modulus() const { return n_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    GroupRingElement& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const GroupRingElement& operator()(std::size_t i, std::size_t j) const
    {
        return data_[i * cols_ + j];
    }

    bool is_zero() const
    {
        for (const auto& e : data_)
            if (!e.is_zero())
                return false;
        return true;
    }

    bool operator==(const GroupRingMatrix& o) const
    {
        return n_ == o.n_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    GroupRingMatrix operator*(const GroupRingMatrix& o) const
    {
        if (cols_ != o.rows_ || n_ != o.n_)
            throw Error("group ring matrix: shape or modulus mismatch in product");
        GroupRingMatrix out(n_, rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const GroupRingElement& a = (*this)(i, k);
                if (a.is_zero())
                    continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    if (o(k, j).is_zero())
                        continue;
                    out(i, j) = out(i, j) + a * o(k, j);
                }
            }
        return out;
    }

    GroupRingMatrix negated() const
    {
        GroupRingMatrix out = *this;
        for (auto& e : out.data_)
            e = -e;
        return out;
    }

  private:
    int n_ = 1;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<GroupRingElement> data_;
};

/// A unit of Z[Z/n] up to the trivial units ±t^k: the artifact's value of
/// Whitehead torsion for a cyclic quotient of the fundamental group.
class WhiteheadClass {
  public:
    explicit WhiteheadClass(GroupRingElement representative)
        : rep_(std::move(representative))
    {
        if (!is_unit(rep_))
            throw Error("whitehead class: representative is not a unit");
    }

    static WhiteheadClass trivial(int n) { return WhiteheadClass(GroupRingElement::one(n)); }

    int modulus() const { return rep_.modulus(); }
    const GroupRingElement& representative() const { return rep_; }

    bool is_trivial() const { return wh_equal(rep_, GroupRingElement::one(rep_.modulus())); }

    bool operator==(const WhiteheadClass& o) const { return wh_equal(rep_, o.rep_); }

    std::string to_string() const { return rep_.to_string(); }

  private:
    GroupRingElement rep_;
};

} // namespace whittle
