#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace whittle {

using Int = boost::multiprecision::cpp_int;

/// Dense matrix with arbitrary-precision integer entries, row-major.
class IntegerMatrix {
  public:
    IntegerMatrix() = default;

    IntegerMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries))
    {
        if (data_.size() != rows_ * cols_)
            throw std::invalid_argument("IntegerMatrix: entry count != rows*cols");
    }

    /// Row-of-rows constructor, convenient in tests: {{1,2},{3,4}}.
    IntegerMatrix(std::initializer_list<std::initializer_list<int>> rows)
    {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_)
                throw std::invalid_argument("IntegerMatrix: ragged initializer");
            for (int v : r)
                data_.emplace_back(v);
        }
    }

    static IntegerMatrix identity(std::size_t n)
    {
        IntegerMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const IntegerMatrix& o) const
    {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    bool is_zero() const
    {
        for (const auto& v : data_)
            if (v != 0)
                return false;
        return true;
    }

    IntegerMatrix operator*(const IntegerMatrix& o) const
    {
        if (cols_ != o.rows_)
            throw std::invalid_argument("IntegerMatrix: shape mismatch in product");
        IntegerMatrix out(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Int& a = (*this)(i, k);
                if (a == 0)
                    continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    out(i, j) += a * o(k, j);
            }
        return out;
    }

    IntegerMatrix operator+(const IntegerMatrix& o) const
    {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("IntegerMatrix: shape mismatch in sum");
        IntegerMatrix out = *this;
        for (std::size_t i = 0; i < data_.size(); ++i)
            out.data_[i] += o.data_[i];
        return out;
    }

    IntegerMatrix negated() const
    {
        IntegerMatrix out = *this;
        for (auto& v : out.data_)
            v = -v;
        return out;
    }

    IntegerMatrix transposed() const
    {
        IntegerMatrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                out(j, i) = (*this)(i, j);
        return out;
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }

    void swap_cols(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t i = 0; i < rows_; ++i)
            std::swap((*this)(i, a), (*this)(i, b));
    }

    /// row[a] += c * row[b]
    void add_row_multiple(std::size_t a, std::size_t b, const Int& c)
    {
        for (std::size_t j = 0; j < cols_; ++j)
            (*this)(a, j) += c * (*this)(b, j);
    }

    /// col[a] += c * col[b]
    void add_col_multiple(std::size_t a, std::size_t b, const Int& c)
    {
        for (std::size_t i = 0; i < rows_; ++i)
            (*this)(i, a) += c * (*this)(i, b);
    }

    void scale_row(std::size_t a, const Int& c)
    {
        for (std::size_t j = 0; j < cols_; ++j)
            (*this)(a, j) *= c;
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    Int determinant() const
    {
        if (rows_ != cols_)
            throw std::invalid_argument("determinant: matrix not square");
        const std::size_t n = rows_;
        if (n == 0)
            return 1;
        IntegerMatrix a = *this;
        Int prev = 1;
        int sign = 1;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            if (a(k, k) == 0) {
                std::size_t p = k + 1;
                while (p < n && a(p, k) == 0)
                    ++p;
                if (p == n)
                    return 0;
                a.swap_rows(k, p);
                sign = -sign;
            }
            for (std::size_t i = k + 1; i < n; ++i)
                for (std::size_t j = k + 1; j < n; ++j)
                    a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            prev = a(k, k);
        }
        return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
    }

    std::string to_string() const
    {
        std::string s;
        for (std::size_t i = 0; i < rows_; ++i) {
            s += "[ ";
            for (std::size_t j = 0; j < cols_; ++j) {
                s += (*this)(i, j).str();
                s += ' ';
            }
            s += "]\n";
        }
        return s;
    }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

} // namespace whittle
