#pragma once

#include "noncomm/error.hpp"
#include "noncomm/rational.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <type_traits>
#include <vector>

namespace noncomm {

namespace detail {

inline bool field_equal(const Rational& a, const Rational& b) { return a == b; }

// Relative tolerance with an absolute floor.
inline constexpr double float_rel_tol = 1e-9;
inline constexpr double float_abs_tol = 1e-12;

inline bool field_equal(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return std::abs(a - b) <= std::max(float_rel_tol * scale, float_abs_tol);
}

// sum_k lhs(k) * rhs(k) over a common denominator, canonicalised once at the end.
template <class Lhs, class Rhs>
Rational rational_dot(std::size_t n, Lhs lhs, Rhs rhs) {
    thread_local BigInt num;
    thread_local BigInt den;
    thread_local BigInt term_num;
    thread_local BigInt term_den;
    num = 0;
    den = 1;
    for (std::size_t k = 0; k < n; ++k) {
        const Rational& a = lhs(k);
        const Rational& b = rhs(k);
        if (sgn(a) == 0 || sgn(b) == 0) continue;
        mpz_mul(term_num.get_mpz_t(), a.get_num_mpz_t(), b.get_num_mpz_t());
        mpz_mul(term_den.get_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
        if (term_den == den) {
            num += term_num;
        } else {
            mpz_mul(num.get_mpz_t(), num.get_mpz_t(), term_den.get_mpz_t());
            mpz_addmul(num.get_mpz_t(), term_num.get_mpz_t(), den.get_mpz_t());
            mpz_mul(den.get_mpz_t(), den.get_mpz_t(), term_den.get_mpz_t());
        }
    }
    Rational out(num, den);
    out.canonicalize();
    return out;
}

[[noreturn]] inline void dimension_mismatch(const char* op, std::size_t lhs, std::size_t rhs) {
    throw Error(ErrorKind::DimensionMismatch,
                std::string(op) + ": dimension mismatch (" + std::to_string(lhs) + " vs " +
                    std::to_string(rhs) + ")");
}

}  // namespace detail

template <class Field>
class ColumnVector;

/// Dense square matrix over Field (Rational or double), row-major.
template <class Field>
class Matrix {
public:
    using field_type = Field;

    Matrix() : Matrix(1) {}
    explicit Matrix(std::size_t dim) : dim_(dim), entries_(dim * dim, Field(0)) {
        if (dim == 0) throw Error(ErrorKind::Domain, "matrix dimension must be at least 1");
    }
    Matrix(std::initializer_list<std::initializer_list<Field>> rows) : Matrix(rows.size()) {
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != dim_) throw Error(ErrorKind::DimensionMismatch, "matrix rows must be square");
            std::copy(row.begin(), row.end(), entries_.begin() + static_cast<std::ptrdiff_t>(i * dim_));
            ++i;
        }
    }

    static Matrix identity(std::size_t dim) {
        Matrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) m(i, i) = Field(1);
        return m;
    }

    std::size_t dim() const noexcept { return dim_; }

    Field& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
    const Field& operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.dim_ != b.dim_) detail::dimension_mismatch("matrix add", a.dim_, b.dim_);
        Matrix out(a.dim_);
        for (std::size_t i = 0; i < a.entries_.size(); ++i) out.entries_[i] = a.entries_[i] + b.entries_[i];
        return out;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.dim_ != b.dim_) detail::dimension_mismatch("matrix product", a.dim_, b.dim_);
        const std::size_t n = a.dim_;
        Matrix out(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if constexpr (std::is_same_v<Field, Rational>) {
                    out(i, j) = detail::rational_dot(n, [&](std::size_t k) -> const Rational& { return a(i, k); },
                                                     [&](std::size_t k) -> const Rational& { return b(k, j); });
                } else {
                    Field acc = 0;
                    for (std::size_t k = 0; k < n; ++k) acc += a(i, k) * b(k, j);
                    out(i, j) = acc;
                }
            }
        }
        return out;
    }

    friend ColumnVector<Field> operator*(const Matrix& a, const ColumnVector<Field>& y) {
        if (a.dim_ != y.dim()) detail::dimension_mismatch("matrix action", a.dim_, y.dim());
        ColumnVector<Field> out(a.dim_);
        for (std::size_t i = 0; i < a.dim_; ++i) {
            if constexpr (std::is_same_v<Field, Rational>) {
                out[i] = detail::rational_dot(a.dim_, [&](std::size_t k) -> const Rational& { return a(i, k); },
                                              [&](std::size_t k) -> const Rational& { return y[k]; });
            } else {
                Field acc = 0;
                for (std::size_t k = 0; k < a.dim_; ++k) acc += a(i, k) * y[k];
                out[i] = acc;
            }
        }
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        if (a.dim_ != b.dim_) return false;
        for (std::size_t i = 0; i < a.entries_.size(); ++i)
            if (!detail::field_equal(a.entries_[i], b.entries_[i])) return false;
        return true;
    }

private:
    std::size_t dim_;
    std::vector<Field> entries_;
};

template <class Field>
class ColumnVector {
public:
    ColumnVector() : ColumnVector(1) {}
    explicit ColumnVector(std::size_t dim) : entries_(dim, Field(0)) {
        if (dim == 0) throw Error(ErrorKind::Domain, "vector dimension must be at least 1");
    }
    ColumnVector(std::initializer_list<Field> entries) : entries_(entries) {
        if (entries_.empty()) throw Error(ErrorKind::Domain, "vector dimension must be at least 1");
    }

    std::size_t dim() const noexcept { return entries_.size(); }
    Field& operator[](std::size_t i) { return entries_[i]; }
    const Field& operator[](std::size_t i) const { return entries_[i]; }

    friend ColumnVector operator+(const ColumnVector& a, const ColumnVector& b) {
        if (a.dim() != b.dim()) detail::dimension_mismatch("vector add", a.dim(), b.dim());
        ColumnVector out(a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i) out.entries_[i] = a.entries_[i] + b.entries_[i];
        return out;
    }

    friend bool operator==(const ColumnVector& a, const ColumnVector& b) {
        if (a.dim() != b.dim()) return false;
        for (std::size_t i = 0; i < a.dim(); ++i)
            if (!detail::field_equal(a.entries_[i], b.entries_[i])) return false;
        return true;
    }

private:
    std::vector<Field> entries_;
};

template <class Field>
Matrix<Field> zero_like(const Matrix<Field>& m) { return Matrix<Field>(m.dim()); }
template <class Field>
Matrix<Field> identity_like(const Matrix<Field>& m) { return Matrix<Field>::identity(m.dim()); }
template <class Field>
ColumnVector<Field> zero_like(const ColumnVector<Field>& y) { return ColumnVector<Field>(y.dim()); }

template <class Field>
bool compatible(const Matrix<Field>& a, const Matrix<Field>& b) { return a.dim() == b.dim(); }
template <class Field>
bool compatible(const Matrix<Field>& a, const ColumnVector<Field>& y) { return a.dim() == y.dim(); }

using RationalMatrix = Matrix<Rational>;
using RationalVector = ColumnVector<Rational>;
using FloatMatrix = Matrix<double>;
using FloatVector = ColumnVector<double>;

}  // namespace noncomm
