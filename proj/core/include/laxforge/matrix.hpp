#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "laxforge/scalar.hpp"

namespace laxforge {

/**
 * Dense row-major matrix over an exact ring T.  T must be default
 * constructible to its zero, and provide +, -, *, ==.  Used with
 * T = Scalar for the coupling matrices and with T = DiffPoly for the
 * expanded Kronecker representations.
 */
template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

    static Matrix identity(std::size_t n, const T& one) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = one;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const T& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator+(const Matrix& o) const {
        require_same_shape(o);
        Matrix r(rows_, cols_);
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
        return r;
    }
    Matrix operator-(const Matrix& o) const {
        require_same_shape(o);
        Matrix r(rows_, cols_);
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
        return r;
    }
    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
        Matrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& aik = at(i, k);
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    r.at(i, j) = r.at(i, j) + aik * o.at(k, j);
                }
            }
        }
        return r;
    }

    Matrix scaled(const T& s) const {
        Matrix r(rows_, cols_);
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] * s;
        return r;
    }

    Matrix transposed() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    T trace() const {
        if (rows_ != cols_) throw std::invalid_argument("Matrix: trace of non-square");
        T t{};
        for (std::size_t i = 0; i < rows_; ++i) t = t + at(i, i);
        return t;
    }

    bool is_zero() const {
        T zero{};
        for (const T& x : e_)
            if (!(x == zero)) return false;
        return true;
    }

    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("Matrix: shape mismatch");
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> e_;
};

// Standard Kronecker block layout: result((i*p+k),(j*q+l)) = A(i,j)*B(k,l).
template <typename T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    r.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
    return r;
}

using ExactMatrix = Matrix<Scalar>;

ExactMatrix exact_identity(std::size_t n);
ExactMatrix pauli1();
ExactMatrix pauli2();
ExactMatrix pauli3();

// Raises a square matrix to a non-negative integer power.
ExactMatrix exact_pow(const ExactMatrix& m, unsigned k);

}  // namespace laxforge
