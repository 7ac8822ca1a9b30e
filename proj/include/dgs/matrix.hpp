#ifndef DGS_MATRIX_HPP
#define DGS_MATRIX_HPP

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <vector>

#include "dgs/error.hpp"

namespace dgs {

using BigInt = mpz_class;

// Dense row-major square matrix. Indices are 0-based; 1-based vertex
// labels are translated at the digraph boundary.
template <class T>
class Matrix {
   public:
    Matrix() = default;
    explicit Matrix(std::size_t n, const T& fill = T(0)) : n_(n), data_(n * n, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t size() const noexcept { return n_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

    std::span<const T> row(std::size_t r) const { return {data_.data() + r * n_, n_}; }
    std::span<const T> values() const noexcept { return data_; }

    Matrix operator*(const Matrix& rhs) const {
        ensure(n_ == rhs.n_, "matrix size mismatch in product");
        Matrix out(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t k = 0; k < n_; ++k) {
                const T& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < n_; ++j) {
                    const T& b = rhs(k, j);
                    if (b != 0) out(i, j) += a * b;
                }
            }
        }
        return out;
    }

    Matrix& operator+=(const Matrix& rhs) {
        ensure(n_ == rhs.n_, "matrix size mismatch in sum");
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
        return *this;
    }

    T trace() const {
        T t(0);
        for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
        return t;
    }

    bool is_zero() const {
        for (const auto& v : data_)
            if (v != 0) return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) { return a.n_ == b.n_ && a.data_ == b.data_; }

   private:
    std::size_t n_ = 0;
    std::vector<T> data_;
};

using BigMatrix = Matrix<BigInt>;

inline BigMatrix power(const BigMatrix& base, unsigned k) {
    BigMatrix result = BigMatrix::identity(base.size());
    BigMatrix b = base;
    while (k) {
        if (k & 1u) result = result * b;
        k >>= 1u;
        if (k) b = b * b;
    }
    return result;
}

}  // namespace dgs

#endif
