#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <vector>

namespace rackh {

using Int = boost::multiprecision::cpp_int;

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("IntMatrix: negative dimension");
    }

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int &at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Int &at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool is_zero() const {
        for (const Int &x : a_)
            if (x != 0) return false;
        return true;
    }

    bool operator==(const IntMatrix &o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    IntMatrix operator*(const IntMatrix &b) const {
        if (cols_ != b.rows_) throw std::invalid_argument("IntMatrix: dimension mismatch in product");
        IntMatrix c(rows_, b.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Int &x = at(i, k);
                if (x == 0) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    const Int &y = b.at(k, j);
                    if (y != 0) c.at(i, j) += x * y;
                }
            }
        return c;
    }

    IntMatrix operator-(const IntMatrix &b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_) throw std::invalid_argument("IntMatrix: dimension mismatch");
        IntMatrix c(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) c.a_[i] = a_[i] - b.a_[i];
        return c;
    }

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
    }
    // row i += f * row j
    void add_row(int i, int j, const Int &f) {
        for (int k = 0; k < cols_; ++k) at(i, k) += f * at(j, k);
    }
    void add_col(int i, int j, const Int &f) {
        for (int k = 0; k < rows_; ++k) at(k, i) += f * at(k, j);
    }
    void negate_row(int i) {
        for (int k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
    }

private:
    int rows_, cols_;
    std::vector<Int> a_;
};

// Determinant by fraction-free (Bareiss) elimination; intended for small matrices.
Int determinant(IntMatrix m);

} // namespace rackh
