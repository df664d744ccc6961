#pragma once

#include "wg/poly.hpp"
#include "wg/rational.hpp"

#include <stdexcept>
#include <vector>

namespace wg {

template <typename T>
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    }

    static DenseMatrix identity(int m) {
        DenseMatrix r(m, m);
        for (int i = 0; i < m; ++i) r(i, i) = T(1);
        return r;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    DenseMatrix transpose() const {
        DenseMatrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = i + 1; j < cols_; ++j)
                if (!((*this)(i, j) == (*this)(j, i))) return false;
        return true;
    }

    friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
        DenseMatrix r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i) {
            for (int k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                for (int j = 0; j < b.cols_; ++j) {
                    r(i, j) += aik * b(k, j);
                }
            }
        }
        return r;
    }

    friend DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
        DenseMatrix r(a.rows_, a.cols_);
        for (size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] - b.a_[i];
        return r;
    }

    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<T> a_;
};

using RatMatrix = DenseMatrix<Rational>;
using PolyMatrix = DenseMatrix<PolyQ>;

// in-place reduced row echelon form; returns the pivot column indices
std::vector<int> rref_inplace(RatMatrix& a);

enum class SolveStatus { unique, underdetermined, inconsistent };
struct SolveResult {
    SolveStatus status = SolveStatus::inconsistent;
    std::vector<Rational> solution;  // one solution when consistent (free variables at 0)
};
SolveResult solve_linear(const RatMatrix& a, const std::vector<Rational>& b);

RatMatrix inverse(const RatMatrix& a);  // throws on singular input

// Exact Moore-Penrose pseudo-inverse of a symmetric rational matrix via
// full-rank factorization A = F*H from the reduced row echelon form.
// Rejects non-symmetric input.
RatMatrix pseudo_inverse(const RatMatrix& a);

}  // namespace wg
