#include "wg/matrix.hpp"

namespace wg {

std::vector<int> rref_inplace(RatMatrix& a) {
    const int m = a.rows();
    const int n = a.cols();
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < n && row < m; ++col) {
        int piv = -1;
        for (int r = row; r < m; ++r) {
            if (!a(r, col).is_zero()) {
                piv = r;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != row) {
            for (int c = 0; c < n; ++c) std::swap(a(piv, c), a(row, c));
        }
        Rational inv = Rational(1) / a(row, col);
        for (int c = col; c < n; ++c) a(row, c) *= inv;
        for (int r = 0; r < m; ++r) {
            if (r == row || a(r, col).is_zero()) continue;
            Rational f = a(r, col);
            for (int c = col; c < n; ++c) a(r, c) -= f * a(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

SolveResult solve_linear(const RatMatrix& a, const std::vector<Rational>& b) {
    if (a.rows() != static_cast<int>(b.size())) throw std::invalid_argument("rhs size mismatch");
    const int m = a.rows();
    const int n = a.cols();
    RatMatrix aug(m, n + 1);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n) = b[static_cast<size_t>(i)];
    }
    std::vector<int> pivots = rref_inplace(aug);
    SolveResult out;
    if (!pivots.empty() && pivots.back() == n) {
        out.status = SolveStatus::inconsistent;
        return out;
    }
    out.status = static_cast<int>(pivots.size()) == n ? SolveStatus::unique : SolveStatus::underdetermined;
    out.solution.assign(static_cast<size_t>(n), Rational(0));
    for (size_t r = 0; r < pivots.size(); ++r) {
        out.solution[static_cast<size_t>(pivots[r])] = aug(static_cast<int>(r), n);
    }
    return out;
}

RatMatrix inverse(const RatMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse of non-square matrix");
    const int m = a.rows();
    RatMatrix aug(m, 2 * m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) aug(i, j) = a(i, j);
        aug(i, m + i) = Rational(1);
    }
    std::vector<int> pivots = rref_inplace(aug);
    if (static_cast<int>(pivots.size()) != m || pivots.back() != m - 1) {
        throw std::domain_error("matrix is singular");
    }
    RatMatrix inv(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) inv(i, j) = aug(i, m + j);
    return inv;
}

RatMatrix pseudo_inverse(const RatMatrix& a) {
    if (!a.is_symmetric()) throw std::invalid_argument("pseudo-inverse requires a symmetric matrix");
    const int m = a.rows();

    RatMatrix r = a;
    std::vector<int> pivots = rref_inplace(r);
    const int rank = static_cast<int>(pivots.size());
    if (rank == 0) return RatMatrix(m, m);
    if (rank == m) return inverse(a);

    // A = F*H with F the pivot columns of A and H the nonzero rows of rref(A)
    RatMatrix f(m, rank);
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < rank; ++k) f(i, k) = a(i, pivots[static_cast<size_t>(k)]);
    RatMatrix h(rank, m);
    for (int k = 0; k < rank; ++k)
        for (int j = 0; j < m; ++j) h(k, j) = r(k, j);

    RatMatrix ft = f.transpose();
    RatMatrix ht = h.transpose();
    RatMatrix gram_h_inv = inverse(h * ht);
    RatMatrix gram_f_inv = inverse(ft * f);
    return ht * gram_h_inv * gram_f_inv * ft;
}

}  // namespace wg
