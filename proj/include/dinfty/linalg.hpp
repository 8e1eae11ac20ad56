#pragma once

#include <vector>

#include <Eigen/Core>

#include "dinfty/field.hpp"

/// Exact dense elimination over any field scalar.  Pivots are chosen as the
/// first nonzero entry of a column (exact arithmetic needs no magnitude
/// pivoting), which keeps the routines valid over finite fields where
/// absolute values do not exist.
namespace dinfty {

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <class Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Reduce m to reduced row-echelon form in place; returns (rank, pivot cols).
template <class Scalar>
std::pair<Eigen::Index, std::vector<Eigen::Index>> rref_in_place(DenseMatrix<Scalar>& m) {
    const Eigen::Index rows = m.rows(), cols = m.cols();
    std::vector<Eigen::Index> pivot_cols;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
        Eigen::Index pivot = -1;
        for (Eigen::Index r = row; r < rows; ++r) {
            if (!is_zero(m(r, col))) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != row) m.row(pivot).swap(m.row(row));
        const Scalar inv_lead = m(row, col);
        for (Eigen::Index c = col; c < cols; ++c) m(row, c) = m(row, c) / inv_lead;
        for (Eigen::Index r = 0; r < rows; ++r) {
            if (r == row || is_zero(m(r, col))) continue;
            const Scalar factor = m(r, col);
            for (Eigen::Index c = col; c < cols; ++c)
                m(r, c) = m(r, c) - factor * m(row, c);
        }
        pivot_cols.push_back(col);
        ++row;
    }
    return {row, pivot_cols};
}

template <class Scalar>
Eigen::Index rank(DenseMatrix<Scalar> m) {
    return rref_in_place(m).first;
}

/// Columns form a basis of the right kernel {v : m v = 0}.
template <class Scalar>
DenseMatrix<Scalar> kernel_basis(DenseMatrix<Scalar> m, const Scalar& one) {
    const Eigen::Index cols = m.cols();
    auto [rk, pivot_cols] = rref_in_place(m);
    const Eigen::Index nullity = cols - rk;
    DenseMatrix<Scalar> basis(cols, nullity);
    basis.setZero();
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (Eigen::Index c : pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
    Eigen::Index k = 0;
    for (Eigen::Index free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[static_cast<std::size_t>(free_col)]) continue;
        basis(free_col, k) = one;
        for (Eigen::Index r = 0; r < rk; ++r) {
            const Eigen::Index pc = pivot_cols[static_cast<std::size_t>(r)];
            if (pc < free_col) basis(pc, k) = -m(r, free_col);
        }
        ++k;
    }
    return basis;
}

}  // namespace dinfty
