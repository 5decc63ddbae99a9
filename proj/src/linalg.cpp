#include <Eigen/SVD>

#include "equispectra/scalar.hpp"

namespace equispectra {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<Eigen::Index> rref(ExactMatrix& m) {
    std::vector<Eigen::Index> pivots;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
        Eigen::Index pivot = -1;
        for (Eigen::Index r = row; r < m.rows(); ++r) {
            if (!m(r, col).is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != row) m.row(pivot).swap(m.row(row));
        const Cyclotomic inv = m(row, col).inverse();
        for (Eigen::Index c = col; c < m.cols(); ++c) {
            if (!m(row, c).is_zero()) m(row, c) *= inv;
        }
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            const Cyclotomic f = m(r, col);
            for (Eigen::Index c = col; c < m.cols(); ++c) {
                if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

template <>
Eigen::Index matrix_rank<Cyclotomic>(ExactMatrix m, double) {
    return static_cast<Eigen::Index>(rref(m).size());
}

template <>
Eigen::Index matrix_rank<Complex>(ComplexMatrix m, double tol) {
    if (m.size() == 0) return 0;
    Eigen::BDCSVD<ComplexMatrix> svd(m);
    const auto& s = svd.singularValues();
    const double scale = std::max(1.0, s.size() ? s(0) : 0.0);
    Eigen::Index r = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) > tol * scale) ++r;
    return r;
}

template <>
ExactMatrix null_space<Cyclotomic>(const ExactMatrix& in, double) {
    ExactMatrix m = in;
    const auto pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    const Eigen::Index nfree = m.cols() - static_cast<Eigen::Index>(pivots.size());
    ExactMatrix basis = zeros<Cyclotomic>(m.cols(), nfree);
    Eigen::Index k = 0;
    for (Eigen::Index free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        basis(free, k) = Cyclotomic(1L);
        for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], k) = -m(static_cast<Eigen::Index>(r), free);
        ++k;
    }
    return basis;
}

template <>
ComplexMatrix null_space<Complex>(const ComplexMatrix& m, double tol) {
    if (m.rows() == 0) return identity<Complex>(m.cols());
    Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    const double scale = std::max(1.0, s.size() ? s(0) : 0.0);
    Eigen::Index r = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) > tol * scale) ++r;
    return svd.matrixV().rightCols(m.cols() - r);
}

}  // namespace equispectra
