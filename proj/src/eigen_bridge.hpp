#pragma once

// Conversions between orbitref matrices and Eigen complex matrices.

#include <Eigen/Dense>

#include "orbitref/matrix.hpp"

namespace orbitref::detail {

inline Eigen::MatrixXcd to_eigen(const Matrix& m) {
    const auto n = static_cast<Eigen::Index>(m.dim());
    Eigen::MatrixXcd a(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            a(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).to_complex();
        }
    }
    return a;
}

inline Matrix from_eigen(const Eigen::MatrixXcd& a, const FieldDescriptor& field) {
    Matrix m(field, static_cast<std::size_t>(a.rows()));
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = Scalar::complex(field, a(i, j));
        }
    }
    return m;
}

}  // namespace orbitref::detail
