#pragma once

#include <cstdint>
#include <vector>

#include "orbitref/matrix.hpp"
#include "orbitref/polynomial.hpp"

namespace orbitref {

/// Exact rank by fraction-free elimination (Bareiss over Q / Q(i),
/// Gauss-Jordan over GF). For ComplexFloat: singular values above
/// tol * sigma_max.
std::size_t rank(const Matrix& m);

/// Numeric rank of a complex matrix against an explicit reference scale:
/// counts singular values above tol * max(sigma_max, reference).
std::size_t numeric_rank(const Matrix& m, double reference);

/// M^k by binary exponentiation; M^0 = I.
Matrix matpow(const Matrix& m, std::uint64_t k);

/// Monic characteristic polynomial det(tI - M). Uses Faddeev-LeVerrier when
/// the characteristic is 0 or exceeds the dimension, and the
/// fraction-free polynomial-entry determinant otherwise. Exact kinds only.
Polynomial char_poly(const Matrix& m);
/// Faddeev-LeVerrier route (requires characteristic 0 or > dim).
Polynomial char_poly_faddeev(const Matrix& m);
/// Bareiss determinant of tI - M over F[t]; valid over every field.
Polynomial char_poly_bareiss(const Matrix& m);

/// Exact basis of the null space (empty iff M invertible). Exact kinds only.
std::vector<Vector> kernel_basis(const Matrix& m);

struct CommutatorResult {
    bool is_zero;
    Matrix value;  // ST - TS
};

/// ST - TS; exact for exact kinds, tolerance based for ComplexFloat.
CommutatorResult commutator_is_zero(const Matrix& s, const Matrix& t);

/// Exact inverse; throws Singular.
Matrix inverse(const Matrix& m);

/// Exact determinant (Bareiss over Q / Q(i), elimination over GF).
Scalar determinant(const Matrix& m);

/// P M P^{-1}; throws Singular when P is not invertible.
Matrix conjugate(const Matrix& m, const Matrix& p);

}  // namespace orbitref
