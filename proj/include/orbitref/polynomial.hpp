#pragma once

#include <string>
#include <utility>
#include <vector>

#include "orbitref/matrix.hpp"

namespace orbitref {

/// Univariate polynomial, coefficients from the constant term up. The zero
/// polynomial has no coefficients; otherwise the leading coefficient is nonzero.
class Polynomial {
public:
    explicit Polynomial(const FieldDescriptor& field) : field_(&field) {}
    Polynomial(const FieldDescriptor& field, std::vector<Scalar> coefficients);

    static Polynomial constant(const Scalar& c);
    /// t - root.
    static Polynomial linear_factor(const Scalar& root);
    /// t^n.
    static Polynomial monomial(const FieldDescriptor& field, std::size_t n);

    const FieldDescriptor& field() const noexcept { return *field_; }
    const std::vector<Scalar>& coefficients() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    const Scalar& leading() const;
    bool is_monic() const;
    Polynomial monic() const;
    Scalar coefficient(std::size_t i) const;

    Scalar evaluate(const Scalar& x) const;
    /// Horner evaluation at a matrix argument.
    Matrix evaluate(const Matrix& m) const;

    Polynomial derivative() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Scalar& c, const Polynomial& a);
    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Euclidean division; throws DivisionByZero for a zero divisor.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

    /// "t^2-3t+2" style text in the given variable.
    std::string to_string(const std::string& var = "t") const;

private:
    void trim();

    const FieldDescriptor* field_;
    std::vector<Scalar> coeffs_;
};

/// Monic gcd (zero if both are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace orbitref
