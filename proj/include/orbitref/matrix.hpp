#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "orbitref/scalar.hpp"

namespace orbitref {

using Vector = std::vector<Scalar>;

/// Dense square matrix over a single field, row-major.
class Matrix {
public:
    Matrix(const FieldDescriptor& field, std::size_t dim);

    static Matrix zero(const FieldDescriptor& field, std::size_t dim) { return Matrix(field, dim); }
    static Matrix identity(const FieldDescriptor& field, std::size_t dim);
    static Matrix diagonal(const std::vector<Scalar>& diag);
    /// Throws ShapeMismatch unless rows form a nonempty square array; entries
    /// must share `field`.
    static Matrix from_rows(const FieldDescriptor& field, const std::vector<std::vector<Scalar>>& rows);
    /// Parses each string with Scalar::parse.
    static Matrix parse(const FieldDescriptor& field, const std::vector<std::vector<std::string>>& rows);

    const FieldDescriptor& field() const noexcept { return *field_; }
    std::size_t dim() const noexcept { return dim_; }

    const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
    Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
    /// Assignment with a field check.
    void set(std::size_t i, std::size_t j, Scalar value);

    Matrix embed(const FieldDescriptor& target) const;

    bool is_zero() const;
    bool is_identity() const;

    Vector apply(const Vector& x) const;
    Scalar trace() const;

    Matrix operator-() const;
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& c, const Matrix& a);
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    /// M - c I.
    Matrix shifted(const Scalar& c) const;

    std::vector<std::vector<std::string>> to_strings() const;
    std::string to_string() const;

private:
    const FieldDescriptor* field_;
    std::size_t dim_;
    std::vector<Scalar> entries_;
};

Vector zero_vector(const FieldDescriptor& field, std::size_t n);
Vector basis_vector(const FieldDescriptor& field, std::size_t n, std::size_t index);

}  // namespace orbitref
