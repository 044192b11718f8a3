#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "orbitref/error.hpp"
#include "orbitref/field.hpp"

namespace orbitref {

struct GaussianRational {
    mpq_class re;
    mpq_class im;
};

/// An element of one of the supported fields, tagged by its descriptor.
///
/// Exact kinds compare exactly. ComplexFloat equality is tolerance based:
/// |a - b| <= tol * max(1, |a|, |b|) with the descriptor's tol.
class Scalar {
public:
    Scalar();  // 0 in Q

    static Scalar zero(const FieldDescriptor& field);
    static Scalar one(const FieldDescriptor& field);
    static Scalar from_integer(const FieldDescriptor& field, long long n);
    static Scalar rational(mpq_class value);
    static Scalar gaussian(mpq_class re, mpq_class im);
    static Scalar finite(const FieldDescriptor& field, std::uint32_t code);
    static Scalar complex(const FieldDescriptor& field, std::complex<double> value);

    /// Parses the scalar text syntax of `field`:
    ///   Q "-3/4", Q(i) "-3/4+1/2i", GF(p) "3", GF(p^k) "x+1", C64 "1.25-0.5i".
    static Scalar parse(const FieldDescriptor& field, std::string_view text);

    const FieldDescriptor& field() const noexcept { return *field_; }
    FieldKind kind() const noexcept { return field_->kind(); }

    const mpq_class& as_rational() const;
    const GaussianRational& as_gaussian() const;
    std::uint32_t as_finite() const;
    std::complex<double> as_complex() const;

    /// Numeric value in C; throws WrongField for finite fields.
    std::complex<double> to_complex() const;

    /// Re-expresses the value in a wider field: Q -> Q(i), Q/Q(i) -> C64.
    Scalar embed(const FieldDescriptor& target) const;

    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar inverse() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
    Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Deterministic canonical text, parseable by `parse` for the same field.
    std::string to_string() const;

    /// Total order used only for canonical sorting (real part, then imaginary
    /// part for C-embedded kinds; element code for finite fields).
    static bool canonical_less(const Scalar& a, const Scalar& b);

private:
    using Payload = std::variant<mpq_class, GaussianRational, std::uint32_t, std::complex<double>>;
    Scalar(const FieldDescriptor& field, Payload value) : field_(&field), value_(std::move(value)) {}

    const FieldDescriptor* field_;
    Payload value_;
};

enum class ArithOp { Add, Sub, Mul, Div };

/// Explicit-op form of the arithmetic operators.
Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op);

/// |a+bi|^2 = a^2 + b^2 as an exact rational. Requires Q(i).
Scalar norm_sq(const Scalar& a);

/// Squared modulus for any C-embedded kind: exact Q scalar for Q / Q(i),
/// a real C64 scalar for ComplexFloat.
Scalar modulus_sq(const Scalar& a);

}  // namespace orbitref
