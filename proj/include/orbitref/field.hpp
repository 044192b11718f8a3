#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "orbitref/galois.hpp"

namespace orbitref {

enum class FieldKind { Rationals, GaussianRationals, FiniteField, ComplexFloat };

/// Identifies the scalar field of a Scalar/Matrix/Polynomial.
///
/// Descriptors are interned: `rationals()`, `finite(p, k)` etc. always
/// return the same object for the same parameters, so fields compare by
/// address and can be held as plain references for the life of the process.
class FieldDescriptor {
public:
    static constexpr double kDefaultTolerance = 1e-9;

    static const FieldDescriptor& rationals();
    static const FieldDescriptor& gaussian_rationals();
    /// GF(p^k) with the default (Conway) modulus.
    static const FieldDescriptor& finite(std::uint32_t p, std::uint32_t k = 1);
    static const FieldDescriptor& complex_float(double tol = kDefaultTolerance);

    FieldDescriptor(const FieldDescriptor&) = delete;
    FieldDescriptor& operator=(const FieldDescriptor&) = delete;

    FieldKind kind() const noexcept { return kind_; }
    bool is_exact() const noexcept { return kind_ != FieldKind::ComplexFloat; }
    /// Characteristic zero and sits inside C (Q, Q(i), complex floats).
    bool embeds_in_complex() const noexcept { return kind_ != FieldKind::FiniteField; }

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t k() const noexcept { return k_; }
    double tol() const noexcept { return tol_; }
    /// 0 for characteristic zero.
    std::uint32_t characteristic() const noexcept { return kind_ == FieldKind::FiniteField ? p_ : 0; }

    /// Finite-field arithmetic tables; only valid for FiniteField.
    const GaloisField& gf() const;

    /// Short human name: "Q", "Q(i)", "GF(4)", "C64".
    std::string name() const;
    /// CLI field tag: "q", "qi", "gf", "c64".
    std::string tag() const;

    bool operator==(const FieldDescriptor& other) const noexcept { return this == &other; }

private:
    FieldDescriptor(FieldKind kind, std::uint32_t p, std::uint32_t k, double tol,
                    std::unique_ptr<GaloisField> gf);

    FieldKind kind_;
    std::uint32_t p_;
    std::uint32_t k_;
    double tol_;
    std::unique_ptr<GaloisField> gf_;
};

}  // namespace orbitref
