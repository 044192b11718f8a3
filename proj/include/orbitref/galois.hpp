#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace orbitref {

bool is_prime(std::uint64_t n) noexcept;

/// Irreducible monic modulus used for GF(p^k): the Conway polynomial when
/// (p, k) is in the built-in table, otherwise the smallest irreducible monic
/// polynomial in coefficient order. Coefficients are low to high, length k+1.
std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t k);

/// GF(p^k) with elements coded as integers sum c_i p^i, c_i in [0, p).
///
/// Prime fields use direct modular arithmetic. Extension fields use full
/// addition/multiplication tables, so p^k is capped at `kMaxExtensionOrder`.
class GaloisField {
public:
    static constexpr std::uint64_t kMaxExtensionOrder = 1024;

    GaloisField(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus);

    std::uint32_t characteristic() const noexcept { return p_; }
    std::uint32_t degree() const noexcept { return k_; }
    std::uint64_t order() const noexcept { return q_; }
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
        if (k_ == 1) {
            std::uint64_t s = std::uint64_t{a} + b;
            return static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
        }
        return add_[a * q_ + b];
    }
    std::uint32_t neg(std::uint32_t a) const noexcept {
        if (k_ == 1) return a == 0 ? 0 : p_ - a;
        return neg_[a];
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return add(a, neg(b)); }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
        if (k_ == 1) return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p_);
        return mul_[a * q_ + b];
    }
    /// Inverse of a nonzero element; throws DivisionByZero on 0.
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }

    /// Image of the integer n under Z -> GF(q).
    std::uint32_t from_integer(long long n) const noexcept;

    std::vector<std::uint32_t> coefficients(std::uint32_t code) const;
    std::uint32_t from_coefficients(std::span<const std::uint32_t> coeffs) const;

    /// "3" for prime fields, "x^2+x+1"-style polynomials in x otherwise.
    std::string format(std::uint32_t code) const;
    std::uint32_t parse(std::string_view text) const;

    /// Polynomial text of the modulus, e.g. "x^2+x+1".
    std::string modulus_string() const;

private:
    std::uint32_t p_;
    std::uint32_t k_;
    std::uint64_t q_;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> add_;
    std::vector<std::uint32_t> mul_;
    std::vector<std::uint32_t> neg_;
    std::vector<std::uint32_t> inv_;
};

}  // namespace orbitref
