#pragma once

// The shift (+) rotation operator T = A (+) B on Y (+) Y, where
// A e_1 = 0, A e_{n+1} = e_n and B e_n = w_n e_n with w_n = exp(2 pi i / n),
// together with S = 0 (+) 1. Everything is exact: a diagonal coefficient is
// c * exp(2 pi i theta) with c in Q(i) and theta in Q/Z.

#include <cstdint>
#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "orbitref/scalar.hpp"

namespace orbitref {

/// c * exp(2 pi i theta). Canonical form: theta in [0, 1/4), c absorbing the
/// quarter turns, theta = 0 whenever c = 0.
class PhasedScalar {
public:
    PhasedScalar();
    PhasedScalar(Scalar coefficient, mpq_class theta = 0);

    const Scalar& coefficient() const noexcept { return c_; }
    const mpq_class& theta() const noexcept { return theta_; }
    bool is_zero() const { return c_.is_zero(); }

    PhasedScalar rotated(const mpq_class& turns) const;
    friend PhasedScalar operator*(const PhasedScalar& a, const PhasedScalar& b);
    PhasedScalar inverse() const;
    friend bool operator==(const PhasedScalar& a, const PhasedScalar& b);
    friend bool operator!=(const PhasedScalar& a, const PhasedScalar& b) { return !(a == b); }

    std::complex<double> to_complex() const;
    std::string to_string() const;

private:
    void canonicalize();
    Scalar c_;
    mpq_class theta_;
};

struct CounterexampleVector {
    std::map<std::uint64_t, PhasedScalar> shift_part;  // index k >= 1 -> a_k
    std::map<std::uint64_t, PhasedScalar> diag_part;   // index k >= 1 -> b_k

    static CounterexampleVector basis(bool diagonal_summand, std::uint64_t k);
    /// e_k (+) e_k
    static CounterexampleVector twin(std::uint64_t k);

    bool is_zero() const;
    std::uint64_t support() const;  // largest index carrying a nonzero coefficient
    friend bool operator==(const CounterexampleVector& a, const CounterexampleVector& b);
    std::string to_string() const;
};

/// T^e x, with the rotation exponent reduced mod k per coordinate.
CounterexampleVector apply_T_power(const CounterexampleVector& x, const mpz_class& e);
CounterexampleVector apply_S(const CounterexampleVector& x);
CounterexampleVector scale(const PhasedScalar& alpha, const CounterexampleVector& x);

/// alpha with alpha * u = v, if one exists.
std::optional<PhasedScalar> scalar_fit(const CounterexampleVector& u, const CounterexampleVector& v);

mpz_class factorial(unsigned n);
/// n! mod k by iterative residue accumulation.
std::uint64_t factorial_mod(unsigned n, std::uint64_t k);

struct PowerWitness {
    std::uint64_t exponent;  // N
    CounterexampleVector x;  // e_{N+1} (+) e_{N+1}
    CounterexampleVector t_power_x;
    CounterexampleVector s_x;
};

struct NoSinglePowerResult {
    bool holds = false;
    std::vector<PowerWitness> witnesses;
};

/// For every N in 0..max_k, exhibits x = e_{N+1} (+) e_{N+1} with no alpha
/// satisfying alpha T^N x = S x. Fails when N + 1 exceeds max_support.
NoSinglePowerResult verify_no_single_power(std::uint64_t max_support, std::uint64_t max_k);

struct TruncationRow {
    unsigned n;
    mpz_class exponent;  // n!
    std::size_t vectors_checked;
    bool all_equal;
};

/// For each n in 1..max_n: T^{n!} x = S x over every basis vector of support <= n.
std::vector<TruncationRow> truncation_table(unsigned max_n);

}  // namespace orbitref
