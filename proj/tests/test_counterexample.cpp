#include <gtest/gtest.h>

#include "orbitref/counterexample.hpp"

using namespace orbitref;

TEST(PhasedScalar, CanonicalForm) {
    const auto& qi = FieldDescriptor::gaussian_rationals();
    const PhasedScalar quarter(Scalar::one(qi), mpq_class(1, 4));
    EXPECT_EQ(quarter, PhasedScalar(Scalar::gaussian(0, 1)));
    EXPECT_EQ(PhasedScalar(Scalar::one(qi), mpq_class(7, 3)), PhasedScalar(Scalar::one(qi), mpq_class(1, 3)));
    EXPECT_NE(PhasedScalar(Scalar::one(qi), mpq_class(1, 3)), PhasedScalar(Scalar::one(qi)));
    EXPECT_EQ(PhasedScalar(Scalar::zero(qi), mpq_class(1, 3)), PhasedScalar());
    const PhasedScalar w(Scalar::gaussian(2, 1), mpq_class(3, 7));
    EXPECT_EQ(w * w.inverse(), PhasedScalar(Scalar::one(qi)));
    EXPECT_NEAR(std::abs(PhasedScalar(Scalar::one(qi), mpq_class(1, 5)).to_complex() -
                         std::polar(1.0, 2.0 * 3.141592653589793 / 5.0)),
                0.0, 1e-15);
}

TEST(ApplyTPower, Examples) {
    const auto x = CounterexampleVector::twin(3);
    EXPECT_EQ(apply_T_power(x, 6), apply_S(x));
    EXPECT_EQ(apply_T_power(x, 6), CounterexampleVector::basis(true, 3));
    EXPECT_FALSE(apply_T_power(x, 2) == apply_S(x));
    EXPECT_TRUE(apply_T_power(CounterexampleVector{}, 12345).is_zero());
    // shift part moves down one index per power
    EXPECT_EQ(apply_T_power(CounterexampleVector::basis(false, 5), 2), CounterexampleVector::basis(false, 3));
    EXPECT_TRUE(apply_T_power(CounterexampleVector::basis(false, 5), 5).is_zero());
}

TEST(ApplyTPower, HugeExponentUsesResidues) {
    mpz_class e;
    mpz_ui_pow_ui(e.get_mpz_t(), 10, 40);
    const auto x = CounterexampleVector::basis(true, 7);
    const auto y = apply_T_power(x, e);
    const mpz_class r = e % 7;
    EXPECT_EQ(y, apply_T_power(x, r));
}

TEST(Factorial, ResiduesMatchBigInteger) {
    for (unsigned n = 0; n <= 25; ++n) {
        const mpz_class f = factorial(n);
        for (std::uint64_t k = 1; k <= 40; ++k) {
            EXPECT_EQ(factorial_mod(n, k), mpz_class(f % static_cast<unsigned long>(k)).get_ui()) << n << " " << k;
        }
    }
    EXPECT_EQ(factorial(8), 40320);
}

TEST(VerifyNoSinglePower, Examples) {
    const auto r = verify_no_single_power(8, 7);
    EXPECT_TRUE(r.holds);
    ASSERT_EQ(r.witnesses.size(), 8u);
    for (const auto& w : r.witnesses) {
        EXPECT_EQ(w.x, CounterexampleVector::twin(w.exponent + 1));
        EXPECT_EQ(w.t_power_x.shift_part.begin()->first, 1u);
    }
    const auto zero = verify_no_single_power(2, 0);
    EXPECT_TRUE(zero.holds);
    ASSERT_EQ(zero.witnesses.size(), 1u);
    EXPECT_EQ(zero.witnesses[0].x, CounterexampleVector::twin(1));
    EXPECT_TRUE(verify_no_single_power(2, 1).holds);
    EXPECT_FALSE(verify_no_single_power(3, 5).holds);  // needs support 6
}

TEST(CounterexampleProperties, FactorialPowerActsAsS) {
    for (const auto& row : truncation_table(8)) EXPECT_TRUE(row.all_equal) << row.n;
    // general vectors, not only basis vectors
    for (unsigned n = 1; n <= 8; ++n) {
        CounterexampleVector x;
        for (std::uint64_t k = 1; k <= n; ++k) {
            x.shift_part[k] = PhasedScalar(Scalar::gaussian(mpq_class(static_cast<long>(k), 3), 1));
            x.diag_part[k] = PhasedScalar(Scalar::gaussian(1, mpq_class(-static_cast<long>(k))), mpq_class(1, 9));
        }
        EXPECT_EQ(apply_T_power(x, factorial(n)), apply_S(x));
        // (n-1)! falls short when n is prime or 4: some k <= n does not divide it
        if (n == 3 || n == 4 || n == 5 || n == 7) EXPECT_FALSE(apply_T_power(x, factorial(n - 1)) == apply_S(x));
    }
}
