#include <gtest/gtest.h>

#include "orbitref/linalg.hpp"
#include "test_support.hpp"

using namespace orbitref;
using testsupport::mat;

namespace {

const FieldDescriptor& Q = FieldDescriptor::rationals();
const FieldDescriptor& QI = FieldDescriptor::gaussian_rationals();

Matrix nilpotent_jordan(const FieldDescriptor& f, std::size_t d) {
    return jordan_matrix(f, {{Scalar::zero(f), static_cast<int>(d)}});
}

}  // namespace

TEST(Rank, Examples) {
    EXPECT_EQ(rank(Matrix::zero(Q, 3)), 0u);
    EXPECT_EQ(rank(Matrix::identity(Q, 4)), 4u);
    EXPECT_EQ(rank(nilpotent_jordan(Q, 3)), 2u);
    EXPECT_EQ(rank(mat(FieldDescriptor::finite(2), {{"1", "1"}, {"1", "1"}})), 1u);
    EXPECT_EQ(rank(mat(FieldDescriptor::complex_float(), {{"1", "2"}, {"2", "4.0000000000001"}})), 1u);
}

TEST(Matpow, Examples) {
    EXPECT_TRUE(matpow(nilpotent_jordan(Q, 2), 2).is_zero());
    EXPECT_TRUE(matpow(Matrix::identity(Q, 3), 1000000).is_identity());
    const auto& f5 = FieldDescriptor::finite(5);
    EXPECT_TRUE(matpow(mat(f5, {{"1", "1"}, {"0", "1"}}), 5).is_identity());
    EXPECT_FALSE(matpow(mat(f5, {{"1", "1"}, {"0", "1"}}), 4).is_identity());
    EXPECT_TRUE(matpow(mat(Q, {{"2", "1"}, {"3", "4"}}), 0).is_identity());
}

TEST(CharPoly, Examples) {
    EXPECT_EQ(char_poly(nilpotent_jordan(Q, 2)).to_string(), "t^2");
    EXPECT_EQ(char_poly(mat(Q, {{"1", "0"}, {"0", "2"}})).to_string(), "t^2-3t+2");
    EXPECT_EQ(char_poly(mat(FieldDescriptor::finite(2), {{"1", "1"}, {"0", "1"}})).to_string(), "t^2+1");
    EXPECT_EQ(char_poly(mat(QI, {{"i", "0"}, {"0", "-i"}})).to_string(), "t^2+1");
}

TEST(CharPoly, RoutesAgree) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const Matrix m = testsupport::random_invertible(QI, 1 + trial % 5, rng);
        EXPECT_EQ(char_poly_faddeev(m), char_poly_bareiss(m));
    }
    const auto& f7 = FieldDescriptor::finite(7);
    const Matrix g = mat(f7, {{"1", "2", "3"}, {"4", "5", "6"}, {"0", "1", "3"}});
    EXPECT_EQ(char_poly_faddeev(g), char_poly_bareiss(g));
    EXPECT_THROW(char_poly_faddeev(mat(FieldDescriptor::finite(2), {{"1", "1"}, {"0", "1"}})), Error);
}

TEST(KernelBasis, Examples) {
    EXPECT_TRUE(kernel_basis(Matrix::identity(Q, 3)).empty());
    EXPECT_EQ(kernel_basis(Matrix::zero(Q, 2)).size(), 2u);
    const auto k = kernel_basis(nilpotent_jordan(Q, 3));
    ASSERT_EQ(k.size(), 1u);
    // Lower chain convention: J e_k = e_{k+1}, so the kernel is the last chain vector.
    EXPECT_TRUE(k[0][0].is_zero());
    EXPECT_TRUE(k[0][1].is_zero());
    EXPECT_FALSE(k[0][2].is_zero());
    try {
        (void)kernel_basis(Matrix::identity(FieldDescriptor::complex_float(), 2));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NumericKindUnsupported);
    }
}

TEST(Commutator, Examples) {
    const Matrix t = mat(Q, {{"1", "0"}, {"1", "1"}});
    EXPECT_TRUE(commutator_is_zero(t, t).is_zero);
    EXPECT_TRUE(commutator_is_zero(Matrix::identity(Q, 2), t).is_zero);
    const auto r = commutator_is_zero(mat(Q, {{"0", "0"}, {"1", "1"}}), t);
    EXPECT_FALSE(r.is_zero);
    EXPECT_FALSE(r.value.is_zero());
    EXPECT_THROW(commutator_is_zero(Matrix::identity(Q, 2), Matrix::identity(Q, 3)), Error);
}

TEST(Conjugate, Examples) {
    const Matrix m = mat(Q, {{"1", "0"}, {"0", "2"}});
    const Matrix p = mat(Q, {{"1", "1"}, {"0", "1"}});
    EXPECT_EQ(conjugate(m, Matrix::identity(Q, 2)), m);
    EXPECT_EQ(conjugate(m, p), mat(Q, {{"1", "1"}, {"0", "2"}}));
    EXPECT_EQ(conjugate(conjugate(m, p), inverse(p)), m);
    try {
        (void)conjugate(m, mat(Q, {{"1", "1"}, {"1", "1"}}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::Singular);
    }
}

TEST(LinalgProperties, RankNullityExhaustiveGf2) {
    const auto& f = FieldDescriptor::finite(2);
    for (unsigned code = 0; code < 16; ++code) {
        Matrix m(f, 2);
        for (unsigned b = 0; b < 4; ++b) m(b / 2, b % 2) = Scalar::finite(f, (code >> b) & 1u);
        EXPECT_EQ(rank(m) + kernel_basis(m).size(), 2u);
        for (const auto& v : kernel_basis(m)) {
            for (const auto& c : m.apply(v)) EXPECT_TRUE(c.is_zero());
        }
    }
}

TEST(LinalgProperties, RandomizedGaussian) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t d = 1 + static_cast<std::size_t>(trial % 6);
        Matrix m(QI, d);
        std::uniform_int_distribution<int> zero(0, 3);
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) {
                m(i, j) = zero(rng) == 0 ? Scalar::zero(QI) : testsupport::small_gaussian_integer(rng, 3);
            }
        }
        const Matrix p = testsupport::random_invertible(QI, d, rng);
        const Polynomial cp = char_poly(m);
        EXPECT_EQ(char_poly(conjugate(m, p)), cp);
        EXPECT_TRUE(cp.evaluate(m).is_zero());
        EXPECT_EQ(rank(m) + kernel_basis(m).size(), d);
        EXPECT_EQ(matpow(m, 5), matpow(m, 2) * matpow(m, 3));
        EXPECT_EQ(rank(m), rank(conjugate(m, p)));
    }
}

TEST(LinalgProperties, NilpotentStaysNilpotentUnderConjugation) {
    std::mt19937_64 rng(23);
    for (std::size_t d = 1; d <= 6; ++d) {
        const Matrix n = jordan_matrix(QI, {{Scalar::zero(QI), static_cast<int>(d)}});
        const Matrix c = conjugate(n, testsupport::random_invertible(QI, d, rng));
        EXPECT_TRUE(matpow(c, d).is_zero());
    }
}
