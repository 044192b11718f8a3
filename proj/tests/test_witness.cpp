#include <gtest/gtest.h>

#include "criterion_table.hpp"
#include "orbitref/deciders.hpp"
#include "orbitref/linalg.hpp"
#include "orbitref/orbit_oracle.hpp"
#include "orbitref/witness.hpp"
#include "test_support.hpp"

using namespace orbitref;
using testsupport::mat;

namespace {

const FieldDescriptor& Q = FieldDescriptor::rationals();
const FieldDescriptor& QI = FieldDescriptor::gaussian_rationals();

}  // namespace

TEST(BuildCOrbitWitness, Examples) {
    const Matrix t = jordan_matrix(Q, {{Scalar::one(Q), 3}, {Scalar::one(Q), 1}});
    const Matrix s = build_c_orbit_witness(t, block_profile(t));
    Matrix expected(Q, 4);
    expected(2, 0) = Scalar::one(Q);
    expected(2, 1) = Scalar::one(Q);
    EXPECT_EQ(s, expected);

    const Matrix t2 = jordan_matrix(Q, {{Scalar::one(Q), 2}});
    EXPECT_EQ(build_c_orbit_witness(t2, block_profile(t2)), mat(Q, {{"0", "0"}, {"1", "1"}}));

    const Matrix t3 = jordan_matrix(Q, {{Scalar::from_integer(Q, 2), 3}, {Scalar::zero(Q), 2}});
    Matrix e3(Q, 5);
    e3(2, 0) = Scalar::one(Q);
    e3(2, 1) = Scalar::one(Q);
    EXPECT_EQ(build_c_orbit_witness(t3, block_profile(t3)), e3);
}

TEST(BuildCOrbitWitness, Errors) {
    const Matrix ok = jordan_matrix(Q, {{Scalar::one(Q), 2}, {Scalar::one(Q), 1}});
    try {
        (void)build_c_orbit_witness(ok, block_profile(ok));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::CriterionHolds);
    }
    // Small block first: not the required coordinates.
    const Matrix swapped = jordan_matrix(Q, {{Scalar::one(Q), 1}, {Scalar::one(Q), 3}});
    try {
        (void)build_c_orbit_witness(swapped, block_profile(swapped));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotJordanCoordinates);
    }
    // Upper (transposed) chain convention is rejected too.
    const Matrix upper = mat(Q, {{"1", "1"}, {"0", "1"}});
    EXPECT_THROW(build_c_orbit_witness(upper, block_profile(upper)), Error);
}

TEST(BuildFdlemPair, Examples) {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const auto [t, s] = build_fdlem_pair(p);
        const auto& f = FieldDescriptor::finite(p);
        EXPECT_EQ(t, mat(f, {{"1", "1"}, {"0", "1"}}));
        EXPECT_EQ(s, mat(f, {{"0", "1"}, {"0", "1"}}));
        EXPECT_FALSE(commutator_is_zero(s, t).is_zero);
        EXPECT_TRUE(orbref0_contains(t, s).contains);
    }
    try {
        (void)build_fdlem_pair(4);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotPrime);
    }
}

TEST(ValidateWitness, TrivialMembers) {
    std::mt19937_64 rng(61);
    const Matrix t = testsupport::random_invertible(QI, 3, rng);
    WitnessValidationOptions o;
    o.samples = 5;
    o.horizon = 40;
    const auto zero = validate_witness(Matrix::zero(QI, 3), t, o);
    EXPECT_FALSE(zero.commutator_nonzero);
    for (const auto& r : zero.membership_residuals) EXPECT_EQ(r.checkpoints.back().residual, 0.0);
    const auto self = validate_witness(t, t, o);
    for (const auto& r : self.membership_residuals) EXPECT_LT(r.checkpoints.back().residual, 1e-12);
    EXPECT_FALSE(self.verdict_supported);  // commutes
    EXPECT_THROW(validate_witness(Matrix::zero(QI, 2), t, o), Error);
}

TEST(ValidateWitness, CommutatorCertificate) {
    // (T - lambda) S e0 = 0 while S (T - lambda) e0 = S e1 = e_{m-1}.
    const Matrix t = jordan_matrix(Q, {{Scalar::one(Q), 3}, {Scalar::one(Q), 1}});
    const Matrix s = build_c_orbit_witness(t, block_profile(t));
    const Matrix n = t.shifted(Scalar::one(Q));
    const Vector e0 = basis_vector(Q, 4, 0);
    for (const auto& c : (n * s).apply(e0)) EXPECT_TRUE(c.is_zero());
    EXPECT_EQ((s * n).apply(e0), basis_vector(Q, 4, 2));
    const auto report = validate_witness(s, t);
    EXPECT_TRUE(report.commutator_nonzero);
    ASSERT_TRUE(report.commutator_entry.has_value());
}

TEST(ValidateWitness, EveryRejectedTableProfileIsSupported) {
    for (const auto& row : criterion_table::rows()) {
        if (row.c_orbit_reflexive) continue;
        const auto v = decide_c_orbit_reflexive(profile_from_blocks(QI, criterion_table::blocks_of(row)));
        ASSERT_TRUE(v.witness.has_value()) << row.name;
        const auto report = validate_witness(v.witness->witness, v.witness->jordan_form);
        EXPECT_TRUE(report.verdict_supported) << row.name;
        EXPECT_EQ(report.membership_residuals.size(), 100u + v.witness->jordan_form.dim());
    }
}

TEST(ValidateWitness, DeterministicAcrossWorkers) {
    const Matrix t = jordan_matrix(Q, {{Scalar::one(Q), 3}, {Scalar::one(Q), 1}});
    const Matrix s = build_c_orbit_witness(t, block_profile(t));
    WitnessValidationOptions a, b;
    b.workers = 4;
    const auto ra = validate_witness(s, t, a), rb = validate_witness(s, t, b);
    ASSERT_EQ(ra.membership_residuals.size(), rb.membership_residuals.size());
    for (std::size_t i = 0; i < ra.membership_residuals.size(); ++i) {
        for (std::size_t k = 0; k < 3; ++k) {
            EXPECT_EQ(ra.membership_residuals[i].checkpoints[k].residual,
                      rb.membership_residuals[i].checkpoints[k].residual);
        }
    }
}
