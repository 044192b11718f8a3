#include <gtest/gtest.h>

#include "criterion_table.hpp"
#include "d2_oracle.hpp"
#include "orbitref/deciders.hpp"
#include "orbitref/linalg.hpp"
#include "orbitref/witness.hpp"
#include "test_support.hpp"

using namespace orbitref;
using testsupport::mat;

namespace {

const FieldDescriptor& Q = FieldDescriptor::rationals();
const FieldDescriptor& QI = FieldDescriptor::gaussian_rationals();

SpectralProfile prof(const FieldDescriptor& f, std::vector<std::pair<const char*, std::vector<int>>> spec) {
    std::vector<JordanBlock> blocks;
    for (const auto& [v, sizes] : spec) {
        for (int s : sizes) blocks.push_back({Scalar::parse(f, v), s});
    }
    return profile_from_blocks(f, blocks);
}

}  // namespace

TEST(DecideReflexive, Examples) {
    EXPECT_EQ(decide_reflexive(prof(Q, {{"1", {2, 1}}})).answer, Answer::True);
    EXPECT_EQ(decide_reflexive(prof(Q, {{"1", {3, 1}}})).answer, Answer::False);
    EXPECT_EQ(decide_reflexive(prof(Q, {{"5", {2}}})).answer, Answer::False);
    SpectralProfile p = prof(Q, {{"1", {1}}});
    p.split = false;
    EXPECT_THROW(decide_reflexive(p), Error);
}

TEST(DecideOrbitReflexive, AlwaysTrue) {
    EXPECT_EQ(decide_orbit_reflexive(jordan_matrix(Q, {{Scalar::zero(Q), 2}})).answer, Answer::True);
    EXPECT_EQ(decide_orbit_reflexive(Matrix::zero(Q, 3)).answer, Answer::True);
    std::mt19937_64 rng(1);
    EXPECT_EQ(decide_orbit_reflexive(testsupport::random_invertible(QI, 6, rng)).answer, Answer::True);
}

TEST(DecideCOrbitReflexive, Examples) {
    const auto a = decide_c_orbit_reflexive(prof(Q, {{"1", {3, 1}}, {"0", {4}}}));
    EXPECT_EQ(a.answer, Answer::False);
    ASSERT_TRUE(a.witness.has_value());
    // Nilpotent: every block sits at r(T) = 0, so the gap 5 - 2 decides.
    const auto n52 = decide_c_orbit_reflexive(prof(Q, {{"0", {5, 2}}}));
    EXPECT_EQ(n52.answer, Answer::False);
    ASSERT_TRUE(n52.witness.has_value());
    EXPECT_FALSE(n52.note.empty());
    EXPECT_EQ(decide_c_orbit_reflexive(prof(Q, {{"0", {3, 2}}})).answer, Answer::True);
    EXPECT_EQ(decide_c_orbit_reflexive(prof(Q, {{"1", {2}}})).answer, Answer::False);
    EXPECT_EQ(decide_c_orbit_reflexive(prof(QI, {{"1", {1}}, {"i", {1}}, {"1/2", {1}}})).answer, Answer::True);
    try {
        (void)decide_c_orbit_reflexive(block_profile(Matrix::identity(FieldDescriptor::finite(3), 2)));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::FiniteFieldUnsupported);
    }
}

TEST(DecideCOrbitReflexive, CriterionTable) {
    ASSERT_GE(criterion_table::rows().size(), 12u);
    for (const auto& row : criterion_table::rows()) {
        const auto p = profile_from_blocks(QI, criterion_table::blocks_of(row));
        const auto v = decide_c_orbit_reflexive(p);
        EXPECT_EQ(v.answer == Answer::True, row.c_orbit_reflexive) << row.name;
        EXPECT_EQ(v.witness.has_value(), !row.c_orbit_reflexive) << row.name;
        EXPECT_EQ(decide_reflexive(p).answer == Answer::True, row.reflexive) << row.name;
    }
}

TEST(DecideCOrbitReflexive, LoneBlocksAgreeWithBruteForce) {
    using namespace d2oracle;
    const std::vector<Q2> svals{{0, 0}, {1, 0}, {-1, 0}, {0, 1}};
    // 1 + J2: a lone unimodular block of size 2.
    const auto jordan = scan({Shape::Jordan, {1, 0}, {0, 0}}, svals, 1);
    ASSERT_FALSE(jordan.outside_closure.empty());
    const Mat witness{{0, 0}, {0, 0}, {1, 0}, {1, 0}};
    EXPECT_NE(std::find(jordan.outside_closure.begin(), jordan.outside_closure.end(), witness),
              jordan.outside_closure.end());
    EXPECT_EQ(decide_c_orbit_reflexive(prof(Q, {{"1", {2}}})).answer, Answer::False);

    // diag(1, 0): lone block of size 1 at the top modulus, plus a kernel.
    const auto d10 = scan({Shape::Diagonal, {1, 0}, {0, 0}}, svals, 1);
    EXPECT_GT(d10.passing, 0u);
    EXPECT_TRUE(d10.outside_closure.empty());
    EXPECT_EQ(decide_c_orbit_reflexive(prof(Q, {{"1", {1}}, {"0", {1}}})).answer, Answer::True);

    // diag(2, 1): lone block of size 1 above a smaller modulus.
    const auto d21 = scan({Shape::Diagonal, {2, 0}, {1, 0}}, svals, 1);
    EXPECT_GT(d21.passing, 0u);
    EXPECT_TRUE(d21.outside_closure.empty());
    EXPECT_EQ(decide_c_orbit_reflexive(prof(Q, {{"2", {1}}, {"1", {1}}})).answer, Answer::True);
}

// Lone nilpotent J2: the brute force finds the decider's witness outside the
// closure of C-Orb(T), and nothing outside it for T = 0.
TEST(DecideCOrbitReflexive, NilpotentLoneBlockAgreesWithBruteForce) {
    using namespace d2oracle;
    const std::vector<Q2> svals{{0, 0}, {1, 0}, {-1, 0}, {0, 1}};
    const auto nil = scan({Shape::Jordan, {0, 0}, {0, 0}}, svals, 1);
    const Mat witness{{0, 0}, {0, 0}, {1, 0}, {1, 0}};
    EXPECT_NE(std::find(nil.outside_closure.begin(), nil.outside_closure.end(), witness), nil.outside_closure.end());
    const auto v = decide_c_orbit_reflexive(prof(Q, {{"0", {2}}}));
    EXPECT_EQ(v.answer, Answer::False);
    ASSERT_TRUE(v.witness.has_value());
    EXPECT_EQ(v.witness->witness, mat(Q, {{"0", "0"}, {"1", "1"}}));

    const auto zero = scan({Shape::Diagonal, {0, 0}, {0, 0}}, svals, 1);
    EXPECT_TRUE(zero.outside_closure.empty());
    EXPECT_EQ(decide_c_orbit_reflexive(prof(Q, {{"0", {1, 1}}})).answer, Answer::True);
}

// A lone nilpotent chain of length m with the witness: S x is an exact
// multiple of T^{m-1} x or T^{m-2} x, so the residual vanishes.
TEST(DecideCOrbitReflexive, NilpotentWitnessIsExactMember) {
    for (const auto& blocks : std::vector<std::vector<int>>{{3}, {4, 1}, {5, 2}, {4, 2, 1}}) {
        std::vector<JordanBlock> jb;
        for (int b : blocks) jb.push_back({Scalar::zero(Q), b});
        const auto p = profile_from_blocks(Q, jb);
        const auto v = decide_c_orbit_reflexive(p);
        ASSERT_EQ(v.answer, Answer::False);
        for (const auto& x : sample_vectors(p.dim, 5, 1)) {
            const auto r = c_orbit_membership_residual(v.witness->jordan_form, v.witness->witness, x, 10);
            EXPECT_LT(r.back(), 1e-12);
        }
    }
}

TEST(DecideCOrbitReflexive, FloatTieFlagsFragile) {
    const auto& c = FieldDescriptor::complex_float(1e-9);
    // Moduli 1 and 1 - 2e-9: pooled at band 10 tol, separate at 0.1 tol.
    const auto p = profile_from_blocks(
        c, {{Scalar::complex(c, 1.0), 3}, {Scalar::complex(c, 1.0 - 2e-9), 2}});
    const auto v = decide_c_orbit_reflexive(p);
    EXPECT_TRUE(v.fragile);
    const auto clear = profile_from_blocks(c, {{Scalar::complex(c, 1.0), 3}, {Scalar::complex(c, 0.5), 2}});
    EXPECT_FALSE(decide_c_orbit_reflexive(clear).fragile);
}

TEST(DeciderProperties, ScalingInvariance) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        const auto blocks = testsupport::random_blocks(1 + trial % 6, rng);
        Scalar c = testsupport::random_eigenvalue(rng);
        if (c.is_zero()) c = Scalar::one(QI);
        std::vector<JordanBlock> scaled = blocks;
        for (auto& b : scaled) b.eigenvalue = c * b.eigenvalue;
        const auto p = profile_from_blocks(QI, blocks);
        const auto ps = profile_from_blocks(QI, scaled);
        EXPECT_EQ(decide_c_orbit_reflexive(p).answer, decide_c_orbit_reflexive(ps).answer);
        // Scaling the matrix itself: c J has blocks of the same sizes.
        const Matrix cj = c * jordan_matrix(QI, blocks);
        EXPECT_EQ(decide_c_orbit_reflexive(block_profile(cj)).answer, decide_c_orbit_reflexive(p).answer);
    }
}

TEST(DeciderProperties, DiagonalAlwaysTrue) {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Scalar> diag;
        for (std::size_t i = 0; i < 1 + static_cast<std::size_t>(trial % 8); ++i) {
            diag.push_back(testsupport::random_eigenvalue(rng));
        }
        EXPECT_EQ(decide_c_orbit_reflexive(block_profile(Matrix::diagonal(diag))).answer, Answer::True);
    }
}

TEST(DeciderProperties, SimilarityInvariance) {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t d = 1 + static_cast<std::size_t>(trial % 5);
        const auto blocks = testsupport::random_blocks(d, rng);
        const Matrix j = jordan_matrix(QI, blocks);
        const Matrix m = conjugate(j, testsupport::random_invertible(QI, d, rng));
        EXPECT_EQ(decide_c_orbit_reflexive(block_profile(m)).answer,
                  decide_c_orbit_reflexive(block_profile(j)).answer);
        EXPECT_EQ(decide_reflexive(block_profile(m)).answer, decide_reflexive(block_profile(j)).answer);
    }
}

TEST(DecideAlgebraic, Examples) {
    const auto& f4 = FieldDescriptor::finite(2, 2);
    EXPECT_EQ(decide_algebraic_f_orbit_reflexive(mat(f4, {{"1", "1"}, {"0", "1"}})).answer, Answer::True);

    const auto& f3 = FieldDescriptor::finite(3);
    const Matrix t3 = mat(f3, {{"1", "1"}, {"0", "1"}});
    Verdict v = decide_algebraic_f_orbit_reflexive(t3);
    EXPECT_EQ(v.answer, Answer::Unknown);
    upgrade_with_enumeration(v, enumerate_orbref0(t3).summary);
    EXPECT_EQ(v.answer, Answer::False);

    // Nilpotent with gap 2: refuted by the witness over any field.
    const auto& f2 = FieldDescriptor::finite(2);
    for (const FieldDescriptor* f : {&f2, &f3, &f4}) {
        const Matrix j2 = mat(*f, {{"0", "0"}, {"1", "0"}});
        const Verdict n = decide_algebraic_f_orbit_reflexive(j2);
        EXPECT_EQ(n.answer, Answer::False) << f->name();
        ASSERT_TRUE(n.witness.has_value());
        EXPECT_TRUE(orbref0_contains(j2, n.witness->witness).contains);
    }
    EXPECT_EQ(decide_algebraic_f_orbit_reflexive(jordan_matrix(f4, {{Scalar::zero(f4), 2}, {Scalar::zero(f4), 1}})).answer,
              Answer::True);

    const Matrix z = Matrix::zero(FieldDescriptor::finite(2), 2);
    Verdict w = decide_algebraic_f_orbit_reflexive(z);
    EXPECT_EQ(w.answer, Answer::Unknown);
    upgrade_with_enumeration(w, enumerate_orbref0(z).summary);
    EXPECT_EQ(w.answer, Answer::True);

    // t^2 + t + x has no root in GF(4).
    const Matrix ns = mat(f4, {{"0", "x"}, {"1", "1"}});
    EXPECT_EQ(decide_algebraic_f_orbit_reflexive(ns).answer, Answer::Unknown);
    EXPECT_THROW(decide_algebraic_f_orbit_reflexive(Matrix::identity(Q, 2)), Error);
}
