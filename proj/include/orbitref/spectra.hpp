#pragma once

#include <optional>
#include <vector>

#include "orbitref/matrix.hpp"
#include "orbitref/polynomial.hpp"

namespace orbitref {

struct EigenvalueMultiplicity {
    Scalar value;
    int multiplicity;
};

struct EigenvalueResult {
    std::vector<EigenvalueMultiplicity> roots;  // canonical order
    bool split = false;
    /// Unfactored part of the characteristic polynomial (constant 1 when split).
    Polynomial residual;
    Polynomial char_poly;
};

/// Eigenvalues with algebraic multiplicities.
///
/// GF: exhaustive evaluation over the field. Q / Q(i): rational / Gaussian
/// rational roots of the cleared-denominator characteristic polynomial
/// (rational-root theorem, extended to Z[i]). C64: QR eigenvalues, clustered
/// so that each cluster is a consistent generalized eigenspace.
EigenvalueResult eigenvalues(const Matrix& m);

struct SpectralEntry {
    Scalar eigenvalue;
    std::vector<int> block_sizes;  // descending
    std::optional<Scalar> modulus_sq;  // absent over finite fields
    /// rank((M - lambda)^k) for k = 0, 1, ... until it stabilizes.
    std::vector<std::size_t> rank_sequence;

    int algebraic_multiplicity() const;
    int largest_block() const { return block_sizes.empty() ? 0 : block_sizes.front(); }
};

struct SpectralProfile {
    const FieldDescriptor* field = nullptr;
    std::size_t dim = 0;
    std::vector<SpectralEntry> entries;
    bool split = false;
    bool nilpotent = false;
    std::optional<Scalar> spectral_radius_sq;
    /// Set when a float modulus tie or cluster decision sits inside the 10x tol band.
    bool fragile = false;

    const SpectralEntry* find(const Scalar& eigenvalue) const;
};

struct JordanBlock {
    Scalar eigenvalue;
    int size;
};

/// Block sizes from the rank sequence r_0 = d, r_1, ...:
/// #blocks of size >= k equals r_{k-1} - r_k.
std::vector<int> block_sizes_from_ranks(const std::vector<std::size_t>& ranks);

/// Jordan profile of M. Throws NotSplit (exact kinds) when the characteristic
/// polynomial does not factor into linear terms over M's field.
SpectralProfile block_profile(const Matrix& m);

/// Builds a profile directly from Jordan data (entries merged per eigenvalue).
SpectralProfile profile_from_blocks(const FieldDescriptor& field, const std::vector<JordanBlock>& blocks);

/// Direct sum of lambda + J_size blocks in the given order, chain convention
/// T e_k = lambda e_k + e_{k+1} within each block (unit subdiagonal).
Matrix jordan_matrix(const FieldDescriptor& field, const std::vector<JordanBlock>& blocks);

struct MaxModulusEntries {
    std::vector<SpectralEntry> entries;
    bool fragile = false;
};

/// Entries whose eigenvalue modulus equals the spectral radius. Exact ties over
/// Q / Q(i); float ties within relative `band` (default: the field tol).
/// Throws Nilpotent for nilpotent profiles, WrongField over finite fields.
MaxModulusEntries spectral_radius_entries(const SpectralProfile& profile, double band_factor = 1.0);

}  // namespace orbitref
