#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "orbitref/matrix.hpp"
#include "orbitref/spectra.hpp"

namespace orbitref {

/// Jordan data ordered for the witness: the largest block at maximum modulus
/// first, the remaining blocks after it in profile order.
std::vector<JordanBlock> witness_block_order(const SpectralProfile& profile);

/// S with S e_0 = S e_1 = e_{m-1} and zero elsewhere, where e_0..e_{m-1} is the
/// chain of the leading block of T (T e_k = lambda e_k + e_{k+1}).
/// Throws CriterionHolds when the profile is C-orbit reflexive and
/// NotJordanCoordinates when T does not start with that block.
Matrix build_c_orbit_witness(const Matrix& t, const SpectralProfile& profile);

/// T = [[1,1],[0,1]] and S = [[0,1],[0,1]] over GF(p). Throws NotPrime.
std::pair<Matrix, Matrix> build_fdlem_pair(std::uint32_t p);

struct ResidualCheckpoint {
    std::size_t n;
    double residual;
};

struct SampleResidual {
    std::string label;  // "e0", ..., "sample 0", ...
    std::vector<ResidualCheckpoint> checkpoints;  // at N/20, N/4, N
    bool below_threshold = false;
    bool decays = false;
};

struct WitnessReport {
    Matrix witness;
    bool commutator_nonzero = false;
    /// First nonzero entry of ST - TS as (row, column, value).
    std::optional<std::tuple<std::size_t, std::size_t, std::string>> commutator_entry;
    std::vector<SampleResidual> membership_residuals;
    double threshold = 1e-2;
    bool verdict_supported = false;
};

struct WitnessValidationOptions {
    std::size_t samples = 100;
    std::size_t horizon = 2000;
    std::uint64_t seed = 0;
    double threshold = 1e-2;
    unsigned workers = 1;
};

/// Unit-norm complex Gaussian sample vectors drawn from one seeded engine.
std::vector<std::vector<std::complex<double>>> sample_vectors(std::size_t dim, std::size_t count, std::uint64_t seed);

/// Commutator certificate plus membership residuals on the basis vectors and
/// seeded samples. A sample decays when residual(N) <= residual(N/20) / 5 or
/// residual(N/20) is at the 1e-12 noise floor.
WitnessReport validate_witness(const Matrix& s, const Matrix& t, const WitnessValidationOptions& options = {});

}  // namespace orbitref
