#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbitref/matrix.hpp"
#include "orbitref/orbit_oracle.hpp"
#include "orbitref/spectra.hpp"

namespace orbitref {

enum class Property { Reflexive, OrbitReflexive, COrbitReflexive, AlgebraicFOrbitReflexive };
enum class Answer { True, False, Unknown };

const char* to_string(Property p) noexcept;
const char* to_string(Answer a) noexcept;

/// S together with the Jordan-coordinate T it was built against.
struct WitnessCertificate {
    Matrix jordan_form;
    Matrix witness;
};

struct Verdict {
    Property property;
    Answer answer = Answer::Unknown;
    std::string citation;
    bool fragile = false;
    std::string note;
    /// Criterion trace: one line per comparison made.
    std::vector<std::string> trace;
    std::optional<WitnessCertificate> witness;
    std::optional<EnumerationSummary> enumeration;
};

/// Pooled block comparison at maximum modulus.
struct MaxModulusGap {
    Scalar top_eigenvalue;  // eigenvalue carrying the largest block m
    int largest = 0;        // m
    int second = 0;         // m_1, 0 when only one block sits at max modulus
    bool fragile = false;
    std::vector<std::string> trace;
};

/// Nilpotent profiles pool every block (r(T) = 0). Throws WrongField as
/// spectral_radius_entries for non-nilpotent finite-field profiles.
MaxModulusGap max_modulus_gap(const SpectralProfile& profile, double band_factor = 1.0);

/// Per eigenvalue: largest block minus second largest (0 if single) <= 1.
Verdict decide_reflexive(const SpectralProfile& profile);

/// Always true for matrices.
Verdict decide_orbit_reflexive(const Matrix& m);

/// m - m_1 <= 1 over the blocks pooled at maximum modulus; for nilpotent
/// profiles that is every block. A false verdict carries the witness built on
/// the Jordan form.
/// Throws NotSplit, FiniteFieldUnsupported.
Verdict decide_c_orbit_reflexive(const SpectralProfile& profile);

/// Nilpotent with block gap >= 2: false, with the S e_0 = S e_1 = e_{m-1}
/// witness. Otherwise GF(p^k), k >= 2, split: true, and Unknown elsewhere, to
/// be settled by `upgrade_with_enumeration`. Throws WrongField off finite fields.
Verdict decide_algebraic_f_orbit_reflexive(const Matrix& m);

/// Replaces an Unknown algebraic verdict by the exact enumeration outcome.
void upgrade_with_enumeration(Verdict& verdict, const EnumerationSummary& summary);

}  // namespace orbitref
