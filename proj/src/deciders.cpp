#include "orbitref/deciders.hpp"

#include <algorithm>

#include "orbitref/witness.hpp"

namespace orbitref {

namespace {

std::string sizes_text(const std::vector<int>& sizes) {
    std::string out = "{";
    for (std::size_t i = 0; i < sizes.size(); ++i) out += (i ? "," : "") + std::to_string(sizes[i]);
    return out + "}";
}

void require_split(const SpectralProfile& p) {
    if (!p.split) throw Error(ErrorCode::NotSplit, "profile is not split over " + p.field->name());
}

}  // namespace

const char* to_string(Property p) noexcept {
    switch (p) {
        case Property::Reflexive: return "reflexive";
        case Property::OrbitReflexive: return "orbit_reflexive";
        case Property::COrbitReflexive: return "c_orbit_reflexive";
        case Property::AlgebraicFOrbitReflexive: return "algebraic_f_orbit_reflexive";
    }
    return "?";
}

const char* to_string(Answer a) noexcept {
    switch (a) {
        case Answer::True: return "true";
        case Answer::False: return "false";
        case Answer::Unknown: return "unknown";
    }
    return "?";
}

MaxModulusGap max_modulus_gap(const SpectralProfile& profile, double band_factor) {
    std::vector<std::pair<int, const SpectralEntry*>> pooled;
    std::string names;
    MaxModulusEntries top;
    if (profile.nilpotent) {
        // r(T) = 0: the single entry carries every block.
        top.entries = profile.entries;
    } else {
        top = spectral_radius_entries(profile, band_factor);
    }
    for (const auto& e : top.entries) {
        for (int s : e.block_sizes) pooled.emplace_back(s, &e);
        names += (names.empty() ? "" : " ") + e.eigenvalue.to_string() + ":" + sizes_text(e.block_sizes);
    }
    std::stable_sort(pooled.begin(), pooled.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    MaxModulusGap g{pooled.front().second->eigenvalue, pooled.front().first,
                    pooled.size() > 1 ? pooled[1].first : 0, top.fragile, {}};
    if (profile.nilpotent) g.trace.push_back("nilpotent: every block sits at modulus r(T) = 0");
    else g.trace.push_back("spectral radius^2 = " + profile.spectral_radius_sq->to_string());
    g.trace.push_back("blocks at max modulus: " + names);
    g.trace.push_back("m = " + std::to_string(g.largest) + ", m1 = " + std::to_string(g.second) +
                      ", gap = " + std::to_string(g.largest - g.second));
    return g;
}

Verdict decide_reflexive(const SpectralProfile& profile) {
    require_split(profile);
    Verdict v{Property::Reflexive};
    v.citation = "deddens-fillmore-block-gap";
    v.fragile = profile.fragile;
    bool ok = true;
    for (const auto& e : profile.entries) {
        const int m = e.largest_block();
        const int m1 = e.block_sizes.size() > 1 ? e.block_sizes[1] : 0;
        v.trace.push_back(e.eigenvalue.to_string() + ": " + sizes_text(e.block_sizes) + " gap " +
                          std::to_string(m - m1));
        ok = ok && m - m1 <= 1;
    }
    v.answer = ok ? Answer::True : Answer::False;
    return v;
}

Verdict decide_orbit_reflexive(const Matrix& m) {
    Verdict v{Property::OrbitReflexive};
    v.answer = Answer::True;
    v.citation = "matrices-are-orbit-reflexive";
    v.trace.push_back("holds for every " + std::to_string(m.dim()) + "x" + std::to_string(m.dim()) + " matrix");
    return v;
}

Verdict decide_c_orbit_reflexive(const SpectralProfile& profile) {
    if (!profile.field->embeds_in_complex()) {
        throw Error(ErrorCode::FiniteFieldUnsupported, "the C-orbit criterion needs a field inside C");
    }
    require_split(profile);
    Verdict v{Property::COrbitReflexive};
    v.fragile = profile.fragile;
    v.citation = "max-modulus-block-gap";
    const MaxModulusGap g = max_modulus_gap(profile);
    v.trace = g.trace;
    const bool holds = g.largest - g.second <= 1;
    v.answer = holds ? Answer::True : Answer::False;
    if (profile.nilpotent && !holds) {
        v.note = "nilpotent with gap >= 2: the witness lies in C-OrbRef(T) exactly (S x is a multiple of "
                 "T^{m-1} x, or of T^{m-2} x when x_0 = 0), so the kernels-dense reading does not apply";
    }
    if (profile.field->kind() == FieldKind::ComplexFloat && !profile.nilpotent) {
        for (double band : {0.1, 10.0}) {
            const MaxModulusGap h = max_modulus_gap(profile, band);
            if ((h.largest - h.second <= 1) != holds) v.fragile = true;
        }
    }
    if (!holds) {
        const Matrix j = jordan_matrix(*profile.field, witness_block_order(profile));
        v.witness = WitnessCertificate{j, build_c_orbit_witness(j, profile)};
    }
    return v;
}

Verdict decide_algebraic_f_orbit_reflexive(const Matrix& m) {
    if (m.field().kind() != FieldKind::FiniteField) {
        throw Error(ErrorCode::WrongField, "algebraic F-orbit reflexivity is decided over finite fields only");
    }
    Verdict v{Property::AlgebraicFOrbitReflexive};
    const auto ev = eigenvalues(m);
    v.trace.push_back("field " + m.field().name() + ", characteristic polynomial " + ev.char_poly.to_string() +
                      (ev.split ? " splits" : " does not split"));
    if (ev.split) {
        const SpectralProfile profile = block_profile(m);
        if (profile.nilpotent) {
            const MaxModulusGap g = max_modulus_gap(profile);
            v.trace.insert(v.trace.end(), g.trace.begin(), g.trace.end());
            if (g.largest - g.second >= 2) {
                const Matrix j = jordan_matrix(m.field(), witness_block_order(profile));
                v.answer = Answer::False;
                v.citation = "nilpotent-block-gap-witness";
                v.witness = WitnessCertificate{j, build_c_orbit_witness(j, profile)};
                v.note = "S e_0 = S e_1 = e_{m-1} on the top chain maps every x into F T^{m-1} x or F T^{m-2} x "
                         "and does not commute with T";
                return v;
            }
        }
    }
    if (m.field().k() >= 2 && ev.split) {
        v.answer = Answer::True;
        v.citation = "split-over-non-prime-field";
        return v;
    }
    v.answer = Answer::Unknown;
    v.citation = "undecided-by-criterion";
    v.note = m.field().k() == 1 ? "prime field: no structural criterion, settle by enumeration"
                                : "minimal polynomial does not split: settle by enumeration";
    return v;
}

void upgrade_with_enumeration(Verdict& verdict, const EnumerationSummary& summary) {
    verdict.answer = summary.equal ? Answer::True : Answer::False;
    verdict.citation = "exhaustive-orbref0-enumeration";
    verdict.trace.push_back("|OrbRef0| = " + std::to_string(summary.orbref0_size) +
                            ", |F-Orb| = " + std::to_string(summary.f_orb_size));
    verdict.enumeration = summary;
}

}  // namespace orbitref
