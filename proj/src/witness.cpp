#include "orbitref/witness.hpp"

#include <random>
#include <thread>

#include "orbitref/deciders.hpp"
#include "orbitref/galois.hpp"
#include "orbitref/linalg.hpp"
#include "orbitref/orbit_oracle.hpp"

namespace orbitref {

namespace {

MaxModulusGap failing_gap(const SpectralProfile& profile) {
    MaxModulusGap g = max_modulus_gap(profile);
    if (g.largest - g.second <= 1) {
        throw Error(ErrorCode::CriterionHolds, "the two largest blocks at maximum modulus differ by at most 1");
    }
    return g;
}

}  // namespace

std::vector<JordanBlock> witness_block_order(const SpectralProfile& profile) {
    const MaxModulusGap g = failing_gap(profile);
    std::vector<JordanBlock> blocks{{g.top_eigenvalue, g.largest}};
    bool skipped = false;
    for (const auto& e : profile.entries) {
        for (int s : e.block_sizes) {
            if (!skipped && s == g.largest && e.eigenvalue == g.top_eigenvalue) {
                skipped = true;
                continue;
            }
            blocks.push_back({e.eigenvalue, s});
        }
    }
    return blocks;
}

Matrix build_c_orbit_witness(const Matrix& t, const SpectralProfile& profile) {
    if (t.field() != *profile.field) throw Error(ErrorCode::MixedFields, "T and profile over different fields");
    if (t.dim() != profile.dim) throw Error(ErrorCode::ShapeMismatch, "T and profile differ in dimension");
    const MaxModulusGap g = failing_gap(profile);
    const auto& f = t.field();
    const std::size_t m = static_cast<std::size_t>(g.largest);
    for (std::size_t i = 0; i < t.dim(); ++i) {
        for (std::size_t j = 0; j < t.dim(); ++j) {
            if (i >= m && j >= m) continue;
            Scalar expected = Scalar::zero(f);
            if (i == j) expected = g.top_eigenvalue;
            if (i < m && i == j + 1) expected = Scalar::one(f);
            if (t(i, j) != expected) {
                throw Error(ErrorCode::NotJordanCoordinates,
                            "T does not start with the block " + g.top_eigenvalue.to_string() + " + J_" +
                                std::to_string(m) + " in chain order (entry " + std::to_string(i) + "," +
                                std::to_string(j) + ")");
            }
        }
    }
    Matrix s(f, t.dim());
    s(m - 1, 0) = Scalar::one(f);
    s(m - 1, 1) = Scalar::one(f);
    return s;
}

std::pair<Matrix, Matrix> build_fdlem_pair(std::uint32_t p) {
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    const auto& f = FieldDescriptor::finite(p);
    const Scalar o = Scalar::one(f), z = Scalar::zero(f);
    return {Matrix::from_rows(f, {{o, o}, {z, o}}), Matrix::from_rows(f, {{z, o}, {z, o}})};
}

std::vector<std::vector<std::complex<double>>> sample_vectors(std::size_t dim, std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<std::vector<std::complex<double>>> out;
    while (out.size() < count) {
        std::vector<std::complex<double>> x(dim);
        double norm = 0.0;
        for (auto& c : x) {
            const double re = normal(rng);
            const double im = normal(rng);
            c = {re, im};
            norm += std::norm(c);
        }
        if (norm == 0.0) continue;
        for (auto& c : x) c /= std::sqrt(norm);
        out.push_back(std::move(x));
    }
    return out;
}

WitnessReport validate_witness(const Matrix& s, const Matrix& t, const WitnessValidationOptions& options) {
    if (s.dim() != t.dim()) throw Error(ErrorCode::ShapeMismatch, "S and T differ in dimension");
    if (s.field() != t.field()) throw Error(ErrorCode::MixedFields, "S and T over different fields");
    WitnessReport report{s};
    report.threshold = options.threshold;
    const auto comm = commutator_is_zero(s, t);
    report.commutator_nonzero = !comm.is_zero;
    for (std::size_t i = 0; i < t.dim() && !report.commutator_entry; ++i) {
        for (std::size_t j = 0; j < t.dim(); ++j) {
            if (!comm.value(i, j).is_zero()) {
                report.commutator_entry = std::make_tuple(i, j, comm.value(i, j).to_string());
                break;
            }
        }
    }

    const std::size_t d = t.dim();
    std::vector<std::vector<std::complex<double>>> xs;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<std::complex<double>> e(d, 0.0);
        e[i] = 1.0;
        xs.push_back(std::move(e));
        labels.push_back("e" + std::to_string(i));
    }
    auto samples = sample_vectors(d, options.samples, options.seed);
    for (std::size_t i = 0; i < samples.size(); ++i) {
        xs.push_back(std::move(samples[i]));
        labels.push_back("sample " + std::to_string(i));
    }

    const std::size_t horizon = std::max<std::size_t>(options.horizon, 1);
    const std::size_t checkpoints[3] = {std::max<std::size_t>(horizon / 20, 1), std::max<std::size_t>(horizon / 4, 1),
                                        horizon};
    report.membership_residuals.resize(xs.size());
    auto run = [&](std::size_t begin, std::size_t step) {
        for (std::size_t v = begin; v < xs.size(); v += step) {
            const auto minima = c_orbit_membership_residual(t, s, xs[v], horizon);
            SampleResidual& r = report.membership_residuals[v];
            r.label = labels[v];
            for (std::size_t n : checkpoints) r.checkpoints.push_back({n, minima[n]});
            const double early = r.checkpoints.front().residual, late = r.checkpoints.back().residual;
            r.below_threshold = late < options.threshold;
            r.decays = early <= 1e-12 || late <= early / 5.0;
        }
    };
    const unsigned workers = std::max(1u, options.workers);
    if (workers == 1) {
        run(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w, workers);
        for (auto& th : pool) th.join();
    }
    report.verdict_supported = report.commutator_nonzero;
    for (const auto& r : report.membership_residuals) {
        report.verdict_supported = report.verdict_supported && r.below_threshold && r.decays;
    }
    return report;
}

}  // namespace orbitref
