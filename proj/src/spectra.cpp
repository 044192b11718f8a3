#include "orbitref/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "eigen_bridge.hpp"
#include "number_theory.hpp"
#include "orbitref/linalg.hpp"

namespace orbitref {

namespace {

using detail::GaussInt;

// ---------------------------------------------------------------------------
// Exact roots over Q and Q(i)

// Leading-coefficient-scaled integral copy of p: multiplies by the lcm of all
// coefficient denominators (Gaussian case: of both parts).
std::vector<GaussInt> integral_coefficients(const Polynomial& p) {
    mpz_class l = 1;
    for (const auto& c : p.coefficients()) {
        if (c.kind() == FieldKind::Rationals) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.as_rational().get_den_mpz_t());
        } else {
            const auto& g = c.as_gaussian();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), g.re.get_den_mpz_t());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), g.im.get_den_mpz_t());
        }
    }
    std::vector<GaussInt> out;
    for (const auto& c : p.coefficients()) {
        if (c.kind() == FieldKind::Rationals) {
            mpq_class v = c.as_rational() * l;
            out.push_back({v.get_num(), 0});
        } else {
            const auto& g = c.as_gaussian();
            mpq_class re = g.re * l, im = g.im * l;
            out.push_back({re.get_num(), im.get_num()});
        }
    }
    return out;
}

Scalar make_root(const FieldDescriptor& field, const GaussInt& u, const GaussInt& v) {
    if (field.kind() == FieldKind::Rationals) return Scalar::rational(mpq_class(u.re, v.re));
    const Scalar num = Scalar::gaussian(mpq_class(u.re), mpq_class(u.im));
    const Scalar den = Scalar::gaussian(mpq_class(v.re), mpq_class(v.im));
    return num / den;
}

double cauchy_bound(const std::vector<GaussInt>& a) {
    auto absval = [](const GaussInt& g) { return std::hypot(g.re.get_d(), g.im.get_d()); };
    const double lead = absval(a.back());
    double mx = 0.0;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) mx = std::max(mx, absval(a[i]) / lead);
    return (1.0 + mx) * (1.0 + 1e-9) + 1e-9;
}

// Removes every root of `p` (square-free, nonzero constant term) that the full
// divisor search finds; appends them to `roots`.
void divisor_search(Polynomial& p, std::vector<Scalar>& roots) {
    if (p.degree() < 1) return;
    const auto& field = p.field();
    const auto a = integral_coefficients(p);
    const GaussInt& a0 = a.front();
    const GaussInt& an = a.back();
    const double bound = cauchy_bound(a);
    std::vector<GaussInt> numerators, denominators;
    if (field.kind() == FieldKind::Rationals) {
        for (const auto& d : detail::positive_divisors(abs(a0.re))) {
            numerators.push_back({d, 0});
            numerators.push_back({-d, 0});
        }
        for (const auto& d : detail::positive_divisors(abs(an.re))) denominators.push_back({d, 0});
    } else {
        numerators = detail::gaussian_divisors(a0, true);
        denominators = detail::gaussian_divisors(an, false);
    }
    for (const auto& v : denominators) {
        const double vabs = std::hypot(v.re.get_d(), v.im.get_d());
        for (const auto& u : numerators) {
            if (p.degree() < 1) return;
            if (std::hypot(u.re.get_d(), u.im.get_d()) > bound * vabs) continue;
            const Scalar r = make_root(field, u, v);
            if (!p.evaluate(r).is_zero()) continue;
            if (std::any_of(roots.begin(), roots.end(), [&](const Scalar& s) { return s == r; })) continue;
            roots.push_back(r);
            p = p.divmod(Polynomial::linear_factor(r)).first;
        }
    }
}

// Fast path: round numeric roots of the square-free part to candidates
// a_n * r in Z[i]; exact verification decides.
void numeric_candidates(Polynomial& p, std::vector<Scalar>& roots) {
    const auto deg = p.degree();
    if (deg < 1) return;
    const auto& field = p.field();
    const auto a = integral_coefficients(p);
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
    const std::complex<double> lead(a.back().re.get_d(), a.back().im.get_d());
    for (long i = 0; i < deg; ++i) {
        const std::complex<double> ci(a[static_cast<std::size_t>(i)].re.get_d(),
                                      a[static_cast<std::size_t>(i)].im.get_d());
        companion(i, deg - 1) = -ci / lead;
        if (i > 0) companion(i, i - 1) = 1.0;
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    if (solver.info() != Eigen::Success) return;
    const GaussInt& an = a.back();
    for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
        const std::complex<double> z = solver.eigenvalues()(k) * lead;
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || std::abs(z) > 1e15) continue;
        GaussInt u{mpz_class(std::round(z.real())), mpz_class(std::round(z.imag()))};
        if (field.kind() == FieldKind::Rationals) u.im = 0;
        if (u.re == 0 && u.im == 0) continue;
        const Scalar r = make_root(field, u, an);
        if (p.degree() < 1) return;
        if (!p.evaluate(r).is_zero()) continue;
        if (std::any_of(roots.begin(), roots.end(), [&](const Scalar& s) { return s == r; })) continue;
        roots.push_back(r);
        p = p.divmod(Polynomial::linear_factor(r)).first;
    }
}

EigenvalueResult exact_char_zero_eigenvalues(const Matrix& m) {
    const auto& field = m.field();
    const Polynomial cp = char_poly(m);
    std::vector<Scalar> distinct;
    Polynomial rest = cp;
    if (rest.coefficient(0).is_zero()) distinct.push_back(Scalar::zero(field));
    while (rest.degree() > 0 && rest.coefficient(0).is_zero()) {
        rest = rest.divmod(Polynomial::monomial(field, 1)).first;
    }
    if (rest.degree() > 0) {
        Polynomial sqfree = rest.divmod(gcd(rest, rest.derivative())).first.monic();
        numeric_candidates(sqfree, distinct);
        divisor_search(sqfree, distinct);
    }
    EigenvalueResult out{{}, false, Polynomial(field), cp};
    Polynomial residual = cp;
    for (const auto& r : distinct) {
        int mult = 0;
        const Polynomial f = Polynomial::linear_factor(r);
        while (residual.degree() > 0) {
            auto [q, rem] = residual.divmod(f);
            if (!rem.is_zero()) break;
            residual = std::move(q);
            ++mult;
        }
        out.roots.push_back({r, mult});
    }
    std::sort(out.roots.begin(), out.roots.end(),
              [](const auto& x, const auto& y) { return Scalar::canonical_less(x.value, y.value); });
    out.split = residual.degree() == 0;
    out.residual = residual;
    return out;
}

EigenvalueResult finite_field_eigenvalues(const Matrix& m) {
    const auto& field = m.field();
    const Polynomial cp = char_poly(m);
    EigenvalueResult out{{}, false, Polynomial(field), cp};
    Polynomial residual = cp;
    const std::uint64_t q = field.gf().order();
    for (std::uint64_t code = 0; code < q && residual.degree() > 0; ++code) {
        const Scalar c = Scalar::finite(field, static_cast<std::uint32_t>(code));
        int mult = 0;
        while (residual.degree() > 0 && residual.evaluate(c).is_zero()) {
            residual = residual.divmod(Polynomial::linear_factor(c)).first;
            ++mult;
        }
        if (mult > 0) out.roots.push_back({c, mult});
    }
    out.split = residual.degree() == 0;
    out.residual = residual;
    return out;
}

// ---------------------------------------------------------------------------
// Float path

struct Cluster {
    std::complex<double> center;
    int size;
};

// Dimensions of ker(A^k), k = 1.. until stable or `max_steps`, computed as a
// chain N_{k+1} = ker(Q_k^* A) with Q_k an orthonormal basis of N_k^perp.
std::vector<std::size_t> kernel_chain(const Eigen::MatrixXcd& a, double tol, int max_steps) {
    const Eigen::Index n = a.rows();
    Eigen::JacobiSVD<Eigen::MatrixXcd> norm_svd(a);
    const double scale = norm_svd.singularValues().size() ? norm_svd.singularValues()(0) : 0.0;
    const double cutoff = tol * std::max(scale, 1e-300);
    std::vector<std::size_t> dims;
    Eigen::MatrixXcd kernel(n, 0);
    for (int step = 0; step < max_steps; ++step) {
        Eigen::MatrixXcd b;
        if (kernel.cols() == 0) {
            b = a;
        } else {
            Eigen::JacobiSVD<Eigen::MatrixXcd> ksvd(kernel, Eigen::ComputeFullU);
            const Eigen::MatrixXcd complement = ksvd.matrixU().rightCols(n - kernel.cols());
            b = complement.adjoint() * a;
        }
        std::size_t nullity = static_cast<std::size_t>(n);
        Eigen::MatrixXcd next(n, 0);
        if (b.rows() > 0) {
            Eigen::JacobiSVD<Eigen::MatrixXcd> svd(b, Eigen::ComputeFullV);
            Eigen::Index r = 0;
            for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
                if (svd.singularValues()(i) > cutoff) ++r;
            }
            nullity = static_cast<std::size_t>(n - r);
            next = svd.matrixV().rightCols(n - r);
        } else {
            next = Eigen::MatrixXcd::Identity(n, n);
        }
        const bool stable = !dims.empty() && dims.back() == nullity;
        dims.push_back(nullity);
        kernel = next;
        if (stable || nullity == static_cast<std::size_t>(n)) break;
    }
    return dims;
}

std::vector<Cluster> single_linkage(const std::vector<std::complex<double>>& z, double radius) {
    const std::size_t n = z.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double scale = std::max({1.0, std::abs(z[i]), std::abs(z[j])});
            if (std::abs(z[i] - z[j]) <= radius * scale) parent[find(i)] = find(j);
        }
    }
    std::vector<Cluster> clusters;
    std::vector<std::size_t> roots;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t r = find(i);
        auto it = std::find(roots.begin(), roots.end(), r);
        if (it == roots.end()) {
            roots.push_back(r);
            clusters.push_back({z[i], 1});
        } else {
            auto& c = clusters[static_cast<std::size_t>(it - roots.begin())];
            c.center += z[i];
            ++c.size;
        }
    }
    for (auto& c : clusters) c.center /= static_cast<double>(c.size);
    return clusters;
}

double min_cluster_gap(const std::vector<Cluster>& cs) {
    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < cs.size(); ++i) {
        for (std::size_t j = i + 1; j < cs.size(); ++j) {
            const double scale = std::max({1.0, std::abs(cs[i].center), std::abs(cs[j].center)});
            gap = std::min(gap, std::abs(cs[i].center - cs[j].center) / scale);
        }
    }
    return gap;
}

struct FloatSpectrum {
    std::vector<Cluster> clusters;
    double radius;
    bool fragile;
};

// Chooses the widest clustering radius tol^(1/j), j = min(d, 12) .. 1, whose
// clusters are all consistent: the generalized eigenspace at each center
// has dimension equal to the cluster size. A defective eigenvalue of
// multiplicity a perturbed by eps spreads like eps^(1/a).
FloatSpectrum float_spectrum(const Matrix& m) {
    const double tol = m.field().tol();
    const Eigen::MatrixXcd a = detail::to_eigen(m);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(a, false);
    if (solver.info() != Eigen::Success) throw Error(ErrorCode::Internal, "eigenvalue iteration failed");
    std::vector<std::complex<double>> z(solver.eigenvalues().data(),
                                        solver.eigenvalues().data() + solver.eigenvalues().size());
    const int d = static_cast<int>(m.dim());
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
    std::vector<Cluster> fallback;
    double fallback_radius = tol;
    for (int j = std::min(d, 12); j >= 1; --j) {
        const double radius = std::pow(tol, 1.0 / j);
        auto clusters = single_linkage(z, radius);
        bool consistent = true;
        for (const auto& c : clusters) {
            const auto dims = kernel_chain(a - c.center * id, tol, c.size + 1);
            if (dims.back() != static_cast<std::size_t>(c.size)) {
                consistent = false;
                break;
            }
        }
        if (j == 1) {
            fallback = clusters;
            fallback_radius = radius;
        }
        if (consistent) {
            const bool fragile = min_cluster_gap(clusters) <= 10.0 * radius;
            return {std::move(clusters), radius, fragile};
        }
    }
    return {std::move(fallback), fallback_radius, true};
}

// ---------------------------------------------------------------------------

std::vector<std::size_t> exact_rank_sequence(const Matrix& m, const Scalar& lambda, int multiplicity) {
    const std::size_t d = m.dim();
    const std::size_t floor_rank = d - static_cast<std::size_t>(multiplicity);
    std::vector<std::size_t> ranks{d};
    const Matrix a = m.shifted(lambda);
    Matrix power = a;
    while (true) {
        const std::size_t r = rank(power);
        ranks.push_back(r);
        if (r == floor_rank || r == ranks[ranks.size() - 2]) break;
        power = power * a;
    }
    if (ranks.back() != floor_rank) {
        throw Error(ErrorCode::Internal, "rank sequence did not reach d - multiplicity");
    }
    return ranks;
}

void sort_entries(std::vector<SpectralEntry>& entries) {
    std::sort(entries.begin(), entries.end(), [](const SpectralEntry& x, const SpectralEntry& y) {
        return Scalar::canonical_less(x.eigenvalue, y.eigenvalue);
    });
}

void finish_profile(SpectralProfile& p) {
    sort_entries(p.entries);
    p.nilpotent = p.entries.size() == 1 && p.entries.front().eigenvalue.is_zero();
    p.spectral_radius_sq.reset();
    if (!p.field->embeds_in_complex()) return;
    for (const auto& e : p.entries) {
        if (e.eigenvalue.is_zero() || !e.modulus_sq) continue;
        if (!p.spectral_radius_sq) {
            p.spectral_radius_sq = e.modulus_sq;
            continue;
        }
        const bool larger = e.modulus_sq->kind() == FieldKind::ComplexFloat
                                ? e.modulus_sq->as_complex().real() > p.spectral_radius_sq->as_complex().real()
                                : e.modulus_sq->as_rational() > p.spectral_radius_sq->as_rational();
        if (larger) p.spectral_radius_sq = e.modulus_sq;
    }
}

std::optional<Scalar> entry_modulus(const Scalar& lambda) {
    if (!lambda.field().embeds_in_complex()) return std::nullopt;
    return modulus_sq(lambda);
}

}  // namespace

int SpectralEntry::algebraic_multiplicity() const { return std::accumulate(block_sizes.begin(), block_sizes.end(), 0); }

const SpectralEntry* SpectralProfile::find(const Scalar& eigenvalue) const {
    for (const auto& e : entries) {
        if (e.eigenvalue == eigenvalue) return &e;
    }
    return nullptr;
}

EigenvalueResult eigenvalues(const Matrix& m) {
    const auto& field = m.field();
    switch (field.kind()) {
        case FieldKind::FiniteField: return finite_field_eigenvalues(m);
        case FieldKind::Rationals:
        case FieldKind::GaussianRationals: return exact_char_zero_eigenvalues(m);
        case FieldKind::ComplexFloat: {
            const auto spectrum = float_spectrum(m);
            EigenvalueResult out{{}, true, Polynomial::constant(Scalar::one(field)), Polynomial(field)};
            for (const auto& c : spectrum.clusters) {
                const std::complex<double> center = std::abs(c.center) <= spectrum.radius ? 0.0 : c.center;
                out.roots.push_back({Scalar::complex(field, center), c.size});
            }
            std::sort(out.roots.begin(), out.roots.end(),
                      [](const auto& x, const auto& y) { return Scalar::canonical_less(x.value, y.value); });
            return out;
        }
    }
    throw Error(ErrorCode::Internal, "unknown field kind");
}

std::vector<int> block_sizes_from_ranks(const std::vector<std::size_t>& ranks) {
    // at_least[k-1] = number of blocks of size >= k
    std::vector<long> at_least;
    for (std::size_t k = 1; k < ranks.size(); ++k) {
        at_least.push_back(static_cast<long>(ranks[k - 1]) - static_cast<long>(ranks[k]));
    }
    std::vector<int> sizes;
    for (std::size_t k = at_least.size(); k-- > 0;) {
        const long next = k + 1 < at_least.size() ? at_least[k + 1] : 0;
        for (long c = 0; c < at_least[k] - next; ++c) sizes.push_back(static_cast<int>(k + 1));
    }
    return sizes;
}

SpectralProfile block_profile(const Matrix& m) {
    const auto& field = m.field();
    SpectralProfile p;
    p.field = &field;
    p.dim = m.dim();
    if (field.kind() == FieldKind::ComplexFloat) {
        const auto spectrum = float_spectrum(m);
        const Eigen::MatrixXcd a = detail::to_eigen(m);
        const auto d = static_cast<Eigen::Index>(m.dim());
        for (const auto& c : spectrum.clusters) {
            const std::complex<double> center = std::abs(c.center) <= spectrum.radius ? 0.0 : c.center;
            const auto dims = kernel_chain(a - c.center * Eigen::MatrixXcd::Identity(d, d), field.tol(), c.size + 1);
            std::vector<std::size_t> ranks{m.dim()};
            for (auto n : dims) ranks.push_back(m.dim() - n);
            while (ranks.size() >= 3 && ranks[ranks.size() - 1] == ranks[ranks.size() - 2]) ranks.pop_back();
            SpectralEntry e;
            e.eigenvalue = Scalar::complex(field, center);
            e.block_sizes = block_sizes_from_ranks(ranks);
            e.rank_sequence = ranks;
            e.modulus_sq = entry_modulus(e.eigenvalue);
            p.entries.push_back(std::move(e));
        }
        p.split = true;
        p.fragile = spectrum.fragile;
        finish_profile(p);
        return p;
    }
    const auto ev = eigenvalues(m);
    if (!ev.split) {
        throw Error(ErrorCode::NotSplit,
                    "characteristic polynomial does not split over " + field.name() + "; residual factor " +
                        ev.residual.to_string(),
                    ev.residual.to_string());
    }
    for (const auto& root : ev.roots) {
        SpectralEntry e;
        e.eigenvalue = root.value;
        e.rank_sequence = exact_rank_sequence(m, root.value, root.multiplicity);
        e.block_sizes = block_sizes_from_ranks(e.rank_sequence);
        e.modulus_sq = entry_modulus(root.value);
        p.entries.push_back(std::move(e));
    }
    p.split = true;
    finish_profile(p);
    return p;
}

SpectralProfile profile_from_blocks(const FieldDescriptor& field, const std::vector<JordanBlock>& blocks) {
    SpectralProfile p;
    p.field = &field;
    p.split = true;
    for (const auto& b : blocks) {
        if (b.size < 1) throw Error(ErrorCode::InvalidArgument, "Jordan block size must be >= 1");
        if (b.eigenvalue.field() != field) throw Error(ErrorCode::MixedFields, "block eigenvalue field mismatch");
        p.dim += static_cast<std::size_t>(b.size);
        auto it = std::find_if(p.entries.begin(), p.entries.end(),
                               [&](const SpectralEntry& e) { return e.eigenvalue == b.eigenvalue; });
        if (it == p.entries.end()) {
            SpectralEntry e;
            e.eigenvalue = b.eigenvalue;
            e.modulus_sq = entry_modulus(b.eigenvalue);
            p.entries.push_back(std::move(e));
            it = std::prev(p.entries.end());
        }
        it->block_sizes.push_back(b.size);
    }
    for (auto& e : p.entries) {
        std::sort(e.block_sizes.rbegin(), e.block_sizes.rend());
        // Rank sequence implied by the block sizes.
        std::size_t r = p.dim;
        e.rank_sequence = {r};
        for (int k = 1; k <= e.largest_block(); ++k) {
            std::size_t at_least = 0;
            for (int s : e.block_sizes) at_least += s >= k ? 1 : 0;
            r -= at_least;
            e.rank_sequence.push_back(r);
        }
    }
    finish_profile(p);
    return p;
}

Matrix jordan_matrix(const FieldDescriptor& field, const std::vector<JordanBlock>& blocks) {
    std::size_t d = 0;
    for (const auto& b : blocks) d += static_cast<std::size_t>(b.size);
    Matrix m(field, d);
    std::size_t offset = 0;
    for (const auto& b : blocks) {
        for (int k = 0; k < b.size; ++k) {
            const std::size_t i = offset + static_cast<std::size_t>(k);
            m.set(i, i, b.eigenvalue);
            if (k + 1 < b.size) m(i + 1, i) = Scalar::one(field);
        }
        offset += static_cast<std::size_t>(b.size);
    }
    return m;
}

MaxModulusEntries spectral_radius_entries(const SpectralProfile& profile, double band_factor) {
    if (!profile.field->embeds_in_complex()) {
        throw Error(ErrorCode::WrongField, "spectral radius is undefined over finite fields");
    }
    if (profile.nilpotent || !profile.spectral_radius_sq) {
        throw Error(ErrorCode::Nilpotent, "nilpotent profile has no nonzero eigenvalue");
    }
    MaxModulusEntries out;
    const Scalar& r2 = *profile.spectral_radius_sq;
    if (r2.kind() != FieldKind::ComplexFloat) {
        for (const auto& e : profile.entries) {
            if (!e.eigenvalue.is_zero() && e.modulus_sq && *e.modulus_sq == r2) out.entries.push_back(e);
        }
        return out;
    }
    const double top = r2.as_complex().real();
    const double band = profile.field->tol() * band_factor;
    for (const auto& e : profile.entries) {
        if (e.eigenvalue.is_zero() || !e.modulus_sq) continue;
        const double gap = (top - e.modulus_sq->as_complex().real()) / top;
        if (gap <= band) out.entries.push_back(e);
        if (gap > band / 10.0 && gap <= band * 10.0) out.fragile = true;
    }
    return out;
}

}  // namespace orbitref
