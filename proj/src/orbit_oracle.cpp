#include "orbitref/orbit_oracle.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include <Eigen/Dense>

#include "eigen_bridge.hpp"
#include "orbitref/linalg.hpp"

namespace orbitref {

namespace {

constexpr std::size_t kChunks = 64;

void require_finite(const Matrix& m) {
    if (m.field().kind() != FieldKind::FiniteField) {
        throw Error(ErrorCode::WrongField, "orbit enumeration needs a finite field, got " + m.field().name());
    }
}

std::uint64_t checked_power(std::uint64_t base, std::size_t exp, std::uint64_t limit, const char* what) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (r > limit / base) {
            throw Error(ErrorCode::BudgetExceeded, std::string(what) + " exceed the budget of " + std::to_string(limit));
        }
        r *= base;
    }
    if (r > limit) {
        throw Error(ErrorCode::BudgetExceeded, std::string(what) + " exceed the budget of " + std::to_string(limit));
    }
    return r;
}

// Matrices and vectors over GF(q) as plain element codes.
class CodeSpace {
public:
    CodeSpace(const FieldDescriptor& field, std::size_t d) : field_(field), gf_(field.gf()), d_(d), q_(gf_.order()) {
        std::uint64_t n = 1;
        for (std::size_t i = 0; i < d; ++i) n *= q_;
        vectors_ = n;
    }

    std::uint64_t vector_count() const { return vectors_; }
    std::size_t dim() const { return d_; }
    std::uint64_t q() const { return q_; }
    const GaloisField& gf() const { return gf_; }

    std::vector<std::uint32_t> codes(const Matrix& m) const {
        std::vector<std::uint32_t> out(d_ * d_);
        for (std::size_t i = 0; i < d_; ++i) {
            for (std::size_t j = 0; j < d_; ++j) out[i * d_ + j] = m(i, j).as_finite();
        }
        return out;
    }

    Matrix matrix(const std::vector<std::uint32_t>& c) const {
        Matrix m(field_, d_);
        for (std::size_t i = 0; i < d_; ++i) {
            for (std::size_t j = 0; j < d_; ++j) m(i, j) = Scalar::finite(field_, c[i * d_ + j]);
        }
        return m;
    }

    // Candidate index: entry (i, j) is base-q digit i*d + j, least significant first.
    std::vector<std::uint32_t> decode_matrix(std::uint64_t index) const {
        std::vector<std::uint32_t> c(d_ * d_);
        for (auto& e : c) {
            e = static_cast<std::uint32_t>(index % q_);
            index /= q_;
        }
        return c;
    }

    std::uint64_t encode_matrix(const std::vector<std::uint32_t>& c) const {
        std::uint64_t index = 0;
        for (std::size_t k = c.size(); k-- > 0;) index = index * q_ + c[k];
        return index;
    }

    std::vector<std::uint32_t> decode_vector(std::uint64_t index) const {
        std::vector<std::uint32_t> v(d_);
        for (auto& e : v) {
            e = static_cast<std::uint32_t>(index % q_);
            index /= q_;
        }
        return v;
    }

    std::uint64_t encode_vector(const std::vector<std::uint32_t>& v) const {
        std::uint64_t index = 0;
        for (std::size_t k = v.size(); k-- > 0;) index = index * q_ + v[k];
        return index;
    }

    std::vector<std::uint32_t> apply(const std::vector<std::uint32_t>& m, const std::vector<std::uint32_t>& x) const {
        std::vector<std::uint32_t> y(d_, 0);
        for (std::size_t i = 0; i < d_; ++i) {
            std::uint32_t acc = 0;
            for (std::size_t j = 0; j < d_; ++j) acc = gf_.add(acc, gf_.mul(m[i * d_ + j], x[j]));
            y[i] = acc;
        }
        return y;
    }

    std::vector<std::uint32_t> scale(std::uint32_t c, std::vector<std::uint32_t> v) const {
        for (auto& e : v) e = gf_.mul(c, e);
        return v;
    }

    Vector to_vector(const std::vector<std::uint32_t>& v) const {
        Vector out;
        for (auto e : v) out.push_back(Scalar::finite(field_, e));
        return out;
    }

    // Vectors with the standard basis first, then the rest in index order.
    std::vector<std::uint64_t> basis_first_order() const {
        std::vector<std::uint64_t> order;
        std::uint64_t unit = 1;
        for (std::size_t i = 0; i < d_; ++i) {
            order.push_back(unit);
            unit *= q_;
        }
        for (std::uint64_t v = 0; v < vectors_; ++v) {
            if (std::find(order.begin(), order.begin() + static_cast<long>(d_), v) == order.begin() + static_cast<long>(d_)) {
                order.push_back(v);
            }
        }
        return order;
    }

private:
    const FieldDescriptor& field_;
    const GaloisField& gf_;
    std::size_t d_;
    std::uint64_t q_;
    std::uint64_t vectors_ = 1;
};

// For every x, the set {lambda T^k x}: a bitset row when q^d is small,
// otherwise a sorted list.
class OrbitTables {
public:
    OrbitTables(const CodeSpace& space, const std::vector<std::vector<std::uint32_t>>& powers)
        : n_(space.vector_count()), dense_(n_ <= 4096) {
        if (dense_) {
            bits_.assign(n_ * n_, false);
        } else {
            lists_.resize(n_);
        }
        for (std::uint64_t xi = 0; xi < n_; ++xi) {
            const auto x = space.decode_vector(xi);
            std::vector<std::uint64_t> members{0};
            for (const auto& p : powers) {
                const auto y = space.apply(p, x);
                for (std::uint32_t c = 1; c < space.q(); ++c) members.push_back(space.encode_vector(space.scale(c, y)));
            }
            if (dense_) {
                for (auto m : members) bits_[xi * n_ + m] = true;
            } else {
                std::sort(members.begin(), members.end());
                members.erase(std::unique(members.begin(), members.end()), members.end());
                lists_[xi] = std::move(members);
            }
        }
    }

    bool contains(std::uint64_t x, std::uint64_t y) const {
        if (dense_) return bits_[x * n_ + y];
        return std::binary_search(lists_[x].begin(), lists_[x].end(), y);
    }

private:
    std::uint64_t n_;
    bool dense_;
    std::vector<bool> bits_;
    std::vector<std::vector<std::uint64_t>> lists_;
};

std::optional<std::uint64_t> first_failure(const CodeSpace& space, const OrbitTables& tables,
                                           const std::vector<std::uint64_t>& order,
                                           const std::vector<std::uint32_t>& s) {
    for (auto xi : order) {
        const auto sx = space.apply(s, space.decode_vector(xi));
        if (!tables.contains(xi, space.encode_vector(sx))) return xi;
    }
    return std::nullopt;
}

std::vector<std::vector<std::uint32_t>> power_codes(const CodeSpace& space, const OrbitSet& orbit) {
    std::vector<std::vector<std::uint32_t>> out;
    for (const auto& p : orbit.powers) out.push_back(space.codes(p));
    return out;
}

RigidityResult rigidity_check(const CodeSpace& space, const std::vector<std::vector<std::uint32_t>>& members,
                              const std::vector<std::vector<std::uint32_t>>& powers) {
    RigidityResult r;
    r.checked = true;
    for (const auto& s : members) {
        for (std::uint64_t fi = 1; fi < space.vector_count(); ++fi) {
            const auto f = space.decode_vector(fi);
            const auto sf = space.apply(s, f);
            if (std::all_of(sf.begin(), sf.end(), [](std::uint32_t c) { return c == 0; })) continue;
            for (std::size_t k = 0; k < powers.size(); ++k) {
                const auto tkf = space.apply(powers[k], f);
                for (std::uint32_t beta = 1; beta < space.q(); ++beta) {
                    if (space.scale(beta, tkf) != sf) continue;
                    if (space.scale(beta, powers[k]) != s) {
                        r.holds = false;
                        r.counterexample = "S=" + space.matrix(s).to_string() + " f=" + std::to_string(fi) +
                                           " k=" + std::to_string(k) + " beta=" + space.gf().format(beta);
                        return r;
                    }
                }
            }
        }
    }
    return r;
}

}  // namespace

OrbitSet power_orbit(const Matrix& t) {
    require_finite(t);
    OrbitSet out{t, {}, 0, 0};
    Matrix current = Matrix::identity(t.field(), t.dim());
    while (true) {
        auto it = std::find(out.powers.begin(), out.powers.end(), current);
        if (it != out.powers.end()) {
            out.tail_length = static_cast<std::size_t>(it - out.powers.begin());
            out.cycle_length = out.powers.size() - out.tail_length;
            return out;
        }
        out.powers.push_back(current);
        current = current * t;
    }
}

ContainsResult orbref0_contains(const Matrix& t, const Matrix& s, const OracleBudget& budget) {
    require_finite(t);
    if (s.field() != t.field()) throw Error(ErrorCode::MixedFields, "T and S over different fields");
    if (s.dim() != t.dim()) throw Error(ErrorCode::ShapeMismatch, "T and S differ in dimension");
    CodeSpace space(t.field(), t.dim());
    checked_power(space.q(), t.dim(), budget.vectors, "q^d vectors");
    const OrbitSet orbit = power_orbit(t);
    const OrbitTables tables(space, power_codes(space, orbit));
    const auto fail = first_failure(space, tables, space.basis_first_order(), space.codes(s));
    ContainsResult r;
    r.contains = !fail.has_value();
    if (fail) r.failing_vector = space.to_vector(space.decode_vector(*fail));
    return r;
}

EnumerationResult enumerate_orbref0(const Matrix& t, const OracleBudget& budget, unsigned workers) {
    require_finite(t);
    CodeSpace space(t.field(), t.dim());
    checked_power(space.q(), t.dim(), budget.vectors, "q^d vectors");
    const std::uint64_t total = checked_power(space.q(), t.dim() * t.dim(), budget.candidates, "q^(d^2) candidates");
    const OrbitSet orbit = power_orbit(t);
    const auto powers = power_codes(space, orbit);
    const OrbitTables tables(space, powers);
    const auto order = space.basis_first_order();

    const std::size_t chunks = static_cast<std::size_t>(std::min<std::uint64_t>(kChunks, total));
    std::vector<std::vector<std::uint64_t>> found(chunks);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t c = next++; c < chunks; c = next++) {
            const std::uint64_t begin = total * c / chunks, end = total * (c + 1) / chunks;
            for (std::uint64_t idx = begin; idx < end; ++idx) {
                if (!first_failure(space, tables, order, space.decode_matrix(idx))) found[c].push_back(idx);
            }
        }
    };
    const unsigned n = std::max(1u, workers);
    if (n == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < n; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    std::vector<std::uint64_t> member_codes;
    for (const auto& f : found) member_codes.insert(member_codes.end(), f.begin(), f.end());

    std::vector<std::uint64_t> forb_codes;
    for (const auto& p : powers) {
        for (std::uint32_t c = 0; c < space.q(); ++c) forb_codes.push_back(space.encode_matrix(space.scale(c, p)));
    }
    std::sort(forb_codes.begin(), forb_codes.end());
    forb_codes.erase(std::unique(forb_codes.begin(), forb_codes.end()), forb_codes.end());
    if (!std::includes(member_codes.begin(), member_codes.end(), forb_codes.begin(), forb_codes.end())) {
        throw Error(ErrorCode::Internal, "F-Orb(T) is not contained in the enumerated OrbRef_0(T)");
    }

    EnumerationResult out;
    EnumerationSummary& sum = out.summary;
    sum.q = space.q();
    sum.dim = t.dim();
    sum.candidates = total;
    sum.orbref0_size = member_codes.size();
    sum.f_orb_size = forb_codes.size();
    sum.equal = member_codes.size() == forb_codes.size();
    std::vector<std::vector<std::uint32_t>> member_mats;
    for (auto code : member_codes) {
        member_mats.push_back(space.decode_matrix(code));
        out.members.push_back(space.matrix(member_mats.back()));
        const Matrix& s = out.members.back();
        if (!std::binary_search(forb_codes.begin(), forb_codes.end(), code)) sum.difference.push_back(s);
        if (!sum.non_commuting_member && !commutator_is_zero(s, t).is_zero) sum.non_commuting_member = s;
    }
    for (auto code : forb_codes) out.f_orb.push_back(space.matrix(space.decode_matrix(code)));
    if (matpow(t, t.dim()).is_zero()) sum.rigidity = rigidity_check(space, member_mats, powers);
    return out;
}

std::vector<double> c_orbit_membership_residual(const Matrix& t, const Matrix& s,
                                                const std::vector<std::complex<double>>& x, std::size_t horizon) {
    if (s.dim() != t.dim() || x.size() != t.dim()) throw Error(ErrorCode::ShapeMismatch, "dimension mismatch");
    const Eigen::MatrixXcd a = detail::to_eigen(t);
    const Eigen::MatrixXcd b = detail::to_eigen(s);
    const Eigen::VectorXcd x0 = Eigen::Map<const Eigen::VectorXcd>(x.data(), static_cast<Eigen::Index>(x.size()));
    const Eigen::VectorXcd sx = b * x0;
    const double sx_norm = sx.norm();
    std::vector<double> minima;
    minima.reserve(horizon + 1);
    Eigen::VectorXcd y = x0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t n = 0; n <= horizon; ++n) {
        const double yn = y.norm();
        double r;
        if (!(yn > 1e-300)) {
            r = sx_norm;
            y.setZero();
        } else {
            y /= yn;
            r = (sx - y * y.dot(sx)).norm();
        }
        best = std::min(best, r);
        minima.push_back(best);
        if (n < horizon) y = a * y;
    }
    return minima;
}

}  // namespace orbitref
