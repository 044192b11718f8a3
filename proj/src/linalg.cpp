#include "orbitref/linalg.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "eigen_bridge.hpp"

namespace orbitref {

namespace {

void require_exact(const Matrix& m, const char* op) {
    if (!m.field().is_exact()) {
        throw Error(ErrorCode::NumericKindUnsupported, std::string(op) + " requires an exact field");
    }
}

bool zero_char_field(const FieldDescriptor& f) {
    return f.kind() == FieldKind::Rationals || f.kind() == FieldKind::GaussianRationals;
}

mpz_class denominator_lcm(const Scalar& s) {
    if (s.kind() == FieldKind::Rationals) return s.as_rational().get_den();
    const auto& g = s.as_gaussian();
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), g.re.get_den_mpz_t(), g.im.get_den_mpz_t());
    return l;
}

using Grid = std::vector<std::vector<Scalar>>;

Grid to_grid(const Matrix& m) {
    Grid g(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) g[i].push_back(m(i, j));
    }
    return g;
}

// Multiplies each row by the lcm of its entry denominators so that entries
// become (Gaussian) integers. Row scaling by nonzero constants preserves rank.
void clear_row_denominators(Grid& g) {
    for (auto& row : g) {
        mpz_class l = 1;
        for (const auto& s : row) {
            mpz_class den = denominator_lcm(s);
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
        }
        if (l == 1) continue;
        const Scalar factor = Scalar::rational(mpq_class(l)).embed(row.front().field());
        for (auto& s : row) s *= factor;
    }
}

struct EliminationResult {
    std::size_t rank;
    bool swapped_odd;
    Scalar last_pivot;
};

// Fraction-free row echelon form. With integral input every division by the
// previous pivot is exact, so entries stay integral.
EliminationResult bareiss(Grid& a, const FieldDescriptor& field) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    Scalar prev = Scalar::one(field);
    std::size_t r = 0;
    bool odd = false;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t p = r;
        while (p < rows && a[p][col].is_zero()) ++p;
        if (p == rows) continue;
        if (p != r) {
            std::swap(a[p], a[r]);
            odd = !odd;
        }
        const Scalar pivot = a[r][col];
        for (std::size_t i = r + 1; i < rows; ++i) {
            const Scalar factor = a[i][col];
            for (std::size_t j = col + 1; j < cols; ++j) {
                a[i][j] = (pivot * a[i][j] - factor * a[r][j]) / prev;
            }
            a[i][col] = Scalar::zero(field);
        }
        prev = pivot;
        ++r;
    }
    return {r, odd, prev};
}

// Plain Gaussian elimination to row echelon form over a field.
EliminationResult gauss(Grid& a, const FieldDescriptor& field) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::size_t r = 0;
    bool odd = false;
    Scalar det_acc = Scalar::one(field);
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t p = r;
        while (p < rows && a[p][col].is_zero()) ++p;
        if (p == rows) continue;
        if (p != r) {
            std::swap(a[p], a[r]);
            odd = !odd;
        }
        const Scalar inv = a[r][col].inverse();
        det_acc *= a[r][col];
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i][col].is_zero()) continue;
            const Scalar factor = a[i][col] * inv;
            for (std::size_t j = col; j < cols; ++j) a[i][j] -= factor * a[r][j];
        }
        ++r;
    }
    return {r, odd, det_acc};
}

// Reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(Grid& a, const FieldDescriptor& field) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t p = r;
        while (p < rows && a[p][col].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        const Scalar inv = a[r][col].inverse();
        for (std::size_t j = col; j < cols; ++j) a[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][col].is_zero()) continue;
            const Scalar factor = a[i][col];
            for (std::size_t j = col; j < cols; ++j) a[i][j] -= factor * a[r][j];
        }
        pivots.push_back(col);
        ++r;
    }
    (void)field;
    return pivots;
}

}  // namespace

std::size_t numeric_rank(const Matrix& m, double reference) {
    const Eigen::MatrixXcd a = detail::to_eigen(m);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
    const auto& sv = svd.singularValues();
    const double smax = sv.size() ? sv(0) : 0.0;
    const double cutoff = m.field().tol() * std::max(smax, reference);
    std::size_t r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > cutoff) ++r;
    }
    return r;
}

std::size_t rank(const Matrix& m) {
    const auto& f = m.field();
    if (f.kind() == FieldKind::ComplexFloat) return numeric_rank(m, 0.0);
    Grid g = to_grid(m);
    if (f.kind() == FieldKind::FiniteField) return gauss(g, f).rank;
    clear_row_denominators(g);
    return bareiss(g, f).rank;
}

Scalar determinant(const Matrix& m) {
    require_exact(m, "determinant");
    const auto& f = m.field();
    Grid g = to_grid(m);
    const std::size_t n = m.dim();
    if (f.kind() == FieldKind::FiniteField) {
        auto res = gauss(g, f);
        if (res.rank < n) return Scalar::zero(f);
        return res.swapped_odd ? -res.last_pivot : res.last_pivot;
    }
    auto res = bareiss(g, f);
    if (res.rank < n) return Scalar::zero(f);
    return res.swapped_odd ? -res.last_pivot : res.last_pivot;
}

Matrix matpow(const Matrix& m, std::uint64_t k) {
    Matrix result = Matrix::identity(m.field(), m.dim());
    Matrix base = m;
    while (k > 0) {
        if (k & 1u) result = result * base;
        k >>= 1u;
        if (k > 0) base = base * base;
    }
    return result;
}

Polynomial char_poly_faddeev(const Matrix& m) {
    require_exact(m, "char_poly");
    const auto& f = m.field();
    const std::size_t n = m.dim();
    if (f.characteristic() != 0 && f.characteristic() <= n) {
        throw Error(ErrorCode::InvalidArgument, "Faddeev-LeVerrier needs characteristic 0 or > dimension");
    }
    std::vector<Scalar> c(n + 1, Scalar::zero(f));
    c[n] = Scalar::one(f);
    const Matrix id = Matrix::identity(f, n);
    Matrix mk = Matrix::zero(f, n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = m * mk + c[n - k + 1] * id;
        const Scalar tr = (m * mk).trace();
        c[n - k] = -tr / Scalar::from_integer(f, static_cast<long long>(k));
    }
    return Polynomial(f, std::move(c));
}

Polynomial char_poly_bareiss(const Matrix& m) {
    require_exact(m, "char_poly");
    const auto& f = m.field();
    const std::size_t n = m.dim();
    std::vector<std::vector<Polynomial>> a(n, std::vector<Polynomial>(n, Polynomial(f)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a[i][j] = Polynomial::constant(-m(i, j));
            if (i == j) a[i][j] = a[i][j] + Polynomial::monomial(f, 1);
        }
    }
    Polynomial prev = Polynomial::constant(Scalar::one(f));
    bool odd = false;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k].is_zero()) ++p;
        if (p == n) return Polynomial(f);  // unreachable: det(tI - M) is monic
        if (p != k) {
            std::swap(a[p], a[k]);
            odd = !odd;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                auto [q, r] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]).divmod(prev);
                if (!r.is_zero()) throw Error(ErrorCode::Internal, "inexact Bareiss division over F[t]");
                a[i][j] = std::move(q);
            }
            a[i][k] = Polynomial(f);
        }
        prev = a[k][k];
    }
    Polynomial det = prev;
    if (odd) det = Scalar::from_integer(f, -1) * det;
    return det;
}

Polynomial char_poly(const Matrix& m) {
    require_exact(m, "char_poly");
    const auto& f = m.field();
    if (zero_char_field(f) || f.characteristic() > m.dim()) return char_poly_faddeev(m);
    return char_poly_bareiss(m);
}

std::vector<Vector> kernel_basis(const Matrix& m) {
    require_exact(m, "kernel_basis");
    const auto& f = m.field();
    const std::size_t n = m.dim();
    Grid g = to_grid(m);
    const auto pivots = rref(g, f);
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        Vector v = zero_vector(f, n);
        v[free] = Scalar::one(f);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -g[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

CommutatorResult commutator_is_zero(const Matrix& s, const Matrix& t) {
    if (s.dim() != t.dim()) throw Error(ErrorCode::ShapeMismatch, "commutator of different dimensions");
    if (s.field() != t.field()) throw Error(ErrorCode::MixedFields, "commutator of different fields");
    Matrix c = s * t - t * s;
    if (s.field().is_exact()) {
        const bool zero = c.is_zero();
        return {zero, std::move(c)};
    }
    auto max_abs = [](const Matrix& a) {
        double mx = 0.0;
        for (std::size_t i = 0; i < a.dim(); ++i) {
            for (std::size_t j = 0; j < a.dim(); ++j) mx = std::max(mx, std::abs(a(i, j).as_complex()));
        }
        return mx;
    };
    const double scale = max_abs(s) * max_abs(t) * static_cast<double>(s.dim());
    const bool zero = max_abs(c) <= s.field().tol() * scale;
    return {zero, std::move(c)};
}

Matrix inverse(const Matrix& m) {
    require_exact(m, "inverse");
    const auto& f = m.field();
    const std::size_t n = m.dim();
    Grid g(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) g[i].push_back(m(i, j));
        for (std::size_t j = 0; j < n; ++j) g[i].push_back(i == j ? Scalar::one(f) : Scalar::zero(f));
    }
    const auto pivots = rref(g, f);
    if (pivots.size() < n || pivots[n - 1] != n - 1) throw Error(ErrorCode::Singular, "matrix is singular");
    Matrix inv(f, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = g[i][n + j];
    }
    return inv;
}

Matrix conjugate(const Matrix& m, const Matrix& p) {
    if (m.dim() != p.dim()) throw Error(ErrorCode::ShapeMismatch, "conjugation by a matrix of different size");
    return p * m * inverse(p);
}

}  // namespace orbitref
