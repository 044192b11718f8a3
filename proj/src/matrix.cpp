#include "orbitref/matrix.hpp"

#include <sstream>

namespace orbitref {

namespace {
void check_shape(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field()) throw Error(ErrorCode::MixedFields, "matrices over different fields");
    if (a.dim() != b.dim()) throw Error(ErrorCode::ShapeMismatch, "matrix dimensions differ");
}
}  // namespace

Matrix::Matrix(const FieldDescriptor& field, std::size_t dim)
    : field_(&field), dim_(dim), entries_(dim * dim, Scalar::zero(field)) {
    if (dim == 0) throw Error(ErrorCode::ShapeMismatch, "matrix dimension must be >= 1");
}

Matrix Matrix::identity(const FieldDescriptor& field, std::size_t dim) {
    Matrix m(field, dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = Scalar::one(field);
    return m;
}

Matrix Matrix::diagonal(const std::vector<Scalar>& diag) {
    if (diag.empty()) throw Error(ErrorCode::ShapeMismatch, "empty diagonal");
    Matrix m(diag.front().field(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m.set(i, i, diag[i]);
    return m;
}

Matrix Matrix::from_rows(const FieldDescriptor& field, const std::vector<std::vector<Scalar>>& rows) {
    const std::size_t d = rows.size();
    Matrix m(field, d);
    for (std::size_t i = 0; i < d; ++i) {
        if (rows[i].size() != d) throw Error(ErrorCode::ShapeMismatch, "matrix rows must form a square array");
        for (std::size_t j = 0; j < d; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

Matrix Matrix::parse(const FieldDescriptor& field, const std::vector<std::vector<std::string>>& rows) {
    const std::size_t d = rows.size();
    Matrix m(field, d);
    for (std::size_t i = 0; i < d; ++i) {
        if (rows[i].size() != d) throw Error(ErrorCode::Parse, "matrix rows must form a square array");
        for (std::size_t j = 0; j < d; ++j) m(i, j) = Scalar::parse(field, rows[i][j]);
    }
    return m;
}

void Matrix::set(std::size_t i, std::size_t j, Scalar value) {
    if (value.field() != *field_) throw Error(ErrorCode::MixedFields, "entry field differs from matrix field");
    (*this)(i, j) = std::move(value);
}

Matrix Matrix::embed(const FieldDescriptor& target) const {
    Matrix out(target, dim_);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k].embed(target);
    return out;
}

bool Matrix::is_zero() const {
    for (const auto& e : entries_) {
        if (!e.is_zero()) return false;
    }
    return true;
}

bool Matrix::is_identity() const { return *this == identity(*field_, dim_); }

Vector Matrix::apply(const Vector& x) const {
    if (x.size() != dim_) throw Error(ErrorCode::ShapeMismatch, "vector length differs from matrix dimension");
    Vector y(dim_, Scalar::zero(*field_));
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            if (!(*this)(i, j).is_zero()) y[i] += (*this)(i, j) * x[j];
        }
    }
    return y;
}

Scalar Matrix::trace() const {
    Scalar t = Scalar::zero(*field_);
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

Matrix Matrix::operator-() const {
    Matrix out(*field_, dim_);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = -entries_[k];
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    check_shape(a, b);
    Matrix out(a.field(), a.dim());
    for (std::size_t k = 0; k < a.entries_.size(); ++k) out.entries_[k] = a.entries_[k] + b.entries_[k];
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    check_shape(a, b);
    Matrix out(a.field(), a.dim());
    for (std::size_t k = 0; k < a.entries_.size(); ++k) out.entries_[k] = a.entries_[k] - b.entries_[k];
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    check_shape(a, b);
    const std::size_t d = a.dim();
    Matrix out(a.field(), d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t k = 0; k < d; ++k) {
            const Scalar& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < d; ++j) {
                if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

Matrix operator*(const Scalar& c, const Matrix& a) {
    Matrix out(a.field(), a.dim());
    for (std::size_t k = 0; k < a.entries_.size(); ++k) out.entries_[k] = c * a.entries_[k];
    return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field() || a.dim() != b.dim()) return false;
    for (std::size_t k = 0; k < a.entries_.size(); ++k) {
        if (a.entries_[k] != b.entries_[k]) return false;
    }
    return true;
}

Matrix Matrix::shifted(const Scalar& c) const {
    Matrix out = *this;
    for (std::size_t i = 0; i < dim_; ++i) out(i, i) -= c;
    return out;
}

std::vector<std::vector<std::string>> Matrix::to_strings() const {
    std::vector<std::vector<std::string>> rows(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) rows[i].push_back((*this)(i, j).to_string());
    }
    return rows;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < dim_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < dim_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
        os << ']';
    }
    os << ']';
    return os.str();
}

Vector zero_vector(const FieldDescriptor& field, std::size_t n) { return Vector(n, Scalar::zero(field)); }

Vector basis_vector(const FieldDescriptor& field, std::size_t n, std::size_t index) {
    Vector v = zero_vector(field, n);
    v.at(index) = Scalar::one(field);
    return v;
}

}  // namespace orbitref
