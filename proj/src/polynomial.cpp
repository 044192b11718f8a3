#include "orbitref/polynomial.hpp"

#include <algorithm>

namespace orbitref {

Polynomial::Polynomial(const FieldDescriptor& field, std::vector<Scalar> coefficients)
    : field_(&field), coeffs_(std::move(coefficients)) {
    for (const auto& c : coeffs_) {
        if (c.field() != field) throw Error(ErrorCode::MixedFields, "polynomial coefficient field mismatch");
    }
    trim();
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Scalar& c) { return Polynomial(c.field(), {c}); }

Polynomial Polynomial::linear_factor(const Scalar& root) {
    return Polynomial(root.field(), {-root, Scalar::one(root.field())});
}

Polynomial Polynomial::monomial(const FieldDescriptor& field, std::size_t n) {
    std::vector<Scalar> c(n + 1, Scalar::zero(field));
    c[n] = Scalar::one(field);
    return Polynomial(field, std::move(c));
}

const Scalar& Polynomial::leading() const {
    if (coeffs_.empty()) throw Error(ErrorCode::InvalidArgument, "zero polynomial has no leading coefficient");
    return coeffs_.back();
}

bool Polynomial::is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }

Polynomial Polynomial::monic() const {
    if (coeffs_.empty()) return *this;
    const Scalar inv = leading().inverse();
    return inv * *this;
}

Scalar Polynomial::coefficient(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Scalar::zero(*field_);
}

Scalar Polynomial::evaluate(const Scalar& x) const {
    Scalar acc = Scalar::zero(*field_);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

Matrix Polynomial::evaluate(const Matrix& m) const {
    Matrix acc = Matrix::zero(m.field(), m.dim());
    const Matrix id = Matrix::identity(m.field(), m.dim());
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * m + coeffs_[i] * id;
    return acc;
}

Polynomial Polynomial::derivative() const {
    std::vector<Scalar> d;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        d.push_back(Scalar::from_integer(*field_, static_cast<long long>(i)) * coeffs_[i]);
    }
    return Polynomial(*field_, std::move(d));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    if (a.field() != b.field()) throw Error(ErrorCode::MixedFields, "polynomials over different fields");
    std::vector<Scalar> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Scalar::zero(a.field()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) + b.coefficient(i);
    return Polynomial(a.field(), std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + Scalar::from_integer(b.field(), -1) * b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.field() != b.field()) throw Error(ErrorCode::MixedFields, "polynomials over different fields");
    if (a.is_zero() || b.is_zero()) return Polynomial(a.field());
    std::vector<Scalar> c(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar::zero(a.field()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(a.field(), std::move(c));
}

Polynomial operator*(const Scalar& c, const Polynomial& a) {
    std::vector<Scalar> out;
    out.reserve(a.coeffs_.size());
    for (const auto& x : a.coeffs_) out.push_back(c * x);
    return Polynomial(a.field(), std::move(out));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.field() != b.field() || a.coeffs_.size() != b.coeffs_.size()) return false;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] != b.coeffs_[i]) return false;
    }
    return true;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
    if (divisor.field() != *field_) throw Error(ErrorCode::MixedFields, "polynomials over different fields");
    if (divisor.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
    std::vector<Scalar> rem = coeffs_;
    const std::size_t dd = divisor.coeffs_.size();
    if (rem.size() < dd) return {Polynomial(*field_), *this};
    std::vector<Scalar> quot(rem.size() - dd + 1, Scalar::zero(*field_));
    const Scalar lead_inv = divisor.leading().inverse();
    for (std::size_t k = quot.size(); k-- > 0;) {
        const Scalar c = rem[k + dd - 1] * lead_inv;
        quot[k] = c;
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j < dd; ++j) rem[k + j] -= c * divisor.coeffs_[j];
        rem[k + dd - 1] = Scalar::zero(*field_);
    }
    rem.resize(dd - 1, Scalar::zero(*field_));
    return {Polynomial(*field_, std::move(quot)), Polynomial(*field_, std::move(rem))};
}

std::string Polynomial::to_string(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Scalar& c = coeffs_[i];
        if (c.is_zero()) continue;
        std::string text = c.to_string();
        const bool compound = text.find_first_of("+-", 1) != std::string::npos;
        bool negative = false;
        if (!compound && text.front() == '-') {
            negative = true;
            text.erase(0, 1);
        }
        if (compound) text = "(" + text + ")";
        std::string term;
        if (i == 0) {
            term = text;
        } else {
            if (text != "1") term = text;
            term += var;
            if (i > 1) term += "^" + std::to_string(i);
        }
        if (out.empty()) out = (negative ? "-" : "") + term;
        else out += (negative ? "-" : "+") + term;
    }
    return out;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        Polynomial r = x.divmod(y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

}  // namespace orbitref
