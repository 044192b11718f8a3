#include "orbitref/scalar.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>

#include "text.hpp"

namespace orbitref {

namespace {

const FieldDescriptor& check_same(const Scalar& a, const Scalar& b) {
    if (a.field() != b.field()) {
        throw Error(ErrorCode::MixedFields, "mixed fields: " + a.field().name() + " vs " + b.field().name());
    }
    return a.field();
}

mpq_class parse_rational(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    if (s.empty()) throw Error(ErrorCode::Parse, "empty rational");
    const bool ok = std::all_of(s.begin(), s.end(), [](char c) {
        return (c >= '0' && c <= '9') || c == '/' || c == '-';
    });
    mpq_class q;
    if (!ok || mpq_set_str(q.get_mpq_t(), std::string(s).c_str(), 10) != 0) {
        throw Error(ErrorCode::Parse, "bad rational '" + std::string(s) + "'");
    }
    if (q.get_den() == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(s) + "'");
    q.canonicalize();
    return q;
}

double parse_double(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    const std::string str(s);
    char* end = nullptr;
    const double v = std::strtod(str.c_str(), &end);
    if (str.empty() || end != str.c_str() + str.size()) throw Error(ErrorCode::Parse, "bad number '" + str + "'");
    return v;
}

// Splits a term ending in 'i' into its coefficient text ("" -> 1, "-" -> -1).
bool imaginary_coefficient(std::string term, std::string& coeff) {
    if (term.empty() || term.back() != 'i') return false;
    term.pop_back();
    if (!term.empty() && term.back() == '*') term.pop_back();
    if (term.empty() || term == "+") coeff = "1";
    else if (term == "-") coeff = "-1";
    else coeff = term;
    return true;
}

std::string format_double(double v) {
    if (v == 0.0) return "0";
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

std::string format_complex_parts(bool re_zero, bool im_zero, bool im_negative, bool im_unit,
                                 const std::string& re_text, const std::string& im_abs_text) {
    if (im_zero) return re_text;
    std::string imag = im_unit ? "i" : im_abs_text + "i";
    if (re_zero) return (im_negative ? "-" : "") + imag;
    return re_text + (im_negative ? "-" : "+") + imag;
}

}  // namespace

Scalar::Scalar() : field_(&FieldDescriptor::rationals()), value_(mpq_class(0)) {}

Scalar Scalar::zero(const FieldDescriptor& field) { return from_integer(field, 0); }
Scalar Scalar::one(const FieldDescriptor& field) { return from_integer(field, 1); }

Scalar Scalar::from_integer(const FieldDescriptor& field, long long n) {
    switch (field.kind()) {
        case FieldKind::Rationals: return Scalar(field, mpq_class(static_cast<long>(n)));
        case FieldKind::GaussianRationals:
            return Scalar(field, GaussianRational{mpq_class(static_cast<long>(n)), mpq_class(0)});
        case FieldKind::FiniteField: return Scalar(field, field.gf().from_integer(n));
        case FieldKind::ComplexFloat: return Scalar(field, std::complex<double>(static_cast<double>(n), 0.0));
    }
    throw Error(ErrorCode::Internal, "unknown field kind");
}

Scalar Scalar::rational(mpq_class value) {
    value.canonicalize();
    return Scalar(FieldDescriptor::rationals(), std::move(value));
}

Scalar Scalar::gaussian(mpq_class re, mpq_class im) {
    re.canonicalize();
    im.canonicalize();
    return Scalar(FieldDescriptor::gaussian_rationals(), GaussianRational{std::move(re), std::move(im)});
}

Scalar Scalar::finite(const FieldDescriptor& field, std::uint32_t code) {
    if (field.kind() != FieldKind::FiniteField) throw Error(ErrorCode::WrongField, "not a finite field");
    if (code >= field.gf().order()) throw Error(ErrorCode::InvalidArgument, "finite-field code out of range");
    return Scalar(field, code);
}

Scalar Scalar::complex(const FieldDescriptor& field, std::complex<double> value) {
    if (field.kind() != FieldKind::ComplexFloat) throw Error(ErrorCode::WrongField, "not a complex float field");
    return Scalar(field, value);
}

Scalar Scalar::parse(const FieldDescriptor& field, std::string_view text) {
    const std::string norm = detail::normalize_number_text(text);
    switch (field.kind()) {
        case FieldKind::Rationals: return Scalar(field, parse_rational(norm));
        case FieldKind::FiniteField: return Scalar(field, field.gf().parse(norm));
        case FieldKind::GaussianRationals: {
            mpq_class re(0), im(0);
            for (const auto& term : detail::split_signed_terms(norm)) {
                std::string coeff;
                if (imaginary_coefficient(term, coeff)) im += parse_rational(coeff);
                else re += parse_rational(term);
            }
            return gaussian(re, im);
        }
        case FieldKind::ComplexFloat: {
            double re = 0.0, im = 0.0;
            for (const auto& term : detail::split_signed_terms(norm)) {
                std::string coeff;
                if (imaginary_coefficient(term, coeff)) im += parse_double(coeff);
                else re += parse_double(term);
            }
            return Scalar(field, std::complex<double>(re, im));
        }
    }
    throw Error(ErrorCode::Internal, "unknown field kind");
}

const mpq_class& Scalar::as_rational() const {
    if (kind() != FieldKind::Rationals) throw Error(ErrorCode::WrongField, "expected Q, got " + field_->name());
    return std::get<mpq_class>(value_);
}

const GaussianRational& Scalar::as_gaussian() const {
    if (kind() != FieldKind::GaussianRationals) {
        throw Error(ErrorCode::WrongField, "expected Q(i), got " + field_->name());
    }
    return std::get<GaussianRational>(value_);
}

std::uint32_t Scalar::as_finite() const {
    if (kind() != FieldKind::FiniteField) throw Error(ErrorCode::WrongField, "expected GF, got " + field_->name());
    return std::get<std::uint32_t>(value_);
}

std::complex<double> Scalar::as_complex() const {
    if (kind() != FieldKind::ComplexFloat) throw Error(ErrorCode::WrongField, "expected C64, got " + field_->name());
    return std::get<std::complex<double>>(value_);
}

std::complex<double> Scalar::to_complex() const {
    switch (kind()) {
        case FieldKind::Rationals: return {std::get<mpq_class>(value_).get_d(), 0.0};
        case FieldKind::GaussianRationals: {
            const auto& g = std::get<GaussianRational>(value_);
            return {g.re.get_d(), g.im.get_d()};
        }
        case FieldKind::ComplexFloat: return std::get<std::complex<double>>(value_);
        case FieldKind::FiniteField: break;
    }
    throw Error(ErrorCode::WrongField, "finite-field scalar has no complex value");
}

Scalar Scalar::embed(const FieldDescriptor& target) const {
    if (target == *field_) return *this;
    if (kind() == FieldKind::Rationals && target.kind() == FieldKind::GaussianRationals) {
        return gaussian(std::get<mpq_class>(value_), 0);
    }
    if (field_->embeds_in_complex() && target.kind() == FieldKind::ComplexFloat) {
        return Scalar(target, to_complex());
    }
    if (kind() == FieldKind::GaussianRationals && target.kind() == FieldKind::Rationals) {
        const auto& g = std::get<GaussianRational>(value_);
        if (g.im == 0) return rational(g.re);
    }
    throw Error(ErrorCode::WrongField, "cannot embed " + field_->name() + " into " + target.name());
}

bool Scalar::is_zero() const {
    switch (kind()) {
        case FieldKind::Rationals: return std::get<mpq_class>(value_) == 0;
        case FieldKind::GaussianRationals: {
            const auto& g = std::get<GaussianRational>(value_);
            return g.re == 0 && g.im == 0;
        }
        case FieldKind::FiniteField: return std::get<std::uint32_t>(value_) == 0;
        case FieldKind::ComplexFloat: return std::abs(std::get<std::complex<double>>(value_)) <= field_->tol();
    }
    return false;
}

bool Scalar::is_one() const { return *this == one(*field_); }

Scalar Scalar::operator-() const {
    switch (kind()) {
        case FieldKind::Rationals: return Scalar(*field_, mpq_class(-std::get<mpq_class>(value_)));
        case FieldKind::GaussianRationals: {
            const auto& g = std::get<GaussianRational>(value_);
            return Scalar(*field_, GaussianRational{-g.re, -g.im});
        }
        case FieldKind::FiniteField: return Scalar(*field_, field_->gf().neg(std::get<std::uint32_t>(value_)));
        case FieldKind::ComplexFloat: return Scalar(*field_, -std::get<std::complex<double>>(value_));
    }
    throw Error(ErrorCode::Internal, "unknown field kind");
}

Scalar Scalar::inverse() const {
    switch (kind()) {
        case FieldKind::Rationals: {
            const auto& q = std::get<mpq_class>(value_);
            if (q == 0) throw Error(ErrorCode::DivisionByZero, "division by zero");
            mpq_class r = 1 / q;
            r.canonicalize();
            return Scalar(*field_, r);
        }
        case FieldKind::GaussianRationals: {
            const auto& g = std::get<GaussianRational>(value_);
            mpq_class n = g.re * g.re + g.im * g.im;
            if (n == 0) throw Error(ErrorCode::DivisionByZero, "division by zero");
            mpq_class re = g.re / n, im = -g.im / n;
            return gaussian(re, im);
        }
        case FieldKind::FiniteField: return Scalar(*field_, field_->gf().inv(std::get<std::uint32_t>(value_)));
        case FieldKind::ComplexFloat: {
            const auto z = std::get<std::complex<double>>(value_);
            if (z == std::complex<double>(0.0, 0.0)) throw Error(ErrorCode::DivisionByZero, "division by zero");
            return Scalar(*field_, 1.0 / z);
        }
    }
    throw Error(ErrorCode::Internal, "unknown field kind");
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    const auto& f = check_same(a, b);
    switch (f.kind()) {
        case FieldKind::Rationals: return Scalar(f, mpq_class(std::get<mpq_class>(a.value_) + std::get<mpq_class>(b.value_)));
        case FieldKind::GaussianRationals: {
            const auto& x = std::get<GaussianRational>(a.value_);
            const auto& y = std::get<GaussianRational>(b.value_);
            return Scalar(f, GaussianRational{x.re + y.re, x.im + y.im});
        }
        case FieldKind::FiniteField:
            return Scalar(f, f.gf().add(std::get<std::uint32_t>(a.value_), std::get<std::uint32_t>(b.value_)));
        case FieldKind::ComplexFloat:
            return Scalar(f, std::get<std::complex<double>>(a.value_) + std::get<std::complex<double>>(b.value_));
    }
    throw Error(ErrorCode::Internal, "unknown field kind");
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    const auto& f = check_same(a, b);
    switch (f.kind()) {
        case FieldKind::Rationals: return Scalar(f, mpq_class(std::get<mpq_class>(a.value_) - std::get<mpq_class>(b.value_)));
        case FieldKind::GaussianRationals: {
            const auto& x = std::get<GaussianRational>(a.value_);
            const auto& y = std::get<GaussianRational>(b.value_);
            return Scalar(f, GaussianRational{x.re - y.re, x.im - y.im});
        }
        case FieldKind::FiniteField:
            return Scalar(f, f.gf().sub(std::get<std::uint32_t>(a.value_), std::get<std::uint32_t>(b.value_)));
        case FieldKind::ComplexFloat:
            return Scalar(f, std::get<std::complex<double>>(a.value_) - std::get<std::complex<double>>(b.value_));
    }
    throw Error(ErrorCode::Internal, "unknown field kind");
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    const auto& f = check_same(a, b);
    switch (f.kind()) {
        case FieldKind::Rationals: return Scalar(f, mpq_class(std::get<mpq_class>(a.value_) * std::get<mpq_class>(b.value_)));
        case FieldKind::GaussianRationals: {
            const auto& x = std::get<GaussianRational>(a.value_);
            const auto& y = std::get<GaussianRational>(b.value_);
            return Scalar(f, GaussianRational{x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re});
        }
        case FieldKind::FiniteField:
            return Scalar(f, f.gf().mul(std::get<std::uint32_t>(a.value_), std::get<std::uint32_t>(b.value_)));
        case FieldKind::ComplexFloat:
            return Scalar(f, std::get<std::complex<double>>(a.value_) * std::get<std::complex<double>>(b.value_));
    }
    throw Error(ErrorCode::Internal, "unknown field kind");
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    check_same(a, b);
    return a * b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
    const auto& f = check_same(a, b);
    switch (f.kind()) {
        case FieldKind::Rationals: return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
        case FieldKind::GaussianRationals: {
            const auto& x = std::get<GaussianRational>(a.value_);
            const auto& y = std::get<GaussianRational>(b.value_);
            return x.re == y.re && x.im == y.im;
        }
        case FieldKind::FiniteField: return std::get<std::uint32_t>(a.value_) == std::get<std::uint32_t>(b.value_);
        case FieldKind::ComplexFloat: {
            const auto x = std::get<std::complex<double>>(a.value_);
            const auto y = std::get<std::complex<double>>(b.value_);
            const double scale = std::max({1.0, std::abs(x), std::abs(y)});
            return std::abs(x - y) <= f.tol() * scale;
        }
    }
    return false;
}

std::string Scalar::to_string() const {
    switch (kind()) {
        case FieldKind::Rationals: return std::get<mpq_class>(value_).get_str();
        case FieldKind::GaussianRationals: {
            const auto& g = std::get<GaussianRational>(value_);
            mpq_class abs_im = abs(g.im);
            return format_complex_parts(g.re == 0, g.im == 0, g.im < 0, abs_im == 1, g.re.get_str(),
                                        abs_im.get_str());
        }
        case FieldKind::FiniteField: return field_->gf().format(std::get<std::uint32_t>(value_));
        case FieldKind::ComplexFloat: {
            const auto z = std::get<std::complex<double>>(value_);
            return format_complex_parts(z.real() == 0.0, z.imag() == 0.0, std::signbit(z.imag()),
                                        false, format_double(z.real()), format_double(std::abs(z.imag())));
        }
    }
    return "?";
}

bool Scalar::canonical_less(const Scalar& a, const Scalar& b) {
    check_same(a, b);
    switch (a.kind()) {
        case FieldKind::Rationals: return std::get<mpq_class>(a.value_) < std::get<mpq_class>(b.value_);
        case FieldKind::GaussianRationals: {
            const auto& x = std::get<GaussianRational>(a.value_);
            const auto& y = std::get<GaussianRational>(b.value_);
            if (x.re != y.re) return x.re < y.re;
            return x.im < y.im;
        }
        case FieldKind::FiniteField: return std::get<std::uint32_t>(a.value_) < std::get<std::uint32_t>(b.value_);
        case FieldKind::ComplexFloat: {
            const auto x = std::get<std::complex<double>>(a.value_);
            const auto y = std::get<std::complex<double>>(b.value_);
            if (x.real() != y.real()) return x.real() < y.real();
            return x.imag() < y.imag();
        }
    }
    return false;
}

Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op) {
    switch (op) {
        case ArithOp::Add: return a + b;
        case ArithOp::Sub: return a - b;
        case ArithOp::Mul: return a * b;
        case ArithOp::Div: return a / b;
    }
    throw Error(ErrorCode::Internal, "unknown arithmetic op");
}

Scalar norm_sq(const Scalar& a) {
    const auto& g = a.as_gaussian();
    return Scalar::rational(g.re * g.re + g.im * g.im);
}

Scalar modulus_sq(const Scalar& a) {
    switch (a.kind()) {
        case FieldKind::Rationals: {
            const auto& q = a.as_rational();
            return Scalar::rational(q * q);
        }
        case FieldKind::GaussianRationals: return norm_sq(a);
        case FieldKind::ComplexFloat: return Scalar::complex(a.field(), std::norm(a.as_complex()));
        case FieldKind::FiniteField: break;
    }
    throw Error(ErrorCode::WrongField, "finite-field scalars have no modulus");
}

}  // namespace orbitref
