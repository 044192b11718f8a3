#include "orbitref/field.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "orbitref/error.hpp"

namespace orbitref {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::MixedFields: return "MixedFields";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::WrongField: return "WrongField";
        case ErrorCode::ShapeMismatch: return "ShapeMismatch";
        case ErrorCode::Singular: return "Singular";
        case ErrorCode::NumericKindUnsupported: return "NumericKindUnsupported";
        case ErrorCode::NotSplit: return "NotSplit";
        case ErrorCode::Nilpotent: return "Nilpotent";
        case ErrorCode::FiniteFieldUnsupported: return "FiniteFieldUnsupported";
        case ErrorCode::CriterionHolds: return "CriterionHolds";
        case ErrorCode::NotJordanCoordinates: return "NotJordanCoordinates";
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::Parse: return "Parse";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

FieldDescriptor::FieldDescriptor(FieldKind kind, std::uint32_t p, std::uint32_t k, double tol,
                                 std::unique_ptr<GaloisField> gf)
    : kind_(kind), p_(p), k_(k), tol_(tol), gf_(std::move(gf)) {}

const FieldDescriptor& FieldDescriptor::rationals() {
    static const FieldDescriptor q(FieldKind::Rationals, 0, 0, 0.0, nullptr);
    return q;
}

const FieldDescriptor& FieldDescriptor::gaussian_rationals() {
    static const FieldDescriptor qi(FieldKind::GaussianRationals, 0, 0, 0.0, nullptr);
    return qi;
}

namespace {
std::mutex& registry_mutex() {
    static std::mutex m;
    return m;
}
}  // namespace

const FieldDescriptor& FieldDescriptor::finite(std::uint32_t p, std::uint32_t k) {
    static std::map<std::pair<std::uint32_t, std::uint32_t>, std::unique_ptr<FieldDescriptor>> registry;
    std::lock_guard lock(registry_mutex());
    auto& slot = registry[{p, k}];
    if (!slot) {
        auto gf = std::make_unique<GaloisField>(p, k, default_modulus(p, k));
        slot.reset(new FieldDescriptor(FieldKind::FiniteField, p, k, 0.0, std::move(gf)));
    }
    return *slot;
}

const FieldDescriptor& FieldDescriptor::complex_float(double tol) {
    if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "complex tolerance must be positive");
    static std::map<double, std::unique_ptr<FieldDescriptor>> registry;
    std::lock_guard lock(registry_mutex());
    auto& slot = registry[tol];
    if (!slot) slot.reset(new FieldDescriptor(FieldKind::ComplexFloat, 0, 0, tol, nullptr));
    return *slot;
}

const GaloisField& FieldDescriptor::gf() const {
    if (!gf_) throw Error(ErrorCode::WrongField, "not a finite field: " + name());
    return *gf_;
}

std::string FieldDescriptor::name() const {
    switch (kind_) {
        case FieldKind::Rationals: return "Q";
        case FieldKind::GaussianRationals: return "Q(i)";
        case FieldKind::FiniteField: return "GF(" + std::to_string(gf_->order()) + ")";
        case FieldKind::ComplexFloat: return "C64";
    }
    return "?";
}

std::string FieldDescriptor::tag() const {
    switch (kind_) {
        case FieldKind::Rationals: return "q";
        case FieldKind::GaussianRationals: return "qi";
        case FieldKind::FiniteField: return "gf";
        case FieldKind::ComplexFloat: return "c64";
    }
    return "?";
}

}  // namespace orbitref
