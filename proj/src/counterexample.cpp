#include "orbitref/counterexample.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace orbitref {

namespace {

const FieldDescriptor& QI = FieldDescriptor::gaussian_rationals();

mpz_class floor_of(const mpq_class& x) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return r;
}

void put(std::map<std::uint64_t, PhasedScalar>& part, std::uint64_t k, const PhasedScalar& v) {
    if (v.is_zero()) {
        part.erase(k);
    } else {
        part[k] = v;
    }
}

bool parts_equal(const std::map<std::uint64_t, PhasedScalar>& a, const std::map<std::uint64_t, PhasedScalar>& b) {
    if (a.size() != b.size()) return false;
    for (const auto& [k, v] : a) {
        auto it = b.find(k);
        if (it == b.end() || it->second != v) return false;
    }
    return true;
}

}  // namespace

PhasedScalar::PhasedScalar() : c_(Scalar::zero(QI)), theta_(0) {}

PhasedScalar::PhasedScalar(Scalar coefficient, mpq_class theta)
    : c_(coefficient.kind() == FieldKind::Rationals ? coefficient.embed(QI) : std::move(coefficient)),
      theta_(std::move(theta)) {
    if (c_.field() != QI) throw Error(ErrorCode::WrongField, "phased coefficients live in Q(i)");
    canonicalize();
}

void PhasedScalar::canonicalize() {
    theta_.canonicalize();
    if (c_.is_zero()) {
        theta_ = 0;
        return;
    }
    theta_ -= floor_of(theta_);
    const mpz_class quarters = floor_of(theta_ * 4);
    mpq_class turned(quarters, 4);
    turned.canonicalize();
    theta_ -= turned;
    const Scalar i = Scalar::gaussian(0, 1);
    for (long k = 0; k < quarters.get_si(); ++k) c_ *= i;
}

PhasedScalar PhasedScalar::rotated(const mpq_class& turns) const { return PhasedScalar(c_, theta_ + turns); }

PhasedScalar operator*(const PhasedScalar& a, const PhasedScalar& b) {
    return PhasedScalar(a.c_ * b.c_, a.theta_ + b.theta_);
}

PhasedScalar PhasedScalar::inverse() const { return PhasedScalar(c_.inverse(), -theta_); }

bool operator==(const PhasedScalar& a, const PhasedScalar& b) { return a.c_ == b.c_ && a.theta_ == b.theta_; }

std::complex<double> PhasedScalar::to_complex() const {
    return c_.to_complex() * std::polar(1.0, 2.0 * std::numbers::pi * theta_.get_d());
}

std::string PhasedScalar::to_string() const {
    if (theta_ == 0) return c_.to_string();
    return "(" + c_.to_string() + ")*exp(2pi i*" + theta_.get_str() + ")";
}

CounterexampleVector CounterexampleVector::basis(bool diagonal_summand, std::uint64_t k) {
    if (k == 0) throw Error(ErrorCode::InvalidArgument, "basis indices start at 1");
    CounterexampleVector x;
    (diagonal_summand ? x.diag_part : x.shift_part)[k] = PhasedScalar(Scalar::one(QI));
    return x;
}

CounterexampleVector CounterexampleVector::twin(std::uint64_t k) {
    CounterexampleVector x = basis(false, k);
    x.diag_part[k] = PhasedScalar(Scalar::one(QI));
    return x;
}

bool CounterexampleVector::is_zero() const { return shift_part.empty() && diag_part.empty(); }

std::uint64_t CounterexampleVector::support() const {
    std::uint64_t s = 0;
    if (!shift_part.empty()) s = std::max(s, shift_part.rbegin()->first);
    if (!diag_part.empty()) s = std::max(s, diag_part.rbegin()->first);
    return s;
}

bool operator==(const CounterexampleVector& a, const CounterexampleVector& b) {
    return parts_equal(a.shift_part, b.shift_part) && parts_equal(a.diag_part, b.diag_part);
}

std::string CounterexampleVector::to_string() const {
    auto part = [](const std::map<std::uint64_t, PhasedScalar>& p) {
        if (p.empty()) return std::string("0");
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, v] : p) {
            os << (first ? "" : " + ") << (v == PhasedScalar(Scalar::one(QI)) ? "" : v.to_string() + " ") << "e" << k;
            first = false;
        }
        return os.str();
    };
    return part(shift_part) + " (+) " + part(diag_part);
}

CounterexampleVector apply_T_power(const CounterexampleVector& x, const mpz_class& e) {
    if (e < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
    CounterexampleVector y;
    for (const auto& [k, v] : x.shift_part) {
        if (mpz_class(k) > e) put(y.shift_part, k - e.get_ui(), v);
    }
    for (const auto& [k, v] : x.diag_part) {
        const mpz_class kk(static_cast<unsigned long>(k));
        const mpz_class r = e % kk;
        put(y.diag_part, k, v.rotated(mpq_class(r, kk)));
    }
    return y;
}

CounterexampleVector apply_S(const CounterexampleVector& x) {
    CounterexampleVector y;
    y.diag_part = x.diag_part;
    return y;
}

CounterexampleVector scale(const PhasedScalar& alpha, const CounterexampleVector& x) {
    CounterexampleVector y;
    for (const auto& [k, v] : x.shift_part) put(y.shift_part, k, alpha * v);
    for (const auto& [k, v] : x.diag_part) put(y.diag_part, k, alpha * v);
    return y;
}

std::optional<PhasedScalar> scalar_fit(const CounterexampleVector& u, const CounterexampleVector& v) {
    if (u.is_zero()) {
        if (v.is_zero()) return PhasedScalar();
        return std::nullopt;
    }
    const PhasedScalar& pivot = !u.shift_part.empty() ? u.shift_part.begin()->second : u.diag_part.begin()->second;
    const std::uint64_t k = !u.shift_part.empty() ? u.shift_part.begin()->first : u.diag_part.begin()->first;
    const auto& vpart = !u.shift_part.empty() ? v.shift_part : v.diag_part;
    auto it = vpart.find(k);
    const PhasedScalar target = it == vpart.end() ? PhasedScalar() : it->second;
    const PhasedScalar alpha = target * pivot.inverse();
    if (scale(alpha, u) == v) return alpha;
    return std::nullopt;
}

mpz_class factorial(unsigned n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

std::uint64_t factorial_mod(unsigned n, std::uint64_t k) {
    if (k == 0) throw Error(ErrorCode::InvalidArgument, "modulus must be positive");
    std::uint64_t r = 1 % k;
    for (unsigned i = 2; i <= n && r != 0; ++i) r = static_cast<std::uint64_t>((static_cast<__uint128_t>(r) * i) % k);
    return r;
}

NoSinglePowerResult verify_no_single_power(std::uint64_t max_support, std::uint64_t max_k) {
    NoSinglePowerResult out;
    out.holds = true;
    for (std::uint64_t n = 0; n <= max_k; ++n) {
        if (n + 1 > max_support) {
            out.holds = false;
            break;
        }
        PowerWitness w{n, CounterexampleVector::twin(n + 1), {}, {}};
        w.t_power_x = apply_T_power(w.x, mpz_class(static_cast<unsigned long>(n)));
        w.s_x = apply_S(w.x);
        if (scalar_fit(w.t_power_x, w.s_x)) {
            out.holds = false;
            break;
        }
        out.witnesses.push_back(std::move(w));
    }
    return out;
}

std::vector<TruncationRow> truncation_table(unsigned max_n) {
    std::vector<TruncationRow> rows;
    for (unsigned n = 1; n <= max_n; ++n) {
        TruncationRow row{n, factorial(n), 0, true};
        for (std::uint64_t k = 1; k <= n; ++k) {
            for (bool diag : {false, true}) {
                const auto x = CounterexampleVector::basis(diag, k);
                row.all_equal = row.all_equal && apply_T_power(x, row.exponent) == apply_S(x);
                ++row.vectors_checked;
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace orbitref
