#include "orbitref/galois.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <utility>

#include "orbitref/error.hpp"
#include "text.hpp"

namespace orbitref {

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

namespace {

// Conway polynomials, coefficients low to high (monic).
const std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>>& conway_table() {
    static const std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>> table = {
        {{2, 2}, {1, 1, 1}},
        {{2, 3}, {1, 1, 0, 1}},
        {{2, 4}, {1, 1, 0, 0, 1}},
        {{2, 5}, {1, 0, 1, 0, 0, 1}},
        {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
        {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
        {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
        {{2, 9}, {1, 0, 0, 0, 1, 0, 0, 0, 0, 1}},
        {{2, 10}, {1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1}},
        {{3, 2}, {2, 2, 1}},
        {{3, 3}, {1, 2, 0, 1}},
        {{3, 4}, {2, 0, 0, 2, 1}},
        {{3, 5}, {1, 2, 0, 0, 0, 1}},
        {{3, 6}, {2, 2, 1, 0, 2, 0, 1}},
        {{5, 2}, {2, 4, 1}},
        {{5, 3}, {3, 3, 0, 1}},
        {{5, 4}, {2, 4, 4, 0, 1}},
        {{7, 2}, {3, 6, 1}},
        {{7, 3}, {4, 0, 6, 1}},
        {{11, 2}, {2, 7, 1}},
        {{13, 2}, {2, 12, 1}},
        {{17, 2}, {3, 16, 1}},
        {{19, 2}, {2, 18, 1}},
        {{23, 2}, {5, 21, 1}},
        {{29, 2}, {2, 24, 1}},
        {{31, 2}, {3, 29, 1}},
    };
    return table;
}

std::uint64_t checked_power(std::uint32_t p, std::uint32_t k) {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        if (q > GaloisField::kMaxExtensionOrder * 64) {
            throw Error(ErrorCode::InvalidArgument, "field order too large");
        }
        q *= p;
    }
    return q;
}

// Multiplication of coefficient vectors (length k) modulo a monic modulus.
std::vector<std::uint32_t> poly_mulmod(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                       const std::vector<std::uint32_t>& modulus, std::uint32_t p) {
    const std::size_t k = modulus.size() - 1;
    std::vector<std::uint64_t> prod(2 * k, 0);
    for (std::size_t i = 0; i < k; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
    }
    for (std::size_t deg = 2 * k - 1; deg >= k; --deg) {
        const std::uint64_t c = prod[deg];
        if (c != 0) {
            for (std::size_t j = 0; j <= k; ++j) {
                const std::size_t idx = deg - k + j;
                prod[idx] = (prod[idx] + (p - c) * modulus[j]) % p;
            }
        }
        if (deg == k) break;
    }
    return {prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(k)};
}

// A monic f of degree k is irreducible over GF(p) iff GF(p)[x]/(f) has no
// zero divisors; checked by brute force on the multiplication table.
bool is_irreducible(const std::vector<std::uint32_t>& f, std::uint32_t p) {
    const std::size_t k = f.size() - 1;
    if (k == 1) return true;
    const std::uint64_t q = checked_power(p, static_cast<std::uint32_t>(k));
    std::vector<std::uint32_t> a(k), b(k);
    auto decode = [&](std::uint64_t code, std::vector<std::uint32_t>& out) {
        for (std::size_t i = 0; i < k; ++i) {
            out[i] = static_cast<std::uint32_t>(code % p);
            code /= p;
        }
    };
    for (std::uint64_t x = 1; x < q; ++x) {
        decode(x, a);
        for (std::uint64_t y = x; y < q; ++y) {
            decode(y, b);
            const auto prod = poly_mulmod(a, b, f, p);
            if (std::all_of(prod.begin(), prod.end(), [](std::uint32_t c) { return c == 0; })) return false;
        }
    }
    return true;
}

}  // namespace

std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t k) {
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, "field characteristic " + std::to_string(p) + " is not prime");
    if (k == 0) throw Error(ErrorCode::InvalidArgument, "extension degree must be >= 1");
    if (k == 1) return {0, 1};
    const auto& table = conway_table();
    if (auto it = table.find({p, k}); it != table.end()) return it->second;
    const std::uint64_t q = checked_power(p, k);
    for (std::uint64_t code = 0; code < q; ++code) {
        std::vector<std::uint32_t> f(k + 1, 0);
        std::uint64_t c = code;
        for (std::uint32_t i = 0; i < k; ++i) {
            f[i] = static_cast<std::uint32_t>(c % p);
            c /= p;
        }
        f[k] = 1;
        if (f[0] != 0 && is_irreducible(f, p)) return f;
    }
    throw Error(ErrorCode::Internal, "no irreducible polynomial found");
}

GaloisField::GaloisField(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus)
    : p_(p), k_(k), q_(0), modulus_(std::move(modulus)) {
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, "field characteristic " + std::to_string(p) + " is not prime");
    if (k == 0) throw Error(ErrorCode::InvalidArgument, "extension degree must be >= 1");
    if (p >= (1u << 31)) throw Error(ErrorCode::InvalidArgument, "characteristic must be below 2^31");
    q_ = checked_power(p, k);
    if (k == 1) {
        modulus_ = {0, 1};
        return;
    }
    if (q_ > kMaxExtensionOrder) {
        throw Error(ErrorCode::InvalidArgument,
                    "extension fields are limited to order " + std::to_string(kMaxExtensionOrder));
    }
    if (modulus_.size() != k + 1 || modulus_.back() != 1) {
        throw Error(ErrorCode::InvalidArgument, "modulus must be monic of degree k");
    }
    for (auto c : modulus_) {
        if (c >= p) throw Error(ErrorCode::InvalidArgument, "modulus coefficient out of range");
    }
    if (!is_irreducible(modulus_, p)) throw Error(ErrorCode::InvalidArgument, "modulus is reducible over GF(p)");

    const std::size_t q = q_;
    add_.resize(q * q);
    mul_.resize(q * q);
    neg_.resize(q);
    inv_.assign(q, 0);
    std::vector<std::vector<std::uint32_t>> coeffs(q);
    for (std::uint32_t code = 0; code < q; ++code) coeffs[code] = coefficients(code);
    for (std::uint32_t a = 0; a < q; ++a) {
        std::vector<std::uint32_t> n(k);
        for (std::uint32_t i = 0; i < k; ++i) n[i] = (p - coeffs[a][i]) % p;
        neg_[a] = from_coefficients(n);
        for (std::uint32_t b = 0; b < q; ++b) {
            std::vector<std::uint32_t> s(k);
            for (std::uint32_t i = 0; i < k; ++i) s[i] = (coeffs[a][i] + coeffs[b][i]) % p;
            add_[a * q + b] = from_coefficients(s);
            mul_[a * q + b] = from_coefficients(poly_mulmod(coeffs[a], coeffs[b], modulus_, p));
        }
    }
    for (std::uint32_t a = 1; a < q; ++a) {
        for (std::uint32_t b = 1; b < q; ++b) {
            if (mul_[a * q + b] == 1) {
                inv_[a] = b;
                break;
            }
        }
    }
}

std::uint32_t GaloisField::inv(std::uint32_t a) const {
    if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero in GF(" + std::to_string(q_) + ")");
    if (k_ != 1) return inv_[a];
    // Extended Euclid modulo p.
    long long t = 0, new_t = 1;
    long long r = p_, new_r = a;
    while (new_r != 0) {
        const long long quotient = r / new_r;
        t = std::exchange(new_t, t - quotient * new_t);
        r = std::exchange(new_r, r - quotient * new_r);
    }
    if (t < 0) t += p_;
    return static_cast<std::uint32_t>(t);
}

std::uint32_t GaloisField::from_integer(long long n) const noexcept {
    long long r = n % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<std::uint32_t>(r);
}

std::vector<std::uint32_t> GaloisField::coefficients(std::uint32_t code) const {
    std::vector<std::uint32_t> out(k_);
    for (std::uint32_t i = 0; i < k_; ++i) {
        out[i] = code % p_;
        code /= p_;
    }
    return out;
}

std::uint32_t GaloisField::from_coefficients(std::span<const std::uint32_t> coeffs) const {
    std::uint64_t code = 0;
    std::uint64_t scale = 1;
    for (std::size_t i = 0; i < coeffs.size() && i < k_; ++i) {
        code += std::uint64_t{coeffs[i] % p_} * scale;
        scale *= p_;
    }
    return static_cast<std::uint32_t>(code);
}

namespace {

std::string format_poly(const std::vector<std::uint32_t>& c, const char* var) {
    std::string out;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += std::to_string(c[i]);
            continue;
        }
        if (c[i] != 1) out += std::to_string(c[i]);
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

long long parse_integer(std::string_view s) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw Error(ErrorCode::Parse, "bad integer '" + std::string(s) + "'");
    }
    return v;
}

}  // namespace

std::string GaloisField::format(std::uint32_t code) const {
    if (k_ == 1) return std::to_string(code);
    return format_poly(coefficients(code), "x");
}

std::string GaloisField::modulus_string() const { return format_poly(modulus_, "x"); }

std::uint32_t GaloisField::parse(std::string_view text) const {
    const std::string norm = detail::normalize_number_text(text);
    // Accumulate coefficients of arbitrary degree, then reduce modulo the modulus.
    std::vector<std::uint32_t> acc(1, 0);
    for (const auto& raw : detail::split_signed_terms(norm)) {
        std::string_view term = raw;
        bool negative = false;
        if (term.front() == '+' || term.front() == '-') {
            negative = term.front() == '-';
            term.remove_prefix(1);
        }
        std::size_t power = 0;
        long long coeff = 1;
        if (auto xpos = term.find('x'); xpos != std::string_view::npos) {
            if (k_ == 1) throw Error(ErrorCode::Parse, "polynomial syntax requires an extension field");
            std::string_view c = term.substr(0, xpos);
            if (!c.empty() && c.back() == '*') c.remove_suffix(1);
            if (!c.empty()) coeff = parse_integer(c);
            std::string_view rest = term.substr(xpos + 1);
            power = 1;
            if (!rest.empty()) {
                if (rest.front() != '^') throw Error(ErrorCode::Parse, "bad term '" + raw + "'");
                power = static_cast<std::size_t>(parse_integer(rest.substr(1)));
            }
        } else {
            coeff = parse_integer(term);
        }
        if (power > 4096) throw Error(ErrorCode::Parse, "exponent too large in '" + raw + "'");
        if (acc.size() <= power) acc.resize(power + 1, 0);
        const std::uint32_t c = from_integer(negative ? -coeff : coeff);
        acc[power] = static_cast<std::uint32_t>((std::uint64_t{acc[power]} + c) % p_);
    }
    // Reduce x^n for n >= k using x^k = -(m_0 + ... + m_{k-1} x^{k-1}).
    for (std::size_t deg = acc.size(); deg-- > k_;) {
        const std::uint64_t c = acc[deg];
        if (c == 0) continue;
        acc[deg] = 0;
        for (std::uint32_t j = 0; j < k_; ++j) {
            const std::size_t idx = deg - k_ + j;
            acc[idx] = static_cast<std::uint32_t>((acc[idx] + (p_ - c) * modulus_[j] % p_) % p_);
        }
    }
    acc.resize(k_, 0);
    return from_coefficients(acc);
}

}  // namespace orbitref
