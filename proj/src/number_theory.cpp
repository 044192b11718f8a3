#include "number_theory.hpp"

#include <algorithm>
#include <map>

#include "orbitref/error.hpp"

namespace orbitref::detail {

namespace {

mpz_class pollard_brent(const mpz_class& n) {
    if (n % 2 == 0) return 2;
    for (unsigned long c = 1;; ++c) {
        mpz_class y = 2, x, g = 1, q = 1, ys;
        const mpz_class cc = c;
        unsigned long r = 1;
        constexpr unsigned long m = 64;
        auto f = [&](const mpz_class& v) { return mpz_class((v * v + cc) % n); };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    mpz_class diff = abs(x - y);
                    q = (q * diff) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                mpz_class diff = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_into(mpz_class n, std::map<mpz_class, int>& out) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) {
        ++out[n];
        return;
    }
    mpz_class d = pollard_brent(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

// a^2 + b^2 = p for a prime p = 1 mod 4.
GaussInt two_squares(const mpz_class& p) {
    mpz_class x;
    const mpz_class e = (p - 1) / 4;
    for (mpz_class c = 2;; ++c) {
        mpz_powm(x.get_mpz_t(), c.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
        if ((x * x) % p == p - 1) break;
    }
    mpz_class a = p, b = x;
    while (b * b > p) {
        mpz_class r = a % b;
        a = b;
        b = r;
    }
    mpz_class rest = p - b * b;
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), rest.get_mpz_t());
    if (s * s != rest) throw Error(ErrorCode::Internal, "two-squares decomposition failed");
    return {b, s};
}

bool is_zero(const GaussInt& a) { return a.re == 0 && a.im == 0; }

}  // namespace

std::vector<std::pair<mpz_class, int>> factor_integer(mpz_class n) {
    if (n <= 0) throw Error(ErrorCode::InvalidArgument, "factor_integer needs n > 0");
    std::map<mpz_class, int> found;
    for (unsigned long p : {2ul, 3ul, 5ul}) {
        while (n % p == 0) {
            ++found[p];
            n /= p;
        }
    }
    for (unsigned long d = 7; d < 100000 && mpz_class(d) * d <= n; d += 2) {
        while (n % d == 0) {
            ++found[d];
            n /= d;
        }
    }
    factor_into(n, found);
    return {found.begin(), found.end()};
}

std::vector<mpz_class> positive_divisors(const mpz_class& n) {
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : factor_integer(n)) {
        const std::size_t base = divs.size();
        mpz_class pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

GaussInt operator*(const GaussInt& a, const GaussInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

mpz_class norm(const GaussInt& a) { return a.re * a.re + a.im * a.im; }

bool divides(const GaussInt& d, const GaussInt& a) {
    const mpz_class n = norm(d);
    if (n == 0) return is_zero(a);
    // a * conj(d) must be divisible by N(d) componentwise.
    const mpz_class re = a.re * d.re + a.im * d.im;
    const mpz_class im = a.im * d.re - a.re * d.im;
    return re % n == 0 && im % n == 0;
}

GaussInt exact_quotient(const GaussInt& a, const GaussInt& d) {
    const mpz_class n = norm(d);
    return {(a.re * d.re + a.im * d.im) / n, (a.im * d.re - a.re * d.im) / n};
}

std::vector<GaussInt> gaussian_divisors(const GaussInt& a, bool with_units) {
    if (is_zero(a)) throw Error(ErrorCode::InvalidArgument, "divisors of zero");
    std::vector<std::pair<GaussInt, int>> primes;
    GaussInt rest = a;
    for (const auto& [p, e] : factor_integer(norm(a))) {
        (void)e;
        std::vector<GaussInt> candidates;
        if (p == 2) {
            candidates.push_back({1, 1});
        } else if (p % 4 == 3) {
            candidates.push_back({p, 0});
        } else {
            const GaussInt pi = two_squares(p);
            candidates.push_back(pi);
            candidates.push_back({pi.re, -pi.im});
        }
        for (const auto& pi : candidates) {
            int count = 0;
            while (divides(pi, rest)) {
                rest = exact_quotient(rest, pi);
                ++count;
            }
            if (count > 0) primes.emplace_back(pi, count);
        }
    }
    std::vector<GaussInt> divs{{1, 0}};
    for (const auto& [pi, e] : primes) {
        const std::size_t base = divs.size();
        GaussInt pk{1, 0};
        for (int k = 1; k <= e; ++k) {
            pk = pk * pi;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    if (!with_units) return divs;
    std::vector<GaussInt> out;
    out.reserve(divs.size() * 4);
    const GaussInt units[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (const auto& d : divs) {
        for (const auto& u : units) out.push_back(d * u);
    }
    return out;
}

}  // namespace orbitref::detail
