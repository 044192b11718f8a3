#pragma once

// Integer and Gaussian-integer factoring used by the exact root search.

#include <utility>
#include <vector>

#include <gmpxx.h>

namespace orbitref::detail {

/// Prime factorization of n > 0 as (prime, exponent), ascending.
std::vector<std::pair<mpz_class, int>> factor_integer(mpz_class n);

/// All positive divisors of n > 0.
std::vector<mpz_class> positive_divisors(const mpz_class& n);

struct GaussInt {
    mpz_class re;
    mpz_class im;
};

GaussInt operator*(const GaussInt& a, const GaussInt& b);
mpz_class norm(const GaussInt& a);
bool divides(const GaussInt& d, const GaussInt& a);
GaussInt exact_quotient(const GaussInt& a, const GaussInt& d);

/// Every divisor of a != 0 in Z[i], each associate class listed with all
/// four unit multiples when `with_units`, otherwise one representative.
std::vector<GaussInt> gaussian_divisors(const GaussInt& a, bool with_units);

}  // namespace orbitref::detail
