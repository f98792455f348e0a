#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wps {

using BigInt = mpz_class;
using Rational = mpq_class;

// Input/precondition violations.  The CLI maps these to exit code 2.
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Violation of an exact identity that is a theorem for valid inputs.
// Reaching one of these means a bug, not bad input; CLI exit code 1.
struct consistency_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
    BigInt l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

struct ExtGcd {
    BigInt g, s, t;  // g = gcd(a,b) >= 0, s*a + t*b = g
};

// Iterative extended Euclid.  For b > 0 the returned pair is the one produced
// by the classical remainder sequence, e.g. ext_gcd(143, 95) = (1, 2, -3).
ExtGcd ext_gcd(const BigInt& a, const BigInt& b);

// Inverse of a mod m (m >= 2).  Throws domain_error when gcd(a,m) != 1.
BigInt mod_inverse(const BigInt& a, const BigInt& m);

// num/den with den != 0, canonicalized (den > 0, reduced).
Rational make_rational(const BigInt& num, const BigInt& den);

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

// Deterministic Miller-Rabin (bases 2..37), exact for n < 3.3e24; used as a
// strong probable-prime test beyond that.
bool is_probable_prime(const BigInt& n);

// Prime factorization of n >= 1, sorted by prime.  Trial division up to 1e4,
// then Miller-Rabin + Brent's variant of Pollard rho on what is left.
std::vector<std::pair<BigInt, unsigned>> factorize(const BigInt& n);

struct IntMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<BigInt> a;  // row-major

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    BigInt& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const BigInt& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

struct SmithNormalForm {
    std::vector<BigInt> diag;  // nonzero invariant factors, d1 | d2 | ... | dr
    std::size_t rank = 0;      // diag.size()
};

// Smith normal form over Z by the classical pivot-reduction algorithm.
SmithNormalForm smith_normal_form(IntMatrix m);

// Exact determinant of a square matrix (fraction-free Bareiss elimination).
BigInt determinant(IntMatrix m);

// "p/q" in lowest terms, "p" when the denominator is 1.
std::string rational_string(const Rational& q);

// Fixed-point decimal rendering (advisory only; exact values stay rational).
// Rounds half away from zero.
std::string decimal_string(const Rational& q, int places = 6);

// Parses "p", "-p", "p/q"; throws domain_error on malformed input or q = 0.
Rational parse_rational(const std::string& s);

}  // namespace wps
