#include "wps/exact.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

namespace wps {

ExtGcd ext_gcd(const BigInt& a, const BigInt& b) {
    if (a == 0 && b == 0) return {0, 0, 0};  // degenerate convention
    // Invariants: s*a + t*b = r for each remainder r in the Euclid sequence.
    BigInt old_r = a, r = b;
    BigInt old_s = 1, s = 0;
    BigInt old_t = 0, t = 1;
    while (r != 0) {
        BigInt q = old_r / r;  // truncated division, matches the classical sequence
        old_r -= q * r; std::swap(old_r, r);
        old_s -= q * s; std::swap(old_s, s);
        old_t -= q * t; std::swap(old_t, t);
    }
    if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
    return {old_r, old_s, old_t};
}

BigInt mod_inverse(const BigInt& a, const BigInt& m) {
    if (m < 2) throw domain_error("mod_inverse: modulus must be >= 2");
    ExtGcd e = ext_gcd(a, m);
    if (e.g != 1) throw domain_error("mod_inverse: argument not coprime to modulus");
    BigInt r = e.s % m;
    if (r < 0) r += m;
    return r;
}

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

namespace {

// One Miller-Rabin round for witness a; n odd, n - 1 = q * 2^s.
bool mr_round(const BigInt& n, const BigInt& a, const BigInt& q, unsigned long s) {
    BigInt x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return true;
    for (unsigned long i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return true;
        if (x == 1) return false;
    }
    return false;
}

}  // namespace

bool is_probable_prime(const BigInt& n) {
    if (n < 2) return false;
    static const int small_primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (int p : small_primes) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    BigInt q = n - 1;
    unsigned long s = mpz_scan1(q.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(q.get_mpz_t(), q.get_mpz_t(), s);
    for (int p : small_primes)
        if (!mr_round(n, BigInt(p), q, s)) return false;
    return true;
}

namespace {

BigInt pollard_rho(const BigInt& n) {
    // Brent's cycle detection with batched gcds; deterministic restarts.
    if (n % 2 == 0) return 2;
    for (unsigned c = 1;; ++c) {
        BigInt y = 2, g = 1, q = 1, x, ys;
        unsigned long r = 1;
        const unsigned long batch = 128;
        while (g == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            for (unsigned long k = 0; k < r && g == 1; k += batch) {
                ys = y;
                unsigned long lim = std::min(batch, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    BigInt diff = x - y;
                    q = q * (diff < 0 ? -diff : diff) % n;
                }
                g = gcd(q, n);
            }
            r *= 2;
        }
        if (g == n) {
            // backtrack one step at a time
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                BigInt diff = x - ys;
                g = gcd(diff < 0 ? -diff : diff, n);
            }
        }
        if (g != n) return g;
        // cycle degenerated for this c; retry with the next polynomial
    }
}

void factor_into(const BigInt& n, std::map<BigInt, unsigned>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) { ++out[n]; return; }
    BigInt d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

std::vector<std::pair<BigInt, unsigned>> factorize(const BigInt& n) {
    if (n < 1) throw domain_error("factorize: argument must be >= 1");
    std::map<BigInt, unsigned> acc;
    BigInt m = n;
    for (BigInt p = 2; p <= 10000 && p * p <= m; p += (p == 2 ? 1 : 2)) {
        while (m % p == 0) { ++acc[p]; m /= p; }
    }
    factor_into(m, acc);
    return {acc.begin(), acc.end()};
}

namespace {

void swap_rows(IntMatrix& m, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < m.cols; ++k) std::swap(m.at(i, k), m.at(j, k));
}

void swap_cols(IntMatrix& m, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < m.rows; ++k) std::swap(m.at(k, i), m.at(k, j));
}

// Moves a minimal-|value| nonzero entry of the trailing submatrix to (t,t).
// Returns false when the submatrix is zero.
bool place_pivot(IntMatrix& m, std::size_t t) {
    std::size_t bi = 0, bj = 0;
    bool found = false;
    BigInt best;
    for (std::size_t i = t; i < m.rows; ++i)
        for (std::size_t j = t; j < m.cols; ++j) {
            if (m.at(i, j) == 0) continue;
            BigInt v = abs(m.at(i, j));
            if (!found || v < best) { found = true; best = v; bi = i; bj = j; }
        }
    if (!found) return false;
    swap_rows(m, t, bi);
    swap_cols(m, t, bj);
    return true;
}

}  // namespace

SmithNormalForm smith_normal_form(IntMatrix m) {
    SmithNormalForm out;
    const std::size_t n = std::min(m.rows, m.cols);
    for (std::size_t t = 0; t < n; ++t) {
        if (!place_pivot(m, t)) break;
        for (;;) {
            // Reduce column t below the pivot with truncated quotients; any
            // nonzero remainder is smaller than the pivot, so re-pivoting
            // strictly shrinks |pivot| and the loop terminates.
            bool dirty = false;
            for (std::size_t i = t + 1; i < m.rows; ++i) {
                if (m.at(i, t) == 0) continue;
                BigInt q = m.at(i, t) / m.at(t, t);
                for (std::size_t k = t; k < m.cols; ++k) m.at(i, k) -= q * m.at(t, k);
                if (m.at(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < m.cols; ++j) {
                if (m.at(t, j) == 0) continue;
                BigInt q = m.at(t, j) / m.at(t, t);
                for (std::size_t k = t; k < m.rows; ++k) m.at(k, j) -= q * m.at(k, t);
                if (m.at(t, j) != 0) dirty = true;
            }
            if (dirty) { place_pivot(m, t); continue; }
            // Pivot now divides its row and column; enforce divisibility of
            // the whole trailing block (invariant-factor condition).
            bool fixed = true;
            for (std::size_t i = t + 1; i < m.rows && fixed; ++i)
                for (std::size_t j = t + 1; j < m.cols && fixed; ++j)
                    if (m.at(i, j) % m.at(t, t) != 0) {
                        for (std::size_t k = t; k < m.cols; ++k) m.at(t, k) += m.at(i, k);
                        fixed = false;
                    }
            if (fixed) break;
        }
        if (m.at(t, t) < 0) m.at(t, t) = -m.at(t, t);
        out.diag.push_back(m.at(t, t));
    }
    out.rank = out.diag.size();
    return out;
}

BigInt determinant(IntMatrix m) {
    if (m.rows != m.cols) throw domain_error("determinant: matrix not square");
    const std::size_t n = m.rows;
    if (n == 0) return 1;
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m.at(p, k) == 0) ++p;
            if (p == n) return 0;
            swap_rows(m, k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt v = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                mpz_divexact(m.at(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m.at(k, k);
    }
    return sign < 0 ? BigInt(-m.at(n - 1, n - 1)) : m.at(n - 1, n - 1);
}

std::string rational_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string decimal_string(const Rational& q, int places) {
    if (places < 0) throw domain_error("decimal_string: negative precision");
    BigInt num = q.get_num(), den = q.get_den();
    bool neg = num < 0;
    if (neg) num = -num;
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
    BigInt t = num * scale;
    BigInt quo = t / den, rem = t % den;
    if (2 * rem >= den) ++quo;  // half away from zero
    std::string digits = quo.get_str();
    if (static_cast<int>(digits.size()) <= places)
        digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    std::string out = digits.substr(0, digits.size() - places);
    if (places > 0) out += "." + digits.substr(digits.size() - places);
    if (neg && quo != 0) out.insert(0, 1, '-');
    return out;
}

Rational parse_rational(const std::string& s) {
    auto bad = [&] { return domain_error("malformed rational: '" + s + "'"); };
    auto parse_int = [&](const std::string& part) {
        if (part.empty()) throw bad();
        std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size()) throw bad();
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) throw bad();
        return BigInt(part);
    };
    std::size_t slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_int(s));
    BigInt num = parse_int(s.substr(0, slash));
    BigInt den = parse_int(s.substr(slash + 1));
    return make_rational(num, den);
}

}  // namespace wps
