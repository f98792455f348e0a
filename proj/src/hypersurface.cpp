#include "wps/hypersurface.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdint>

namespace wps {

namespace {

BigInt min_exponent(const WeightSystem& ws) {
    BigInt m = ws.tuple.a[0];
    for (const BigInt& x : ws.tuple.a) m = std::min(m, x);
    return m;
}

void require_positive_weights(const WeightSystem& ws) {
    for (const BigInt& wi : ws.w)
        if (wi < 1)
            throw domain_error("weight system has a non-positive weight (some a_i = 1 "
                               "collapses the ambient space)");
}

}  // namespace

CanonicalData canonical_data(const WeightSystem& ws) {
    CanonicalData c;
    BigInt sum = 0;
    for (const BigInt& wi : ws.w) sum += wi;
    c.degree = ws.d - sum;
    c.degree_sign = sgn(c.degree);
    c.ample_sufficient = min_exponent(ws) >= static_cast<long>(ws.size());
    return c;
}

Rational k_self_intersection(const WeightSystem& ws) {
    const std::size_t n = ws.size();
    if (n < 4) throw domain_error("K self-intersection needs n >= 4");
    require_positive_weights(ws);
    if (n == 4) {
        BigInt g13 = gcd(ws.w[0], ws.w[2]);
        BigInt g24 = gcd(ws.w[1], ws.w[3]);
        if (g13 != 1 || g24 != 1)
            throw domain_error("special adjunction case: non-adjacent weights share a factor "
                               "(gcd(w1,w3) = " + g13.get_str() + ", gcd(w2,w4) = " +
                               g24.get_str() + ")");
    }
    BigInt sum = 0, prod = 1;
    for (const BigInt& wi : ws.w) { sum += wi; prod *= wi; }
    BigInt deg = ws.d - sum;
    BigInt num = 1;
    for (std::size_t i = 0; i + 2 < n; ++i) num *= deg;  // deg^(n-2)
    return make_rational(num * ws.d, prod);
}

namespace {

void validate_mo_inputs(const std::vector<BigInt>& w, const BigInt& d) {
    if (w.empty() || w.size() > 30)
        throw domain_error("Milnor-Orlik rank: need 1 <= n <= 30 weights");
    if (d < 1) throw domain_error("Milnor-Orlik rank: degree must be >= 1");
    for (const BigInt& wi : w)
        if (wi < 1) throw domain_error("Milnor-Orlik rank: weights must be >= 1");
}

// Signed term of one subset mask.
Rational mo_term(const std::vector<BigInt>& w, const std::vector<BigInt>& u,
                 const BigInt& d, std::uint32_t mask) {
    const std::size_t n = w.size();
    BigInt num = 1, den = 1, l = 1;
    int size = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1u) {
            num *= d;       // prod of d/w_i kept as d^|I| / prod w_i
            den *= w[i];
            l = lcm(l, u[i]);
            ++size;
        }
    Rational t = make_rational(num, den * l);
    if ((n - static_cast<std::size_t>(size)) % 2 != 0) t = -t;
    return t;
}

BigInt mo_finish(const Rational& sum) {
    if (!is_integral(sum))
        throw domain_error("Milnor-Orlik sum is not an integer (" + rational_string(sum) +
                           "): weights and degree do not come from a weight system");
    if (sum < 0)
        throw domain_error("Milnor-Orlik sum is negative (" + rational_string(sum) +
                           "): weights and degree do not come from a weight system");
    return sum.get_num();
}

std::vector<BigInt> mo_orders(const std::vector<BigInt>& w, const BigInt& d) {
    std::vector<BigInt> u;
    u.reserve(w.size());
    for (const BigInt& wi : w) u.push_back(d / gcd(d, wi));
    return u;
}

}  // namespace

BigInt milnor_orlik_rank_serial(const std::vector<BigInt>& w, const BigInt& d) {
    validate_mo_inputs(w, d);
    const auto u = mo_orders(w, d);
    const std::uint64_t top = std::uint64_t(1) << w.size();
    Rational sum = 0;
    for (std::uint64_t mask = 0; mask < top; ++mask)
        sum += mo_term(w, u, d, static_cast<std::uint32_t>(mask));
    return mo_finish(sum);
}

BigInt milnor_orlik_rank(const std::vector<BigInt>& w, const BigInt& d, int jobs) {
    validate_mo_inputs(w, d);
    const auto u = mo_orders(w, d);
    const std::int64_t top = std::int64_t(1) << w.size();
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
    std::vector<Rational> partial(static_cast<std::size_t>(threads), Rational(0));
#pragma omp parallel num_threads(threads)
    {
        const std::size_t tid = static_cast<std::size_t>(omp_get_thread_num());
        Rational local = 0;
#pragma omp for schedule(static)
        for (std::int64_t mask = 0; mask < top; ++mask)
            local += mo_term(w, u, d, static_cast<std::uint32_t>(mask));
        partial[tid] = local;
    }
    // merge in thread order; the sum is exact, so any order gives the same value
    Rational sum = 0;
    for (const Rational& p : partial) sum += p;
    return mo_finish(sum);
}

BigInt middle_rank_closed_form(const WeightSystem& ws) {
    return ws.wstar + (ws.size() % 2 == 0 ? 1 : -1);
}

std::vector<int> homology_profile(const WeightSystem& ws) {
    if (ws.wstar != 1)
        throw domain_error("homology profile requires wstar == 1 (got wstar = " +
                           ws.wstar.get_str() + ")");
    const std::size_t n = ws.size();
    std::vector<int> b(2 * (n - 2) + 1, 0);
    for (std::size_t j = 0; j < b.size(); j += 2) b[j] = 1;
    if (n % 2 == 0) b[n - 2] = 3;  // CP cell + primitive middle rank (-1)^n + 1 = 2
    return b;
}

ContractedSurfaceData contracted_surface(const WeightSystem& ws) {
    if (ws.size() != 4) throw domain_error("contracted surface needs n == 4");
    require_positive_weights(ws);
    if (ws.wstar != 1)
        throw domain_error("contracted surface requires wstar == 1 (got wstar = " +
                           ws.wstar.get_str() + ")");
    const BigInt &w1 = ws.w[0], &w2 = ws.w[1], &w3 = ws.w[2], &w4 = ws.w[3];
    BigInt g13 = gcd(w1, w3), g24 = gcd(w2, w4);
    if (g13 != 1 || g24 != 1)
        throw domain_error("special adjunction case: gcd(w1,w3) = " + g13.get_str() +
                           ", gcd(w2,w4) = " + g24.get_str());
    const BigInt d = ws.d;
    const BigInt deg = d - (w1 + w2 + w3 + w4);
    ContractedSurfaceData r;
    r.KC1 = make_rational(deg, w2 * w4);
    r.KC2 = make_rational(deg, w1 * w3);
    r.C1sq = make_rational(w1 + w3 - d, w2 * w4);
    r.C2sq = make_rational(w2 + w4 - d, w1 * w3);
    // adjunction on the two rational curves: K.C + C^2 = -1/w_{i+1} - 1/w_{i+3}
    if (r.KC1 + r.C1sq != -make_rational(1, w2) - make_rational(1, w4) ||
        r.KC2 + r.C2sq != -make_rational(1, w1) - make_rational(1, w3))
        throw consistency_error("adjunction check failed on the contracted curves");
    if (r.C1sq >= 0 || r.C2sq >= 0)
        throw domain_error("not contractible: C1^2 = " + rational_string(r.C1sq) +
                           ", C2^2 = " + rational_string(r.C2sq) + " (need both negative)");
    r.K_sq = make_rational(deg * deg * d, w1 * w2 * w3 * w4);
    r.K_star_sq = r.K_sq - r.KC1 * r.KC1 / r.C1sq - r.KC2 * r.KC2 / r.C2sq;
    return r;
}

}  // namespace wps
