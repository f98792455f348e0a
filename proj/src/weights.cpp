#include "wps/weights.hpp"

#include <omp.h>

#include <random>

namespace wps {

ExponentTuple make_exponent_tuple(std::vector<BigInt> a) {
    if (a.size() < 3) throw domain_error("exponent tuple needs n >= 3 entries");
    for (const BigInt& x : a)
        if (x < 1) throw domain_error("exponents must be >= 1");
    return ExponentTuple{std::move(a)};
}

namespace {
// mpz_class has no long long constructor; LP64 long is wide enough here
inline BigInt to_big(long long v) { return BigInt(static_cast<long>(v)); }
}  // namespace

ExponentTuple make_exponent_tuple(const std::vector<long long>& a) {
    std::vector<BigInt> b;
    b.reserve(a.size());
    for (long long x : a) b.push_back(to_big(x));
    return make_exponent_tuple(std::move(b));
}

bool is_degenerate(const ExponentTuple& t) {
    BigInt prod = 1;
    for (const BigInt& x : t.a) prod *= x;
    const bool even = t.size() % 2 == 0;
    return prod == (even ? 1 : -1);
}

namespace {

// Weights of the cyclic system for given exponents; no validation, no
// reduction.  Shared by solve_weights and the survey kernels.
void raw_weights(const std::vector<BigInt>& a, std::vector<BigInt>& W, BigInt& D) {
    const std::size_t n = a.size();
    W.assign(n, 0);
    // W_i = sum_j (-1)^(j-1) prod_{l=i+j}^{i+n-1} a_l.  Evaluate right to
    // left: with P_j = prod_{l=i+j}^{i+n-1} a_l and T_j the alternating tail
    // starting at term j, P_j = a_{i+j} P_{j+1} and T_j = P_j - T_{j+1}.
    for (std::size_t i = 0; i < n; ++i) {
        BigInt P = 1, T = 1;  // P_n = T_n = 1 (empty product)
        for (std::size_t j = n - 1; j >= 1; --j) {
            P *= a[(i + j) % n];
            T = P - T;
        }
        W[i] = T;
    }
    BigInt prod = 1;
    for (const BigInt& x : a) prod *= x;
    D = prod + ((n % 2 == 0) ? BigInt(-1) : BigInt(1));
}

}  // namespace

WeightSystem solve_weights(const ExponentTuple& t) {
    if (is_degenerate(t)) throw domain_error("degenerate exponent tuple: prod a_i == (-1)^n");
    WeightSystem ws;
    ws.tuple = t;
    raw_weights(t.a, ws.W, ws.D);
    BigInt g = 0;
    for (const BigInt& Wi : ws.W) g = gcd(g, Wi);
    ws.wstar = g;
    if (ws.wstar == 0 || ws.D % ws.wstar != 0)
        throw consistency_error("wstar does not divide D");
    ws.d = ws.D / ws.wstar;
    ws.w.reserve(ws.W.size());
    for (const BigInt& Wi : ws.W) ws.w.push_back(Wi / ws.wstar);
    // cross-check the defining relations a_i w_i + w_{i+1} = d
    const std::size_t n = ws.size();
    for (std::size_t i = 0; i < n; ++i)
        if (t.a[i] * ws.w[i] + ws.w[(i + 1) % n] != ws.d)
            throw consistency_error("weight relations violated");
    return ws;
}

ReducedConditionsReport check_reduced_conditions(const WeightSystem& ws) {
    ReducedConditionsReport r;
    const std::size_t n = ws.size();
    r.wstar = ws.wstar;
    r.unreduced_consistent = true;
    r.reduced_ok = true;
    for (std::size_t i = 0; i < n; ++i) {
        r.gcd_W_D.push_back(gcd(ws.W[i], ws.D));
        r.gcd_W_adj.push_back(gcd(ws.W[i], ws.W[(i + 1) % n]));
        r.gcd_w_d.push_back(gcd(ws.w[i], ws.d));
        r.gcd_w_adj.push_back(gcd(ws.w[i], ws.w[(i + 1) % n]));
        if (r.gcd_W_D.back() != ws.wstar || r.gcd_W_adj.back() != ws.wstar)
            r.unreduced_consistent = false;
        if (r.gcd_w_d.back() != 1 || r.gcd_w_adj.back() != 1) r.reduced_ok = false;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (j == i + 1 || (i == 0 && j == n - 1)) continue;  // adjacent (cyclic)
            BigInt g = gcd(ws.w[i], ws.w[j]);
            if (g > 1) {
                r.nonadjacent_pairs.emplace_back(i, j);
                r.nonadjacent_gcds.push_back(g);
            }
        }
    return r;
}

bool n4_coprimality_condition(const ExponentTuple& t) {
    if (t.size() != 4) throw domain_error("n4 coprimality condition needs n == 4");
    const WeightSystem ws = solve_weights(t);
    return gcd(ws.W[0], ws.D) == 1;
}

namespace {

bool wstar_is_one(const std::vector<BigInt>& a) {
    std::vector<BigInt> W;
    BigInt D;
    raw_weights(a, W, D);
    BigInt g = 0;
    for (const BigInt& Wi : W) {
        g = gcd(g, Wi);
        if (g == 1) return true;
    }
    return g == 1;
}

void validate_survey(int n, long long lo, long long hi, const SurveyMode& mode) {
    if (n < 3) throw domain_error("survey: n must be >= 3");
    if (lo < 2) throw domain_error("survey: lo must be >= 2 (unit exponents excluded)");
    if (hi < lo) throw domain_error("survey: empty exponent range");
    if (!mode.exhaustive && mode.samples == 0)
        throw domain_error("survey: sampled mode needs samples >= 1");
}

// Uniform draw from [0, range) by rejection; mt19937_64 is specified by the
// standard, so sampled surveys replay identically everywhere.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t range) {
    const std::uint64_t lim = (UINT64_MAX / range) * range;
    for (;;) {
        std::uint64_t x = rng();
        if (x < lim) return x % range;
    }
}

std::vector<std::vector<BigInt>> sample_tuples(int n, long long lo, long long hi,
                                               const SurveyMode& mode) {
    std::mt19937_64 rng(mode.seed);
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo + 1);
    std::vector<std::vector<BigInt>> tuples(mode.samples);
    for (auto& t : tuples) {
        t.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            t.push_back(to_big(lo + static_cast<long long>(draw(rng, range))));
    }
    return tuples;
}

// Number of tuples in the box; throws when it does not fit in 64 bits (an
// exhaustive scan of that size would never finish anyway).
std::uint64_t box_size(int n, long long lo, long long hi) {
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo + 1);
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) {
        if (total > UINT64_MAX / range) throw domain_error("survey: box too large");
        total *= range;
    }
    return total;
}

// Scans the sub-box with fixed first coordinate `first`; returns the number
// of tuples with wstar == 1.
std::uint64_t scan_slice(int n, long long lo, long long hi, long long first) {
    std::vector<long long> c(static_cast<std::size_t>(n), lo);
    c[0] = first;
    std::vector<BigInt> a;
    a.reserve(c.size());
    for (long long x : c) a.push_back(to_big(x));
    std::uint64_t ones = 0;
    for (;;) {
        if (wstar_is_one(a)) ++ones;
        int i = n - 1;
        while (i >= 1 && c[static_cast<std::size_t>(i)] == hi) {
            c[static_cast<std::size_t>(i)] = lo;
            a[static_cast<std::size_t>(i)] = to_big(lo);
            --i;
        }
        if (i == 0) break;
        ++c[static_cast<std::size_t>(i)];
        a[static_cast<std::size_t>(i)] = to_big(c[static_cast<std::size_t>(i)]);
    }
    return ones;
}

}  // namespace

DensityStats density_survey_serial(int n, long long lo, long long hi, const SurveyMode& mode) {
    validate_survey(n, lo, hi, mode);
    DensityStats s;
    if (mode.exhaustive) {
        s.total = box_size(n, lo, hi);
        for (long long first = lo; first <= hi; ++first)
            s.wstar_one += scan_slice(n, lo, hi, first);
    } else {
        s.total = mode.samples;
        for (const auto& t : sample_tuples(n, lo, hi, mode))
            if (wstar_is_one(t)) ++s.wstar_one;
    }
    s.fraction = make_rational(BigInt(s.wstar_one), BigInt(s.total));
    return s;
}

DensityStats density_survey(int n, long long lo, long long hi, const SurveyMode& mode,
                            int jobs) {
    validate_survey(n, lo, hi, mode);
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
    DensityStats s;
    std::uint64_t ones = 0;
    if (mode.exhaustive) {
        s.total = box_size(n, lo, hi);
#pragma omp parallel for schedule(dynamic) num_threads(threads) reduction(+ : ones)
        for (long long first = lo; first <= hi; ++first)
            ones += scan_slice(n, lo, hi, first);
    } else {
        s.total = mode.samples;
        const auto tuples = sample_tuples(n, lo, hi, mode);
        const std::int64_t k = static_cast<std::int64_t>(tuples.size());
#pragma omp parallel for schedule(static) num_threads(threads) reduction(+ : ones)
        for (std::int64_t i = 0; i < k; ++i)
            if (wstar_is_one(tuples[static_cast<std::size_t>(i)])) ++ones;
    }
    s.wstar_one = ones;
    s.fraction = make_rational(BigInt(s.wstar_one), BigInt(s.total));
    return s;
}

}  // namespace wps
