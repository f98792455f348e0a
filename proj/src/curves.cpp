#include "wps/curves.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>

namespace wps {

BigInt genus_n3(const WeightSystem& ws) {
    if (ws.size() != 3) throw domain_error("genus formula needs n == 3");
    if (ws.wstar % 2 == 0)
        throw domain_error("non-integral genus: wstar = " + ws.wstar.get_str() +
                           " is even (not a genuine n = 3 system)");
    return (ws.wstar - 1) / 2;
}

BigInt kodaira_degree_n3(const ExponentTuple& t) {
    if (t.size() != 3) throw domain_error("Kodaira degree needs n == 3");
    return (t.a[0] - 1) * (t.a[1] - 1) * (t.a[2] - 1) - 1;
}

Rational adjunction_value(const BigInt& genus, const std::vector<BigInt>& orders) {
    if (genus < 0) throw domain_error("adjunction value: genus must be >= 0");
    Rational v = 2 * Rational(genus) - 2;
    for (const BigInt& m : orders) {
        if (m < 1) throw domain_error("adjunction value: orders must be >= 1");
        v += 1 - make_rational(1, m);
    }
    return v;
}

namespace {

std::vector<BigInt> divisors_sorted(const BigInt& n) {
    std::vector<BigInt> divs{1};
    for (const auto& [p, e] : factorize(n)) {
        const std::size_t sz = divs.size();
        BigInt pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::array<BigInt, 3> cusp_weights(const BigInt& a, const BigInt& b, const BigInt& c) {
    return {b * c - c + 1, c * a - a + 1, a * b - b + 1};
}

}  // namespace

CurveClass classify_qsrc(const std::array<BigInt, 3>& weights, const BigInt& d) {
    for (const BigInt& w : weights)
        if (w < 1) throw domain_error("ill-formed weights: entries must be >= 1");
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (gcd(weights[static_cast<std::size_t>(i)],
                    weights[static_cast<std::size_t>(j)]) != 1)
                throw domain_error("ill-formed weights: not pairwise coprime");
    if (d < 1) throw domain_error("curve degree must be >= 1");

    CurveClass r;
    for (std::size_t i = 0; i < 3; ++i)
        if (d == weights[i]) {
            r.kind = CurveClass::coordinate_line;
            r.axis = i;
            return r;
        }
    // Cusp family next: its degenerate corners (some exponent = 1) can also
    // satisfy the conic predicate, and the cusp tag must win those overlaps.
    if (d >= 2) {
        // invert (u,v,w) = cyclic (bc-c+1, ca-a+1, ab-b+1), d = abc + 1 by
        // enumerating ordered factorizations abc = d - 1
        for (const BigInt& a : divisors_sorted(d - 1)) {
            const BigInt rest = (d - 1) / a;
            for (const BigInt& b : divisors_sorted(rest)) {
                const BigInt c = rest / b;
                const auto t = cusp_weights(a, b, c);
                const std::array<std::array<BigInt, 3>, 3> rots{
                    {{a, b, c}, {b, c, a}, {c, a, b}}};
                for (std::size_t k = 0; k < 3; ++k) {
                    // rotating (a,b,c) rotates the weight triple the same way,
                    // so return the labeling whose weights match in order
                    const std::array<BigInt, 3> tk = {t[k], t[(k + 1) % 3], t[(k + 2) % 3]};
                    if (tk == weights) {
                        r.kind = CurveClass::cyclic_cusp;
                        r.abc = rots[k];
                        return r;
                    }
                }
            }
        }
    }
    const std::size_t pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (const auto& p : pairs) {
        const std::size_t k = 3 - p[0] - p[1];
        if (d == weights[p[0]] + weights[p[1]] && d % weights[k] == 0) {
            r.kind = CurveClass::conic_type;
            r.pair = {p[0], p[1]};
            return r;
        }
    }
    r.kind = CurveClass::unknown;
    return r;
}

namespace {

void validate_bound(long long bound) {
    if (bound < 2) throw domain_error("excluded family search: bound must be >= 2");
    if (bound > 2000000) throw domain_error("excluded family search: bound too large");
}

// All solutions with this fixed u; products fit __int128 for bound <= 2e6.
void scan_u(long long u, long long bound, std::vector<std::array<long long, 4>>& out,
            std::uint64_t& searched) {
    using i128 = __int128;
    for (long long v = 1; v <= bound; ++v) {
        if (std::gcd(u, v) != 1) continue;
        for (long long w = 1; w < u && w <= bound; ++w)
            for (long long m = 1; m <= bound; ++m) {
                ++searched;
                if (i128(m * u + 1) * i128(m * v + 1) == i128(m + 1) * i128(w))
                    out.push_back({u, v, w, m});
            }
    }
}

}  // namespace

ExcludedFamilyResult verify_excluded_family_serial(long long bound) {
    validate_bound(bound);
    ExcludedFamilyResult r;
    for (long long u = 2; u <= bound; ++u) scan_u(u, bound, r.solutions, r.searched);
    return r;
}

ExcludedFamilyResult verify_excluded_family(long long bound, int jobs) {
    validate_bound(bound);
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
    const std::size_t slots = static_cast<std::size_t>(bound - 1);
    std::vector<std::vector<std::array<long long, 4>>> buckets(slots);
    std::uint64_t searched = 0;
#pragma omp parallel for schedule(dynamic) num_threads(threads) reduction(+ : searched)
    for (long long u = 2; u <= bound; ++u)
        scan_u(u, bound, buckets[static_cast<std::size_t>(u - 2)], searched);
    ExcludedFamilyResult r;
    r.searched = searched;
    for (auto& b : buckets)  // concatenate in u order: deterministic output
        r.solutions.insert(r.solutions.end(), b.begin(), b.end());
    return r;
}

}  // namespace wps
