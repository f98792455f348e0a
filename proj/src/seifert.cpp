#include "wps/seifert.hpp"

#include <algorithm>
#include <set>

namespace wps {

SeifertData make_homology_sphere_data(std::vector<BigInt> multiplicities,
                                      std::optional<Rational> ff) {
    for (const BigInt& d : multiplicities)
        if (d < 2) throw domain_error("homology sphere data: multiplicities must be >= 2");
    for (std::size_t i = 0; i < multiplicities.size(); ++i)
        for (std::size_t j = i + 1; j < multiplicities.size(); ++j)
            if (gcd(multiplicities[i], multiplicities[j]) != 1)
                throw domain_error("homology sphere data: multiplicities not pairwise coprime");
    return SeifertData{std::move(multiplicities), std::move(ff)};
}

BigInt seifert_h1_order(const std::vector<BigInt>& multiplicities, const Rational& ff) {
    BigInt prod = 1;
    for (const BigInt& d : multiplicities) {
        if (d < 1) throw domain_error("multiplicities must be >= 1");
        prod *= d;
    }
    for (std::size_t i = 0; i < multiplicities.size(); ++i)
        for (std::size_t j = i + 1; j < multiplicities.size(); ++j)
            if (gcd(multiplicities[i], multiplicities[j]) != 1)
                throw domain_error("multiplicities not pairwise coprime");
    if (ff == 0) throw domain_error("zero self-intersection: |H1| undefined by this formula");
    Rational h = ff * prod;
    if (!is_integral(h))
        throw domain_error("FF * prod(d_i) = " + rational_string(h) + " is not an integer");
    return abs(h.get_num());
}

LensSpace make_lens(const BigInt& p, const BigInt& q) {
    if (p < 2) throw domain_error("lens space needs p >= 2");
    BigInt r = q % p;
    if (r < 0) r += p;
    if (gcd(p, r) != 1) throw domain_error("lens space needs gcd(p, q) = 1");
    return LensSpace{p, r};  // gcd(p, q) = 1 rules out r == 0
}

std::vector<BigInt> lens_orbit(const BigInt& p, const BigInt& q) {
    const LensSpace base = make_lens(p, q);
    std::set<BigInt> seen{base.q};
    std::vector<BigInt> todo{base.q};
    while (!todo.empty()) {
        BigInt x = todo.back();
        todo.pop_back();
        for (const BigInt& y : {mod_inverse(x, p), BigInt(p - x)})
            if (seen.insert(y).second) todo.push_back(y);
    }
    return {seen.begin(), seen.end()};
}

LensSpace lens_normalize(const BigInt& p, const BigInt& q) {
    return LensSpace{p, lens_orbit(p, q).front()};
}

namespace {

// Orbit elements in witness-search order: the given q first, the rest ascending.
std::vector<BigInt> orbit_search_order(const BigInt& p, const BigInt& q) {
    const BigInt q0 = make_lens(p, q).q;
    std::vector<BigInt> orbit = lens_orbit(p, q);
    orbit.erase(std::find(orbit.begin(), orbit.end(), q0));
    orbit.insert(orbit.begin(), q0);
    return orbit;
}

}  // namespace

BallMembership rational_ball_membership(const BigInt& p, const BigInt& q) {
    make_lens(p, q);  // validates
    BallMembership out;
    BigInt n;
    if (mpz_perfect_square_p(p.get_mpz_t()) == 0) {
        out.reason = "p = " + p.get_str() + " is not a perfect square";
        return out;
    }
    mpz_sqrt(n.get_mpz_t(), p.get_mpz_t());
    const auto orbit = orbit_search_order(p, q);
    auto consider = [&](int family, const BigInt& witness, const BigInt& matched) {
        out.matches.push_back({family, n, witness, matched});
        if (!out.in_list) {
            out.in_list = true;
            out.primary = out.matches.back();
        }
    };
    // brute-force witness search, desk-scale by design
    for (const BigInt& qq : orbit)  // family (1): q = na - 1, gcd(n, a) = 1
        for (BigInt a = 1; n * a - 1 <= qq; ++a)
            if (n * a - 1 == qq && gcd(n, a) == 1) consider(1, a, qq);
    if (n >= 2) {
        for (const BigInt& qq : orbit)  // family (2): q = d(n-1), d | n-1 odd
            if (qq % (n - 1) == 0) {
                BigInt d = qq / (n - 1);
                if (d % 2 != 0 && (n - 1) % d == 0) consider(2, d, qq);
            }
        for (const BigInt& qq : orbit)  // family (3): q = d(n-1), d | 2n+1
            if (qq % (n - 1) == 0) {
                BigInt d = qq / (n - 1);
                if ((2 * n + 1) % d == 0) consider(3, d, qq);
            }
    }
    if (!out.in_list)
        out.reason = "no family matches any orbit representative";
    return out;
}

ConicLens lens_from_conic(const BigInt& a, const BigInt& b) {
    if (a < 1 || b < 1) throw domain_error("conic lens: a, b must be >= 1");
    ExtGcd e = ext_gcd(a, b);
    if (e.g != 1) throw domain_error("conic lens: gcd(a, b) must be 1");
    const BigInt &ap = e.s, &bp = e.t;  // a a' + b b' = 1
    if ((a + b) * ap - (ap - bp) * b != 1)
        throw consistency_error("conic lens: Bezout identity rearrangement failed");
    const BigInt p = (a + b) * (a + b);
    return ConicLens{make_lens(p, (ap - bp) * (a + b) - 1), ap, bp};
}

MilnorQuotientFamily milnor_quotient_family(const BigInt& a, const BigInt& b, const BigInt& c) {
    if (a < 1 || b < 1 || c < 1) throw domain_error("milnor quotient family: need a,b,c >= 1");
    MilnorQuotientFamily f;
    f.weights = {b * c - c + 1, c * a - a + 1, a * b - b + 1};
    f.multiplicities = {a * b - b + 1, b * c - c + 1, c * a - a + 1};
    f.fiber_euler = a * b * c + 1;
    f.group_order = a * b * c + 1;
    return f;
}

WahlFamily wahl_family(const BigInt& u) {
    if (u < 2) throw domain_error("Wahl family: u must be >= 2");
    WahlFamily f;
    f.u = u;
    f.m = 3 * u * u - 3 * u + 1;
    f.n = 9 * u;
    f.r = 3 * u * u - 6 * u + 2;
    f.a = 3 * u - 1;
    f.group_order = f.n * f.m;
    f.milnor_number = f.a * f.a * f.a;
    f.fiber_euler = 1 + f.milnor_number;
    f.multiplicities = {3, 3, 3, f.m};
    f.defect = Rational(2) + 1 - make_rational(1, f.m);
    if (f.fiber_euler != f.group_order)
        throw consistency_error("Wahl family: 1 + a^3 != n m");
    if ((f.r * f.r * f.r - 1) % f.m != 0)
        throw consistency_error("Wahl family: r^3 != 1 (mod m)");
    return f;
}

SmithNormalForm star_presentation_h1(const std::vector<BigInt>& r) {
    if (r.empty()) throw domain_error("star presentation: need at least one generator");
    for (const BigInt& ri : r)
        if (ri < 2) throw domain_error("star presentation: orders must be >= 2");
    const std::size_t m = r.size();
    IntMatrix rel(m + 1, m);
    for (std::size_t i = 0; i < m; ++i) rel.at(i, i) = r[i];
    for (std::size_t j = 0; j < m; ++j) rel.at(m, j) = 1;
    return smith_normal_form(std::move(rel));
}

bool star_h1_trivial(const SmithNormalForm& snf) {
    for (const BigInt& d : snf.diag)
        if (d != 1) return false;
    return true;
}

}  // namespace wps
