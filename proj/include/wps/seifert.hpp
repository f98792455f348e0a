#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "wps/exact.hpp"

namespace wps {

// Seifert fibration over S^2 with pairwise-coprime multiplicities; the
// homology-sphere constructor enforces d_i >= 2 and pairwise coprimality.
struct SeifertData {
    std::vector<BigInt> multiplicities;
    std::optional<Rational> ff;  // self-intersection of the zero section
};

SeifertData make_homology_sphere_data(std::vector<BigInt> multiplicities,
                                      std::optional<Rational> ff = std::nullopt);

// |H1| = |FF| * prod d_i.  Multiplicity-1 entries are legal (regular fibers).
// Throws: not-coprime, FF = 0, or FF * prod d_i not an integer.
BigInt seifert_h1_order(const std::vector<BigInt>& multiplicities, const Rational& ff);

// L(p,q), stored with q reduced mod p into [1, p-1].
struct LensSpace {
    BigInt p, q;
    bool operator==(const LensSpace&) const = default;
};

LensSpace make_lens(const BigInt& p, const BigInt& q);

// Orbit of q under q -> q^{-1} mod p and q -> p - q, sorted ascending.
std::vector<BigInt> lens_orbit(const BigInt& p, const BigInt& q);

// Canonical representative: the orbit minimum.  Idempotent.
LensSpace lens_normalize(const BigInt& p, const BigInt& q);

// Lisca's list of lens spaces bounding rational homology balls:
//   (1) (n^2, na - 1)   with gcd(n, a) = 1
//   (2) (n^2, d(n - 1)) with d | n - 1, d odd
//   (3) (n^2, d(n - 1)) with d | 2n + 1
// searched over the whole move-orbit of q.
struct BallMatch {
    int family = 0;     // 1, 2, 3
    BigInt n;
    BigInt witness;     // a for family 1, d for families 2 and 3
    BigInt matched_q;   // orbit element realizing the form
};

struct BallMembership {
    bool in_list = false;
    BallMatch primary;               // first hit: families in order, then orbit
                                     // elements with the input q first
    std::vector<BallMatch> matches;  // every (family, witness, orbit q) hit
    std::string reason;              // set when not in the list
};

BallMembership rational_ball_membership(const BigInt& p, const BigInt& q);

// Boundary lens space of a neighborhood of the degree-(a+b) rational curve
// with one cusp-like point: L((a+b)^2, (a'-b')(a+b)-1) for a Bezout pair
// a a' + b b' = 1.  The result is independent of the pair chosen.
struct ConicLens {
    LensSpace lens;
    BigInt a_prime, b_prime;  // the pair actually used
};

ConicLens lens_from_conic(const BigInt& a, const BigInt& b);

// Quasi-homogeneous cusp x y^a + y z^b + z x^c: link Seifert data and Milnor
// fiber Euler characteristic, with the free Z/(abc+1) quotient.
struct MilnorQuotientFamily {
    std::array<BigInt, 3> weights;         // (bc-c+1, ca-a+1, ab-b+1)
    std::array<BigInt, 3> multiplicities;  // (ab-b+1, bc-c+1, ca-a+1)
    BigInt fiber_euler;                    // abc + 1
    BigInt group_order;                    // abc + 1
    int quotient_euler = 1;
};

MilnorQuotientFamily milnor_quotient_family(const BigInt& a, const BigInt& b, const BigInt& c);

// Wahl's family of surface singularities with multiplicities (3,3,3,m).
struct WahlFamily {
    BigInt u, m, n, r, a;
    BigInt group_order;     // n m
    BigInt milnor_number;   // a^3
    BigInt fiber_euler;     // 1 + a^3
    std::array<BigInt, 4> multiplicities;  // (3, 3, 3, m)
    Rational defect;        // 3 (1 - 1/3) + (1 - 1/m)
};

// Verifies 1 + a^3 = n m and r^3 == 1 (mod m) exactly; these are theorems,
// so failure raises consistency_error.
WahlFamily wahl_family(const BigInt& u);

// H1 of the smooth part from the star-shaped presentation
// <a_1..a_m | a_i^{r_i}, a_1...a_m>: SNF of the (m+1) x m relation matrix.
SmithNormalForm star_presentation_h1(const std::vector<BigInt>& r);

// Cokernel is trivial iff every invariant factor is 1.
bool star_h1_trivial(const SmithNormalForm& snf);

}  // namespace wps
