#pragma once

#include "wps/exact.hpp"
#include "wps/weights.hpp"

namespace wps {

// K_H = O(D - sum W_i) = O(wstar (d - sum w_i)) on the hypersurface of degree
// D in P(W_1, ..., W_n).
struct CanonicalData {
    BigInt degree;          // d - sum w_i, in reduced terms
    int degree_sign = 0;    // -1, 0, +1: negative/trivial/positive canonical
    bool ample_sufficient = false;  // min a_i >= n forces positive degree
};

CanonicalData canonical_data(const WeightSystem& ws);

// K_H^(n-2) = (d - sum w_i)^(n-2) * d / prod w_i for the reduced system.
// n == 4 requires the non-adjacent coprimality gcd(w_1,w_3) = gcd(w_2,w_4) = 1
// (otherwise the two singular axis points make plain adjunction wrong and a
// SpecialAdjunctionCase is raised).
Rational k_self_intersection(const WeightSystem& ws);

// Rank of the middle homology of the link, by the Milnor-Orlik divisor sum
//   sum_{I subset {1..n}} (-1)^(n-|I|) (prod_{i in I} d/w_i) / lcm_{i in I} u_i,
// u_i = d / gcd(d, w_i).  Throws non-integer-result domain_error when the sum
// is not integral (the inputs were not a genuine weight/degree pair).
BigInt milnor_orlik_rank(const std::vector<BigInt>& w, const BigInt& d, int jobs = 0);
BigInt milnor_orlik_rank_serial(const std::vector<BigInt>& w, const BigInt& d);

// Closed form (-1)^n + wstar for the same rank; the two routes are compared
// in tests and in the surface pipeline, never collapsed into one.
BigInt middle_rank_closed_form(const WeightSystem& ws);

// Betti numbers b_0 .. b_{2(n-2)} of the hypersurface when wstar == 1: the
// rational homology of CP^(n-2) except the middle Betti number is 3 for even
// n.  Throws requires-wstar-one domain_error otherwise.
std::vector<int> homology_profile(const WeightSystem& ws);

// n == 4 contracted surface S -> S*: S contains two rational curves
// C_1 = (x_1 = x_3 = 0), C_2 = (x_2 = x_4 = 0); when both have negative
// self-intersection they contract, and K_{S*}^2 picks up the correction
// -(K C_i)^2 / C_i^2 from each.
struct ContractedSurfaceData {
    Rational KC1, KC2;      // K . C_i
    Rational C1sq, C2sq;    // C_i^2
    Rational K_sq;          // K_S^2 of the quasi-smooth surface
    Rational K_star_sq;     // K_{S*}^2 after contracting C_1 and C_2
};

ContractedSurfaceData contracted_surface(const WeightSystem& ws);

}  // namespace wps
