#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "wps/exact.hpp"
#include "wps/weights.hpp"

namespace wps {

// Genus of the n = 3 hypersurface curve: (wstar - 1) / 2.  wstar is odd for
// every genuine n = 3 system (D is odd unless all a_i are odd, and then every
// W_i is odd); an even wstar raises a non-integral-genus domain_error.
BigInt genus_n3(const WeightSystem& ws);

// Degree of the canonical class on the curve side: (a1-1)(a2-1)(a3-1) - 1.
// Negative (= -1) exactly when some a_i = 1, zero for (2,2,2), else positive.
BigInt kodaira_degree_n3(const ExponentTuple& t);

// Orbifold adjunction value 2g - 2 + sum_i (1 - 1/m_i).
Rational adjunction_value(const BigInt& genus, const std::vector<BigInt>& orders);

// Classification of quasi-smooth rational curves C of degree d in P(u,v,w),
// pairwise coprime weights.
struct CurveClass {
    enum Kind { coordinate_line, conic_type, cyclic_cusp, unknown };
    Kind kind = unknown;
    std::size_t axis = 0;              // coordinate_line: index of the vanishing coordinate
    std::array<std::size_t, 2> pair{}; // conic_type: indices with d = w_i + w_j
    std::array<BigInt, 3> abc{};       // cyclic_cusp: d = abc + 1, weights are the
                                       // cyclic products (bc-c+1, ca-a+1, ab-b+1)
};

CurveClass classify_qsrc(const std::array<BigInt, 3>& weights, const BigInt& d);

// Exhaustive search for (mu + 1)(mv + 1) = (m + 1)w with gcd(u, v) = 1,
// u >= w + 1, m >= 1, all variables in [1, bound]; the solution set is
// expected empty (such solutions would be quasi-smooth rational curves that
// the adjunction bound forbids).
struct ExcludedFamilyResult {
    std::vector<std::array<long long, 4>> solutions;  // (u, v, w, m)
    std::uint64_t searched = 0;                       // candidate tuples tested
};

ExcludedFamilyResult verify_excluded_family(long long bound, int jobs = 0);
ExcludedFamilyResult verify_excluded_family_serial(long long bound);

}  // namespace wps
