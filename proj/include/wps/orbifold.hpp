#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wps/exact.hpp"

namespace wps {

struct OrbifoldSurfaceData {
    BigInt euler;                     // e(S)
    std::vector<BigInt> link_orders;  // |pi_1(L_s)| >= 1 per singular point
    std::optional<Rational> c1_squared;
};

// e_orb = e(S) - sum (1 - 1/|pi_1(L_s)|), exact.
Rational orbifold_euler(const OrbifoldSurfaceData& data);

// sum (1 - 1/m) over the link orders.
Rational defect_sum(const std::vector<BigInt>& orders);

struct BmyReport {
    Rational e_orb;
    Rational defect;
    std::optional<Rational> c1sq;
    Rational c1_bound;                   // 3 * e_orb
    std::optional<bool> c1_bound_holds;  // c1^2 <= 3 e_orb; absent without c1
    bool eorb_nonneg = false;            // 0 <= e_orb
    bool defect_le_3 = false;            // non-strict bound
    bool defect_lt_3 = false;            // strict variant, reported separately
};

BmyReport bmy_check(const OrbifoldSurfaceData& data);

struct DefectTuple {
    std::vector<long long> m;  // non-decreasing, entries in [2, M]
    Rational defect;
};

struct DefectEnumeration {
    std::vector<DefectTuple> tuples;
    // Length k-1 prefixes with defect <= threshold - 1: every admissible
    // extension stays under the threshold, so the family is unbounded in M.
    std::vector<DefectTuple> unbounded_prefixes;
};

// All non-decreasing tuples of each requested length with entries in [2, M],
// defect <= threshold (< when strict), pairwise coprime when requested;
// deterministic lexicographic order within each length.
DefectEnumeration enumerate_defect_tuples(const std::vector<int>& lengths, long long max_m,
                                          const Rational& threshold, bool strict, bool coprime,
                                          int jobs = 0);
DefectEnumeration enumerate_defect_tuples_serial(const std::vector<int>& lengths,
                                                 long long max_m, const Rational& threshold,
                                                 bool strict, bool coprime);

struct TorsionSummand {
    BigInt p;                // prime
    std::uint64_t i = 0;     // exponent >= 1: summands (Z/p^i)^c
    std::uint64_t count = 0; // c(p^i) > 0
};

// Second Stiefel-Whitney locus indicator: 0 (w2 = 0), finite n (w2 nonzero on
// a Z/2^n torsion summand), or infinity (w2 nonzero on a free summand).
struct ILValue {
    bool infinite = false;
    std::uint64_t n = 0;  // meaningful when finite
};

struct BardenInvariants {
    std::uint64_t k = 0;  // free rank of H_2
    std::vector<TorsionSummand> torsion;
    ILValue iL;
};

// Throws domain_error unless: every p is prime, i >= 1, counts > 0, (p, i)
// pairs distinct, a finite iL = n >= 1 has a matching (2, n) summand, and an
// infinite iL has k >= 1.
void validate_barden(const BardenInvariants& inv);

struct CircleActionDecision {
    bool exists = false;
    bool cond_counts = false;   // (1) per prime, #nonzero c(p^i) <= k+1
    bool cond_il_value = false; // (2) iL in {0, 1, infinity}
    bool cond_il_free = false;  // (3) iL = infinity implies #nonzero c(2^i) <= k
    std::vector<std::string> failures;
};

CircleActionDecision circle_action_exists(const BardenInvariants& inv);

}  // namespace wps
