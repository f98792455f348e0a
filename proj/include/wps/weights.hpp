#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "wps/exact.hpp"

namespace wps {

// Cyclic exponent tuple (a_1, ..., a_n), n >= 3, a_i >= 1.
struct ExponentTuple {
    std::vector<BigInt> a;
    std::size_t size() const { return a.size(); }
};

ExponentTuple make_exponent_tuple(std::vector<BigInt> a);
ExponentTuple make_exponent_tuple(const std::vector<long long>& a);

// True iff prod a_i == (-1)^n, i.e. the linear system a_i W_i + W_{i+1} = D
// (indices cyclic) is singular.  Over positive exponents this happens only
// for all-ones tuples of even length.
bool is_degenerate(const ExponentTuple& t);

struct WeightSystem {
    ExponentTuple tuple;
    std::vector<BigInt> W;  // unreduced weights
    BigInt D = 0;           // unreduced degree, D = prod a_i + (-1)^(n-1)
    BigInt wstar = 0;       // gcd of the W_i
    std::vector<BigInt> w;  // reduced weights W_i / wstar
    BigInt d = 0;           // reduced degree D / wstar

    std::size_t size() const { return W.size(); }
};

// Solves the cyclic system a_i W_i + W_{i+1} = D with
//   W_i = sum_{j=1}^{n} (-1)^(j-1) prod_{l=i+j}^{i+n-1} a_l,
//   D   = prod a_i + (-1)^(n-1),
// then reduces by wstar = gcd(W_1, ..., W_n).  Throws domain_error on a
// degenerate tuple.
WeightSystem solve_weights(const ExponentTuple& t);

struct ReducedConditionsReport {
    BigInt wstar;
    std::vector<BigInt> gcd_W_D;        // gcd(W_i, D)
    std::vector<BigInt> gcd_W_adj;      // gcd(W_i, W_{i+1}), cyclic
    std::vector<BigInt> gcd_w_d;        // gcd(w_i, d)
    std::vector<BigInt> gcd_w_adj;      // gcd(w_i, w_{i+1}), cyclic
    bool unreduced_consistent = false;  // every gcd_W_* equals wstar
    bool reduced_ok = false;            // every gcd_w_* equals 1
    // Non-adjacent reduced pairs (i, j), 0-based, with gcd(w_i, w_j) > 1.
    std::vector<std::pair<std::size_t, std::size_t>> nonadjacent_pairs;
    std::vector<BigInt> nonadjacent_gcds;
};

ReducedConditionsReport check_reduced_conditions(const WeightSystem& ws);

// n = 4 only: gcd(W_1, D) == 1, equivalently wstar == 1 for the whole system.
bool n4_coprimality_condition(const ExponentTuple& t);

struct SurveyMode {
    bool exhaustive = true;
    std::uint64_t samples = 0;  // sampled mode only
    std::uint64_t seed = 0;     // sampled mode only
};

struct DensityStats {
    std::uint64_t total = 0;
    std::uint64_t wstar_one = 0;
    Rational fraction;  // wstar_one / total

    // reference densities quoted for comparison: the Euler product
    // prod_p (1 - 1/p^2) = 6/pi^2, the odd-n refinement, and "at least 75%"
    static constexpr double kRefEulerProduct = 0.6079271018540267;
    static constexpr double kRefOddN = 0.8;
    static constexpr double kRefQuoted = 0.75;
};

// Fraction of tuples in [lo, hi]^n with wstar == 1.  Exhaustive mode scans the
// whole box; sampled mode draws `samples` tuples from mt19937_64(seed) with
// rejection sampling, so results are reproducible bit for bit.  lo >= 2.
// jobs = 0 means use the OpenMP default thread count.
DensityStats density_survey(int n, long long lo, long long hi, const SurveyMode& mode,
                            int jobs = 0);
// Serial reference implementation (kept for testing the parallel kernel).
DensityStats density_survey_serial(int n, long long lo, long long hi, const SurveyMode& mode);

}  // namespace wps
