#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "wps/weights.hpp"

using wps::BigInt;
using wps::ExponentTuple;
using wps::WeightSystem;

namespace {

ExponentTuple mk(std::vector<long long> a) { return wps::make_exponent_tuple(a); }

WeightSystem solve(std::vector<long long> a) { return wps::solve_weights(mk(std::move(a))); }

BigInt gcd_vec(const std::vector<BigInt>& v) {
    BigInt g = 0;
    for (const auto& x : v) g = wps::gcd(g, x);
    return g;
}

}  // namespace

TEST_CASE("worked examples") {
    auto ws = solve({2, 3, 5});
    CHECK(ws.W == std::vector<BigInt>{11, 9, 4});
    CHECK(ws.D == 31);
    CHECK(ws.wstar == 1);
    CHECK(ws.d == 31);

    ws = solve({2, 2, 2});
    CHECK(ws.W == std::vector<BigInt>{3, 3, 3});
    CHECK(ws.D == 9);
    CHECK(ws.wstar == 3);
    CHECK(ws.w == std::vector<BigInt>{1, 1, 1});
    CHECK(ws.d == 3);

    ws = solve({3, 3, 3});
    CHECK(ws.W == std::vector<BigInt>{7, 7, 7});
    CHECK(ws.wstar == 7);
    CHECK(ws.D == 28);

    ws = solve({2, 4, 6, 8});
    CHECK(ws.W == std::vector<BigInt>{151, 81, 59, 29});
    CHECK(ws.D == 383);
    CHECK(ws.wstar == 1);

    ws = solve({4, 5, 6, 7});
    CHECK(ws.W == std::vector<BigInt>{174, 143, 124, 95});
    CHECK(ws.D == 839);
    CHECK(ws.wstar == 1);

    // equal exponents t: W_i = (t^n - (-1)^n) / (t + 1)
    ws = solve({5, 5, 5, 5});
    CHECK(ws.W == std::vector<BigInt>{104, 104, 104, 104});
    CHECK(ws.D == 624);
    CHECK(ws.wstar == 104);

    // n = 3 all-ones: W = (1,1,1), D = 2
    ws = solve({1, 1, 1});
    CHECK(ws.W == std::vector<BigInt>{1, 1, 1});
    CHECK(ws.D == 2);
}

TEST_CASE("degenerate and invalid tuples") {
    CHECK(wps::is_degenerate(mk({1, 1, 1, 1})));
    CHECK_FALSE(wps::is_degenerate(mk({1, 1, 1})));
    CHECK_THROWS_AS(solve({1, 1, 1, 1}), wps::domain_error);
    CHECK_THROWS_AS(solve({1, 1, 1, 1, 1, 1}), wps::domain_error);
    CHECK_THROWS_AS(mk({2, 3}), wps::domain_error);
    CHECK_THROWS_AS(mk({0, 3, 5}), wps::domain_error);
    CHECK_THROWS_AS(mk({2, -3, 5}), wps::domain_error);
}

TEST_CASE("defining relations and gcd laws on random tuples") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> len(3, 8);
    std::uniform_int_distribution<long long> coef(1, 50);
    for (int trial = 0; trial < 2000; ++trial) {
        std::vector<long long> a(static_cast<std::size_t>(len(rng)));
        for (auto& x : a) x = coef(rng);
        auto t = wps::make_exponent_tuple(a);
        if (wps::is_degenerate(t)) continue;
        auto ws = wps::solve_weights(t);
        const std::size_t n = ws.size();
        for (std::size_t i = 0; i < n; ++i) {
            // unreduced and reduced defining relations
            CHECK(ws.tuple.a[i] * ws.W[i] + ws.W[(i + 1) % n] == ws.D);
            CHECK(ws.tuple.a[i] * ws.w[i] + ws.w[(i + 1) % n] == ws.d);
            // wstar = gcd(W_i, D) = gcd(W_i, W_{i+1}); reduced system coprime
            CHECK(wps::gcd(ws.W[i], ws.D) == ws.wstar);
            CHECK(wps::gcd(ws.W[i], ws.W[(i + 1) % n]) == ws.wstar);
            CHECK(wps::gcd(ws.w[i], ws.d) == 1);
            CHECK(wps::gcd(ws.w[i], ws.w[(i + 1) % n]) == 1);
        }
        CHECK(gcd_vec(ws.W) == ws.wstar);
        CHECK(ws.wstar * ws.d == ws.D);

        auto rep = wps::check_reduced_conditions(ws);
        CHECK(rep.unreduced_consistent);
        CHECK(rep.reduced_ok);
        CHECK(rep.wstar == ws.wstar);
        CHECK(rep.nonadjacent_pairs.size() == rep.nonadjacent_gcds.size());
        for (const auto& g : rep.nonadjacent_gcds) CHECK(g > 1);
    }
}

TEST_CASE("D equals the circulant determinant") {
    // The system matrix (a_i on the diagonal, 1 on the cyclic superdiagonal)
    // has determinant prod a_i + (-1)^(n-1) = D.
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> len(3, 7);
    std::uniform_int_distribution<long long> coef(1, 20);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = static_cast<std::size_t>(len(rng));
        std::vector<long long> a(n);
        for (auto& x : a) x = coef(rng);
        auto t = wps::make_exponent_tuple(a);
        if (wps::is_degenerate(t)) continue;
        wps::IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m.at(i, i) = t.a[i];
            m.at(i, (i + 1) % n) = 1;
        }
        CHECK(wps::determinant(m) == wps::solve_weights(t).D);
    }
}

TEST_CASE("parity: all-odd exponents give W_i congruent to n mod 2") {
    for (long long a = 3; a <= 13; a += 2)
        for (long long b = 3; b <= 13; b += 2)
            for (long long c = 3; c <= 13; c += 2) {
                auto ws = solve({a, b, c});
                CHECK(ws.D % 2 == 0);
                for (const auto& Wi : ws.W) CHECK(Wi % 2 == 1);  // n = 3 odd
            }
    for (long long a = 3; a <= 9; a += 2)
        for (long long b = 3; b <= 9; b += 2)
            for (long long c = 3; c <= 9; c += 2)
                for (long long e = 3; e <= 9; e += 2) {
                    auto ws = solve({a, b, c, e});
                    CHECK(ws.D % 2 == 0);
                    for (const auto& Wi : ws.W) CHECK(Wi % 2 == 0);  // n = 4 even
                }
}

TEST_CASE("n4 coprimality condition") {
    CHECK(wps::n4_coprimality_condition(mk({2, 4, 6, 8})));
    CHECK(wps::n4_coprimality_condition(mk({4, 5, 6, 7})));
    CHECK_FALSE(wps::n4_coprimality_condition(mk({5, 5, 5, 5})));
    CHECK_FALSE(wps::n4_coprimality_condition(mk({2, 2, 2, 2})));
    CHECK_THROWS_AS(wps::n4_coprimality_condition(mk({2, 3, 5})),
                    wps::domain_error);
}

TEST_CASE("exhaustive density pins") {
    wps::SurveyMode ex;
    auto s = wps::density_survey(3, 2, 4, ex);
    CHECK(s.total == 27);
    CHECK(s.wstar_one == 21);
    CHECK(s.fraction == wps::make_rational(7, 9));

    s = wps::density_survey(4, 2, 13, ex);
    CHECK(s.total == 20736);
    CHECK(s.wstar_one == 17388);
    CHECK(s.fraction == wps::make_rational(161, 192));
    CHECK(s.fraction > wps::make_rational(3, 4));  // the quoted 75% bound

    // single-point box: (2,2,2,2) has wstar = 5
    s = wps::density_survey(4, 2, 2, ex);
    CHECK(s.total == 1);
    CHECK(s.wstar_one == 0);
    CHECK(s.fraction == 0);
}

TEST_CASE("sampled mode is seed-reproducible") {
    wps::SurveyMode m1{false, 4000, 12345};
    auto s1 = wps::density_survey(4, 2, 50, m1);
    auto s2 = wps::density_survey(4, 2, 50, m1);
    CHECK(s1.total == 4000);
    CHECK(s1.wstar_one == s2.wstar_one);
    CHECK(s1.fraction == s2.fraction);

    wps::SurveyMode m2{false, 4000, 54321};
    auto s3 = wps::density_survey(4, 2, 50, m2);
    CHECK(s3.total == 4000);  // different seed, same contract

    // sampled fraction should land loosely near the Euler product regime
    CHECK(s1.fraction > wps::make_rational(1, 2));
}

TEST_CASE("parallel survey matches the serial reference") {
    wps::SurveyMode ex;
    auto ref = wps::density_survey_serial(4, 2, 9, ex);
    for (int jobs : {1, 2, 3, 4}) {
        auto par = wps::density_survey(4, 2, 9, ex, jobs);
        CHECK(par.total == ref.total);
        CHECK(par.wstar_one == ref.wstar_one);
        CHECK(par.fraction == ref.fraction);
    }
    wps::SurveyMode sm{false, 2500, 99};
    auto sref = wps::density_survey_serial(3, 2, 40, sm);
    for (int jobs : {1, 2, 4}) {
        auto spar = wps::density_survey(3, 2, 40, sm, jobs);
        CHECK(spar.wstar_one == sref.wstar_one);
    }
}

TEST_CASE("survey argument validation") {
    wps::SurveyMode ex;
    CHECK_THROWS_AS(wps::density_survey(2, 2, 5, ex), wps::domain_error);
    CHECK_THROWS_AS(wps::density_survey(3, 1, 5, ex), wps::domain_error);
    CHECK_THROWS_AS(wps::density_survey(3, 6, 5, ex), wps::domain_error);
    wps::SurveyMode bad{false, 0, 1};
    CHECK_THROWS_AS(wps::density_survey(3, 2, 5, bad), wps::domain_error);
}
