#include "wps/orbifold.hpp"

#include <omp.h>

#include <algorithm>
#include <map>
#include <numeric>

namespace wps {

Rational defect_sum(const std::vector<BigInt>& orders) {
    Rational s = 0;
    for (const BigInt& m : orders) {
        if (m < 1) throw domain_error("link orders must be >= 1");
        s += 1 - make_rational(1, m);
    }
    return s;
}

Rational orbifold_euler(const OrbifoldSurfaceData& data) {
    return Rational(data.euler) - defect_sum(data.link_orders);
}

BmyReport bmy_check(const OrbifoldSurfaceData& data) {
    BmyReport r;
    r.e_orb = orbifold_euler(data);
    r.defect = defect_sum(data.link_orders);
    r.c1_bound = 3 * r.e_orb;
    r.c1sq = data.c1_squared;
    if (data.c1_squared) r.c1_bound_holds = *data.c1_squared <= r.c1_bound;
    r.eorb_nonneg = r.e_orb >= 0;
    r.defect_le_3 = r.defect <= 3;
    r.defect_lt_3 = r.defect < 3;  // the conjectural strict variant, kept apart
    return r;
}

namespace {

struct EnumLimits {
    long long max_m;
    Rational threshold;
    bool strict;
    bool coprime;
};

bool within(const Rational& defect, const EnumLimits& lim) {
    return lim.strict ? defect < lim.threshold : defect <= lim.threshold;
}

// Depth-first extension of `cur` to length k, entries non-decreasing and
// bounded by max_m.  Entries at or beyond the current slot contribute at
// least 1 - 1/m each (the increment grows with m), so once the cheapest
// completion overshoots the threshold every larger m does too: break.
void extend(std::vector<long long>& cur, const Rational& defect, std::size_t k,
            const EnumLimits& lim, std::vector<DefectTuple>& out) {
    if (cur.size() == k) {
        out.push_back({cur, defect});
        return;
    }
    const long long start = cur.empty() ? 2 : cur.back();
    const long remaining = static_cast<long>(k - cur.size() - 1);
    for (long long m = start; m <= lim.max_m; ++m) {
        const Rational inc = 1 - make_rational(1, BigInt(static_cast<long>(m)));
        const Rational next = defect + inc;
        if (!within(next + inc * remaining, lim)) break;
        if (lim.coprime) {
            bool ok = true;
            for (long long prev : cur)
                if (std::gcd(prev, m) != 1) { ok = false; break; }
            if (!ok) continue;
        }
        cur.push_back(m);
        extend(cur, next, k, lim, out);
        cur.pop_back();
    }
}

void validate_enum(const std::vector<int>& lengths, long long max_m) {
    if (max_m < 2) throw domain_error("tuple enumeration: M must be >= 2");
    if (lengths.empty()) throw domain_error("tuple enumeration: no lengths requested");
    for (int k : lengths)
        if (k < 1 || k > 64) throw domain_error("tuple enumeration: lengths must be in [1, 64]");
}

// Prefixes of length k-1 with defect <= threshold - 1: every admissible
// extension (coprime or not) adds less than 1, landing strictly under the
// threshold, so these denote unbounded families.
std::vector<DefectTuple> prefix_report(int k, const EnumLimits& lim) {
    std::vector<DefectTuple> out;
    if (k < 1) return out;
    EnumLimits pl = lim;
    pl.threshold = lim.threshold - 1;
    pl.strict = false;
    std::vector<long long> cur;
    if (k == 1) {
        if (within(Rational(0), pl)) out.push_back({{}, Rational(0)});
        return out;
    }
    extend(cur, Rational(0), static_cast<std::size_t>(k - 1), pl, out);
    return out;
}

std::vector<int> sorted_unique(std::vector<int> lengths) {
    std::sort(lengths.begin(), lengths.end());
    lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
    return lengths;
}

}  // namespace

DefectEnumeration enumerate_defect_tuples_serial(const std::vector<int>& lengths,
                                                 long long max_m, const Rational& threshold,
                                                 bool strict, bool coprime) {
    validate_enum(lengths, max_m);
    const EnumLimits lim{max_m, threshold, strict, coprime};
    DefectEnumeration res;
    for (int k : sorted_unique(lengths)) {
        std::vector<long long> cur;
        extend(cur, Rational(0), static_cast<std::size_t>(k), lim, res.tuples);
        auto pre = prefix_report(k, lim);
        res.unbounded_prefixes.insert(res.unbounded_prefixes.end(), pre.begin(), pre.end());
    }
    return res;
}

DefectEnumeration enumerate_defect_tuples(const std::vector<int>& lengths, long long max_m,
                                          const Rational& threshold, bool strict, bool coprime,
                                          int jobs) {
    validate_enum(lengths, max_m);
    const EnumLimits lim{max_m, threshold, strict, coprime};
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
    DefectEnumeration res;
    for (int k : sorted_unique(lengths)) {
        // partition on the first entry; buckets are concatenated in order, so
        // the output is identical for every thread count
        const std::size_t slots = static_cast<std::size_t>(max_m - 1);
        std::vector<std::vector<DefectTuple>> buckets(slots);
        if (k >= 1) {
#pragma omp parallel for schedule(dynamic) num_threads(threads)
            for (long long first = 2; first <= max_m; ++first) {
                const Rational d0 = 1 - make_rational(1, BigInt(static_cast<long>(first)));
                if (!within(d0 * static_cast<long>(k), lim)) continue;
                std::vector<long long> cur{first};
                extend(cur, d0, static_cast<std::size_t>(k), lim,
                       buckets[static_cast<std::size_t>(first - 2)]);
            }
        }
        for (auto& b : buckets)
            res.tuples.insert(res.tuples.end(), b.begin(), b.end());
        auto pre = prefix_report(k, lim);
        res.unbounded_prefixes.insert(res.unbounded_prefixes.end(), pre.begin(), pre.end());
    }
    return res;
}

void validate_barden(const BardenInvariants& inv) {
    std::map<std::pair<std::string, std::uint64_t>, bool> seen;
    bool has_2_il = false;
    for (const auto& t : inv.torsion) {
        if (!is_probable_prime(t.p))
            throw domain_error("Barden invariants: " + t.p.get_str() + " is not prime");
        if (t.i < 1) throw domain_error("Barden invariants: exponents must be >= 1");
        if (t.count < 1) throw domain_error("Barden invariants: counts must be >= 1");
        if (!seen.emplace(std::make_pair(t.p.get_str(), t.i), true).second)
            throw domain_error("Barden invariants: repeated (p, i) summand");
        if (t.p == 2 && !inv.iL.infinite && t.i == inv.iL.n) has_2_il = true;
    }
    if (!inv.iL.infinite && inv.iL.n >= 1 && !has_2_il)
        throw domain_error("Barden invariants: iL = " + std::to_string(inv.iL.n) +
                           " needs a Z/2^iL torsion summand");
    if (inv.iL.infinite && inv.k < 1)
        throw domain_error("Barden invariants: iL = infinity needs free rank k >= 1");
}

CircleActionDecision circle_action_exists(const BardenInvariants& inv) {
    validate_barden(inv);
    CircleActionDecision d;
    std::map<std::string, std::uint64_t> distinct_i;  // prime -> #distinct exponents
    std::uint64_t two_summands = 0;
    for (const auto& t : inv.torsion) {
        ++distinct_i[t.p.get_str()];  // (p, i) pairs are distinct by validation
        if (t.p == 2) ++two_summands;
    }
    d.cond_counts = true;
    for (const auto& [p, cnt] : distinct_i)
        if (cnt > inv.k + 1) {
            d.cond_counts = false;
            d.failures.push_back("condition (1): prime " + p + " has " + std::to_string(cnt) +
                                 " nonzero c(p^i) > k+1 = " + std::to_string(inv.k + 1));
        }
    d.cond_il_value = inv.iL.infinite || inv.iL.n <= 1;
    if (!d.cond_il_value)
        d.failures.push_back("condition (2): iL = " + std::to_string(inv.iL.n) +
                             " not in {0, 1, infinity}");
    d.cond_il_free = !inv.iL.infinite || two_summands <= inv.k;
    if (!d.cond_il_free)
        d.failures.push_back("condition (3): iL = infinity with " +
                             std::to_string(two_summands) + " nonzero c(2^i) > k = " +
                             std::to_string(inv.k));
    d.exists = d.cond_counts && d.cond_il_value && d.cond_il_free;
    return d;
}

}  // namespace wps
