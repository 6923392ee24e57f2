#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rwl/bigmath.hpp"
#include "rwl/errors.hpp"
#include "rwl/families.hpp"
#include "rwl/oracle.hpp"

namespace rwl {

// Closed-form labeling counts, one function per family result. All of them
// are evaluated in exact integer (or certified-integral rational)
// arithmetic and are tested against the subset-DP oracle.

// Labeling count of the cone over a graph, from that graph's disrupted
// profile: sum over k of (n-k)! * values[k].
inline BigInt cone_count(const DisruptedProfile& profile) {
    const int n = profile.max_k();
    if (n < 1) throw parameter_error("cone_count: profile must cover k = 0..n with n >= 1");
    BigInt total = 0;
    for (int k = 0; k <= n; ++k) total += factorial(n - k) * profile.values[static_cast<size_t>(k)];
    return total;
}

// Length-k disrupted counts of the path: (n-k+1) * 2^(k-1); 1 at k = 0.
inline BigInt path_disrupted(long long n, long long k) {
    if (n < 1) throw parameter_error("path_disrupted: n must be >= 1");
    if (k < 0 || k > n) throw parameter_error("path_disrupted: k must be in [0, n]");
    if (k == 0) return 1;
    return BigInt(n - k + 1) * pow2(k - 1);
}

// Length-k disrupted counts of the cycle: n * 2^(k-1) for k < n and
// n * 2^(n-2) at k = n; 1 at k = 0.
inline BigInt cycle_disrupted(long long n, long long k) {
    if (n < 3) throw parameter_error("cycle_disrupted: n must be >= 3");
    if (k < 0 || k > n) throw parameter_error("cycle_disrupted: k must be in [0, n]");
    if (k == 0) return 1;
    if (k == n) return BigInt(n) * pow2(n - 2);
    return BigInt(n) * pow2(k - 1);
}

// Wheel on n+1 vertices: n * ((n-1)! - 2^(n-2) + sum_{k<n} k! * 2^(n-1-k)).
// The 2^(n-1) * sum k!/2^k term is folded into integers by distributing the
// power of two.
inline BigInt wheel_count(long long n) {
    if (n < 3) throw parameter_error("wheel_count: n must be >= 3");
    BigInt tail = 0;
    for (long long k = 0; k <= n - 1; ++k) tail += factorial(k) * pow2(n - 1 - k);
    return BigInt(n) * (factorial(n - 1) - pow2(n - 2) + tail);
}

// Fan on n+1 vertices: n! + sum_{k<n} (n-k)! * 2^k.
inline BigInt fan_count(long long n) {
    if (n < 1) throw parameter_error("fan_count: n must be >= 1");
    BigInt total = factorial(n);
    for (long long k = 0; k <= n - 1; ++k) total += factorial(n - k) * pow2(k);
    return total;
}

// Two cliques joined by a bridge:
// (m-1)! (n-1)! (binom(m+n, n+1) + binom(m+n, m+1)).
inline BigInt barbell_count(long long m, long long n) {
    if (m < 1 || n < 1) throw parameter_error("barbell_count: m and n must be >= 1");
    return factorial(m - 1) * factorial(n - 1) * (binomial(m + n, n + 1) + binomial(m + n, m + 1));
}

// Equal-sized barbell via the Catalan form 2 (n-1)! n! C_n.
inline BigInt barbell_equal_count(long long n) {
    if (n < 1) throw parameter_error("barbell_equal_count: n must be >= 1");
    return 2 * factorial(n - 1) * factorial(n) * catalan(n);
}

// Clique joined to a path: (m-1)! (binom(m+n, n+1) + sum_{k<n} binom(m+n-1, k+m)).
inline BigInt lollipop_count(long long m, long long n) {
    if (m < 1) throw parameter_error("lollipop_count: m must be >= 1");
    if (n < 0) throw parameter_error("lollipop_count: n must be >= 0");
    BigInt inner = binomial(m + n, n + 1);
    for (long long k = 0; k <= n - 1; ++k) inner += binomial(m + n - 1, k + m);
    return factorial(m - 1) * inner;
}

// Cycle joined to a path: 2^(m-2) (binom(m+n, n+1) + sum_{k<n} binom(m+n-1, k+m)).
inline BigInt tadpole_count(long long m, long long n) {
    if (m < 3) throw parameter_error("tadpole_count: m must be >= 3");
    if (n < 0) throw parameter_error("tadpole_count: n must be >= 0");
    BigInt inner = binomial(m + n, n + 1);
    for (long long k = 0; k <= n - 1; ++k) inner += binomial(m + n - 1, k + m);
    return pow2(m - 2) * inner;
}

// One-point union of m n-cycles:
// (2^(n-2))^m * multinomial((m-1)(n-1); n-1 repeated m-1 times)
//             * (binom(m(n-1), n-1) + m * binom(m(n-1), n-2)).
inline BigInt one_point_union_count(long long n, long long m) {
    if (n < 3) throw parameter_error("one_point_union_count: n must be >= 3");
    if (m < 1) throw parameter_error("one_point_union_count: m must be >= 1");
    const BigInt arcs = pow2((n - 2) * m);
    const std::vector<long long> parts(static_cast<size_t>(m - 1), n - 1);
    const BigInt interleave = multinomial((m - 1) * (n - 1), parts);
    const BigInt starts = binomial(m * (n - 1), n - 1) + BigInt(m) * binomial(m * (n - 1), n - 2);
    return arcs * interleave * starts;
}

// Friendship graph (m triangles on a common vertex): (4m-1) (2m)! / (2m-1).
// The division must be exact; a remainder would mean the formula was
// transcribed wrong.
inline BigInt friendship_count(long long m) {
    if (m < 1) throw parameter_error("friendship_count: m must be >= 1");
    return exact_div(BigInt(4 * m - 1) * factorial(2 * m), BigInt(2 * m - 1), "friendship_count");
}

// Labelings of the snake that start at an end of its spine. Recursive in
// the number of cycles: b(m,0) = 1, b(m,1) = 2^(m-2),
// b(m,n) = b(m,n-1) * (1 + sum_{j=2..t} binom(nt+1-j, m-j) 2^(t-j)), t = m-1.
inline BigInt snake_b(long long m, long long n) {
    if (m < 3) throw parameter_error("snake_b: m must be >= 3");
    if (n < 0) throw parameter_error("snake_b: n must be >= 0");
    if (n == 0) return 1;
    const long long t = m - 1;
    BigInt b = pow2(m - 2); // n = 1
    for (long long i = 2; i <= n; ++i) {
        BigInt factor = 1;
        for (long long j = 2; j <= t; ++j) factor += binomial(i * t + 1 - j, m - j) * pow2(t - j);
        b *= factor;
    }
    return b;
}

// Full snake count: three sums over the position of the start vertex.
// The first sum covers starts inside a cycle whose far arc still has
// unlabeled room (r < t-j); the second is its r = t-j boundary case; the
// third covers starts on the spine. Void index ranges contribute nothing.
inline BigInt snake_count(long long m, long long n) {
    if (m < 3) throw parameter_error("snake_count: m must be >= 3");
    if (n < 0) throw parameter_error("snake_count: n must be >= 0");
    if (n == 0) return 1;
    const long long t = m - 1;
    std::vector<BigInt> b(static_cast<size_t>(n) + 1);
    for (long long i = 0; i <= n; ++i) b[static_cast<size_t>(i)] = snake_b(m, i);

    BigInt total = 0;
    for (long long k = 0; k <= n - 1; ++k) {
        const BigInt bb = b[static_cast<size_t>(k)] * b[static_cast<size_t>(n - 1 - k)];
        for (long long j = 2; j <= t; ++j) {
            for (long long r = 0; r <= t - j - 1; ++r) {
                BigInt sum_s = 0;
                for (long long s = 0; s <= k * t; ++s) {
                    sum_s += binomial(r + s, s) *
                             multinomial(n * t - s - j - r, {k * t - s, t - j - r, (n - 1 - k) * t});
                }
                total += sum_s * pow2(t - r - 2) * bb;
            }
            BigInt sum_s = 0;
            for (long long s = 0; s <= k * t; ++s)
                sum_s += binomial(t - j + s, s) * binomial((n - 1) * t - s, k * t - s);
            total += pow2(j - 1) * sum_s * bb;
        }
    }
    for (long long k = 0; k <= n; ++k)
        total += binomial(n * t, k * t) * b[static_cast<size_t>(k)] * b[static_cast<size_t>(n - k)];
    return total;
}

// Triangular snake in closed form:
// 2^n (n-1)! (sum_{k<n} binom(2n-1,2k)/binom(n-1,k) + n sum_{k<=n} binom(2n,2k)/binom(n,k)).
// Evaluated in exact rationals; the result must come out integral.
inline BigInt snake3_count(long long n) {
    if (n < 1) throw parameter_error("snake3_count: n must be >= 1");
    BigRat s1 = 0;
    for (long long k = 0; k <= n - 1; ++k)
        s1 += BigRat(binomial(2 * n - 1, 2 * k), binomial(n - 1, k));
    BigRat s2 = 0;
    for (long long k = 0; k <= n; ++k) s2 += BigRat(binomial(2 * n, 2 * k), binomial(n, k));
    const BigRat value = BigRat(pow2(n) * factorial(n - 1)) * (s1 + BigRat(n) * s2);
    return require_integral(value, "snake3_count");
}

// Closed-form count for any family member. path/cycle/complete have no
// dedicated theorem; their counts are the standard specializations
// (2^(n-1), n 2^(n-2), n!).
inline BigInt closed_form_count(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::path:
            if (spec.n < 1) throw parameter_error("path: n must be >= 1");
            return path_disrupted(spec.n, spec.n);
        case Family::cycle:
            if (spec.n < 3) throw parameter_error("cycle: n must be >= 3");
            return cycle_disrupted(spec.n, spec.n);
        case Family::complete:
            if (spec.n < 1) throw parameter_error("complete: n must be >= 1");
            return factorial(spec.n);
        case Family::wheel: return wheel_count(spec.n);
        case Family::fan: return fan_count(spec.n);
        case Family::barbell: return barbell_count(detail::need_m(spec), spec.n);
        case Family::lollipop: return lollipop_count(detail::need_m(spec), spec.n);
        case Family::tadpole: return tadpole_count(detail::need_m(spec), spec.n);
        case Family::one_point_union: return one_point_union_count(spec.n, detail::need_m(spec));
        case Family::snake: return snake_count(detail::need_m(spec), spec.n);
    }
    throw parameter_error("closed_form_count: unknown family");
}

// Formula value, optionally confronted with the DP oracle.
struct CountReport {
    FamilySpec spec;
    BigInt formula_value;
    std::optional<BigInt> oracle_value;
    std::optional<bool> agree;
};

inline CountReport evaluate_count(const FamilySpec& spec, bool with_oracle,
                                  const OracleLimits& limits = {}) {
    CountReport report{spec, closed_form_count(spec), std::nullopt, std::nullopt};
    if (with_oracle) {
        report.oracle_value = count_labelings_dp(make_family(spec), limits);
        report.agree = report.formula_value == *report.oracle_value;
    }
    return report;
}

} // namespace rwl
