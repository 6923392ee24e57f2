#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rwl/bigmath.hpp"
#include "rwl/errors.hpp"
#include "rwl/series.hpp"

namespace rwl {

// One identity instance, both sides evaluated exactly. Checks report rather
// than assert: one documented claim is numerically false under the standard
// convention and the front end must be able to show that.
struct IdentityCheck {
    std::string name;
    std::vector<std::pair<std::string, std::string>> parameters;
    BigRat lhs;
    BigRat rhs;
    bool equal = false;

    static IdentityCheck make(std::string name,
                              std::vector<std::pair<std::string, std::string>> params, BigRat lhs,
                              BigRat rhs) {
        IdentityCheck c{std::move(name), std::move(params), std::move(lhs), std::move(rhs), false};
        c.equal = c.lhs == c.rhs;
        return c;
    }
};

// Hockey-stick identity with a free (rational) upper argument:
// sum_{k=0..n} binom(k+x, r) = binom(n+x+1, r+1) - binom(x, r+1).
// Generalized binomials use the product-formula convention, under which the
// identity is polynomial in x and holds at every rational point.
inline IdentityCheck hockey_stick_real(const BigRat& x, long long r, long long n) {
    if (r < 0 || n < 0) throw parameter_error("hockey_stick_real: r and n must be >= 0");
    BigRat lhs = 0;
    for (long long k = 0; k <= n; ++k) lhs += binomial_rational(x + k, r);
    const BigRat rhs = binomial_rational(x + n + 1, r + 1) - binomial_rational(x, r + 1);
    return IdentityCheck::make("hockey_stick_real",
                               {{"x", to_string(x)},
                                {"r", std::to_string(r)},
                                {"n", std::to_string(n)}},
                               lhs, rhs);
}

// 2^n sum_{k=0..n} binom(k+m,k)/2^k = sum_{k=0..n} binom(m+1+n, m+1+k),
// with the left side folded into integers as sum binom(k+m,k) 2^(n-k).
inline IdentityCheck kka_identity(long long m, long long n) {
    if (m < 0 || n < 0) throw parameter_error("kka_identity: m and n must be >= 0");
    BigInt lhs = 0;
    for (long long k = 0; k <= n; ++k) lhs += binomial(k + m, k) * pow2(n - k);
    BigInt rhs = 0;
    for (long long k = 0; k <= n; ++k) rhs += binomial(m + 1 + n, m + 1 + k);
    return IdentityCheck::make(
        "kka", {{"m", std::to_string(m)}, {"n", std::to_string(n)}}, BigRat(lhs), BigRat(rhs));
}

// The two published forms of the same sequence entry:
//   (n-1)!   sum_{k<n} binom(2n-1, 2k)   / binom(n-1, k)
//   (n-1)!/2 sum_{k<n} binom(2n,   2k+1) / binom(n-1, k)
// Both must agree and be integral.
inline IdentityCheck a087547_pair(long long n) {
    if (n < 1) throw parameter_error("a087547_pair: n must be >= 1");
    BigRat lhs = 0;
    for (long long k = 0; k <= n - 1; ++k)
        lhs += BigRat(binomial(2 * n - 1, 2 * k), binomial(n - 1, k));
    lhs *= BigRat(factorial(n - 1));
    BigRat rhs = 0;
    for (long long k = 0; k <= n - 1; ++k)
        rhs += BigRat(binomial(2 * n, 2 * k + 1), binomial(n - 1, k));
    rhs *= BigRat(factorial(n - 1), 2);
    return IdentityCheck::make("a087547_pair", {{"n", std::to_string(n)}}, lhs, rhs);
}

// The integral value of the pair above (the sequence term itself).
inline BigInt a087547_value(long long n) {
    const IdentityCheck c = a087547_pair(n);
    if (!c.equal) throw integrality_error("a087547_value: the two forms disagree at n = " +
                                          std::to_string(n));
    return require_integral(c.lhs, "a087547_value");
}

// a(n) = 2^n sum_{k=0..n} k!/2^k, evaluated as sum_{k} k! 2^(n-k).
inline std::vector<BigInt> a233449_terms(long long count) {
    if (count < 1) throw parameter_error("a233449_terms: count must be >= 1");
    std::vector<BigInt> out;
    out.reserve(static_cast<size_t>(count));
    for (long long n = 0; n < count; ++n) {
        BigInt a = 0;
        for (long long k = 0; k <= n; ++k) a += factorial(k) * pow2(n - k);
        out.push_back(std::move(a));
    }
    return out;
}

// Exponential generating function of a233449 as a truncated series:
// coefficient of x^n is a(n)/n!.
inline RationalSeries a233449_egf(int order) {
    const auto terms = a233449_terms(order + 1);
    RationalSeries f(order);
    for (int n = 0; n <= order; ++n)
        f.set_coeff(n, BigRat(terms[static_cast<size_t>(n)], factorial(n)));
    return f;
}

// Applies the operator (x-1) f'' + 2(-x+2) f' - 4 f to the egf above and
// returns the truncated residual (order N-2). Identically zero when the
// sequence satisfies its differential equation; the caller inspects it.
inline RationalSeries ode_residual(int order) {
    if (order < 3) throw parameter_error("ode_residual: order must be >= 3");
    const RationalSeries f = a233449_egf(order);
    const RationalSeries f1 = f.derivative();              // order N-1
    const RationalSeries f2 = f1.derivative();             // order N-2
    const int res_order = order - 2;
    const RationalSeries f_t = f.truncate(res_order);
    const RationalSeries f1_t = f1.truncate(res_order);
    const RationalSeries term1 = f2.shift_mul_x() - f2;                            // (x-1) f''
    const RationalSeries term2 = f1_t * BigRat(4) - f1_t.shift_mul_x() * BigRat(2); // 2(-x+2) f'
    const RationalSeries term3 = f_t * BigRat(-4);
    return term1 + term2 + term3;
}

// Documented claim: sum_{k<n} (n-k)! 2^k equals the Eulerian number <n,1>.
// Under the standard convention <n,1> = 2^n - n - 1 this fails for every
// n >= 1; the check reports both sides as computed and is presented as
// informational, never asserted.
inline IdentityCheck eulerian_claim_report(long long n) {
    if (n < 1) throw parameter_error("eulerian_claim_report: n must be >= 1");
    BigInt lhs = 0;
    for (long long k = 0; k <= n - 1; ++k) lhs += factorial(n - k) * pow2(k);
    const BigInt rhs = pow2(n) - n - 1;
    return IdentityCheck::make("eulerian_claim", {{"n", std::to_string(n)}}, BigRat(lhs),
                               BigRat(rhs));
}

} // namespace rwl
