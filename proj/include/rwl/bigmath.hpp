#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "rwl/errors.hpp"

namespace rwl {

// Exact arbitrary-precision scalars. Counts of labelings reach factorial
// scale at modest parameters, so nothing in a counting path may use a
// fixed-width integer or a float.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt factorial(long long n) {
    if (n < 0) throw parameter_error("factorial: n must be >= 0, got " + std::to_string(n));
    BigInt r = 1;
    for (long long i = 2; i <= n; ++i) r *= i;
    return r;
}

// 2^k as an exact integer.
inline BigInt pow2(long long k) {
    if (k < 0) throw parameter_error("pow2: exponent must be >= 0, got " + std::to_string(k));
    return BigInt(1) << static_cast<unsigned>(k);
}

// Vanishing convention: returns 0 for k < 0 or k > n. The boundary sums in
// the closed-form counts rely on this.
inline BigInt binomial(long long n, long long k) {
    if (n < 0) throw parameter_error("binomial: n must be >= 0, got " + std::to_string(n));
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i; // exact at every step: r is binomial(n-k+i, i)
    }
    return r;
}

// Number of ways to split `total` items into ordered blocks of the given
// sizes. Parts must sum to total.
inline BigInt multinomial(long long total, const std::vector<long long>& parts) {
    long long sum = 0;
    for (long long p : parts) {
        if (p < 0) throw parameter_error("multinomial: negative part " + std::to_string(p));
        sum += p;
    }
    if (sum != total)
        throw parameter_error("multinomial: parts sum to " + std::to_string(sum) +
                              ", expected " + std::to_string(total));
    BigInt r = 1;
    long long rem = total;
    for (long long p : parts) {
        r *= binomial(rem, p);
        rem -= p;
    }
    return r;
}

inline BigInt catalan(long long n) {
    if (n < 0) throw parameter_error("catalan: n must be >= 0, got " + std::to_string(n));
    BigInt c = binomial(2 * n, n);
    c /= n + 1; // exact
    return c;
}

// Generalized binomial coefficient by the product formula,
// x(x-1)...(x-r+1)/r!, defined for every rational x; r = 0 gives 1.
inline BigRat binomial_rational(const BigRat& x, long long r) {
    if (r < 0) throw parameter_error("binomial_rational: r must be >= 0, got " + std::to_string(r));
    BigRat v = 1;
    for (long long i = 0; i < r; ++i) v *= x - i;
    return v / BigRat(factorial(r));
}

inline std::string to_string(const BigInt& v) { return v.str(); }

// "p/q" form, reduced; the denominator is omitted when it is 1.
inline std::string to_string(const BigRat& v) {
    BigInt num = boost::multiprecision::numerator(v);
    BigInt den = boost::multiprecision::denominator(v);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline BigInt parse_bigint(const std::string& s) {
    try {
        return BigInt(s);
    } catch (const std::exception&) {
        throw parameter_error("not a decimal integer: \"" + s + "\"");
    }
}

inline BigRat parse_bigrat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return BigRat(BigInt(s));
        return BigRat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw parameter_error("not a p/q rational: \"" + s + "\"");
    }
}

// Exact quotient; refuses to round.
inline BigInt exact_div(const BigInt& num, const BigInt& den, const char* context) {
    if (den == 0) throw parameter_error(std::string(context) + ": division by zero");
    if (num % den != 0)
        throw integrality_error(std::string(context) + ": " + num.str() + " is not divisible by " +
                                den.str());
    return num / den;
}

// The rational value must be a whole number; used by formulas whose
// intermediates are fractions but whose results count something.
inline BigInt require_integral(const BigRat& v, const char* context) {
    if (boost::multiprecision::denominator(v) != 1)
        throw integrality_error(std::string(context) + ": expected an integer, got " + to_string(v));
    return boost::multiprecision::numerator(v);
}

} // namespace rwl
