#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "rwl/bigmath.hpp"

using namespace rwl;

TEST_CASE("factorial basics") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(1) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(factorial(25) == BigInt("15511210043330985984000000"));
    CHECK_THROWS_AS(factorial(-1), parameter_error);
}

TEST_CASE("binomial values and vanishing convention") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(4, 5) == 0);
    CHECK(binomial(4, -1) == 0);
    CHECK(binomial(60, 30) == BigInt("118264581564861424"));
    CHECK_THROWS_AS(binomial(-2, 1), parameter_error);
}

TEST_CASE("Pascal rule holds up to n = 200") {
    // row-by-row to avoid recomputing every coefficient from scratch
    std::vector<BigInt> prev = {1};
    for (long long n = 1; n <= 200; ++n) {
        std::vector<BigInt> row(static_cast<size_t>(n) + 1);
        row[0] = 1;
        row[static_cast<size_t>(n)] = 1;
        for (long long k = 1; k < n; ++k)
            row[static_cast<size_t>(k)] =
                prev[static_cast<size_t>(k - 1)] + prev[static_cast<size_t>(k)];
        for (long long k = 0; k <= n; k += std::max<long long>(1, n / 7))
            REQUIRE(binomial(n, k) == row[static_cast<size_t>(k)]);
        prev = std::move(row);
    }
}

TEST_CASE("multinomial") {
    CHECK(multinomial(2, {2}) == 1);
    CHECK(multinomial(4, {2, 2}) == 6);
    CHECK(multinomial(0, {}) == 1);
    CHECK(multinomial(6, {1, 2, 3}) == 60);
    CHECK_THROWS_AS(multinomial(5, {2, 2}), parameter_error);
    CHECK_THROWS_AS(multinomial(4, {5, -1}), parameter_error);

    SECTION("agrees with the factorial quotient up to total 60") {
        std::mt19937_64 rng(17);
        for (int trial = 0; trial < 200; ++trial) {
            const int parts_count = 1 + static_cast<int>(rng() % 5);
            std::vector<long long> parts;
            long long total = 0;
            for (int i = 0; i < parts_count; ++i) {
                parts.push_back(static_cast<long long>(rng() % 13));
                total += parts.back();
            }
            if (total > 60) continue;
            BigInt denom = 1;
            for (long long p : parts) denom *= factorial(p);
            REQUIRE(multinomial(total, parts) == factorial(total) / denom);
        }
    }
}

TEST_CASE("catalan") {
    CHECK(catalan(0) == 1);
    CHECK(catalan(3) == 5);
    CHECK(catalan(10) == 16796);
}

TEST_CASE("rational binomial by the product formula") {
    CHECK(binomial_rational(BigRat(1, 2), 2) == BigRat(-1, 8));
    CHECK(binomial_rational(BigRat(9, 2), 3) == BigRat(105, 16));
    CHECK(binomial_rational(BigRat(-7, 3), 0) == 1);
    CHECK(binomial_rational(BigRat(-1), 0) == 1);
    CHECK(binomial_rational(BigRat(-1), 1) == -1);

    SECTION("matches the integer binomial at integer points") {
        for (long long x = 0; x <= 50; x += 3)
            for (long long r = 0; r <= 50; r += 7)
                REQUIRE(binomial_rational(BigRat(x), r) == BigRat(binomial(x, r)));
    }
}

TEST_CASE("serialization") {
    CHECK(to_string(BigInt("-123456789012345678901234567890")) ==
          "-123456789012345678901234567890");
    CHECK(to_string(BigRat(3, 4)) == "3/4");
    CHECK(to_string(BigRat(8, 4)) == "2");
    CHECK(parse_bigint("987654321987654321") == BigInt("987654321987654321"));
    CHECK(parse_bigrat("3/4") == BigRat(3, 4));
    CHECK(parse_bigrat("-6/8") == BigRat(-3, 4));
    CHECK(parse_bigrat("17") == BigRat(17));
    CHECK_THROWS_AS(parse_bigint("12x"), parameter_error);
    CHECK_THROWS_AS(parse_bigrat("a/b"), parameter_error);
}

TEST_CASE("exactness guards") {
    CHECK(exact_div(BigInt(84), BigInt(12), "test") == 7);
    CHECK_THROWS_AS(exact_div(BigInt(85), BigInt(12), "test"), integrality_error);
    CHECK(require_integral(BigRat(14, 2), "test") == 7);
    CHECK_THROWS_AS(require_integral(BigRat(1, 3), "test"), integrality_error);
}
