#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "rwl/identities.hpp"

using namespace rwl;

TEST_CASE("hockey stick with a free upper argument") {
    SECTION("spot values") {
        const IdentityCheck a = hockey_stick_real(BigRat(0), 1, 3);
        CHECK(a.equal);
        CHECK(a.lhs == 6);

        const IdentityCheck b = hockey_stick_real(BigRat(1, 2), 2, 3);
        CHECK(b.equal);
        CHECK(b.lhs == BigRat(13, 2));

        // negative integer point under the product-formula convention
        const IdentityCheck c = hockey_stick_real(BigRat(-1), 0, 5);
        CHECK(c.equal);
        CHECK(c.lhs == 6);
    }

    SECTION("integer grid") {
        for (long long x = 0; x <= 20; ++x)
            for (long long r = 0; r <= 10; ++r)
                for (long long n = 0; n <= 20; ++n)
                    REQUIRE(hockey_stick_real(BigRat(x), r, n).equal);
    }

    SECTION("random rational points") {
        std::mt19937_64 rng(11);
        for (int i = 0; i < 50; ++i) {
            const long long num = static_cast<long long>(rng() % 41) - 20;
            const long long den = 1 + static_cast<long long>(rng() % 9);
            const BigRat x(num, den);
            const long long r = static_cast<long long>(rng() % 8);
            const long long n = static_cast<long long>(rng() % 16);
            REQUIRE(hockey_stick_real(x, r, n).equal);
        }
    }
}

TEST_CASE("binomial-sum identity used by the bridge counts") {
    const IdentityCheck a = kka_identity(0, 3);
    CHECK(a.equal);
    CHECK(a.lhs == 15);

    const IdentityCheck b = kka_identity(2, 2);
    CHECK(b.equal);
    CHECK(b.lhs == 16);

    for (long long n = 0; n <= 20; ++n)
        REQUIRE(kka_identity(0, n).lhs == BigRat(pow2(n + 1) - 1));

    for (long long m = 0; m <= 60; ++m)
        for (long long n = 0; n <= 60; ++n) REQUIRE(kka_identity(m, n).equal);
}

TEST_CASE("the two forms of A087547 agree and are integral") {
    const IdentityCheck n1 = a087547_pair(1);
    CHECK(n1.equal);
    CHECK(n1.lhs == 1);

    const IdentityCheck n2 = a087547_pair(2);
    CHECK(n2.equal);
    CHECK(n2.lhs == 4);

    CHECK(a087547_value(3) == 22);
    CHECK(a087547_value(4) == 160);
    CHECK(a087547_value(5) == 1464);

    for (long long n = 1; n <= 200; ++n) {
        const IdentityCheck c = a087547_pair(n);
        REQUIRE(c.equal);
        REQUIRE(boost::multiprecision::denominator(c.lhs) == 1);
    }
}

TEST_CASE("a233449 terms") {
    const auto terms = a233449_terms(12);
    CHECK(terms[0] == 1);
    CHECK(terms[1] == 3);
    CHECK(terms[2] == 8);
    CHECK(terms[3] == 22);
    CHECK(terms[4] == 68);
    CHECK(terms[5] == 256);
    CHECK(terms[11] == BigInt("49068544"));

    SECTION("second-order recurrence extracted from the differential equation") {
        const auto t = a233449_terms(202);
        for (size_t n = 0; n + 2 < t.size(); ++n)
            REQUIRE(t[n + 2] == BigInt(n + 4) * t[n + 1] - BigInt(2 * n + 4) * t[n]);
    }
}

TEST_CASE("egf satisfies its differential equation at series level") {
    const RationalSeries f = a233449_egf(10);
    CHECK(f.coeff(0) == 1);
    CHECK(f.derivative().coeff(0) == 3);

    CHECK(ode_residual(10).is_zero());
    CHECK(ode_residual(10).order() == 8);
    CHECK(ode_residual(50).is_zero());
    CHECK_THROWS_AS(ode_residual(2), parameter_error);
}

TEST_CASE("Eulerian claim is reported, not asserted") {
    const IdentityCheck n2 = eulerian_claim_report(2);
    CHECK(n2.lhs == 4);
    CHECK(n2.rhs == 1);
    CHECK_FALSE(n2.equal);

    const IdentityCheck n3 = eulerian_claim_report(3);
    CHECK(n3.lhs == 14);
    CHECK(n3.rhs == 4);
    CHECK_FALSE(n3.equal);

    const IdentityCheck n1 = eulerian_claim_report(1);
    CHECK(n1.lhs == 1);
    CHECK(n1.rhs == 0);
    CHECK_FALSE(n1.equal);

    for (long long n = 1; n <= 10; ++n) REQUIRE_FALSE(eulerian_claim_report(n).equal);
}
