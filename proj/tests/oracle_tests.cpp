#include <doctest.h>

#include "pklift/oracle.hpp"

using namespace pklift;

TEST_CASE("brute_dlog: worked instances") {
    const SolutionSet s1 =
        brute_dlog(mpz_class(2), mpz_class(8), PrimePowerModulus(mpz_class(5), 2));
    CHECK(s1.minimal_x == 3);
    CHECK(s1.period == 20);

    const SolutionSet s2 =
        brute_dlog(mpz_class(1), mpz_class(1), PrimePowerModulus(mpz_class(7), 3));
    CHECK(s2.minimal_x == 0);
    CHECK(s2.period == 1);

    const SolutionSet s3 =
        brute_dlog(mpz_class(8), mpz_class(5), PrimePowerModulus(mpz_class(3), 2));
    CHECK_FALSE(s3.solvable());
    CHECK(s3.period == 2);
}

TEST_CASE("brute_dlog refuses out-of-scope work") {
    CHECK_THROWS_AS(brute_dlog(mpz_class(3), mpz_class(1),
                               PrimePowerModulus(mpz_class(2), 40)),
                    contract_error); // modulus above the bound
    CHECK_THROWS_AS(brute_dlog(mpz_class(10), mpz_class(1),
                               PrimePowerModulus(mpz_class(5), 3)),
                    contract_error); // p divides a
}

TEST_CASE("mult_order: worked instances") {
    CHECK(mult_order(mpz_class(2), mpz_class(7)) == 3);
    CHECK(mult_order(mpz_class(3), mpz_class(8)) == 2);
    CHECK(mult_order(mpz_class(2), mpz_class(25)) == 20);
    CHECK(mult_order(mpz_class(1), mpz_class(1)) == 1);
    CHECK_THROWS_AS(mult_order(mpz_class(6), mpz_class(9)), contract_error);
    CHECK_THROWS_AS(mult_order(mpz_class(2), mpz_class(100'000'000'000)),
                    contract_error);
}

TEST_CASE("orders divide p - 1") {
    for (std::uint64_t p = 2; p <= 100; ++p) {
        if (!is_prime(mpz_class(p))) continue;
        for (std::uint64_t a = 1; a < p; ++a) {
            CHECK((p - 1) % mult_order(mpz_class(a), mpz_class(p)) == 0);
        }
    }
}

TEST_CASE("order tower cross-check against PowerCycle") {
    for (const std::uint64_t p : {3ull, 5ull, 7ull}) {
        for (std::uint64_t a = 1; a < p * p * p; ++a) {
            if (a % p == 0) continue;
            const std::uint64_t d1 = PowerCycle(a, p).order();
            const std::uint64_t d2 = PowerCycle(a, p * p).order();
            const std::uint64_t d3 = PowerCycle(a, p * p * p).order();
            CHECK((d2 == d1 || d2 == p * d1));
            CHECK((d3 == d2 || d3 == p * d2));
            CHECK(d1 == mult_order(mpz_class(a), mpz_class(p)));
        }
    }
}
