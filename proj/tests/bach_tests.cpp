#include <doctest.h>

#include <cstdint>
#include <vector>

#include "pklift/bach.hpp"
#include "pklift/lift.hpp"
#include "pklift/oracle.hpp"

using namespace pklift;

namespace {

mpz_class powm(const mpz_class& a, const mpz_class& e, const mpz_class& m) {
    mpz_class r;
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

} // namespace

TEST_CASE("theta: worked values") {
    OpCounter c;
    CHECK(theta(mpz_class(1), PrimePowerModulus(mpz_class(5), 3), c).value == 0);

    // (2^20 - 1) / 25 = 41943, and 41943 mod 5 = 3
    const mpz_class direct = (powm(2, mpz_class(20), mpz_class(125)) - 1) / 25;
    CHECK(theta(mpz_class(2), PrimePowerModulus(mpz_class(5), 2), c).value ==
          mod_floor(direct, mpz_class(5)));
    CHECK(theta(mpz_class(2), PrimePowerModulus(mpz_class(5), 2), c).value == 3);

    // 1 + p has order p modulo p^2, so theta cannot vanish
    CHECK(theta(mpz_class(8), PrimePowerModulus(mpz_class(7), 2), c).value != 0);
}

TEST_CASE("theta contract") {
    OpCounter c;
    CHECK_THROWS_AS(theta(mpz_class(3), PrimePowerModulus(mpz_class(2), 4), c),
                    contract_error);
    CHECK_THROWS_AS(theta(mpz_class(10), PrimePowerModulus(mpz_class(5), 2), c),
                    contract_error);
    CHECK_THROWS_AS(theta(mpz_class(3), PrimePowerModulus(mpz_class(5), 0), c),
                    contract_error);
}

TEST_CASE("theta is a homomorphism into Z/p^(k-1)") {
    const PrimePowerModulus ring(mpz_class(7), 4);
    mpz_class q;
    mpz_pow_ui(q.get_mpz_t(), mpz_class(7).get_mpz_t(), 3);
    OpCounter c;
    for (int x = 1; x < 40; ++x) {
        if (x % 7 == 0) continue;
        for (int y = x; y < 40; ++y) {
            if (y % 7 == 0) continue;
            const mpz_class lhs =
                theta(mpz_class(x) * mpz_class(y), ring, c).value;
            const mpz_class rhs = mod_floor(theta(mpz_class(x), ring, c).value +
                                                theta(mpz_class(y), ring, c).value,
                                            q);
            REQUIRE(lhs == rhs);
        }
    }
}

TEST_CASE("bach_lift: worked instances") {
    OpCounter c;
    const PrimePowerModulus r25(mpz_class(5), 2);
    const LiftInstance inst(mpz_class(2), mpz_class(3), mpz_class(8), r25);
    const LiftOutcome got = bach_lift(inst, c);
    REQUIRE(got.found());
    CHECK(powm(2, *got.solution, mpz_class(25)) == 8);
    CHECK(mod_floor(*got.solution, mpz_class(20)) == 3); // solution set {3 + 20t}

    const PrimePowerModulus r343(mpz_class(7), 3);
    const LiftInstance one(mpz_class(1), mpz_class(0), mpz_class(1), r343);
    const LiftOutcome got1 = bach_lift(one, c);
    REQUIRE(got1.found());
    CHECK(*got1.solution == 0);

    const PrimePowerModulus r9(mpz_class(3), 2);
    const LiftInstance none(mpz_class(8), mpz_class(1), mpz_class(5), r9);
    CHECK_FALSE(bach_lift(none, c).found());
}

TEST_CASE("bach_lift contract") {
    OpCounter c;
    const PrimePowerModulus r8(mpz_class(2), 3);
    const LiftInstance inst2(mpz_class(3), mpz_class(0), mpz_class(3), r8);
    CHECK_THROWS_AS(bach_lift(inst2, c), contract_error);
    const PrimePowerModulus r1(mpz_class(5), 0);
    const LiftInstance inst0(mpz_class(2), mpz_class(1), mpz_class(2), r1);
    CHECK_THROWS_AS(bach_lift(inst0, c), contract_error);
}

TEST_CASE("bach_lift agrees with lift and the oracle on small moduli") {
    for (const unsigned long p : {3ul, 5ul, 7ul}) {
        std::uint64_t m = p;
        for (unsigned long k = 1; m <= 400; ++k, m *= p) {
            const PrimePowerModulus ring(mpz_class(p), k);
            for (std::uint64_t a = 1; a < m; ++a) {
                if (a % p == 0) continue;
                const PowerCycle cycle(a, m);
                std::vector<std::uint32_t> ztab(p, UINT32_MAX);
                std::uint64_t v = 1, e = 0;
                do {
                    if (ztab[v] == UINT32_MAX)
                        ztab[v] = static_cast<std::uint32_t>(e);
                    v = (v * (a % p)) % p;
                    ++e;
                } while (v != 1);
                for (std::uint64_t b = 1; b < m; ++b) {
                    if (b % p == 0 || ztab[b % p] == UINT32_MAX) continue;
                    const LiftInstance inst(mpz_class(a), mpz_class(ztab[b % p]),
                                            mpz_class(b), ring);
                    OpCounter cb, cl;
                    const LiftOutcome via_bach = bach_lift(inst, cb);
                    const LiftOutcome via_lift = lift(inst, cl);
                    REQUIRE(via_bach.found() == via_lift.found());
                    REQUIRE(via_bach.found() == cycle.dlog(b).has_value());
                    if (via_bach.found()) {
                        REQUIRE(powm(mpz_class(a), *via_bach.solution,
                                     mpz_class(m)) == b);
                    }
                }
            }
        }
    }
}

TEST_CASE("bach cost: input independent, near the nominal schedule") {
    // two exponentiations at 2 multiplications per exponent bit
    for (const unsigned long p : {3ul, 13ul, 101ul, 997ul}) {
        for (const unsigned long k : {8ul, 16ul, 32ul}) {
            const PrimePowerModulus ring(mpz_class(p), k);
            mpz_class q;
            mpz_pow_ui(q.get_mpz_t(), mpz_class(p).get_mpz_t(), k - 1);
            const mpz_class exponent = (p - 1) * q;
            const double nominal =
                4.0 * static_cast<double>(ceil_log2(exponent));

            std::uint64_t first = 0;
            for (const unsigned long a : {2ul, p - 1, p + 1, 2 * p + 1}) {
                OpCounter c;
                theta(mpz_class(a), ring, c);
                theta(mpz_class(a + p), ring, c);
                const std::uint64_t used = c.mults_in(theta_ring(ring));
                if (first == 0) first = used;
                CHECK(used == first); // same (p, k) => same cost, any input
                CHECK(static_cast<double>(used) >= nominal / 1.5);
                CHECK(static_cast<double>(used) <= nominal * 1.5);
            }
        }
    }
}
