#include <doctest.h>

#include "pklift/verify.hpp"

using namespace pklift;

TEST_CASE("oracle sweep: small exhaustive run is clean") {
    SweepOptions opts;
    opts.primes = {2, 3, 5};
    opts.max_modulus = 200;
    const SweepReport report = sweep_against_oracle(opts);
    CHECK(report.ok());
    CHECK(report.moduli == 7 + 4 + 3);
    CHECK(report.instances > 1000);
    CHECK(report.lift_checked == report.instances);
    CHECK(report.order_checked == report.instances);
    CHECK(report.bach_checked < report.instances); // p = 2 excluded
}

TEST_CASE("oracle sweep: max_modulus below every prime power is empty") {
    SweepOptions opts;
    opts.max_modulus = 1;
    const SweepReport report = sweep_against_oracle(opts);
    CHECK(report.ok());
    CHECK(report.instances == 0);
    CHECK(report.moduli == 0);
}

TEST_CASE("oracle sweep: sampled tier covers large moduli") {
    SweepOptions opts;
    opts.primes = {3};
    opts.max_modulus = 20000;
    opts.exhaustive_pair_cap = 100;
    opts.sampled_bases = 4;
    opts.sampled_solvable = 20;
    opts.sampled_unsolvable = 10;
    const SweepReport report = sweep_against_oracle(opts);
    CHECK(report.ok());
    CHECK(report.moduli == 9); // 3 .. 3^9
    CHECK(report.instances > 4 * 20 * 5);
}

TEST_CASE("oracle sweep: detects an injected fault in the lifting path") {
    SweepOptions opts;
    opts.primes = {3};
    opts.max_modulus = 81;
    opts.inject_fault = true;
    const SweepReport report = sweep_against_oracle(opts);
    CHECK_FALSE(report.ok());
    CHECK(report.mismatch_count > 0);
    REQUIRE(!report.mismatches.empty());
    CHECK(report.mismatches[0].p == 3);
}

TEST_CASE("oracle sweep: rejects composite primes") {
    SweepOptions opts;
    opts.primes = {4};
    CHECK_THROWS(sweep_against_oracle(opts));
}
