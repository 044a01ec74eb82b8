#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pklift {

/// Configuration of the oracle cross-validation sweep. For every prime in
/// `primes` and every k >= 1 with p^k <= max_modulus, the sweep compares
/// lift (and bach_lift for odd p, and lift_with_order against the minimal
/// solution) with brute-force enumeration. Moduli up to
/// exhaustive_pair_cap are covered for every (a, b) pair; larger moduli
/// are covered by seeded sampling (sampled_bases bases, and per base
/// sampled_solvable + sampled_unsolvable targets).
struct SweepOptions {
    std::vector<std::uint64_t> primes{2, 3, 5, 7, 11, 13};
    std::uint64_t max_modulus = 1'000'000;
    std::uint64_t exhaustive_pair_cap = 2'500;
    std::size_t sampled_bases = 24;
    std::size_t sampled_solvable = 80;
    std::size_t sampled_unsolvable = 40;
    std::uint64_t seed = 0x5eed;
    bool check_bach = true;
    bool check_min_order = true;
    /// Test-only hook: perturb every solution the lifting algorithm
    /// reports before comparing, to prove the sweep detects a buggy lift.
    bool inject_fault = false;
};

struct SweepMismatch {
    std::uint64_t p = 0;
    unsigned long k = 0;
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    std::uint64_t z = 0;
    std::string what;
};

struct SweepReport {
    std::uint64_t moduli = 0;
    std::uint64_t instances = 0;      // (a, b) pairs examined
    std::uint64_t lift_checked = 0;
    std::uint64_t bach_checked = 0;
    std::uint64_t order_checked = 0;
    std::uint64_t mismatch_count = 0;
    std::vector<SweepMismatch> mismatches; // first few, for diagnostics

    bool ok() const { return mismatch_count == 0; }
};

SweepReport sweep_against_oracle(const SweepOptions& options);

} // namespace pklift
