#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace pklift {

/// One measured run: the digit-lifting algorithm and (odd p) Bach's
/// baseline on the same instance, with multiplication tallies and wall
/// times. bach_* columns are 0 for p = 2.
struct BenchRecord {
    mpz_class p;
    unsigned long k = 0;
    std::uint64_t seed = 0;               // per-instance derived seed
    std::uint64_t our_mults = 0;          // multiplications mod p^k
    std::uint64_t bach_mults = 0;         // multiplications mod p^(2k-1)
    std::uint64_t our_wall_ns = 0;
    std::uint64_t bach_wall_ns = 0;
    bool solution_found = false;
    unsigned long iterations = 0;
};

/// A reproducible grid of (p, k) points. Instances are generated
/// deterministically from `seed`; re-running a suite yields identical
/// records except for the wall-clock fields.
struct BenchSuite {
    std::vector<std::pair<mpz_class, unsigned long>> grid; // p prime, k >= 1
    std::size_t instances_per_point = 10;
    std::uint64_t seed = 0;
    /// Fraction of instances per point built to have no solution (only
    /// possible for k >= 2; k = 1 points stay fully solvable).
    double unsolvable_fraction = 0.0;
};

/// Runs every grid point: samples a uniformly among units, samples the
/// exponent x uniformly in [0, phi(p^k)), sets b = a^x and z = x mod (p-1),
/// and measures both algorithms with fresh counters. Unsolvable instances
/// perturb b off the reachable coset at the p^1 level after forcing the
/// matched level r >= 2.
std::vector<BenchRecord> run_suite(const BenchSuite& suite);

/// true iff our_mults <= k*(ceil(log2 p) + 2) + slack_c*ceil(log2 p) + slack_c0.
bool check_bound(const BenchRecord& record, double slack_c = 10.0,
                 double slack_c0 = 20.0);

/// CSV with header
/// p,k,seed,our_mults,bach_mults,our_wall_ns,bach_wall_ns,solution_found,iterations
/// one row per record, decimal ASCII, LF line endings.
void emit_csv(const std::vector<BenchRecord>& records, const std::string& path);

} // namespace pklift
