#include "pklift/verify.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "pklift/bach.hpp"
#include "pklift/lift.hpp"
#include "pklift/oracle.hpp"
#include "pklift/ring.hpp"

namespace pklift {

namespace {

constexpr std::uint32_t kNoLog = std::numeric_limits<std::uint32_t>::max();

struct SweepState {
    const SweepOptions& opts;
    SweepReport report;

    void mismatch(std::uint64_t p, unsigned long k, std::uint64_t a,
                  std::uint64_t b, std::uint64_t z, std::string what) {
        ++report.mismatch_count;
        if (report.mismatches.size() < 16) {
            report.mismatches.push_back({p, k, a, b, z, std::move(what)});
        }
    }
};

// Minimal exponent table of b0 -> dlog of b0 in <a> mod p, or kNoLog.
std::vector<std::uint32_t> mod_p_log_table(std::uint64_t a, std::uint64_t p) {
    std::vector<std::uint32_t> table(p, kNoLog);
    std::uint64_t v = 1 % p;
    std::uint32_t e = 0;
    do {
        if (table[v] == kNoLog) table[v] = e;
        v = (v * (a % p)) % p;
        ++e;
    } while (v != 1 % p);
    return table;
}

// Runs lift / bach_lift / lift_with_order on one instance and compares
// every outcome against the enumerated ground truth.
void check_instance(SweepState& st, const PrimePowerModulus& ring,
                    std::uint64_t p, unsigned long k, std::uint64_t a,
                    std::uint64_t b, std::uint64_t z, const PowerCycle& cycle,
                    std::uint64_t ord_p) {
    ++st.report.instances;
    const std::optional<std::uint64_t> want = cycle.dlog(b);
    const std::uint64_t ord = cycle.order();

    const LiftInstance inst(mpz_class(a), mpz_class(z), mpz_class(b), ring);

    {
        ++st.report.lift_checked;
        OpCounter counter;
        const LiftOutcome got = lift(inst, counter);
        if (got.found() != want.has_value()) {
            st.mismatch(p, k, a, b, z,
                        got.found() ? "lift found a solution where none exists"
                                    : "lift missed an existing solution");
        } else if (got.found()) {
            mpz_class x = *got.solution;
            if (st.opts.inject_fault) x += 1;
            if (x < 0 || mpz_fdiv_ui(x.get_mpz_t(), ord) != *want) {
                st.mismatch(p, k, a, b, z, "lift returned an invalid solution");
            }
            if (p != 2 &&
                mpz_fdiv_ui(x.get_mpz_t(), p - 1) !=
                    z % (p - 1)) {
                st.mismatch(p, k, a, b, z, "lift solution not of form (p-1)y+z");
            }
            if (got.iterations + got.r > k && got.iterations > 0) {
                st.mismatch(p, k, a, b, z, "lift exceeded the iteration bound");
            }
        }
    }

    if (st.opts.check_bach && p != 2) {
        ++st.report.bach_checked;
        OpCounter counter;
        const LiftOutcome got = bach_lift(inst, counter);
        if (got.found() != want.has_value()) {
            st.mismatch(p, k, a, b, z,
                        got.found() ? "bach_lift found a solution where none exists"
                                    : "bach_lift missed an existing solution");
        } else if (got.found() &&
                   mpz_fdiv_ui(got.solution->get_mpz_t(), ord) != *want) {
            st.mismatch(p, k, a, b, z, "bach_lift returned an invalid solution");
        }
    }

    if (st.opts.check_min_order) {
        ++st.report.order_checked;
        OpCounter counter;
        const LiftOutcome got =
            lift_with_order(inst, mpz_class(ord_p), counter);
        if (got.found() != want.has_value()) {
            st.mismatch(p, k, a, b, z, "lift_with_order solvability mismatch");
        } else if (got.found() && *got.solution != mpz_class(*want)) {
            st.mismatch(p, k, a, b, z,
                        "lift_with_order did not return the minimal solution");
        }
    }
}

void exhaustive_modulus(SweepState& st, std::uint64_t p, unsigned long k,
                        std::uint64_t m, const PrimePowerModulus& ring) {
    for (std::uint64_t a = 1; a < m; ++a) {
        if (a % p == 0) continue;
        const PowerCycle cycle(a, m);
        const auto ztab = mod_p_log_table(a, p);
        std::uint64_t ord_p = 0;
        {
            std::uint64_t v = a % p, e = 1;
            while (v != 1 % p) {
                v = (v * (a % p)) % p;
                ++e;
            }
            ord_p = e;
        }
        for (std::uint64_t b = 0; b < m; ++b) {
            if (b % p == 0) continue;
            const std::uint32_t z = ztab[b % p];
            if (z == kNoLog) continue; // no mod-p solution: out of scope
            check_instance(st, ring, p, k, a, b, z, cycle, ord_p);
        }
    }
}

void sampled_modulus(SweepState& st, std::uint64_t p, unsigned long k,
                     std::uint64_t m, const PrimePowerModulus& ring) {
    std::mt19937_64 rng(st.opts.seed ^ (m * 0x9e3779b97f4a7c15ULL) ^ p);
    for (std::size_t bi = 0; bi < st.opts.sampled_bases; ++bi) {
        std::uint64_t a = 0;
        do {
            a = rng() % m;
        } while (a == 0 || a % p == 0);
        if (bi % 4 == 1) {
            // Raise to the p-th power: shrinks the reachable coset so
            // unsolvable targets with a valid mod-p logarithm exist.
            std::uint64_t v = 1;
            for (std::uint64_t e = 0; e < p; ++e) v = (v * a) % m;
            a = v;
        } else if (bi % 8 == 2) {
            a = 1; // degenerate base: order 1
        }
        const PowerCycle cycle(a, m);
        const auto ztab = mod_p_log_table(a, p);
        const std::uint64_t ord_p = mult_order(mpz_class(a % p), mpz_class(p));

        for (std::size_t j = 0; j < st.opts.sampled_solvable; ++j) {
            const std::uint64_t x = rng() % cycle.order();
            const std::uint64_t b = cycle.value_at(x);
            const std::uint32_t z = ztab[b % p];
            check_instance(st, ring, p, k, a, b, z, cycle, ord_p);
        }
        std::size_t produced = 0;
        for (std::size_t attempt = 0;
             attempt < 20 * st.opts.sampled_unsolvable &&
             produced < st.opts.sampled_unsolvable;
             ++attempt) {
            const std::uint64_t b = rng() % m;
            if (b % p == 0) continue;
            const std::uint32_t z = ztab[b % p];
            if (z == kNoLog) continue;
            if (cycle.dlog(b).has_value()) continue;
            check_instance(st, ring, p, k, a, b, z, cycle, ord_p);
            ++produced;
        }
    }
}

} // namespace

SweepReport sweep_against_oracle(const SweepOptions& options) {
    SweepState st{options, {}};
    for (const std::uint64_t p : options.primes) {
        if (!is_prime(mpz_class(p))) {
            throw contract_error(std::to_string(p) + " is not prime");
        }
        std::uint64_t m = p;
        for (unsigned long k = 1; m <= options.max_modulus; ++k) {
            ++st.report.moduli;
            const PrimePowerModulus ring(mpz_class(p), k);
            if (m <= options.exhaustive_pair_cap) {
                exhaustive_modulus(st, p, k, m, ring);
            } else {
                sampled_modulus(st, p, k, m, ring);
            }
            if (m > options.max_modulus / p) break; // p^(k+1) would overflow the range
            m *= p;
        }
    }
    return st.report;
}

} // namespace pklift
