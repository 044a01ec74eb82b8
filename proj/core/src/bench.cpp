#include "pklift/bench.hpp"

#include <cassert>
#include <chrono>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "pklift/bach.hpp"
#include "pklift/lift.hpp"
#include "pklift/ring.hpp"

namespace pklift {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t instance_seed(const BenchSuite& suite, const mpz_class& p,
                            unsigned long k, std::size_t index) {
    std::uint64_t h = splitmix64(suite.seed ^ 0x706b6c696674ULL);
    h = splitmix64(h ^ mpz_fdiv_ui(p.get_mpz_t(), ~std::uint64_t{0}));
    h = splitmix64(h ^ k);
    h = splitmix64(h ^ index);
    return h;
}

std::uint64_t elapsed_ns(std::chrono::steady_clock::time_point from,
                         std::chrono::steady_clock::time_point to) {
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(to - from).count());
}

mpz_class random_unit(gmp_randclass& rng, const PrimePowerModulus& ring) {
    mpz_class a;
    do {
        a = rng.get_z_range(ring.m());
    } while (mpz_divisible_p(a.get_mpz_t(), ring.p().get_mpz_t()));
    return a;
}

} // namespace

std::vector<BenchRecord> run_suite(const BenchSuite& suite) {
    std::vector<BenchRecord> records;
    records.reserve(suite.grid.size() * suite.instances_per_point);
    for (const auto& [p, k] : suite.grid) {
        if (k < 1) throw contract_error("k must be >= 1");
        const PrimePowerModulus ring(p, k);
        const bool with_bach = p != 2;
        mpz_class q; // p^(k-1)
        mpz_pow_ui(q.get_mpz_t(), p.get_mpz_t(), k - 1);
        const mpz_class phi = (p - 1) * q;
        const std::size_t unsolvable_count =
            k >= 2 ? static_cast<std::size_t>(
                         std::lround(suite.unsolvable_fraction *
                                     static_cast<double>(suite.instances_per_point)))
                   : 0;

        for (std::size_t i = 0; i < suite.instances_per_point; ++i) {
            const std::uint64_t iseed = instance_seed(suite, p, k, i);
            gmp_randclass rng(gmp_randinit_mt);
            rng.seed(static_cast<unsigned long>(iseed));

            mpz_class a = random_unit(rng, ring);
            const bool make_unsolvable = i < unsolvable_count;
            mpz_class b, z;
            if (make_unsolvable) {
                // a := a^p forces matched level >= 2; adding p*s with p not
                // dividing s then leaves the reachable coset mod p^2.
                mpz_powm(a.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t(),
                         ring.m().get_mpz_t());
                const mpz_class x = rng.get_z_range(phi);
                mpz_powm(b.get_mpz_t(), a.get_mpz_t(), x.get_mpz_t(),
                         ring.m().get_mpz_t());
                mpz_class s;
                do {
                    s = rng.get_z_range(q);
                } while (mpz_divisible_p(s.get_mpz_t(), p.get_mpz_t()));
                b = mod_floor(b + p * s, ring.m());
                z = mod_floor(x, mpz_class(p - 1));
            } else {
                const mpz_class x = rng.get_z_range(phi);
                mpz_powm(b.get_mpz_t(), a.get_mpz_t(), x.get_mpz_t(),
                         ring.m().get_mpz_t());
                z = mod_floor(x, mpz_class(p - 1));
            }

            const LiftInstance inst(a, z, b, ring);
            BenchRecord rec;
            rec.p = p;
            rec.k = k;
            rec.seed = iseed;

            OpCounter ours;
            const auto t0 = std::chrono::steady_clock::now();
            const LiftOutcome outcome = lift(inst, ours);
            const auto t1 = std::chrono::steady_clock::now();
            rec.our_mults = ours.mults_mod_m();
            rec.our_wall_ns = elapsed_ns(t0, t1);
            rec.solution_found = outcome.found();
            rec.iterations = outcome.iterations;
            assert(outcome.found() != make_unsolvable);

            if (with_bach) {
                OpCounter bach;
                const auto t2 = std::chrono::steady_clock::now();
                const LiftOutcome bo = bach_lift(inst, bach);
                const auto t3 = std::chrono::steady_clock::now();
                rec.bach_mults = bach.mults_in(theta_ring(ring));
                rec.bach_wall_ns = elapsed_ns(t2, t3);
                assert(bo.found() == outcome.found());
                (void)bo;
            }
            records.push_back(std::move(rec));
        }
    }
    return records;
}

bool check_bound(const BenchRecord& record, double slack_c, double slack_c0) {
    const double lg = static_cast<double>(ceil_log2(record.p));
    const double bound =
        static_cast<double>(record.k) * (lg + 2.0) + slack_c * lg + slack_c0;
    return static_cast<double>(record.our_mults) <= bound;
}

void emit_csv(const std::vector<BenchRecord>& records, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << "p,k,seed,our_mults,bach_mults,our_wall_ns,bach_wall_ns,"
           "solution_found,iterations\n";
    for (const BenchRecord& r : records) {
        out << r.p << ',' << r.k << ',' << r.seed << ',' << r.our_mults << ','
            << r.bach_mults << ',' << r.our_wall_ns << ',' << r.bach_wall_ns
            << ',' << (r.solution_found ? 1 : 0) << ',' << r.iterations << '\n';
    }
    if (!out.flush()) throw std::runtime_error("write failed: " + path);
}

} // namespace pklift
