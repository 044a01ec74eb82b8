// Command-line front end: lift discrete logarithms to prime-power moduli,
// run the Bach baseline, query multiplicative orders, run benchmark suites,
// and cross-validate against brute-force enumeration.
//
// Exit codes: 0 success, 1 usage or contract error, 2 no solution,
// 3 verification mismatch.

#include <algorithm>
#include <cstdint>
#include <exception>
#include <iomanip>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <gmpxx.h>

#include "pklift/bach.hpp"
#include "pklift/bench.hpp"
#include "pklift/lift.hpp"
#include "pklift/oracle.hpp"
#include "pklift/ring.hpp"
#include "pklift/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNoSolution = 2;
constexpr int kExitMismatch = 3;

mpz_class parse_bigint(const std::string& text, const std::string& name) {
    try {
        return mpz_class(text, 10);
    } catch (const std::invalid_argument&) {
        throw pklift::contract_error(name + " is not a decimal integer: " + text);
    }
}

void print_counts(const pklift::OpCounter& counter,
                  const pklift::LiftOutcome& outcome) {
    std::cout << "mults_mod_m=" << counter.mults_mod_m()
              << " mults_mod_small=" << counter.mults_mod_small()
              << " iterations=" << outcome.iterations << " r=" << outcome.r
              << "\n";
}

struct LiftArgs {
    std::string a, z, b, p, k;
    std::string order;
    bool count = false;
    bool p_divides = false;
    bool trust_order = false;
};

int run_lift(const LiftArgs& args, bool use_bach) {
    const mpz_class a = parse_bigint(args.a, "a");
    const mpz_class b = parse_bigint(args.b, "b");
    const mpz_class p = parse_bigint(args.p, "p");
    const mpz_class k = parse_bigint(args.k, "k");
    if (k < 0 || !k.fits_ulong_p()) {
        throw pklift::contract_error("k must be a non-negative machine integer");
    }
    const pklift::PrimePowerModulus ring(p, k.get_ui());

    if (args.p_divides) {
        const auto x = pklift::lift_p_divides_a(a, b, ring);
        if (!x) {
            std::cout << "no solution\n";
            return kExitNoSolution;
        }
        std::cout << *x << "\n";
        return kExitOk;
    }

    if (mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t())) {
        throw pklift::contract_error(
            "precondition failed: p divides a (rerun with --p-divides)");
    }

    const mpz_class z = parse_bigint(args.z, "z");
    const pklift::LiftInstance inst(a, z, b, ring);
    pklift::OpCounter counter;
    pklift::LiftOutcome outcome;
    if (use_bach) {
        outcome = pklift::bach_lift(inst, counter);
    } else if (!args.order.empty()) {
        const mpz_class ord = parse_bigint(args.order, "order");
        outcome = pklift::lift_with_order(inst, ord, counter,
                                          args.trust_order
                                              ? pklift::OrderValidation::trusted
                                              : pklift::OrderValidation::checked);
    } else {
        outcome = pklift::lift(inst, counter);
    }

    if (!outcome.found()) {
        std::cout << "no solution\n";
        if (args.count) print_counts(counter, outcome);
        return kExitNoSolution;
    }
    std::cout << *outcome.solution << "\n";
    if (args.count) print_counts(counter, outcome);
    return kExitOk;
}

struct BenchArgs {
    std::vector<std::string> primes;
    std::vector<unsigned long> ks;
    std::size_t instances = 10;
    std::uint64_t seed = 0;
    double unsolvable_fraction = 0.0;
    std::string out_path;
};

int run_bench(const BenchArgs& args) {
    pklift::BenchSuite suite;
    for (const std::string& ptext : args.primes) {
        const mpz_class p = parse_bigint(ptext, "prime");
        if (!pklift::is_prime(p)) {
            throw pklift::contract_error(p.get_str() + " is not prime");
        }
        for (const unsigned long k : args.ks) {
            if (k < 1) throw pklift::contract_error("k must be >= 1");
            suite.grid.emplace_back(p, k);
        }
    }
    std::sort(suite.grid.begin(), suite.grid.end());
    suite.grid.erase(std::unique(suite.grid.begin(), suite.grid.end()),
                     suite.grid.end());
    suite.instances_per_point = args.instances;
    suite.seed = args.seed;
    suite.unsolvable_fraction = args.unsolvable_fraction;

    const auto records = pklift::run_suite(suite);
    pklift::emit_csv(records, args.out_path);

    struct Agg {
        double ours = 0, bach = 0, our_ns = 0, bach_ns = 0;
        std::size_t n = 0;
    };
    std::map<std::pair<mpz_class, unsigned long>, Agg> by_point;
    for (const auto& r : records) {
        Agg& agg = by_point[{r.p, r.k}];
        agg.ours += static_cast<double>(r.our_mults);
        agg.bach += static_cast<double>(r.bach_mults);
        agg.our_ns += static_cast<double>(r.our_wall_ns);
        agg.bach_ns += static_cast<double>(r.bach_wall_ns);
        ++agg.n;
    }
    std::cout << std::setw(8) << "p" << std::setw(6) << "k" << std::setw(14)
              << "mean_ours" << std::setw(14) << "mean_bach" << std::setw(10)
              << "ratio" << std::setw(14) << "ours_ns" << std::setw(14)
              << "bach_ns" << "\n";
    for (const auto& [key, agg] : by_point) {
        const double n = static_cast<double>(agg.n);
        const double ours = agg.ours / n;
        const double bach = agg.bach / n;
        std::cout << std::setw(8) << key.first.get_str() << std::setw(6)
                  << key.second << std::setw(14) << std::fixed
                  << std::setprecision(1) << ours << std::setw(14) << bach
                  << std::setw(10) << std::setprecision(2)
                  << (ours > 0 ? bach / ours : 0.0) << std::setw(14)
                  << std::setprecision(0) << agg.our_ns / n << std::setw(14)
                  << agg.bach_ns / n << "\n";
    }
    std::cout << "wrote " << records.size() << " records to " << args.out_path
              << "\n";
    return kExitOk;
}

struct VerifyArgs {
    std::uint64_t max_modulus = 1000;
    std::vector<std::uint64_t> primes{2, 3, 5, 7, 11, 13};
    std::uint64_t exhaustive_cap = 2500;
    std::uint64_t seed = 0x5eed;
    bool inject_fault = false;
};

int run_verify(const VerifyArgs& args) {
    if (args.max_modulus > pklift::kOracleBound) {
        throw pklift::contract_error("max-modulus exceeds the oracle bound");
    }
    pklift::SweepOptions opts;
    opts.max_modulus = args.max_modulus;
    opts.primes = args.primes;
    opts.exhaustive_pair_cap = args.exhaustive_cap;
    opts.seed = args.seed;
    opts.inject_fault = args.inject_fault;

    const pklift::SweepReport report = pklift::sweep_against_oracle(opts);
    std::cout << "moduli=" << report.moduli
              << " instances=" << report.instances
              << " lift_checked=" << report.lift_checked
              << " bach_checked=" << report.bach_checked
              << " order_checked=" << report.order_checked << "\n";
    if (!report.ok()) {
        std::cout << "mismatches=" << report.mismatch_count << "\n";
        for (const auto& mm : report.mismatches) {
            std::cout << "counterexample: p=" << mm.p << " k=" << mm.k
                      << " a=" << mm.a << " b=" << mm.b << " z=" << mm.z << " ("
                      << mm.what << ")\n";
        }
        return kExitMismatch;
    }
    std::cout << "all instances agree with the oracle\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"discrete logarithm lifting over prime-power moduli"};
    app.require_subcommand(1);

    LiftArgs lift_args;
    CLI::App* lift_cmd = app.add_subcommand(
        "lift", "solve a^x = b (mod p^k) given z with a^z = b (mod p)");
    lift_cmd->add_option("a", lift_args.a, "base")->required();
    lift_cmd->add_option("z", lift_args.z, "known logarithm modulo p")->required();
    lift_cmd->add_option("b", lift_args.b, "target residue")->required();
    lift_cmd->add_option("p", lift_args.p, "prime")->required();
    lift_cmd->add_option("k", lift_args.k, "exponent of the modulus")->required();
    lift_cmd->add_option("--order", lift_args.order,
                         "multiplicative order of a modulo p; yields the "
                         "minimum non-negative solution");
    lift_cmd->add_flag("--trust-order", lift_args.trust_order,
                       "skip validation of --order");
    lift_cmd->add_flag("--count", lift_args.count,
                       "print multiplication tallies");
    lift_cmd->add_flag("--p-divides", lift_args.p_divides,
                       "use the p | a side solver (z is ignored)");

    LiftArgs bach_args;
    CLI::App* bach_cmd = app.add_subcommand(
        "bach", "solve the same problem with Bach's baseline method (odd p)");
    bach_cmd->add_option("a", bach_args.a, "base")->required();
    bach_cmd->add_option("z", bach_args.z, "known logarithm modulo p")->required();
    bach_cmd->add_option("b", bach_args.b, "target residue")->required();
    bach_cmd->add_option("p", bach_args.p, "odd prime")->required();
    bach_cmd->add_option("k", bach_args.k, "exponent of the modulus")->required();
    bach_cmd->add_flag("--count", bach_args.count,
                       "print multiplication tallies");

    std::string order_a, order_m;
    CLI::App* order_cmd = app.add_subcommand(
        "order", "multiplicative order of a modulo m (brute force)");
    order_cmd->add_option("a", order_a, "element")->required();
    order_cmd->add_option("m", order_m, "modulus (at most 10^7)")->required();

    BenchArgs bench_args;
    CLI::App* bench_cmd =
        app.add_subcommand("bench", "run a seeded benchmark grid, emit CSV");
    bench_cmd->add_option("--primes", bench_args.primes, "grid primes")
        ->required()
        ->delimiter(',');
    bench_cmd->add_option("--ks", bench_args.ks, "grid exponents")
        ->required()
        ->delimiter(',');
    bench_cmd->add_option("--n", bench_args.instances, "instances per point");
    bench_cmd->add_option("--seed", bench_args.seed, "suite seed");
    bench_cmd->add_option("--unsolvable-fraction", bench_args.unsolvable_fraction,
                          "fraction of instances built to have no solution");
    bench_cmd->add_option("--out", bench_args.out_path, "CSV output path")
        ->required();

    VerifyArgs verify_args;
    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "cross-validate lift and bach against brute force");
    verify_cmd->add_option("--max-modulus", verify_args.max_modulus,
                           "largest p^k to cover");
    verify_cmd->add_option("--primes", verify_args.primes, "primes to sweep")
        ->delimiter(',');
    verify_cmd->add_option("--exhaustive-cap", verify_args.exhaustive_cap,
                           "exhaustive (a,b) coverage up to this modulus, "
                           "seeded sampling above");
    verify_cmd->add_option("--seed", verify_args.seed, "sampling seed");
    verify_cmd
        ->add_flag("--inject-fault", verify_args.inject_fault,
                   "perturb every reported solution (harness self-test)")
        ->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitError;
    }

    try {
        if (lift_cmd->parsed()) return run_lift(lift_args, false);
        if (bach_cmd->parsed()) return run_lift(bach_args, true);
        if (order_cmd->parsed()) {
            const mpz_class a = parse_bigint(order_a, "a");
            const mpz_class m = parse_bigint(order_m, "m");
            std::cout << pklift::mult_order(a, m) << "\n";
            return kExitOk;
        }
        if (bench_cmd->parsed()) return run_bench(bench_args);
        if (verify_cmd->parsed()) return run_verify(verify_args);
    } catch (const pklift::contract_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
