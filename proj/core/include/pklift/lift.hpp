#pragma once

#include <optional>

#include <gmpxx.h>

#include "pklift/ring.hpp"

namespace pklift {

/// One lifting problem: given z with a^z = b (mod p), find x with
/// a^x = b (mod p^k).
///
/// Construction normalizes the inputs (floor-mod semantics, so negative
/// and oversized values are accepted): 0 <= a, b < p^k and
/// 0 <= z < p - 1 (z = 0 when p = 2). It rejects p | a and a^z != b
/// (mod p) with contract_error; both checks use the original values, so
/// k = 0 instances validate correctly.
class LiftInstance {
public:
    LiftInstance(const mpz_class& a, const mpz_class& z, const mpz_class& b,
                 PrimePowerModulus ring);

    const mpz_class& a() const { return a_; }
    const mpz_class& z() const { return z_; }
    const mpz_class& b() const { return b_; }
    const PrimePowerModulus& ring() const { return ring_; }

private:
    PrimePowerModulus ring_;
    mpz_class a_;
    mpz_class z_;
    mpz_class b_;
};

/// Result of a lifting run.
struct LiftOutcome {
    /// A non-negative exponent with a^x = b (mod p^k), or absent when no
    /// solution exists (a normal outcome, not an error).
    std::optional<mpz_class> solution;

    /// min(v_p(a^(p-1) - 1), k) for odd p; min(v_2(a^2 - 1), k) for p = 2.
    /// The first r base-p digits of b are fixed by the instance.
    unsigned long r = 0;

    /// Number of main-loop passes; at most k - r when a solution exists.
    unsigned long iterations = 0;

    /// Counter totals at return.
    OpCounter counter_snapshot;

    bool found() const { return solution.has_value(); }
};

/// Main-loop strategy. `optimized` dispatches each iteration to a linear
/// or quadratic binomial shortcut when the matched level allows it;
/// `always_pow_dual` forces the generic dual-exponentiation update on
/// every iteration. Both produce identical solutions and iteration counts
/// (the shortcuts are pure cost optimizations); the knob exists so tests
/// can prove that.
enum class LoopPolicy { optimized, always_pow_dual };

/// Lift a discrete logarithm known modulo p to a solution modulo p^k.
///
/// Returns x = (p-1)*y + z where y >= 0 is built one base-p digit per
/// iteration, or no-solution. k = 0 returns x = z. The returned x is the
/// minimum non-negative solution when ord_p(a) = p - 1 (always for p = 2);
/// otherwise only the stated form is guaranteed — use lift_with_order for
/// minimality.
LiftOutcome lift(const LiftInstance& inst, OpCounter& counter,
                 LoopPolicy policy = LoopPolicy::optimized);

enum class OrderValidation { checked, trusted };

/// Same as lift but with the multiplicative order of a modulo p supplied
/// by the caller in place of p - 1: z is reduced mod ord and the result is
/// x = ord*y + z, which satisfies 0 <= x < ord_{p^k}(a) and is the minimum
/// non-negative solution.
///
/// `checked` verifies ord | p-1 and a^ord = 1 (mod p), and recomputes the
/// exact order when p is small enough to enumerate; `trusted` skips all of
/// it. A wrong order under `trusted` produces garbage, not an error.
LiftOutcome lift_with_order(const LiftInstance& inst, const mpz_class& ord_p_a,
                            OpCounter& counter,
                            OrderValidation validation = OrderValidation::checked,
                            LoopPolicy policy = LoopPolicy::optimized);

/// The complementary side case p | a: the minimum x >= 0 with
/// a^x = b (mod p^k), or no-solution. No known logarithm is needed:
/// b = 1 (mod p^k) gives x = 0; b = 0 (mod p^k) gives the smallest x with
/// x * v_p(a) >= k; otherwise the valuation equation x * v_p(a) = v_p(b)
/// pins the only candidate, which is verified by direct exponentiation.
std::optional<mpz_class> lift_p_divides_a(const mpz_class& a, const mpz_class& b,
                                          const PrimePowerModulus& ring);

} // namespace pklift
