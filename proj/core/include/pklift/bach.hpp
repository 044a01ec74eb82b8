#pragma once

#include <gmpxx.h>

#include "pklift/lift.hpp"
#include "pklift/ring.hpp"

namespace pklift {

/// theta(x) = (x^((p-1)p^(k-1)) - 1) / p^k mod p^(k-1), the numerator
/// computed modulo p^(2k-1). A group homomorphism (Z/p^k)* -> Z/p^(k-1).
struct ThetaValue {
    mpz_class value;
};

/// The ring Z/p^(2k-1) that theta's exponentiation runs in. Exposed so
/// callers can read the matching counter bucket.
PrimePowerModulus theta_ring(const PrimePowerModulus& ring);

/// Requires p odd, p not dividing x, k >= 1. The two exponentiations
/// dominate; their multiplications land in the p^(2k-1) bucket of the
/// counter and their number depends only on (p, k), never on x.
ThetaValue theta(const mpz_class& x, const PrimePowerModulus& ring,
                 OpCounter& counter);

/// Bach's lifting method (Bach, 1984), used as an independent baseline:
/// computes theta(a) and theta(b), solves theta(a)*y = theta(b)
/// (mod p^(k-1)) by gcd reduction (smallest non-negative y), and returns
/// x = ((z-y)*p^(k-1) + y) mod (p-1)p^(k-1), or no-solution when the
/// congruence has none. Requires p odd and k >= 1. Every returned x is
/// checked against a^x = b (mod p^k) before returning; a failed check
/// throws internal_error. The full theta cost is paid whether or not a
/// solution exists. r and iterations in the outcome are always 0.
LiftOutcome bach_lift(const LiftInstance& inst, OpCounter& counter);

} // namespace pklift
