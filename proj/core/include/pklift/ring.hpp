#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "pklift/errors.hpp"

namespace pklift {

/// Primality test: deterministic Miller-Rabin below 2^64, probabilistic
/// (fixed number of rounds) above.
bool is_prime(const mpz_class& n);

/// ceil(log2(n)) for n >= 1.
unsigned long ceil_log2(const mpz_class& n);

/// Floor-modulus: result in [0, m) for m > 0, regardless of the sign of x.
mpz_class mod_floor(const mpz_class& x, const mpz_class& m);

/// The ring Z/p^k with p prime and k >= 0. Caches m = p^k.
///
/// Construction validates primality of p by default; pass
/// Validation::unchecked to skip (the arithmetic itself never requires
/// primality, but every algorithm built on top of this ring does).
class PrimePowerModulus {
public:
    enum class Validation { checked, unchecked };

    PrimePowerModulus(mpz_class p, unsigned long k,
                      Validation validation = Validation::checked);

    /// The ring Z/p used for single-digit computations. Multiplications in
    /// it are tallied in the small-modulus bucket of OpCounter.
    static PrimePowerModulus digit_ring(const mpz_class& p);

    const mpz_class& p() const { return p_; }
    unsigned long k() const { return k_; }
    const mpz_class& m() const { return m_; }
    bool counts_small() const { return small_; }

private:
    mpz_class p_;
    unsigned long k_;
    mpz_class m_;
    bool small_ = false;
};

/// Multiplication tally for one algorithm run.
///
/// Counts are keyed by the bit size of the modulus they were performed
/// under, with a separate bucket for single-digit (mod p) work. Squarings
/// count as multiplications. Multiplications by pure powers of p and exact
/// divisions by powers of p are never tallied. A fresh counter starts at
/// zero and counts are monotone non-decreasing (there is no reset).
class OpCounter {
public:
    /// Tally one multiplication performed in the given ring.
    void record(const PrimePowerModulus& ring);

    /// Multiplications performed under full-size moduli (all buckets).
    std::uint64_t mults_mod_m() const;

    /// Multiplications mod p or other single-digit moduli.
    std::uint64_t mults_mod_small() const { return small_; }

    /// Multiplications performed under the given ring's modulus only.
    std::uint64_t mults_in(const PrimePowerModulus& ring) const;

    std::uint64_t total() const { return mults_mod_m() + small_; }

private:
    std::uint64_t small_ = 0;
    std::vector<std::pair<std::size_t, std::uint64_t>> buckets_; // (modulus bits, count)
};

/// Small-exponent cutoff below which pow_dual falls back to a pair of
/// plain exponentiations.
inline constexpr unsigned long kPowDualSmallExponentThreshold = 15;

/// (r, h) with r = min(v_p(x), cap) and x = h * p^r exactly.
/// x = 0 yields (cap, 0).
std::pair<unsigned long, mpz_class> valuation(const mpz_class& x,
                                              const mpz_class& p,
                                              unsigned long cap);

/// x * y mod m; tallies exactly one multiplication.
mpz_class mul_mod(const mpz_class& x, const mpz_class& y,
                  const PrimePowerModulus& ring, OpCounter& counter);

/// base^exp mod m by square-and-multiply, msb first; exp >= 0.
/// Tallies at most 2*ceil(log2(exp)) multiplications; exp = 0 gives
/// 1 mod m (with the convention 0^0 = 1).
mpz_class pow_mod(const mpz_class& base, const mpz_class& exp,
                  const PrimePowerModulus& ring, OpCounter& counter);

/// (base^b1 mod m, base^b2 mod m) for 0 <= b1 <= b2 in one shared squaring
/// chain; at most 3*ceil(log2(b2)) + 2 multiplications on the chain path.
/// Exponents at most `threshold` use two plain exponentiations instead.
std::pair<mpz_class, mpz_class> pow_dual(
    const mpz_class& base, const mpz_class& b1, const mpz_class& b2,
    const PrimePowerModulus& ring, OpCounter& counter,
    unsigned long threshold = kPowDualSmallExponentThreshold);

} // namespace pklift
