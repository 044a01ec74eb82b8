#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "pklift/ring.hpp"

namespace pklift {

/// Largest modulus the brute-force oracle will touch. The oracle is
/// intentionally naive (plain enumeration, no shared machinery with the
/// lifting algorithms) so it cannot share their bugs.
inline constexpr std::uint64_t kOracleBound = 10'000'000;

/// The full cycle a^0, a^1, ... modulo m for gcd(a, m) = 1, with a dense
/// first-occurrence index so discrete logs are O(1) lookups.
class PowerCycle {
public:
    PowerCycle(std::uint64_t base, std::uint64_t modulus);

    std::uint64_t order() const { return order_; }
    std::uint64_t value_at(std::uint64_t e) const { return cycle_[e]; }

    /// Minimal x >= 0 with base^x = target (mod modulus), if any.
    std::optional<std::uint64_t> dlog(std::uint64_t target) const;

private:
    std::uint64_t modulus_;
    std::uint64_t order_ = 0;
    std::vector<std::uint64_t> cycle_;
    std::vector<std::uint32_t> first_index_;
};

/// Exhaustively determined solution set of a^x = b (mod p^k).
/// When minimal_x is present the full set is {minimal_x + t*period, t >= 0};
/// otherwise there are no solutions at all.
struct SolutionSet {
    std::uint64_t modulus = 0;
    std::uint64_t base = 0;
    std::uint64_t target = 0;
    std::optional<std::uint64_t> minimal_x;
    std::uint64_t period = 0; // ord_{p^k}(a)

    bool solvable() const { return minimal_x.has_value(); }
};

/// Brute-force discrete log over Z/p^k: iterates the powers of a, returns
/// the minimal exponent hitting b (if any) plus the multiplicative order.
/// Refuses moduli above `bound` and requires p not dividing a.
SolutionSet brute_dlog(const mpz_class& a, const mpz_class& b,
                       const PrimePowerModulus& ring,
                       std::uint64_t bound = kOracleBound);

/// ord_m(a) by iteration; requires gcd(a, m) = 1 and m <= bound.
std::uint64_t mult_order(const mpz_class& a, const mpz_class& m,
                         std::uint64_t bound = kOracleBound);

} // namespace pklift
