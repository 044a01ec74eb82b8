#include "pklift/ring.hpp"

#include <array>
#include <cstdint>

namespace pklift {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e > 0) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

bool miller_rabin_u64(std::uint64_t n, std::uint64_t witness) {
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    std::uint64_t x = powmod_u64(witness % n, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod_u64(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (n % q == 0) return n == q;
    }
    // This witness set is deterministic for every n < 2^64.
    for (std::uint64_t w : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (!miller_rabin_u64(n, w)) return false;
    }
    return true;
}

} // namespace

bool is_prime(const mpz_class& n) {
    if (n < 2) return false;
    if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64 && n.fits_ulong_p()) {
        return is_prime_u64(n.get_ui());
    }
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

unsigned long ceil_log2(const mpz_class& n) {
    if (n <= 0) throw contract_error("ceil_log2 requires n >= 1");
    if (n == 1) return 0;
    mpz_class t = n - 1;
    return mpz_sizeinbase(t.get_mpz_t(), 2);
}

mpz_class mod_floor(const mpz_class& x, const mpz_class& m) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

PrimePowerModulus::PrimePowerModulus(mpz_class p, unsigned long k,
                                     Validation validation)
    : p_(std::move(p)), k_(k) {
    if (p_ < 2) throw contract_error(p_.get_str() + " is not prime");
    if (validation == Validation::checked && !is_prime(p_)) {
        throw contract_error(p_.get_str() + " is not prime");
    }
    mpz_pow_ui(m_.get_mpz_t(), p_.get_mpz_t(), k_);
}

PrimePowerModulus PrimePowerModulus::digit_ring(const mpz_class& p) {
    PrimePowerModulus ring(p, 1, Validation::unchecked);
    ring.small_ = true;
    return ring;
}

void OpCounter::record(const PrimePowerModulus& ring) {
    if (ring.counts_small()) {
        ++small_;
        return;
    }
    const std::size_t bits = mpz_sizeinbase(ring.m().get_mpz_t(), 2);
    for (auto& [b, count] : buckets_) {
        if (b == bits) {
            ++count;
            return;
        }
    }
    buckets_.emplace_back(bits, 1);
}

std::uint64_t OpCounter::mults_mod_m() const {
    std::uint64_t total = 0;
    for (const auto& [bits, count] : buckets_) total += count;
    return total;
}

std::uint64_t OpCounter::mults_in(const PrimePowerModulus& ring) const {
    if (ring.counts_small()) return small_;
    const std::size_t bits = mpz_sizeinbase(ring.m().get_mpz_t(), 2);
    for (const auto& [b, count] : buckets_) {
        if (b == bits) return count;
    }
    return 0;
}

std::pair<unsigned long, mpz_class> valuation(const mpz_class& x,
                                              const mpz_class& p,
                                              unsigned long cap) {
    if (p < 2) throw contract_error("valuation requires p >= 2");
    if (x == 0) return {cap, mpz_class(0)};
    mpz_class h = x;
    unsigned long r = 0;
    while (r < cap && mpz_divisible_p(h.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(h.get_mpz_t(), h.get_mpz_t(), p.get_mpz_t());
        ++r;
    }
    return {r, h};
}

mpz_class mul_mod(const mpz_class& x, const mpz_class& y,
                  const PrimePowerModulus& ring, OpCounter& counter) {
    counter.record(ring);
    mpz_class r = x * y;
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), ring.m().get_mpz_t());
    return r;
}

mpz_class pow_mod(const mpz_class& base, const mpz_class& exp,
                  const PrimePowerModulus& ring, OpCounter& counter) {
    if (exp < 0) throw contract_error("pow_mod requires exp >= 0");
    const mpz_class& m = ring.m();
    if (m == 1) return mpz_class(0);
    if (exp == 0) return mpz_class(1); // 0^0 = 1 by convention
    mpz_class b = mod_floor(base, m);
    mpz_class result = b;
    const std::size_t bits = mpz_sizeinbase(exp.get_mpz_t(), 2);
    for (std::size_t i = bits - 1; i-- > 0;) {
        result = mul_mod(result, result, ring, counter);
        if (mpz_tstbit(exp.get_mpz_t(), i)) {
            result = mul_mod(result, b, ring, counter);
        }
    }
    return result;
}

std::pair<mpz_class, mpz_class> pow_dual(
    const mpz_class& base, const mpz_class& b1, const mpz_class& b2,
    const PrimePowerModulus& ring, OpCounter& counter,
    unsigned long threshold) {
    if (b1 < 0) throw contract_error("pow_dual requires b1 >= 0");
    if (b1 > b2) throw contract_error("pow_dual requires b1 <= b2");
    const mpz_class& m = ring.m();
    if (m == 1) return {mpz_class(0), mpz_class(0)};
    if (b2 <= threshold) {
        mpz_class r1 = pow_mod(base, b1, ring, counter);
        mpz_class r2 = pow_mod(base, mpz_class(b2 - b1), ring, counter);
        mpz_class combined = mul_mod(r1, r2, ring, counter);
        return {r1, combined};
    }
    mpz_class b = mod_floor(base, m);
    mpz_class r1 = 1;
    mpz_class r2 = 1;
    const std::size_t bits = mpz_sizeinbase(b2.get_mpz_t(), 2);
    for (std::size_t i = 0; i < bits; ++i) {
        if (mpz_tstbit(b1.get_mpz_t(), i)) r1 = mul_mod(r1, b, ring, counter);
        if (mpz_tstbit(b2.get_mpz_t(), i)) r2 = mul_mod(r2, b, ring, counter);
        b = mul_mod(b, b, ring, counter);
    }
    return {r1, r2};
}

} // namespace pklift
