#include "pklift/oracle.hpp"

#include <limits>
#include <numeric>

#include "pklift/errors.hpp"

namespace pklift {

namespace {

constexpr std::uint32_t kAbsent = std::numeric_limits<std::uint32_t>::max();

std::uint64_t to_u64_checked(const mpz_class& m, std::uint64_t bound,
                             const char* what) {
    if (m < 1) throw contract_error(std::string(what) + " must be positive");
    if (!m.fits_ulong_p() || m.get_ui() > bound) {
        throw contract_error(std::string(what) + " exceeds the oracle bound");
    }
    return m.get_ui();
}

} // namespace

PowerCycle::PowerCycle(std::uint64_t base, std::uint64_t modulus)
    : modulus_(modulus) {
    if (modulus == 0) throw contract_error("modulus must be positive");
    if (modulus >= (std::uint64_t{1} << 32)) {
        throw contract_error("modulus exceeds the oracle bound");
    }
    base %= modulus;
    if (std::gcd(base, modulus) != 1 && modulus != 1) {
        throw contract_error("gcd(a, m) != 1");
    }
    first_index_.assign(modulus, kAbsent);
    std::uint64_t v = 1 % modulus;
    std::uint64_t e = 0;
    do {
        cycle_.push_back(v);
        first_index_[v] = static_cast<std::uint32_t>(e);
        v = (v * base) % modulus;
        ++e;
    } while (v != 1 % modulus);
    order_ = e;
}

std::optional<std::uint64_t> PowerCycle::dlog(std::uint64_t target) const {
    target %= modulus_;
    const std::uint32_t idx = first_index_[target];
    if (idx == kAbsent) return std::nullopt;
    return static_cast<std::uint64_t>(idx);
}

SolutionSet brute_dlog(const mpz_class& a, const mpz_class& b,
                       const PrimePowerModulus& ring, std::uint64_t bound) {
    const std::uint64_t m = to_u64_checked(ring.m(), bound, "modulus");
    if (mpz_divisible_p(a.get_mpz_t(), ring.p().get_mpz_t())) {
        throw contract_error("p divides a");
    }
    const std::uint64_t an = mod_floor(a, ring.m()).get_ui();
    const std::uint64_t bn = mod_floor(b, ring.m()).get_ui();
    const PowerCycle cycle(an, m);
    SolutionSet out;
    out.modulus = m;
    out.base = an;
    out.target = bn;
    out.minimal_x = cycle.dlog(bn);
    out.period = cycle.order();
    return out;
}

std::uint64_t mult_order(const mpz_class& a, const mpz_class& m,
                         std::uint64_t bound) {
    const std::uint64_t mm = to_u64_checked(m, bound, "modulus");
    if (mm == 1) return 1;
    const std::uint64_t an = mod_floor(a, m).get_ui();
    if (std::gcd(an, mm) != 1) throw contract_error("gcd(a, m) != 1");
    std::uint64_t v = an;
    std::uint64_t ord = 1;
    while (v != 1) {
        v = (v * an) % mm;
        ++ord;
    }
    return ord;
}

} // namespace pklift
