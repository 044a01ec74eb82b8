#include "pklift/bach.hpp"

#include <optional>

namespace pklift {

namespace {

// Repeated squaring with an unconditional multiply step: the tally depends
// only on the exponent's bit length, never on its bit pattern, which keeps
// the method's cost identical across inputs of the same (p, k).
mpz_class pow_mod_uniform(const mpz_class& base, const mpz_class& exp,
                          const PrimePowerModulus& ring, OpCounter& counter) {
    const mpz_class& m = ring.m();
    if (m == 1) return mpz_class(0);
    if (exp == 0) return mpz_class(1);
    const mpz_class b = mod_floor(base, m);
    mpz_class result = b;
    mpz_class candidate;
    const std::size_t bits = mpz_sizeinbase(exp.get_mpz_t(), 2);
    for (std::size_t i = bits - 1; i-- > 0;) {
        result = mul_mod(result, result, ring, counter);
        candidate = mul_mod(result, b, ring, counter);
        if (mpz_tstbit(exp.get_mpz_t(), i)) result = candidate;
    }
    return result;
}

void require_bach_ring(const PrimePowerModulus& ring) {
    if (ring.p() == 2) throw contract_error("p = 2 is not supported");
    if (ring.k() < 1) throw contract_error("k must be >= 1");
}

} // namespace

PrimePowerModulus theta_ring(const PrimePowerModulus& ring) {
    require_bach_ring(ring);
    return PrimePowerModulus(ring.p(), 2 * ring.k() - 1,
                             PrimePowerModulus::Validation::unchecked);
}

ThetaValue theta(const mpz_class& x, const PrimePowerModulus& ring,
                 OpCounter& counter) {
    require_bach_ring(ring);
    const mpz_class& p = ring.p();
    if (mpz_divisible_p(x.get_mpz_t(), p.get_mpz_t())) {
        throw contract_error("p divides x");
    }
    const PrimePowerModulus wide = theta_ring(ring);
    mpz_class q; // p^(k-1)
    mpz_pow_ui(q.get_mpz_t(), p.get_mpz_t(), ring.k() - 1);
    const mpz_class exponent = (p - 1) * q;
    mpz_class t = pow_mod_uniform(x, exponent, wide, counter);
    t -= 1; // divisible by p^k by Fermat-Euler
    mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), ring.m().get_mpz_t());
    return ThetaValue{mod_floor(t, q)};
}

LiftOutcome bach_lift(const LiftInstance& inst, OpCounter& counter) {
    const PrimePowerModulus& ring = inst.ring();
    require_bach_ring(ring);
    const mpz_class& p = ring.p();

    const mpz_class ta = theta(inst.a(), ring, counter).value;
    const mpz_class tb = theta(inst.b(), ring, counter).value;
    mpz_class q; // p^(k-1)
    mpz_pow_ui(q.get_mpz_t(), p.get_mpz_t(), ring.k() - 1);

    // Smallest non-negative y with ta * y = tb (mod q), if any.
    std::optional<mpz_class> y;
    if (q == 1) {
        y = mpz_class(0);
    } else {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), ta.get_mpz_t(), q.get_mpz_t());
        if (tb % g == 0) {
            const mpz_class qg = q / g;
            if (qg == 1) {
                y = mpz_class(0);
            } else {
                mpz_class inv;
                if (mpz_invert(inv.get_mpz_t(), mpz_class(ta / g).get_mpz_t(),
                               qg.get_mpz_t()) == 0) {
                    throw internal_error("reduced coefficient not invertible");
                }
                y = mod_floor((tb / g) * inv, qg);
            }
        }
    }

    LiftOutcome out;
    out.counter_snapshot = counter;
    if (!y) return out;

    const mpz_class phi = (p - 1) * q;
    mpz_class x = mod_floor((inst.z() - *y) * q + *y, phi);
    mpz_class chk;
    mpz_powm(chk.get_mpz_t(), inst.a().get_mpz_t(), x.get_mpz_t(),
             ring.m().get_mpz_t());
    if (chk != inst.b()) {
        throw internal_error("bach_lift produced an invalid solution");
    }
    out.solution = std::move(x);
    out.counter_snapshot = counter;
    return out;
}

} // namespace pklift
