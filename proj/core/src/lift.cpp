#include "pklift/lift.hpp"

#include <cassert>
#include <tuple>

#include "pklift/oracle.hpp"

namespace pklift {

namespace {

bool congruent(const mpz_class& x, const mpz_class& y, const mpz_class& mod) {
    return mpz_congruent_p(x.get_mpz_t(), y.get_mpz_t(), mod.get_mpz_t()) != 0;
}

#ifndef NDEBUG
bool solves(const mpz_class& a, const mpz_class& x, const mpz_class& b,
            const mpz_class& m) {
    mpz_class got;
    mpz_powm(got.get_mpz_t(), a.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return got == mod_floor(b, m);
}
#endif

// Builds x = order*y + z one base-p digit of y per iteration. `order` is
// p - 1 for the plain entry point, the exact mod-p order of a for the
// minimal variant; for p = 2 both are 1 and the first binary digit of y is
// chosen directly from b instead of by the digit formula.
LiftOutcome engine(const LiftInstance& inst, const mpz_class& order,
                   OpCounter& counter, LoopPolicy policy) {
    const PrimePowerModulus& ring = inst.ring();
    const mpz_class& p = ring.p();
    const mpz_class& m = ring.m();
    const unsigned long k = ring.k();
    const mpz_class z = mod_floor(inst.z(), order);

    LiftOutcome out;
    if (k == 0) {
        out.solution = z;
        out.counter_snapshot = counter;
        return out;
    }

    const mpz_class& a = inst.a();
    const mpz_class& b = inst.b();

    mpz_class cur = pow_mod(a, z, ring, counter);
    mpz_class digits = 0;
    mpz_class weight; // scale of the next digit of y
    mpz_class step;   // a^(order * p^j), the factor one digit increment applies
    if (p == 2) {
        weight = 2;
        step = pow_mod(a, mpz_class(2), ring, counter);
    } else {
        weight = 1;
        step = pow_mod(a, order, ring, counter);
    }

    const auto [r, tail] = valuation(mpz_class(step - 1), p, k);
    out.r = r;
    unsigned long level = r; // digits of b matched so far
    mpz_class level_pow;
    mpz_pow_ui(level_pow.get_mpz_t(), p.get_mpz_t(), r);

    // The first `level` digits of cur never change, so they decide
    // solvability outright; for p = 2 the first digit of y can still
    // rescue the match.
    if (!congruent(b, cur, level_pow)) {
        if (p != 2 || !congruent(b, a, level_pow)) {
            out.counter_snapshot = counter;
            return out;
        }
        cur = a;
        digits = 1;
    }

    if (b != cur) {
        const PrimePowerModulus digit_ring = PrimePowerModulus::digit_ring(p);
        const mpz_class hb = mul_mod(mod_floor(tail, p), mod_floor(b, p),
                                     digit_ring, counter);
        const mpz_class digit_inv =
            pow_mod(hb, mpz_class(p - 2), digit_ring, counter);
        const mpz_class p_pair_half = p * (p - 1) / 2; // exact, = 1 for p = 2
        mpz_class diff, digit, w, t, advance;
        while (b != cur) {
            if (++out.iterations > k) {
                throw internal_error("lift exceeded its iteration bound");
            }
            diff = b - cur;
            mpz_divexact(diff.get_mpz_t(), diff.get_mpz_t(),
                         level_pow.get_mpz_t());
            digit = mul_mod(digit_inv, mod_floor(diff, p), digit_ring, counter);
            digits += digit * weight;
            w = step - 1;
            if (policy == LoopPolicy::optimized && 2 * level >= k) {
                advance = mod_floor(1 + mul_mod(w, digit, ring, counter), m);
                step = mod_floor(1 + w * p, m);
            } else if (policy == LoopPolicy::optimized && 3 * level >= k) {
                t = mul_mod(w, mpz_class(digit * (digit - 1) / 2), ring, counter);
                advance = mod_floor(
                    1 + mul_mod(w, mod_floor(digit + t, m), ring, counter), m);
                t = mul_mod(w, p_pair_half, ring, counter);
                step = mod_floor(
                    1 + mul_mod(w, mod_floor(p + t, m), ring, counter), m);
            } else {
                std::tie(advance, step) = pow_dual(step, digit, p, ring, counter);
            }
            cur = mul_mod(cur, advance, ring, counter);
            weight *= p;
            level_pow *= p;
            ++level;
            assert(congruent(b, cur, level_pow));
        }
    }

    counter.record(ring); // the final order * y product
    mpz_class x = order * digits + z;
    assert(solves(a, x, b, m));
    out.solution = std::move(x);
    out.counter_snapshot = counter;
    return out;
}

} // namespace

LiftInstance::LiftInstance(const mpz_class& a, const mpz_class& z,
                           const mpz_class& b, PrimePowerModulus ring)
    : ring_(std::move(ring)) {
    const mpz_class& p = ring_.p();
    if (mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t())) {
        throw contract_error("precondition failed: p divides a");
    }
    z_ = p == 2 ? mpz_class(0) : mod_floor(z, mpz_class(p - 1));
    mpz_class lhs;
    mpz_powm(lhs.get_mpz_t(), a.get_mpz_t(), z_.get_mpz_t(), p.get_mpz_t());
    if (lhs != mod_floor(b, p)) {
        throw contract_error("precondition failed: a^z != b (mod p)");
    }
    a_ = mod_floor(a, ring_.m());
    b_ = mod_floor(b, ring_.m());
}

LiftOutcome lift(const LiftInstance& inst, OpCounter& counter,
                 LoopPolicy policy) {
    return engine(inst, mpz_class(inst.ring().p() - 1), counter, policy);
}

LiftOutcome lift_with_order(const LiftInstance& inst, const mpz_class& ord_p_a,
                            OpCounter& counter, OrderValidation validation,
                            LoopPolicy policy) {
    if (ord_p_a < 1) throw contract_error("order must be positive");
    const mpz_class& p = inst.ring().p();
    if (validation == OrderValidation::checked) {
        if (!mpz_divisible_p(mpz_class(p - 1).get_mpz_t(), ord_p_a.get_mpz_t())) {
            throw contract_error("order does not divide p - 1");
        }
        mpz_class chk;
        mpz_powm(chk.get_mpz_t(), inst.a().get_mpz_t(), ord_p_a.get_mpz_t(),
                 p.get_mpz_t());
        if (chk != 1) {
            throw contract_error("a^order != 1 (mod p)");
        }
        if (p <= (1u << 20) && mult_order(inst.a(), p) != ord_p_a) {
            throw contract_error("order is not the multiplicative order of a mod p");
        }
    }
    return engine(inst, ord_p_a, counter, policy);
}

std::optional<mpz_class> lift_p_divides_a(const mpz_class& a, const mpz_class& b,
                                          const PrimePowerModulus& ring) {
    const mpz_class& p = ring.p();
    const unsigned long k = ring.k();
    if (!mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t())) {
        throw contract_error("p does not divide a");
    }
    if (k == 0) return mpz_class(0);
    const mpz_class an = mod_floor(a, ring.m());
    const mpz_class bn = mod_floor(b, ring.m());
    if (bn == 1) return mpz_class(0); // empty product
    const auto [va, unit_a] = valuation(an, p, k);
    if (bn == 0) {
        // smallest x with x * v_p(a) >= k
        return mpz_class((k + va - 1) / va);
    }
    const auto [vb, unit_b] = valuation(bn, p, k); // vb < k since 0 < bn < p^k
    if (vb % va != 0) return std::nullopt;
    const mpz_class x0(vb / va);
    mpz_class got;
    mpz_powm(got.get_mpz_t(), an.get_mpz_t(), x0.get_mpz_t(),
             ring.m().get_mpz_t());
    if (got != bn) return std::nullopt;
    return x0;
}

} // namespace pklift
