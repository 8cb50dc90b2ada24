#include "cpcurve/hasse_witt.hpp"

#include <algorithm>
#include <cassert>

namespace cpcurve {

TargetMonomialSet target_monomials(PrimeModulus p) {
    if (p.value() <= 3) {
        throw std::domain_error("target monomials require p > 3 (V(Q, P) is singular for p = 3)");
    }
    const std::uint32_t pv = static_cast<std::uint32_t>(p.value());
    TargetMonomialSet set{p, {}};
    for (std::uint32_t r = 0; r < 4; ++r) {
        for (std::uint32_t c = 0; c < 4; ++c) {
            Exponent4 ev = {pv - 1, pv - 1, pv - 1, pv - 1};
            if (r == c) {
                ev[r] = 2 * (pv - 1);
            } else {
                ev[r] = 2 * pv - 1;
                ev[c] = pv - 2;
            }
            set.entries[4 * r + c] = ev;
        }
    }
    return set;
}

std::vector<SolutionTuple> enumerate_solutions(PrimeModulus p, const Exponent4& ev) {
    const std::int64_t p1 = static_cast<std::int64_t>(p.value()) - 1;
    const std::int64_t i = ev[0], j = ev[1], k = ev[2], l = ev[3];

    std::vector<SolutionTuple> out;
    // Necessary conditions: k = 2(a+b+e) is even, i = 3(a+c) is divisible
    // by 3, the reduced system forces 6(e+f) = l - (i + j - 3(p-1)), and
    // every monomial of (QP)^{p-1} has total degree 5(p-1).
    if (k % 2 != 0) return out;
    if (i % 3 != 0) return out;
    const std::int64_t t = i + j - 3 * p1;
    const std::int64_t lt = l - t;
    if (lt < 0 || lt % 6 != 0) return out;
    if (i + j + k + l != 5 * p1) return out;

    const std::int64_t ef = lt / 6;  // e + f
    if (ef > 2 * p1) return out;

    for (std::int64_t f = std::max<std::int64_t>(0, ef - p1); f <= std::min(ef, p1); ++f) {
        const std::int64_t e = ef - f;
        const std::int64_t cd = t + 3 * e + 2 * f;  // c + d
        if (cd < 0 || cd > 2 * p1) continue;
        for (std::int64_t d = std::max<std::int64_t>(0, cd - p1); d <= std::min(cd, p1); ++d) {
            const std::int64_t c = cd - d;
            const std::int64_t b3 = j - c - 4 * d - f;
            if (b3 < 0 || b3 % 3 != 0) continue;
            const std::int64_t b = b3 / 3;
            if (b > p1) continue;
            const std::int64_t a = p1 - b - c - d - e - f;
            if (a < 0 || a > p1) continue;
            // Candidates satisfy the reduced system; confirm the original one.
            if (3 * a + 3 * c != i) continue;
            if (2 * (a + b + e) != k) continue;
            if (c + d + 3 * e + 4 * f != l) continue;
            out.push_back({static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b),
                           static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(d),
                           static_cast<std::uint32_t>(e), static_cast<std::uint32_t>(f)});
        }
    }
    return out;
}

namespace {

/// Factorials 0!, 1!, ..., (p-1)! mod p.
std::vector<std::uint64_t> factorial_table(std::uint64_t p) {
    std::vector<std::uint64_t> fact(p);
    fact[0] = 1;
    for (std::uint64_t n = 1; n < p; ++n) fact[n] = (fact[n - 1] * n) % p;
    return fact;
}

std::uint64_t multinomial_from_table(const std::vector<std::uint64_t>& fact, PrimeModulus p,
                                     const SolutionTuple& t) {
    Fp value(fact[p.value() - 1], p);
    for (const std::uint32_t part : t) value = value / Fp(fact[part], p);
    return value.value();
}

}  // namespace

Fp multinomial_mod_p(PrimeModulus p, const SolutionTuple& t) {
    std::uint64_t sum = 0;
    for (const std::uint32_t part : t) sum += part;
    if (sum != p.value() - 1) {
        throw std::invalid_argument("multinomial components must sum to p-1 = " +
                                    std::to_string(p.value() - 1) + ", got " +
                                    std::to_string(sum));
    }
    return Fp(multinomial_from_table(factorial_table(p.value()), p, t), p);
}

Fp coefficient_via_enumeration(PrimeModulus p, const Exponent4& ev) {
    const std::vector<SolutionTuple> solutions = enumerate_solutions(p, ev);
    if (solutions.empty()) return Fp(0, p);

    const std::vector<std::uint64_t> fact = factorial_table(p.value());
    // Powers of two by repeated doubling; c+d+f <= p-1.
    std::vector<std::uint64_t> pow2(p.value());
    pow2[0] = 1;
    for (std::uint64_t n = 1; n < p.value(); ++n) pow2[n] = (pow2[n - 1] * 2) % p.value();

    Fp acc(0, p);
    for (const SolutionTuple& t : solutions) {
        const std::uint64_t doubles = std::uint64_t{t[2]} + t[3] + t[5];  // c + d + f
        assert(doubles < p.value());
        acc += Fp(pow2[doubles], p) * Fp(multinomial_from_table(fact, p, t), p);
    }
    return acc;
}

SparsePoly expand_qp_power(PrimeModulus p, std::uint64_t gate) {
    if (p.value() > gate) {
        throw std::invalid_argument("expansion of (QP)^(p-1) for p = " + std::to_string(p.value()) +
                                    " is too large; the expansion gate is p <= " +
                                    std::to_string(gate));
    }
    const CurveDefinition curve = make_curve(p);
    return (curve.quadric * curve.cubic).pow(p.value() - 1);
}

Fp coefficient_via_expansion(PrimeModulus p, const Exponent4& ev, std::uint64_t gate) {
    return expand_qp_power(p, gate).coeff(ev);
}

SuperspecialReport is_superspecial(PrimeModulus p) {
    if (p.value() == 3) {
        throw std::domain_error("p = 3: every point of V(Q, P) is singular, so the "
                                "superspeciality criterion does not apply");
    }
    const TargetMonomialSet targets = target_monomials(p);

    SuperspecialReport report;
    report.p = p.value();
    report.superspecial = true;
    for (const Exponent4& ev : targets.entries) {
        const Fp c = coefficient_via_enumeration(p, ev);
        report.coefficients.emplace_back(ev, c.value());
        report.superspecial &= c.is_zero();
    }
    report.predicted = (p.value() % 3 == 2);
    report.agrees = (report.superspecial == report.predicted);
    return report;
}

}  // namespace cpcurve
