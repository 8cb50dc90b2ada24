#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "cpcurve/geometry.hpp"
#include "cpcurve/mpoly.hpp"

namespace cpcurve {

/// Largest p for which the literal expansion of (QP)^{p-1} is attempted.
inline constexpr std::uint64_t kDefaultExpansionGate = 13;

/// A sextuple (a, b, c, d, e, f) in [0, p-1]^6 with a+b+c+d+e+f = p-1 that
/// contributes the term 2^{c+d+f} * (p-1 choose a,b,c,d,e,f) to the
/// coefficient of x^{3a+3c} y^{3b+c+4d+f} z^{2a+2b+2e} w^{c+d+3e+4f}
/// in the multinomial expansion of (QP)^{p-1}.
using SolutionTuple = std::array<std::uint32_t, 6>;

/// The 16 monomials of degree 5(p-1) whose coefficients in (QP)^{p-1} decide
/// superspeciality, in row-major order: entry (r, c) doubles variable r
/// (exponent 2(p-1)) on the diagonal, and off the diagonal gives variable r
/// exponent 2p-1 and variable c exponent p-2, every other exponent p-1.
struct TargetMonomialSet {
    PrimeModulus p;
    std::array<Exponent4, 16> entries;
};

/// Requires p > 3; throws std::domain_error otherwise.
TargetMonomialSet target_monomials(PrimeModulus p);

/// The complete solution set S(i,j,k,l) of the exponent-matching linear
/// system for the monomial x^i y^j z^k w^l. Enumerates at most two free
/// variables (f, then d) after fixing e+f and c+d from the reduced system;
/// returns empty immediately when k is odd, 3 does not divide i, or
/// 6 does not divide l - (i + j - 3(p-1)).
std::vector<SolutionTuple> enumerate_solutions(PrimeModulus p, const Exponent4& ev);

/// (p-1)! / (a! b! c! d! e! f!) mod p. All arguments are below p, so direct
/// factorial arithmetic mod p is exact. Throws std::invalid_argument unless
/// the components sum to p-1.
Fp multinomial_mod_p(PrimeModulus p, const SolutionTuple& t);

/// Coefficient of x^i y^j z^k w^l in (QP)^{p-1}, as the sum over S(i,j,k,l)
/// of 2^{c+d+f} times the multinomial coefficient. Works for any p.
Fp coefficient_via_enumeration(PrimeModulus p, const Exponent4& ev);

/// (QP)^{p-1} by literal sparse-polynomial exponentiation. Dense results
/// have on the order of p^3 terms, so the expansion is refused above the
/// gate; use the enumeration path for larger p.
SparsePoly expand_qp_power(PrimeModulus p, std::uint64_t gate = kDefaultExpansionGate);

/// Independent oracle for coefficient_via_enumeration: reads the coefficient
/// off the literal expansion. Throws std::invalid_argument above the gate.
Fp coefficient_via_expansion(PrimeModulus p, const Exponent4& ev,
                             std::uint64_t gate = kDefaultExpansionGate);

struct SuperspecialReport {
    std::uint64_t p;
    /// The 16 (exponent vector, coefficient mod p) pairs in target order.
    std::vector<std::pair<Exponent4, std::uint64_t>> coefficients;
    bool superspecial;   ///< all 16 coefficients vanish
    bool predicted;      ///< p = 2 (mod 3)
    bool agrees;         ///< superspecial == predicted; false flags a bug
};

/// Decides superspeciality of C_p by evaluating all 16 target coefficients
/// via enumeration. Requires p > 3: for p = 3 every point of V(Q, P) is
/// singular and the criterion does not apply (std::domain_error).
SuperspecialReport is_superspecial(PrimeModulus p);

}  // namespace cpcurve
