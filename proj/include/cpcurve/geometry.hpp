#pragma once

#include <array>
#include <string>
#include <vector>

#include "cpcurve/mpoly.hpp"

namespace cpcurve {

/// The curve C_p = V(Q, P) in P^3 over F_p: the intersection of the quadric
/// Q = 2yw + z^2 with the cubic P = x^3 + y^3 + w^3. Smooth for p > 3, in
/// which case it is a nonhyperelliptic curve of genus 4.
struct CurveDefinition {
    PrimeModulus p;
    SparsePoly quadric;
    SparsePoly cubic;
};

CurveDefinition make_curve(PrimeModulus p);

/// The six 2x2 minors of the 2x4 Jacobian matrix of (P, Q), taken over the
/// variable pairs (x,y), (x,z), (x,w), (y,z), (y,w), (z,w) in that order:
///   f1 = 6x^2w, f2 = 6x^2z, f3 = 6x^2y, f4 = 6y^2z, f5 = 6y^3 - 6w^3,
///   f6 = -6zw^2   (all reduced mod p; identically zero when p = 3).
struct MinorSet {
    std::array<SparsePoly, 6> f;
};

MinorSet jacobian_minors(const CurveDefinition& defn);

/// One verified combination expressing a pure power of a variable inside the
/// ideal <P, Q, minors>. `residual` is lhs - target and must be zero.
struct CertificateIdentity {
    std::string combination;
    SparsePoly target;
    SparsePoly residual;
    bool ok;
};

/// Radical-membership certificate: x^5, 2y^4, z^5, 2w^4 all lie in the ideal
/// generated by P, Q and the Jacobian minors, so the singular locus is empty
/// for p > 3. `f5_plus_sign` records which sign on the 6^{-1}*y*f5 term made
/// the second identity close (the minus variant leaves 2yw^3 - 2y^4).
struct CertificateReport {
    std::uint64_t p;
    std::vector<CertificateIdentity> identities;
    bool f5_plus_sign;
    bool all_ok;
};

/// Symbolically verifies the four identities over F_p. Requires p > 3
/// (6 must be invertible); throws std::domain_error otherwise.
CertificateReport verify_smoothness_certificate(const CurveDefinition& defn);

}  // namespace cpcurve
