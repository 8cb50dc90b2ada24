#pragma once

#include <cstdint>

#include "cpcurve/ff.hpp"

namespace cpcurve {

/// Genus of the smooth quadric-cubic intersection in P^3.
inline constexpr int kGenus = 4;

/// Largest p for which the projective brute-force count is attempted
/// (P^3(F_{169}) already has ~4.9 million points).
inline constexpr std::uint64_t kDefaultBruteGate = 13;

/// Cube-root counting uses a precomputed table of cubes when q <= this.
inline constexpr std::uint64_t kDefaultCubeTableGate = 1'000'000;

enum class Classification { Maximal, Minimal, Neither };
enum class CountMethod { Fast, Brute };

struct PointCountRecord {
    std::uint64_t p;
    std::uint64_t q;          ///< p^2
    std::uint64_t count;      ///< #C_p(F_q)
    std::int64_t hw_upper;    ///< q + 1 + 8p  (2g*sqrt(q) = 8p for g = 4)
    std::int64_t hw_lower;    ///< q + 1 - 8p
    Classification classification;
    CountMethod method;
};

/// Visits the q+1 points of the conic 2yw + z^2 = 0 in the (y:z:w)-plane via
/// the fixed representatives (1:0:0) and (-t^2/2 : t : 1) for t in F_q.
template <class Fn>
void for_each_conic_point(const ExtField& field, Fn&& fn) {
    fn(field.one(), field.zero(), field.zero());
    const Fp2 neg_half = field.from_base(-Fp(2, field.modulus()).inverse());
    for (std::uint64_t idx = 0; idx < field.q(); ++idx) {
        const Fp2 t = field.element_at(idx);
        fn(t * t * neg_half, t, field.one());
    }
}

/// O(q) point count over F_{p^2}: the quadric 2yw + z^2 does not involve x
/// (a cone over a conic with vertex (1:0:0:0), which is not on the curve),
/// so every curve point projects to one of the q+1 conic representatives and
/// contributes one point per cube root of -(y^3 + w^3).
PointCountRecord count_points_fast(PrimeModulus p,
                                   std::uint64_t cube_table_gate = kDefaultCubeTableGate);

/// Independent oracle: enumerates all of P^3(F_{p^2}) with first nonzero
/// coordinate normalized to 1 and counts common zeros of Q and P.
/// Throws std::invalid_argument for p above the gate.
PointCountRecord count_points_brute(PrimeModulus p, std::uint64_t gate = kDefaultBruteGate);

/// Fills the classification by exact comparison with the Hasse-Weil bounds.
/// For p > 3 a count outside [hw_lower, hw_upper] violates the bounds for a
/// smooth genus-4 curve and raises std::logic_error.
PointCountRecord classify(PointCountRecord record);

}  // namespace cpcurve
