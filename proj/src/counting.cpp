#include "cpcurve/counting.hpp"

#include <vector>

#include "cpcurve/geometry.hpp"

namespace cpcurve {

namespace {

PointCountRecord make_record(PrimeModulus p, std::uint64_t count, CountMethod method) {
    const std::uint64_t q = p.value() * p.value();
    PointCountRecord record;
    record.p = p.value();
    record.q = q;
    record.count = count;
    record.hw_upper = static_cast<std::int64_t>(q + 1 + 8 * p.value());
    record.hw_lower = static_cast<std::int64_t>(q + 1) - static_cast<std::int64_t>(8 * p.value());
    record.classification = Classification::Neither;
    record.method = method;
    return classify(record);
}

}  // namespace

PointCountRecord count_points_fast(PrimeModulus p, std::uint64_t cube_table_gate) {
    const ExtField field(p);
    const std::uint64_t q = field.q();
    const bool cube_character_applies = (q - 1) % 3 == 0;  // false only for p = 3

    std::vector<std::uint8_t> is_cube;
    if (cube_character_applies && q <= cube_table_gate) {
        is_cube.assign(q, 0);
        for (std::uint64_t idx = 0; idx < q; ++idx) {
            const Fp2 v = field.element_at(idx);
            is_cube[field.index_of(v * v * v)] = 1;
        }
    }

    auto roots_of = [&](const Fp2& a) -> std::uint64_t {
        if (a.is_zero()) return 1;
        if (!cube_character_applies) return 1;
        if (!is_cube.empty()) return is_cube[field.index_of(a)] ? 3 : 0;
        return static_cast<std::uint64_t>(cube_root_count(field, a));
    };

    std::uint64_t count = 0;
    for_each_conic_point(field, [&](const Fp2& y, const Fp2& /*z*/, const Fp2& w) {
        count += roots_of(-(y * y * y + w * w * w));
    });
    return make_record(p, count, CountMethod::Fast);
}

PointCountRecord count_points_brute(PrimeModulus p, std::uint64_t gate) {
    if (p.value() > gate) {
        throw std::invalid_argument("brute-force count for p = " + std::to_string(p.value()) +
                                    " refused; the brute gate is p <= " + std::to_string(gate));
    }
    const ExtField field(p);
    const CurveDefinition curve = make_curve(p);
    const std::uint64_t q = field.q();

    std::uint64_t count = 0;
    auto probe = [&](const Fp2& x, const Fp2& y, const Fp2& z, const Fp2& w) {
        const std::array<Fp2, 4> point = {x, y, z, w};
        if (curve.quadric.eval_ext(field, point).is_zero() &&
            curve.cubic.eval_ext(field, point).is_zero()) {
            ++count;
        }
    };

    const Fp2 zero = field.zero();
    const Fp2 one = field.one();
    // First nonzero coordinate normalized to 1: q^3 + q^2 + q + 1 points.
    for (std::uint64_t iy = 0; iy < q; ++iy) {
        const Fp2 y = field.element_at(iy);
        for (std::uint64_t iz = 0; iz < q; ++iz) {
            const Fp2 z = field.element_at(iz);
            for (std::uint64_t iw = 0; iw < q; ++iw) {
                probe(one, y, z, field.element_at(iw));
            }
        }
    }
    for (std::uint64_t iz = 0; iz < q; ++iz) {
        const Fp2 z = field.element_at(iz);
        for (std::uint64_t iw = 0; iw < q; ++iw) {
            probe(zero, one, z, field.element_at(iw));
        }
    }
    for (std::uint64_t iw = 0; iw < q; ++iw) {
        probe(zero, zero, one, field.element_at(iw));
    }
    probe(zero, zero, zero, one);

    return make_record(p, count, CountMethod::Brute);
}

PointCountRecord classify(PointCountRecord record) {
    const std::int64_t count = static_cast<std::int64_t>(record.count);
    if (record.p > 3 && (count < record.hw_lower || count > record.hw_upper)) {
        throw std::logic_error("internal inconsistency: #C_p(F_q) = " +
                               std::to_string(record.count) + " falls outside the Hasse-Weil "
                               "interval [" + std::to_string(record.hw_lower) + ", " +
                               std::to_string(record.hw_upper) + "] for p = " +
                               std::to_string(record.p));
    }
    if (count == record.hw_upper) {
        record.classification = Classification::Maximal;
    } else if (count == record.hw_lower) {
        record.classification = Classification::Minimal;
    } else {
        record.classification = Classification::Neither;
    }
    return record;
}

}  // namespace cpcurve
