#include "cpcurve/geometry.hpp"

namespace cpcurve {

namespace {

/// Termwise formal partial derivative with respect to variable `var`.
SparsePoly formal_derivative(const SparsePoly& f, std::size_t var) {
    SparsePoly out(f.modulus());
    for (const auto& [ev, c] : f.terms()) {
        if (ev[var] == 0) continue;
        Exponent4 dv = ev;
        dv[var] -= 1;
        out += SparsePoly::monomial(f.modulus(), dv, c * (ev[var] % f.modulus().value()));
    }
    return out;
}

SparsePoly scale(const SparsePoly& f, Fp c) {
    return SparsePoly::constant(f.modulus(), c.value()) * f;
}

}  // namespace

CurveDefinition make_curve(PrimeModulus p) {
    SparsePoly quadric = SparsePoly::monomial(p, {0, 1, 0, 1}, 2) +   // 2yw
                         SparsePoly::monomial(p, {0, 0, 2, 0}, 1);    // z^2
    SparsePoly cubic = SparsePoly::monomial(p, {3, 0, 0, 0}, 1) +     // x^3
                       SparsePoly::monomial(p, {0, 3, 0, 0}, 1) +     // y^3
                       SparsePoly::monomial(p, {0, 0, 0, 3}, 1);      // w^3
    return CurveDefinition{p, std::move(quadric), std::move(cubic)};
}

MinorSet jacobian_minors(const CurveDefinition& defn) {
    std::array<SparsePoly, 4> dP = {
        formal_derivative(defn.cubic, 0), formal_derivative(defn.cubic, 1),
        formal_derivative(defn.cubic, 2), formal_derivative(defn.cubic, 3)};
    std::array<SparsePoly, 4> dQ = {
        formal_derivative(defn.quadric, 0), formal_derivative(defn.quadric, 1),
        formal_derivative(defn.quadric, 2), formal_derivative(defn.quadric, 3)};

    constexpr std::array<std::pair<std::size_t, std::size_t>, 6> pairs = {
        {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
    MinorSet minors{{SparsePoly(defn.p), SparsePoly(defn.p), SparsePoly(defn.p),
                     SparsePoly(defn.p), SparsePoly(defn.p), SparsePoly(defn.p)}};
    for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
        const auto [u, v] = pairs[idx];
        minors.f[idx] = dP[u] * dQ[v] - dP[v] * dQ[u];
    }
    return minors;
}

CertificateReport verify_smoothness_certificate(const CurveDefinition& defn) {
    const PrimeModulus p = defn.p;
    if (p.value() <= 3) {
        throw std::domain_error("certificate undefined in characteristic <= 3 "
                                "(6 is not invertible; the variety is singular)");
    }

    const MinorSet m = jacobian_minors(defn);
    const Fp inv6 = Fp(6, p).inverse();
    const Fp inv3 = Fp(3, p).inverse();
    const SparsePoly& P = defn.cubic;
    const SparsePoly& Q = defn.quadric;

    auto mono = [&p](const Exponent4& ev, std::uint64_t c) {
        return SparsePoly::monomial(p, ev, c);
    };

    CertificateReport report{p.value(), {}, false, false};

    // (i)  x^2*P - 6^{-1}y^2*f3 - 6^{-1}w^2*f1 = x^5
    {
        SparsePoly lhs = mono({2, 0, 0, 0}, 1) * P -
                         scale(mono({0, 2, 0, 0}, 1) * m.f[2], inv6) -
                         scale(mono({0, 0, 0, 2}, 1) * m.f[0], inv6);
        SparsePoly target = mono({5, 0, 0, 0}, 1);
        SparsePoly residual = lhs - target;
        report.identities.push_back({"x^2*P - 6^-1*y^2*f3 - 6^-1*w^2*f1 = x^5", target,
                                     residual, residual.is_zero()});
    }

    // (ii) y*P - 6^{-1}x*f3 +/- 6^{-1}y*f5 = 2y^4; pick the sign that closes.
    {
        SparsePoly base = mono({0, 1, 0, 0}, 1) * P - scale(mono({1, 0, 0, 0}, 1) * m.f[2], inv6);
        SparsePoly f5_term = scale(mono({0, 1, 0, 0}, 1) * m.f[4], inv6);
        SparsePoly target = mono({0, 4, 0, 0}, 2);
        SparsePoly residual_minus = (base - f5_term) - target;
        SparsePoly residual_plus = (base + f5_term) - target;
        report.f5_plus_sign = !residual_minus.is_zero();
        const SparsePoly& residual = report.f5_plus_sign ? residual_plus : residual_minus;
        const char* sign = report.f5_plus_sign ? "+" : "-";
        report.identities.push_back({std::string("y*P - 6^-1*x*f3 ") + sign +
                                         " 6^-1*y*f5 = 2*y^4",
                                     target, residual, residual.is_zero()});
    }

    // (iii) (-2yzw + z^3)*Q + 2*3^{-1}w^2*f4 = z^5
    {
        SparsePoly factor = mono({0, 1, 1, 1}, p.value() - 2) + mono({0, 0, 3, 0}, 1);
        SparsePoly lhs = factor * Q + scale(mono({0, 0, 0, 2}, 2) * m.f[3], inv3);
        SparsePoly target = mono({0, 0, 5, 0}, 1);
        SparsePoly residual = lhs - target;
        report.identities.push_back({"(-2*y*z*w + z^3)*Q + 2*3^-1*w^2*f4 = z^5", target,
                                     residual, residual.is_zero()});
    }

    // (iv) w*P - 6^{-1}x*f1 - 6^{-1}w*f5 = 2w^4
    {
        SparsePoly lhs = mono({0, 0, 0, 1}, 1) * P -
                         scale(mono({1, 0, 0, 0}, 1) * m.f[0], inv6) -
                         scale(mono({0, 0, 0, 1}, 1) * m.f[4], inv6);
        SparsePoly target = mono({0, 0, 0, 4}, 2);
        SparsePoly residual = lhs - target;
        report.identities.push_back({"w*P - 6^-1*x*f1 - 6^-1*w*f5 = 2*w^4", target,
                                     residual, residual.is_zero()});
    }

    report.all_ok = true;
    for (const auto& identity : report.identities) report.all_ok &= identity.ok;
    return report;
}

}  // namespace cpcurve
