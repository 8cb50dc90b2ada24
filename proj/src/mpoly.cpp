#include "cpcurve/mpoly.hpp"

#include <algorithm>

namespace cpcurve {

namespace {
constexpr std::array<const char*, 4> kVarNames = {"x", "y", "z", "w"};
}

std::uint64_t total_degree(const Exponent4& ev) {
    return std::uint64_t{ev[0]} + ev[1] + ev[2] + ev[3];
}

std::string monomial_string(const Exponent4& ev) {
    std::string out;
    for (std::size_t v = 0; v < 4; ++v) {
        if (ev[v] == 0) continue;
        if (!out.empty()) out += "*";
        out += kVarNames[v];
        if (ev[v] > 1) out += "^" + std::to_string(ev[v]);
    }
    return out.empty() ? "1" : out;
}

SparsePoly SparsePoly::constant(PrimeModulus m, std::uint64_t c) {
    return monomial(m, Exponent4{0, 0, 0, 0}, c);
}

SparsePoly SparsePoly::monomial(PrimeModulus m, const Exponent4& ev, std::uint64_t c) {
    SparsePoly f(m);
    f.add_term(ev, c);
    return f;
}

Fp SparsePoly::coeff(const Exponent4& ev) const {
    const auto it = terms_.find(ev);
    return Fp(it == terms_.end() ? 0 : it->second, mod_);
}

std::int64_t SparsePoly::degree() const noexcept {
    std::int64_t deg = -1;
    for (const auto& [ev, c] : terms_) {
        deg = std::max(deg, static_cast<std::int64_t>(total_degree(ev)));
    }
    return deg;
}

void SparsePoly::add_term(const Exponent4& ev, std::uint64_t c) {
    c %= mod_.value();
    if (c == 0) return;
    const auto [it, inserted] = terms_.try_emplace(ev, c);
    if (!inserted) {
        it->second = (it->second + c) % mod_.value();
        if (it->second == 0) terms_.erase(it);
    }
}

void SparsePoly::require_same_modulus(const SparsePoly& rhs) const {
    if (!(mod_ == rhs.mod_)) {
        throw std::invalid_argument("polynomial modulus mismatch: " +
                                    std::to_string(mod_.value()) + " vs " +
                                    std::to_string(rhs.mod_.value()));
    }
}

SparsePoly SparsePoly::operator+(const SparsePoly& rhs) const {
    require_same_modulus(rhs);
    SparsePoly out = *this;
    for (const auto& [ev, c] : rhs.terms_) out.add_term(ev, c);
    return out;
}

SparsePoly SparsePoly::operator-(const SparsePoly& rhs) const {
    require_same_modulus(rhs);
    return *this + (-rhs);
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly out(mod_);
    for (const auto& [ev, c] : terms_) out.terms_.emplace(ev, mod_.value() - c);
    return out;
}

SparsePoly SparsePoly::operator*(const SparsePoly& rhs) const {
    require_same_modulus(rhs);
    SparsePoly out(mod_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            const Exponent4 ev = {ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]};
            out.add_term(ev, ca * cb);
        }
    }
    return out;
}

SparsePoly SparsePoly::pow(std::uint64_t e) const {
    SparsePoly result = constant(mod_, 1);
    SparsePoly base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

Fp SparsePoly::eval(const std::array<Fp, 4>& point) const {
    Fp acc(0, mod_);
    for (const auto& [ev, c] : terms_) {
        Fp term(c, mod_);
        for (std::size_t v = 0; v < 4; ++v) {
            if (ev[v] > 0) term *= point[v].pow(ev[v]);
        }
        acc += term;
    }
    return acc;
}

Fp2 SparsePoly::eval_ext(const ExtField& field, const std::array<Fp2, 4>& point) const {
    Fp2 acc = field.zero();
    for (const auto& [ev, c] : terms_) {
        Fp2 term = field.from_base(Fp(c, mod_));
        for (std::size_t v = 0; v < 4; ++v) {
            for (std::uint32_t i = 0; i < ev[v]; ++i) term = term * point[v];
        }
        acc = acc + term;
    }
    return acc;
}

std::string SparsePoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [ev, c] : terms_) {
        if (!out.empty()) out += " + ";
        const std::string mono = monomial_string(ev);
        if (c == 1 && mono != "1") {
            out += mono;
        } else if (mono == "1") {
            out += std::to_string(c);
        } else {
            out += std::to_string(c) + "*" + mono;
        }
    }
    return out;
}

}  // namespace cpcurve
