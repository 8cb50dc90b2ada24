#include "cpcurve/ff.hpp"

namespace cpcurve {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

PrimeModulus::PrimeModulus(std::uint64_t p, std::uint64_t max_allowed) : p_(p) {
    if (p > max_allowed) {
        throw std::invalid_argument("modulus " + std::to_string(p) +
                                    " exceeds the supported bound " + std::to_string(max_allowed));
    }
    if (p <= 2 || !is_prime(p)) {
        throw std::invalid_argument("modulus must be a prime greater than 2, got " +
                                    std::to_string(p));
    }
}

Fp Fp::from_signed(std::int64_t value, PrimeModulus m) noexcept {
    const std::int64_t p = static_cast<std::int64_t>(m.value());
    std::int64_t r = value % p;
    if (r < 0) r += p;
    return Fp(static_cast<std::uint64_t>(r), m);
}

void Fp::require_same_field(const Fp& rhs) const {
    if (p_ != rhs.p_) {
        throw std::invalid_argument("field element modulus mismatch: " + std::to_string(p_) +
                                    " vs " + std::to_string(rhs.p_));
    }
}

Fp Fp::operator+(const Fp& rhs) const {
    require_same_field(rhs);
    std::uint64_t s = v_ + rhs.v_;
    if (s >= p_) s -= p_;
    return Fp(s, p_, 0);
}

Fp Fp::operator-(const Fp& rhs) const {
    require_same_field(rhs);
    return Fp(v_ >= rhs.v_ ? v_ - rhs.v_ : v_ + p_ - rhs.v_, p_, 0);
}

Fp Fp::operator*(const Fp& rhs) const {
    require_same_field(rhs);
    return Fp((v_ * rhs.v_) % p_, p_, 0);
}

Fp Fp::operator/(const Fp& rhs) const { return *this * rhs.inverse(); }

Fp Fp::operator-() const noexcept { return Fp(v_ == 0 ? 0 : p_ - v_, p_, 0); }

Fp Fp::pow(std::uint64_t e) const noexcept {
    std::uint64_t result = 1;
    std::uint64_t base = v_;
    while (e > 0) {
        if (e & 1) result = (result * base) % p_;
        base = (base * base) % p_;
        e >>= 1;
    }
    return Fp(result, p_, 0);
}

Fp Fp::inverse() const {
    if (v_ == 0) throw std::domain_error("inverse of zero in F_p");
    return pow(p_ - 2);
}

Fp2::Fp2(Fp a0, Fp a1, Fp nonresidue) : a0_(a0), a1_(a1), nr_(nonresidue) {
    if (a0_.modulus() != a1_.modulus() || a0_.modulus() != nr_.modulus()) {
        throw std::invalid_argument("extension element components live in different fields");
    }
}

void Fp2::require_same_field(const Fp2& rhs) const {
    if (modulus() != rhs.modulus() || !(nr_ == rhs.nr_)) {
        throw std::invalid_argument("extension field mismatch");
    }
}

Fp2 Fp2::operator+(const Fp2& rhs) const {
    require_same_field(rhs);
    return Fp2(a0_ + rhs.a0_, a1_ + rhs.a1_, nr_);
}

Fp2 Fp2::operator-(const Fp2& rhs) const {
    require_same_field(rhs);
    return Fp2(a0_ - rhs.a0_, a1_ - rhs.a1_, nr_);
}

Fp2 Fp2::operator*(const Fp2& rhs) const {
    require_same_field(rhs);
    // (a0 + a1 t)(b0 + b1 t) = a0 b0 + nr a1 b1 + (a0 b1 + a1 b0) t
    return Fp2(a0_ * rhs.a0_ + nr_ * (a1_ * rhs.a1_), a0_ * rhs.a1_ + a1_ * rhs.a0_, nr_);
}

Fp2 Fp2::operator-() const { return Fp2(-a0_, -a1_, nr_); }

Fp2 Fp2::inverse() const {
    const Fp norm = a0_ * a0_ - nr_ * (a1_ * a1_);
    // norm = 0 only for the zero element since t^2 = nr has no root in F_p.
    const Fp n_inv = norm.inverse();
    return Fp2(a0_ * n_inv, (-a1_) * n_inv, nr_);
}

namespace {

Fp smallest_nonresidue(PrimeModulus m) {
    const std::uint64_t p = m.value();
    for (std::uint64_t n = 2; n < p; ++n) {
        // Euler's criterion: n is a nonresidue iff n^((p-1)/2) = -1.
        if (Fp(n, m).pow((p - 1) / 2).value() == p - 1) return Fp(n, m);
    }
    throw std::logic_error("no quadratic nonresidue found below p");
}

}  // namespace

ExtField::ExtField(PrimeModulus p)
    : p_(p), q_(p.value() * p.value()), nr_(smallest_nonresidue(p)) {}

Fp2 ExtField::zero() const { return make(0, 0); }
Fp2 ExtField::one() const { return make(1, 0); }
Fp2 ExtField::from_base(Fp a) const { return Fp2(a, Fp(0, p_), nr_); }
Fp2 ExtField::make(std::uint64_t a0, std::uint64_t a1) const {
    return Fp2(Fp(a0, p_), Fp(a1, p_), nr_);
}

Fp2 ExtField::element_at(std::uint64_t index) const {
    return make(index % p_.value(), (index / p_.value()) % p_.value());
}

std::uint64_t ExtField::index_of(const Fp2& v) const noexcept {
    return v.a0().value() + p_.value() * v.a1().value();
}

ExtField make_ext_field(PrimeModulus p) { return ExtField(p); }

Fp2 ext_pow(Fp2 v, std::uint64_t e) {
    // Identity in the same field (Fp::pow(0) is 1 for any base).
    Fp2 result(v.a0().pow(0), v.a0() - v.a0(), v.nonresidue());
    while (e > 0) {
        if (e & 1) result = result * v;
        v = v * v;
        e >>= 1;
    }
    return result;
}

int cube_root_count(const ExtField& field, const Fp2& a) {
    if (a.is_zero()) return 1;
    const std::uint64_t order = field.q() - 1;
    if (order % 3 != 0) return 1;  // cubing is a bijection (only p = 3 here)
    return ext_pow(a, order / 3) == field.one() ? 3 : 0;
}

}  // namespace cpcurve
