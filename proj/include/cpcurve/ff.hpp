#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cpcurve {

/// Largest prime accepted by default. Every reduced value then fits in 32
/// bits, so products of two values never overflow a 64-bit intermediate.
inline constexpr std::uint64_t kDefaultMaxPrime = 1'000'000;

/// Deterministic primality test by trial division up to sqrt(n).
bool is_prime(std::uint64_t n);

/// An odd prime p > 2, validated at construction.
class PrimeModulus {
public:
    explicit PrimeModulus(std::uint64_t p, std::uint64_t max_allowed = kDefaultMaxPrime);

    std::uint64_t value() const noexcept { return p_; }

    friend bool operator==(const PrimeModulus&, const PrimeModulus&) = default;

private:
    std::uint64_t p_;
};

/// Element of the prime field F_p. The stored value is always in [0, p).
class Fp {
public:
    Fp(std::uint64_t value, PrimeModulus m) noexcept
        : v_(value % m.value()), p_(m.value()) {}

    /// Reduces a possibly negative integer into [0, p).
    static Fp from_signed(std::int64_t value, PrimeModulus m) noexcept;

    std::uint64_t value() const noexcept { return v_; }
    std::uint64_t modulus() const noexcept { return p_; }
    bool is_zero() const noexcept { return v_ == 0; }

    Fp operator+(const Fp& rhs) const;
    Fp operator-(const Fp& rhs) const;
    Fp operator*(const Fp& rhs) const;
    Fp operator/(const Fp& rhs) const;
    Fp operator-() const noexcept;

    Fp& operator+=(const Fp& rhs) { return *this = *this + rhs; }
    Fp& operator-=(const Fp& rhs) { return *this = *this - rhs; }
    Fp& operator*=(const Fp& rhs) { return *this = *this * rhs; }

    friend bool operator==(const Fp&, const Fp&) = default;

    /// Square-and-multiply; 0^0 = 1 by convention.
    Fp pow(std::uint64_t e) const noexcept;

    /// Multiplicative inverse via Fermat's little theorem. Throws on zero.
    Fp inverse() const;

private:
    Fp(std::uint64_t v, std::uint64_t p, int /*unchecked tag*/) noexcept : v_(v), p_(p) {}
    void require_same_field(const Fp& rhs) const;

    std::uint64_t v_;
    std::uint64_t p_;
};

/// Element a0 + a1*t of F_{p^2} = F_p(t) with t^2 = nonresidue.
class Fp2 {
public:
    Fp2(Fp a0, Fp a1, Fp nonresidue);

    const Fp& a0() const noexcept { return a0_; }
    const Fp& a1() const noexcept { return a1_; }
    const Fp& nonresidue() const noexcept { return nr_; }
    std::uint64_t modulus() const noexcept { return a0_.modulus(); }
    bool is_zero() const noexcept { return a0_.is_zero() && a1_.is_zero(); }

    Fp2 operator+(const Fp2& rhs) const;
    Fp2 operator-(const Fp2& rhs) const;
    Fp2 operator*(const Fp2& rhs) const;
    Fp2 operator-() const;

    friend bool operator==(const Fp2&, const Fp2&) = default;

    /// (a0 - a1*t) / (a0^2 - nr*a1^2). Throws on zero.
    Fp2 inverse() const;

private:
    void require_same_field(const Fp2& rhs) const;

    Fp a0_;
    Fp a1_;
    Fp nr_;
};

/// The quadratic extension F_{p^2} represented as F_p(t), t^2 = nonresidue,
/// where the nonresidue is the smallest positive quadratic nonresidue mod p.
class ExtField {
public:
    explicit ExtField(PrimeModulus p);

    PrimeModulus modulus() const noexcept { return p_; }
    std::uint64_t p() const noexcept { return p_.value(); }
    std::uint64_t q() const noexcept { return q_; }
    Fp nonresidue() const noexcept { return nr_; }

    Fp2 zero() const;
    Fp2 one() const;
    Fp2 from_base(Fp a) const;
    Fp2 make(std::uint64_t a0, std::uint64_t a1) const;

    /// Bijection [0, q) -> F_{p^2}: index = a0 + p*a1.
    Fp2 element_at(std::uint64_t index) const;
    std::uint64_t index_of(const Fp2& v) const noexcept;

private:
    PrimeModulus p_;
    std::uint64_t q_;
    Fp nr_;
};

/// Context factory; rejects p = 2 and composite p (via PrimeModulus).
ExtField make_ext_field(PrimeModulus p);

/// Square-and-multiply in F_{p^2}; v^0 = 1 including v = 0.
Fp2 ext_pow(Fp2 v, std::uint64_t e);

/// #{x in F_{p^2} : x^3 = a}. Returns 1 for a = 0; 1 when 3 does not divide
/// q-1 (cubing is then a bijection); otherwise 3 or 0 by the cube character
/// a^((q-1)/3).
int cube_root_count(const ExtField& field, const Fp2& a);

}  // namespace cpcurve
