#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "cpcurve/ff.hpp"

namespace cpcurve {

/// Exponents (i, j, k, l) of a monomial x^i y^j z^k w^l.
using Exponent4 = std::array<std::uint32_t, 4>;

std::uint64_t total_degree(const Exponent4& ev);

/// "x^3*z^2", "y", "1" for the zero exponent vector.
std::string monomial_string(const Exponent4& ev);

/// Sparse polynomial over F_p in the variables x, y, z, w.
///
/// Canonical form: no stored coefficient is zero, coefficients are reduced
/// to [0, p), and terms are keyed by exponent vector in lexicographic order.
/// Two polynomials are equal iff their term maps are identical. Exponents
/// are never reduced; this is polynomial arithmetic, not arithmetic in a
/// coordinate ring.
class SparsePoly {
public:
    using TermMap = std::map<Exponent4, std::uint64_t>;

    /// The zero polynomial.
    explicit SparsePoly(PrimeModulus m) : mod_(m) {}

    static SparsePoly constant(PrimeModulus m, std::uint64_t c);
    static SparsePoly monomial(PrimeModulus m, const Exponent4& ev, std::uint64_t c);

    PrimeModulus modulus() const noexcept { return mod_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Stored coefficient or zero.
    Fp coeff(const Exponent4& ev) const;

    /// Total degree; -1 for the zero polynomial.
    std::int64_t degree() const noexcept;

    SparsePoly operator+(const SparsePoly& rhs) const;
    SparsePoly operator-(const SparsePoly& rhs) const;
    SparsePoly operator*(const SparsePoly& rhs) const;
    SparsePoly operator-() const;
    SparsePoly& operator+=(const SparsePoly& rhs) { return *this = *this + rhs; }

    friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

    /// Binary exponentiation; f^0 = 1 for every f.
    SparsePoly pow(std::uint64_t e) const;

    Fp eval(const std::array<Fp, 4>& point) const;
    Fp2 eval_ext(const ExtField& field, const std::array<Fp2, 4>& point) const;

    /// "z^2*w^3 + 2*y*w^4 + ..." with terms in lexicographic exponent order.
    std::string to_string() const;

private:
    void add_term(const Exponent4& ev, std::uint64_t c);
    void require_same_modulus(const SparsePoly& rhs) const;

    PrimeModulus mod_;
    TermMap terms_;
};

}  // namespace cpcurve
