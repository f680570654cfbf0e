#pragma once

#include "semicomplete/gaussian_rational.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <string>

namespace semicomplete {

class HalfQPoly;

/// Thrown by HalfQPoly::divide_exact when the division leaves a nonzero
/// remainder; the remainder is attached for inspection.
class divisibility_error : public std::runtime_error {
public:
    divisibility_error(const std::string& msg, HalfQPoly remainder);
    const HalfQPoly& remainder() const { return *remainder_; }

private:
    std::shared_ptr<const HalfQPoly> remainder_;
};

/// Sparse Laurent polynomial in x where x^2 = q, with GaussianRational
/// coefficients. A stored key e means the monomial q^(e/2), so integer powers
/// of q sit on even keys and half powers on odd keys.
///
/// Invariant: no zero coefficient is ever stored; the zero polynomial is the
/// empty map. Keys may be negative (Laurent).
///
/// "Plain" = every key even and every coefficient real; only plain
/// polynomials can be evaluated at a point.
///
/// All values are immutable once built (operators return new values), so
/// instances are safe to share across threads.
class HalfQPoly {
public:
    using TermMap = std::map<long long, GaussianRational>;

    HalfQPoly() = default;  // zero

    static HalfQPoly constant(const GaussianRational& c) { return monomial(c, 0); }
    static HalfQPoly one() { return constant(GaussianRational(1)); }
    /// c * q^(half_steps/2).
    static HalfQPoly monomial(const GaussianRational& c, long long half_steps);
    /// q^k for integer k (key 2k).
    static HalfQPoly q_power(long long k) { return monomial(GaussianRational(1), 2 * k); }
    static HalfQPoly q() { return q_power(1); }

    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() <= 1; }
    bool is_plain() const;
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Coefficient of q^(half_steps/2); zero when absent.
    GaussianRational coefficient_half(long long half_steps) const;
    /// Coefficient of the integer power q^s; zero when absent.
    GaussianRational coefficient_at(long long s) const { return coefficient_half(2 * s); }

    /// Highest/lowest stored exponent in half-steps; throws on the zero polynomial.
    long long degree_half_steps() const;
    long long low_half_steps() const;

    HalfQPoly operator-() const;
    HalfQPoly operator+(const HalfQPoly& o) const;
    HalfQPoly operator-(const HalfQPoly& o) const;
    HalfQPoly operator*(const HalfQPoly& o) const;
    HalfQPoly& operator+=(const HalfQPoly& o) { return *this = *this + o; }
    HalfQPoly& operator-=(const HalfQPoly& o) { return *this = *this - o; }
    HalfQPoly& operator*=(const HalfQPoly& o) { return *this = *this * o; }

    HalfQPoly scaled(const GaussianRational& c) const;

    bool operator==(const HalfQPoly& o) const { return terms_ == o.terms_; }

    /// Exact Laurent division: returns the quotient when the remainder is
    /// exactly zero, otherwise throws divisibility_error carrying the
    /// remainder. The divisor must be nonzero.
    HalfQPoly divide_exact(const HalfQPoly& divisor) const;

    /// Evaluation at q = point. Requires a plain polynomial (half powers at
    /// arbitrary points are undefined here); throws std::domain_error
    /// otherwise. Negative exponents require point != 0.
    GaussianRational eval(const GaussianRational& point) const;

    /// Substitution q -> q^factor realized as multiplying every stored
    /// half-step exponent by factor (factor >= 1).
    HalfQPoly stretch_exponents(long long factor) const;

private:
    // Accumulate c into terms[e], erasing the entry when it cancels to zero.
    static void add_term(TermMap& terms, long long e, const GaussianRational& c);

    TermMap terms_;
};

}  // namespace semicomplete
