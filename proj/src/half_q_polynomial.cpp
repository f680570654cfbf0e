#include "semicomplete/half_q_polynomial.hpp"

#include <utility>

namespace semicomplete {

divisibility_error::divisibility_error(const std::string& msg, HalfQPoly remainder)
    : std::runtime_error(msg),
      remainder_(std::make_shared<const HalfQPoly>(std::move(remainder))) {}

HalfQPoly HalfQPoly::monomial(const GaussianRational& c, long long half_steps) {
    HalfQPoly p;
    if (!c.is_zero()) p.terms_[half_steps] = c;
    return p;
}

bool HalfQPoly::is_plain() const {
    for (const auto& [e, c] : terms_) {
        if (e % 2 != 0) return false;
        if (!c.is_real()) return false;
    }
    return true;
}

GaussianRational HalfQPoly::coefficient_half(long long half_steps) const {
    auto it = terms_.find(half_steps);
    return it == terms_.end() ? GaussianRational() : it->second;
}

long long HalfQPoly::degree_half_steps() const {
    if (terms_.empty()) throw std::domain_error("HalfQPoly: degree of zero polynomial");
    return terms_.rbegin()->first;
}

long long HalfQPoly::low_half_steps() const {
    if (terms_.empty()) throw std::domain_error("HalfQPoly: low exponent of zero polynomial");
    return terms_.begin()->first;
}

void HalfQPoly::add_term(TermMap& terms, long long e, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

HalfQPoly HalfQPoly::operator-() const {
    HalfQPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, -c);
    return r;
}

HalfQPoly HalfQPoly::operator+(const HalfQPoly& o) const {
    HalfQPoly r = *this;
    for (const auto& [e, c] : o.terms_) add_term(r.terms_, e, c);
    return r;
}

HalfQPoly HalfQPoly::operator-(const HalfQPoly& o) const {
    HalfQPoly r = *this;
    for (const auto& [e, c] : o.terms_) add_term(r.terms_, e, -c);
    return r;
}

HalfQPoly HalfQPoly::operator*(const HalfQPoly& o) const {
    HalfQPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) add_term(r.terms_, e1 + e2, c1 * c2);
    return r;
}

HalfQPoly HalfQPoly::scaled(const GaussianRational& c) const {
    HalfQPoly r;
    if (c.is_zero()) return r;
    for (const auto& [e, coeff] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, coeff * c);
    return r;
}

HalfQPoly HalfQPoly::divide_exact(const HalfQPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("HalfQPoly: division by zero polynomial");
    if (is_zero()) return HalfQPoly();

    // Shift both operands so their lowest exponent is zero; x is invertible in
    // the Laurent ring, so exactness is unchanged and ordinary long division
    // over the Gaussian-rational field applies.
    const long long shift_p = low_half_steps();
    const long long shift_d = divisor.low_half_steps();

    TermMap rem;
    for (const auto& [e, c] : terms_) rem.emplace_hint(rem.end(), e - shift_p, c);
    TermMap div;
    for (const auto& [e, c] : divisor.terms_) div.emplace_hint(div.end(), e - shift_d, c);

    const long long div_deg = div.rbegin()->first;
    const GaussianRational& div_lead = div.rbegin()->second;

    TermMap quot;
    while (!rem.empty() && rem.rbegin()->first >= div_deg) {
        const long long factor_exp = rem.rbegin()->first - div_deg;
        const GaussianRational factor = rem.rbegin()->second / div_lead;
        quot.emplace(factor_exp, factor);
        for (const auto& [e, c] : div) add_term(rem, e + factor_exp, -(factor * c));
    }

    if (!rem.empty()) {
        HalfQPoly remainder;
        for (const auto& [e, c] : rem) remainder.terms_.emplace_hint(remainder.terms_.end(), e + shift_p, c);
        throw divisibility_error("HalfQPoly: nonzero remainder in exact division", std::move(remainder));
    }

    HalfQPoly result;
    const long long reshift = shift_p - shift_d;
    for (const auto& [e, c] : quot) result.terms_.emplace_hint(result.terms_.end(), e + reshift, c);
    return result;
}

GaussianRational HalfQPoly::eval(const GaussianRational& point) const {
    if (!is_plain())
        throw std::domain_error("HalfQPoly: evaluation requires integer exponents and real coefficients");
    if (terms_.empty()) return GaussianRational();

    // Walk exponents in ascending order, stepping a running power of the point.
    const long long min_exp = low_half_steps() / 2;
    GaussianRational running = point.pow(min_exp);  // throws for point == 0 with min_exp < 0
    long long at = min_exp;
    GaussianRational sum;
    for (const auto& [e, c] : terms_) {
        const long long k = e / 2;
        while (at < k) {
            running *= point;
            ++at;
        }
        sum += c * running;
    }
    return sum;
}

HalfQPoly HalfQPoly::stretch_exponents(long long factor) const {
    if (factor < 1) throw std::domain_error("HalfQPoly: stretch factor must be >= 1");
    HalfQPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e * factor, c);
    return r;
}

}  // namespace semicomplete
