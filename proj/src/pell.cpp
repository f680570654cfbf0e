#include "semicomplete/pell.hpp"

#include "semicomplete/gaussian_rational.hpp"
#include "semicomplete/qseries.hpp"

#include <stdexcept>

namespace semicomplete {

PellApproximation pell_partial(unsigned K) {
    if (K < 1) throw std::domain_error("pell_partial: requires K >= 1");
    PellApproximation approx;
    approx.K = K;
    approx.value = Rational(1);
    for (unsigned k = 0; k < K; ++k) {
        const BigInt denom = BigInt(1) << (2 * k + 1);
        approx.value *= Rational(denom - 1, denom);
    }
    // Tail: 1 - prod_{k>=K}(1 - x_k) <= sum x_k = 2^-(2K+1) * 4/3.
    approx.error_bound = Rational(BigInt(2), BigInt(3) * (BigInt(1) << (2 * K)));
    return approx;
}

PellDigits pell_digits(unsigned D) {
    if (D < 1) throw std::domain_error("pell_digits: requires at least one digit");

    // Need 4^-K < 10^-D, i.e. K > D*log2(10)/2; 1661/1000 over-approximates
    // log2(10)/2, and two extra factors give margin at carry boundaries.
    const unsigned K = static_cast<unsigned>((1661ULL * D + 999) / 1000) + 2;
    const PellApproximation approx = pell_partial(K);

    const Rational low = Rational(1) - approx.value;            // <= Pell constant
    const Rational high = low + approx.error_bound;             // >= Pell constant

    PellDigits out;
    out.requested = D;
    out.K = K;
    out.error_bound = approx.error_bound;

    // Emit the longest prefix (up to D digits) on which the whole interval
    // agrees; truncation semantics throughout.
    unsigned digits = D;
    BigInt low_scaled, high_scaled;
    for (;; --digits) {
        const BigInt scale = boost::multiprecision::pow(BigInt(10), digits);
        low_scaled = (low * Rational(scale)).floor();
        high_scaled = (high * Rational(scale)).floor();
        if (low_scaled == high_scaled || digits == 0) break;
    }
    out.emitted = digits;
    if (digits == 0) {
        out.digits = "0";
        return out;
    }
    std::string body = low_scaled.str();
    if (body.size() < digits) body.insert(0, digits - body.size(), '0');
    out.digits = "0." + body;
    return out;
}

Rational pell_via_F(unsigned j) {
    if (j < 1) throw std::domain_error("pell_via_F: requires j >= 1");
    const GaussianRational value = F_polynomial(j).eval(GaussianRational(Rational(-1, 2)));
    if (!value.is_real())
        throw identity_violation("pell_via_F: F(-1/2) came out non-real");
    return Rational(1) - value.re();
}

}  // namespace semicomplete
