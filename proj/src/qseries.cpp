#include "semicomplete/qseries.hpp"

#include "semicomplete/format.hpp"
#include "semicomplete/gaussian_rational.hpp"

#include <stdexcept>
#include <utility>

namespace semicomplete {

namespace {

// prod_{k=1..m} (1 - q^k)
HalfQPoly q_factorial_product(unsigned m) {
    HalfQPoly p = HalfQPoly::one();
    for (unsigned k = 1; k <= m; ++k)
        p *= HalfQPoly::one() - HalfQPoly::q_power(k);
    return p;
}

const GaussianRational& require_monomial(const HalfQPoly& a) {
    if (a.term_count() > 1)
        throw std::invalid_argument("q_pochhammer: parameter must be a single monomial");
    static const GaussianRational zero;
    return a.is_zero() ? zero : a.terms().begin()->second;
}

}  // namespace

HalfQPoly gaussian_binomial(unsigned m, unsigned n) {
    if (n > m) return HalfQPoly();
    HalfQPoly numerator = q_factorial_product(m);
    HalfQPoly denominator = q_factorial_product(n) * q_factorial_product(m - n);
    return numerator.divide_exact(denominator);
}

HalfQPoly q_pochhammer(const HalfQPoly& a, unsigned n, long long base_half_steps) {
    require_monomial(a);
    HalfQPoly product = HalfQPoly::one();
    HalfQPoly factor = a;  // a * base^k, advanced each round
    const HalfQPoly base_step =
        HalfQPoly::monomial(GaussianRational(1), base_half_steps);
    for (unsigned k = 0; k < n; ++k) {
        product *= HalfQPoly::one() - factor;
        factor *= base_step;
    }
    return product;
}

bool q_binomial_theorem_check(const HalfQPoly& a, unsigned n) {
    const HalfQPoly lhs = q_pochhammer(a, n);

    HalfQPoly rhs;
    const GaussianRational coeff = require_monomial(a);
    const long long exp = a.is_zero() ? 0 : a.terms().begin()->first;
    for (unsigned k = 0; k <= n; ++k) {
        // (-a)^k * q^(k(k-1)/2); the q power is k(k-1) half-steps.
        const long long kk = k;
        const GaussianRational c = (-coeff).pow(kk);
        const long long e = exp * kk + kk * (kk - 1);
        rhs += HalfQPoly::monomial(c, e) * gaussian_binomial(n, k);
    }
    return lhs == rhs;
}

bool square_identity_check(const HalfQPoly& a, unsigned n) {
    const HalfQPoly a_squared = a * a;
    const HalfQPoly lhs = q_pochhammer(a_squared, n, 4);  // base q^2
    const HalfQPoly rhs = q_pochhammer(a, n) * q_pochhammer(-a, n);
    return lhs == rhs;
}

HalfQPoly double_sum_numerator(unsigned j) {
    if (j < 1) throw std::domain_error("double_sum_numerator: requires j >= 1");
    const unsigned order = j + 1;

    std::vector<HalfQPoly> binomials(order + 1);
    for (unsigned k = 0; k <= order; ++k) binomials[k] = gaussian_binomial(order, k);

    // Per-index monomial * binomial factors of the two inner sums.
    std::vector<HalfQPoly> n_factor(order + 1), m_factor(order + 1);
    for (unsigned k = 0; k <= order; ++k) {
        const long long kk = k;
        n_factor[k] = HalfQPoly::monomial(GaussianRational::i_power(3 * kk), kk * kk - 2 * kk + 2) *
                      binomials[k];
        m_factor[k] =
            HalfQPoly::monomial(GaussianRational::i_power(kk), kk * kk - 2 * kk) * binomials[k];
    }

    HalfQPoly total;
    for (unsigned n = 0; n <= order; ++n)
        for (unsigned m = 0; m <= order; ++m) total += n_factor[n] * m_factor[m];

    if (!total.is_plain())
        throw identity_violation(
            "double_sum_numerator: imaginary parts or half powers failed to cancel");
    return total;
}

HalfQPoly F_polynomial(unsigned j) {
    const HalfQPoly numerator = double_sum_numerator(j);
    const HalfQPoly q_plus_one = HalfQPoly::q() + HalfQPoly::one();
    try {
        return numerator.divide_exact(q_plus_one);
    } catch (const divisibility_error& e) {
        throw identity_violation(std::string("F_polynomial: numerator not divisible by q+1: ") +
                                 e.what());
    }
}

HalfQPoly odd_product(unsigned j) {
    if (j < 1) throw std::domain_error("odd_product: requires j >= 1");
    HalfQPoly p = HalfQPoly::one();
    for (unsigned n = 1; n <= j; ++n)
        p *= HalfQPoly::one() + HalfQPoly::q_power(2 * static_cast<long long>(n) - 1);
    return p;
}

std::string classification_name(ModalityReport::Class c) {
    switch (c) {
        case ModalityReport::Class::unimodal: return "unimodal";
        case ModalityReport::Class::bimodal: return "bimodal";
        case ModalityReport::Class::other: return "other";
    }
    return "unknown";
}

unsigned peak_run_count(const std::vector<BigInt>& coefficients) {
    // Compress into maximal runs of equal values.
    std::vector<BigInt> runs;
    for (const BigInt& c : coefficients)
        if (runs.empty() || runs.back() != c) runs.push_back(c);

    unsigned peaks = 0;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        const bool left_ok = (i == 0) || runs[i] > runs[i - 1];
        const bool right_ok = (i + 1 == runs.size()) || runs[i] > runs[i + 1];
        if (left_ok && right_ok) ++peaks;
    }
    return peaks;
}

ModalityReport::Class classify_peak_runs(unsigned peak_runs) {
    if (peak_runs == 1) return ModalityReport::Class::unimodal;
    if (peak_runs == 2) return ModalityReport::Class::bimodal;
    return ModalityReport::Class::other;
}

ModalityReport modality(unsigned j) {
    if (j < 3) throw std::domain_error("modality: requires j >= 3");
    const HalfQPoly product = odd_product(j);

    ModalityReport report;
    report.j = j;
    report.coefficients.reserve(j - 1);
    for (unsigned k = 1; k < j; ++k) {
        const GaussianRational c = product.coefficient_at(static_cast<long long>(k) * j);
        if (!c.is_real() || !c.re().is_integer())
            throw identity_violation("modality: generating function coefficient is not an integer");
        report.coefficients.push_back(c.re().num());
    }
    report.peak_runs = peak_run_count(report.coefficients);
    report.classification = classify_peak_runs(report.peak_runs);
    return report;
}

}  // namespace semicomplete
