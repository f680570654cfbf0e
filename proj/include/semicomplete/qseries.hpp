#pragma once

#include "semicomplete/half_q_polynomial.hpp"
#include "semicomplete/rational.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace semicomplete {

/// Thrown when a machine-checked identity fails where it provably cannot:
/// either the double sum came out non-plain or its quotient by (q+1) does not
/// exist. Either would mean a defect in this library, never valid input.
class identity_violation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Gaussian binomial coefficient [m n]_q as a plain polynomial; zero when
/// n > m. Built from the factorial-style products with exact division.
HalfQPoly gaussian_binomial(unsigned m, unsigned n);

/// q-Pochhammer product (a; b)_n = prod_{k=0..n-1} (1 - a*b^k) where a is a
/// monomial and b = q^(base_half_steps/2); the default base is q itself.
/// n = 0 gives the empty product 1.
HalfQPoly q_pochhammer(const HalfQPoly& a, unsigned n, long long base_half_steps = 2);

/// Checks (a;q)_n == sum_{k=0..n} (-a)^k q^(k(k-1)/2) [n k]_q exactly.
bool q_binomial_theorem_check(const HalfQPoly& a, unsigned n);

/// Checks (a^2;q^2)_n == (a;q)_n (-a;q)_n exactly.
bool square_identity_check(const HalfQPoly& a, unsigned n);

/// The double sum
///   sum_{m,n=0..j+1} i^(3n) q^((n^2-2n+2)/2) i^m q^((m^2-2m)/2)
///                    [j+1 n]_q [j+1 m]_q,
/// i.e. F(q)*(q+1) before the division. All imaginary parts and half powers
/// must cancel; a non-plain result throws identity_violation.
HalfQPoly double_sum_numerator(unsigned j);

/// double_sum_numerator(j) / (q+1), which must equal odd_product(j); a
/// division remainder throws identity_violation.
HalfQPoly F_polynomial(unsigned j);

/// prod_{n=1..j} (1 + q^(2n-1)): the generating function whose coefficient
/// of q^s counts partitions of s into distinct odd parts at most 2j-1.
HalfQPoly odd_product(unsigned j);

struct ModalityReport {
    enum class Class { unimodal, bimodal, other };

    unsigned j = 0;
    std::vector<BigInt> coefficients;  // of q^(k*j) for k = 1..j-1
    unsigned peak_runs = 0;
    Class classification = Class::other;
};

std::string classification_name(ModalityReport::Class c);

/// Number of peak runs after compressing equal adjacent values: a run is a
/// peak when strictly greater than both neighboring runs (one-sided at the
/// ends). One peak run = unimodal, two = bimodal.
unsigned peak_run_count(const std::vector<BigInt>& coefficients);

ModalityReport::Class classify_peak_runs(unsigned peak_runs);

/// Coefficients of odd_product(j) at exponents k*j for k = 1..j-1, with the
/// peak-run classification. Requires j >= 3.
ModalityReport modality(unsigned j);

}  // namespace semicomplete
