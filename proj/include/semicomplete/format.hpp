#pragma once

#include "semicomplete/gaussian_rational.hpp"
#include "semicomplete/half_q_polynomial.hpp"
#include "semicomplete/rational.hpp"

#include <string>

namespace semicomplete {

std::string to_string(const Rational& r);
std::string to_string(const GaussianRational& g);

/// Renders "q^(e/2)" for a half-step exponent: "" for e=0, "q" for e=2,
/// "q^3" for e=6, "q^(-2)" for e=-4, "q^(3/2)" for e=3.
std::string exponent_string(long long half_steps);

/// Sparse ascending rendering, one "c*q^e" term per monomial, e.g.
/// "1 + q + 2*q^2 + q^(7/2)". The zero polynomial renders as "0".
std::string to_string(const HalfQPoly& p);

}  // namespace semicomplete
