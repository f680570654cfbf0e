#pragma once

#include "semicomplete/rational.hpp"

#include <string>

namespace semicomplete {

/// Partial product prod_{k=0..K-1} (1 - 2^-(2k+1)) with an exact tail bound:
/// the full product lies in [value - error_bound, value], so the Pell
/// constant lies in [1 - value, 1 - value + error_bound].
struct PellApproximation {
    unsigned K = 0;
    Rational value;
    Rational error_bound;  // sum_{k>=K} 2^-(2k+1) = (2/3) * 4^-K, below 4^-K
};

PellApproximation pell_partial(unsigned K);

/// Decimal rendering of the Pell constant 1 - prod_{k>=0} (1 - 2^-(2k+1)).
/// Digits are truncated, never rounded, and only emitted when the whole
/// error interval agrees on them; if a carry boundary straddles the
/// interval, fewer digits are emitted and the shortfall is visible via
/// emitted < requested.
struct PellDigits {
    std::string digits;  // "0." followed by `emitted` digits
    unsigned requested = 0;
    unsigned emitted = 0;
    unsigned K = 0;  // number of product factors used
    Rational error_bound;
};

PellDigits pell_digits(unsigned D);

/// The same approximation through the q-series route: 1 - F(-1/2) with F the
/// rank-j polynomial. Coincides with 1 - pell_partial(j).value exactly,
/// factor for factor.
Rational pell_via_F(unsigned j);

}  // namespace semicomplete
