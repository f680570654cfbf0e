#pragma once

#include "semicomplete/partition.hpp"
#include "semicomplete/rational.hpp"

#include <cstdint>
#include <vector>

namespace semicomplete {

/// Arithmetic numerator sequence a, a+b, a+2b, ...; a >= 1, b >= 0.
/// b = 0 is representable (constant sequences); strictness is tracked by the
/// NumeratorSet it generates.
struct ArithmeticSpec {
    std::uint64_t a = 1;
    std::uint64_t b = 0;
};

/// Maximum number of pieces an M-dimensional hypercube can be cut into by
/// N-1 hyperplanes; term indexing starts at N = 1 (zero cuts, one piece).
///
/// Computed by the recurrence C(M, N) = C(M, N-1) + C(M-1, N-1) with
/// C(M, 1) = 1 and C(1, N) = N, memoized per thread. Any M >= 1 is accepted.
BigInt cut_number(unsigned M, unsigned N);

/// Closed-form C(M, N) for M <= 4; throws std::domain_error above that.
BigInt cut_closed_form(unsigned M, unsigned N);

/// Closed-form sum of the first t terms of the dimension-M cut sequence,
/// M <= 4; throws std::domain_error above that (use prefix_sum_direct).
BigInt prefix_sum(unsigned M, unsigned t);

/// Direct summation of cut_number(M, 1..t); works for any M >= 1.
BigInt prefix_sum_direct(unsigned M, unsigned t);

/// True iff the (t+1)-th term is strictly smaller than the sum of the first
/// t terms: C(M, t+1) < prefix_sum(M, t). Requires 1 <= M <= 4.
bool tail_dominates(unsigned M, unsigned t);

/// First j terms a, a+b, ..., a+(j-1)b as a NumeratorSet.
NumeratorSet arithmetic_prefix(const ArithmeticSpec& spec, unsigned j);

/// First j terms of the dimension-M cut sequence as a NumeratorSet; throws
/// std::overflow_error if a term does not fit in 64 bits.
NumeratorSet cut_prefix(unsigned M, unsigned j);

}  // namespace semicomplete
