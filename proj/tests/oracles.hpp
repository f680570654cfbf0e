// Test-only reference implementations, deliberately independent of the
// library's computation paths: exhaustive 2^j subset enumeration and the
// q-Pascal recurrence. Slow and simple on purpose.
#pragma once

#include "semicomplete/rational.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using semicomplete::BigInt;

/// Every subset sum with multiplicity, by explicit enumeration of all 2^j
/// subsets. Only usable for small j.
inline std::map<std::uint64_t, BigInt> subset_sum_counts(const std::vector<std::uint64_t>& values) {
    std::map<std::uint64_t, BigInt> counts;
    const std::size_t j = values.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << j); ++mask) {
        std::uint64_t sum = 0;
        for (std::size_t i = 0; i < j; ++i)
            if (mask & (std::uint64_t(1) << i)) sum += values[i];
        counts[sum] += 1;
    }
    return counts;
}

inline std::set<std::uint64_t> subset_sums(const std::vector<std::uint64_t>& values) {
    std::set<std::uint64_t> sums;
    for (const auto& [s, c] : subset_sum_counts(values)) sums.insert(s);
    return sums;
}

inline bool subset_sum_reachable(const std::vector<std::uint64_t>& values, std::uint64_t target) {
    return subset_sums(values).count(target) > 0;
}

/// Gaussian binomial [m n]_q as a dense integer coefficient vector (index =
/// power of q), via the q-Pascal recurrence
///   [m n] = [m-1 n-1] + q^n [m-1 n].
inline std::vector<BigInt> q_pascal_binomial(unsigned m, unsigned n) {
    if (n > m) return {};
    // table[k] = coefficients of [row k]
    std::vector<std::vector<BigInt>> row(n + 1);
    row[0] = {BigInt(1)};  // [0 0] = 1
    for (unsigned r = 1; r <= m; ++r) {
        const unsigned top = std::min(r, n);
        std::vector<std::vector<BigInt>> next(n + 1);
        next[0] = {BigInt(1)};
        for (unsigned k = 1; k <= top; ++k) {
            // next[k] = row[k-1] + q^k * row[k]   (row[k] empty when k > r-1)
            std::vector<BigInt> acc = row[k - 1];
            if (k < row.size() && !row[k].empty()) {
                const std::vector<BigInt>& shifted = row[k];
                if (acc.size() < shifted.size() + k) acc.resize(shifted.size() + k);
                for (std::size_t i = 0; i < shifted.size(); ++i) acc[i + k] += shifted[i];
            }
            next[k] = std::move(acc);
        }
        row = std::move(next);
    }
    return row[n];
}

}  // namespace oracle
