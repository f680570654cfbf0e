#pragma once

#include "semicomplete/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace semicomplete {

/// Non-decreasing list of positive integers n_1 <= ... <= n_j, with a flag
/// recording whether the order is strict (duplicates occupy distinct
/// positions and may both be selected).
class NumeratorSet {
public:
    explicit NumeratorSet(std::vector<std::uint64_t> values);

    const std::vector<std::uint64_t>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    bool strictly_increasing() const { return strictly_increasing_; }
    std::uint64_t sum() const { return sum_; }

private:
    std::vector<std::uint64_t> values_;
    std::uint64_t sum_ = 0;
    bool strictly_increasing_ = true;
};

/// A subset of positions certifying that the selected values sum to target.
struct PartitionWitness {
    std::uint64_t target = 0;
    std::vector<std::size_t> indices;  // ascending

    bool validates(const NumeratorSet& values) const;
};

bool reachable(const NumeratorSet& values, std::uint64_t target);

/// Witness for a reachable target, or nullopt. Deterministic tie-break:
/// the lexicographically smallest ascending index sequence.
std::optional<PartitionWitness> witness(const NumeratorSet& values, std::uint64_t target);

/// Number of subsets (by position) summing to target.
BigInt count_distinct_partitions(const NumeratorSet& values, std::uint64_t target);

/// All achievable subset sums, ascending. Always contains 0 and sum().
std::vector<std::uint64_t> reachable_set(const NumeratorSet& values);

/// Bit-vector of achievable subset sums, reusable across queries against the
/// same value set.
class SubsetSumTable {
public:
    explicit SubsetSumTable(const NumeratorSet& values);

    bool reachable(std::uint64_t target) const;
    std::uint64_t max_sum() const { return max_sum_; }
    std::vector<std::uint64_t> all_reachable() const;

private:
    std::vector<std::uint64_t> bits_;
    std::uint64_t max_sum_;
};

}  // namespace semicomplete
