#include "semicomplete/partition.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace semicomplete {

namespace {

// Sums beyond this would need a multi-gigabyte reachability vector; refuse
// rather than thrash.
constexpr std::uint64_t kMaxTableBits = std::uint64_t(1) << 33;

std::size_t word_count(std::uint64_t bit_count) {
    return static_cast<std::size_t>((bit_count + 63) / 64);
}

// bits |= bits << shift, over the fixed word span.
void shift_or(std::vector<std::uint64_t>& bits, std::uint64_t shift) {
    const std::size_t words = bits.size();
    const std::size_t word_shift = static_cast<std::size_t>(shift / 64);
    const unsigned bit_shift = static_cast<unsigned>(shift % 64);
    if (word_shift >= words) return;
    if (bit_shift == 0) {
        for (std::size_t i = words; i-- > word_shift;) bits[i] |= bits[i - word_shift];
        return;
    }
    for (std::size_t i = words; i-- > word_shift;) {
        std::uint64_t v = bits[i - word_shift] << bit_shift;
        if (i > word_shift) v |= bits[i - word_shift - 1] >> (64 - bit_shift);
        bits[i] |= v;
    }
}

bool test_bit(const std::vector<std::uint64_t>& bits, std::uint64_t pos) {
    const std::size_t w = static_cast<std::size_t>(pos / 64);
    if (w >= bits.size()) return false;
    return (bits[w] >> (pos % 64)) & 1u;
}

}  // namespace

NumeratorSet::NumeratorSet(std::vector<std::uint64_t> values) : values_(std::move(values)) {
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] < 1) throw std::invalid_argument("NumeratorSet: values must be positive");
        if (i > 0) {
            if (values_[i] < values_[i - 1])
                throw std::invalid_argument("NumeratorSet: values must be non-decreasing");
            if (values_[i] == values_[i - 1]) strictly_increasing_ = false;
        }
        if (values_[i] > std::numeric_limits<std::uint64_t>::max() - sum_)
            throw std::overflow_error("NumeratorSet: sum overflows 64 bits");
        sum_ += values_[i];
    }
}

bool PartitionWitness::validates(const NumeratorSet& values) const {
    std::uint64_t got = 0;
    std::size_t prev = 0;
    bool first = true;
    for (std::size_t idx : indices) {
        if (idx >= values.size()) return false;
        if (!first && idx <= prev) return false;  // ascending implies distinct
        prev = idx;
        first = false;
        got += values.values()[idx];
    }
    return got == target;
}

SubsetSumTable::SubsetSumTable(const NumeratorSet& values) : max_sum_(values.sum()) {
    if (max_sum_ + 1 > kMaxTableBits)
        throw std::length_error("SubsetSumTable: value sum too large for reachability table");
    bits_.assign(word_count(max_sum_ + 1), 0);
    bits_[0] = 1;  // empty subset
    for (std::uint64_t v : values.values()) shift_or(bits_, v);
}

bool SubsetSumTable::reachable(std::uint64_t target) const {
    if (target > max_sum_) return false;
    return test_bit(bits_, target);
}

std::vector<std::uint64_t> SubsetSumTable::all_reachable() const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t s = 0; s <= max_sum_; ++s)
        if (test_bit(bits_, s)) out.push_back(s);
    return out;
}

bool reachable(const NumeratorSet& values, std::uint64_t target) {
    if (target == 0) return true;
    if (target > values.sum()) return false;
    return SubsetSumTable(values).reachable(target);
}

std::optional<PartitionWitness> witness(const NumeratorSet& values, std::uint64_t target) {
    if (target > values.sum()) return std::nullopt;
    const std::size_t j = values.size();

    // suffix[i] = sums achievable from positions i..j-1; suffix[j] = {0}.
    std::vector<std::vector<std::uint64_t>> suffix(j + 1);
    const std::size_t words = word_count(values.sum() + 1);
    if (values.sum() + 1 > kMaxTableBits / (j + 1))
        throw std::length_error("witness: suffix tables too large");
    suffix[j].assign(words, 0);
    suffix[j][0] = 1;
    for (std::size_t i = j; i-- > 0;) {
        suffix[i] = suffix[i + 1];
        shift_or(suffix[i], values.values()[i]);
    }
    if (!test_bit(suffix[0], target)) return std::nullopt;

    // Greedy scan: taking the earliest position whose residual stays
    // reachable yields the lexicographically smallest index sequence.
    PartitionWitness w{target, {}};
    std::uint64_t remaining = target;
    for (std::size_t i = 0; i < j && remaining > 0; ++i) {
        const std::uint64_t v = values.values()[i];
        if (v <= remaining && test_bit(suffix[i + 1], remaining - v)) {
            w.indices.push_back(i);
            remaining -= v;
        }
    }
    return w;
}

BigInt count_distinct_partitions(const NumeratorSet& values, std::uint64_t target) {
    if (target > values.sum()) return 0;
    if (target + 1 > (std::uint64_t(1) << 27))
        throw std::length_error("count_distinct_partitions: target too large for count table");
    std::vector<BigInt> counts(static_cast<std::size_t>(target) + 1);
    counts[0] = 1;
    for (std::uint64_t v : values.values()) {
        if (v > target) continue;
        for (std::uint64_t s = target; s >= v; --s) {
            const auto si = static_cast<std::size_t>(s);
            if (counts[si - static_cast<std::size_t>(v)] != 0)
                counts[si] += counts[si - static_cast<std::size_t>(v)];
        }
    }
    return counts[static_cast<std::size_t>(target)];
}

std::vector<std::uint64_t> reachable_set(const NumeratorSet& values) {
    return SubsetSumTable(values).all_reachable();
}

}  // namespace semicomplete
