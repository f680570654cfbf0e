#pragma once

#include "semicomplete/partition.hpp"
#include "semicomplete/rational.hpp"
#include "semicomplete/sequences.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace semicomplete {

/// Outcome of examining one prefix length j: with G = (sum of values)/j, every
/// integer k with 1 <= k <= floor(G)-1 must have k*j as a subset sum.
struct JVerdict {
    unsigned j = 0;
    Rational G;
    std::uint64_t k_max = 0;  // k ranges over 1..k_max; 0 means the range is empty
    std::vector<std::uint64_t> failures;  // k values with no partition, ascending
    std::map<std::uint64_t, PartitionWitness> witnesses;  // per passing k, when requested
    bool out_of_definition = false;  // j < 3 exploration override

    bool passed() const { return failures.empty(); }
};

enum class Status {
    verified_up_to_horizon,
    refuted,
    refuted_vacuous,  // excluded on definitional grounds, no failing (j, k)
    certified_by_induction,
};

std::string status_name(Status s);

struct Counterexample {
    unsigned j = 0;
    std::uint64_t k = 0;
};

struct SemicompletenessReport {
    std::string sequence;
    unsigned j_min = 3;
    unsigned j_max = 0;
    std::vector<JVerdict> verdicts;
    Status status = Status::verified_up_to_horizon;
    std::optional<Counterexample> counterexample;  // smallest failing (j, k), lexicographic
    bool strictly_increasing = true;
    std::string note;
};

/// Produces the first j terms of a sequence.
using SequenceGenerator = std::function<NumeratorSet(unsigned j)>;

/// Check one prefix length. Requires j >= 3 and values of length j unless
/// allow_out_of_definition is set, in which case smaller j are examined and
/// flagged. Witnesses are extracted for passing k when requested.
JVerdict check_at_j(const NumeratorSet& values, unsigned j, bool with_witnesses = false,
                    bool allow_out_of_definition = false);

/// Scan j = 3..j_max, stopping at the first failure. A finite scan can only
/// report verified-up-to-horizon, never a proof; certification is the
/// induction certificate's job.
SemicompletenessReport check_up_to(const SequenceGenerator& generator, const std::string& sequence,
                                   unsigned j_max, bool with_witnesses = false);

SemicompletenessReport check_arithmetic(const ArithmeticSpec& spec, unsigned j_max,
                                        bool with_witnesses = false);
SemicompletenessReport check_cut(unsigned M, unsigned j_max, bool with_witnesses = false);

struct ClassifyCell {
    Status status = Status::verified_up_to_horizon;
    std::optional<Counterexample> counterexample;
};

/// Scan all arithmetic specs with 1 <= a <= a_max, 0 <= b <= b_max, each to
/// horizon j_max. Requires j_max >= 4.
std::map<std::pair<std::uint64_t, std::uint64_t>, ClassifyCell> classify_arithmetic(
    std::uint64_t a_max, std::uint64_t b_max, unsigned j_max);

/// Completeness criterion for a sorted positive sequence prefix: first term 1
/// and every term at most 1 + the sum of all earlier terms.
bool brown_complete(const std::vector<BigInt>& sorted_values);

/// Induction certificate for the dimension-M cut sequence: the base
/// enumeration shows every integer 1..prefix_sum(M, t_base) is a subset sum
/// of the first t_base terms, and the tail inequality
/// C(M, t+1) < prefix_sum(M, t) holds for every t_base <= t <= tail_horizon.
struct InductionCertificate {
    unsigned M = 0;
    unsigned t_base = 0;
    bool base_enumeration_ok = false;
    BigInt base_covers_up_to;  // prefix_sum(M, t_base)
    unsigned tail_checked_to = 0;
    bool tail_ok = false;

    bool valid() const { return base_enumeration_ok && tail_ok; }
};

/// Smallest t for which the tail inequality is claimed; t_base must exceed it.
unsigned certificate_threshold(unsigned M);

InductionCertificate induction_certificate(unsigned M, unsigned t_base, unsigned tail_horizon);

}  // namespace semicomplete
