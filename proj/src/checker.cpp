#include "semicomplete/checker.hpp"

#include <limits>
#include <stdexcept>

namespace semicomplete {

std::string status_name(Status s) {
    switch (s) {
        case Status::verified_up_to_horizon: return "verified-up-to-horizon";
        case Status::refuted: return "refuted";
        case Status::refuted_vacuous: return "refuted-vacuous";
        case Status::certified_by_induction: return "certified-by-induction";
    }
    return "unknown";
}

JVerdict check_at_j(const NumeratorSet& values, unsigned j, bool with_witnesses,
                    bool allow_out_of_definition) {
    if (values.size() != j)
        throw std::invalid_argument("check_at_j: values must have exactly j terms");
    if (j < 3 && !allow_out_of_definition)
        throw std::domain_error("check_at_j: the definition requires j > 2");

    JVerdict v;
    v.j = j;
    v.out_of_definition = j < 3;
    v.G = Rational(BigInt(values.sum()), BigInt(j));

    const BigInt floor_G = v.G.floor();
    if (floor_G >= 2) v.k_max = (floor_G - 1).convert_to<std::uint64_t>();

    if (v.k_max == 0) return v;

    SubsetSumTable table(values);
    for (std::uint64_t k = 1; k <= v.k_max; ++k) {
        const std::uint64_t target = k * j;
        if (!table.reachable(target)) {
            v.failures.push_back(k);
        } else if (with_witnesses) {
            auto w = witness(values, target);
            if (w) v.witnesses.emplace(k, std::move(*w));
        }
    }
    return v;
}

SemicompletenessReport check_up_to(const SequenceGenerator& generator, const std::string& sequence,
                                   unsigned j_max, bool with_witnesses) {
    if (j_max < 3) throw std::domain_error("check_up_to: horizon must be at least 3");

    SemicompletenessReport report;
    report.sequence = sequence;
    report.j_min = 3;
    report.j_max = j_max;

    bool any_k_range_nonempty = false;
    for (unsigned j = 3; j <= j_max; ++j) {
        NumeratorSet values = generator(j);
        if (!values.strictly_increasing()) report.strictly_increasing = false;
        JVerdict verdict = check_at_j(values, j, with_witnesses);
        if (verdict.k_max > 0) any_k_range_nonempty = true;
        const bool failed = !verdict.passed();
        if (failed) {
            report.counterexample = Counterexample{j, verdict.failures.front()};
        }
        report.verdicts.push_back(std::move(verdict));
        if (failed) {
            report.status = Status::refuted;
            report.j_max = j;  // scan stops at the first failure
            return report;
        }
    }

    if (!report.strictly_increasing) {
        // No failing (j, k), but the sequence is excluded by definition: its
        // terms do not strictly increase.
        report.status = Status::refuted_vacuous;
        report.note = any_k_range_nonempty
                          ? "terms do not strictly increase; excluded by definition"
                          : "terms do not strictly increase; every k-range was empty "
                            "(no k < floor(G) exists), so no partition was ever required";
        return report;
    }
    report.status = Status::verified_up_to_horizon;
    return report;
}

SemicompletenessReport check_arithmetic(const ArithmeticSpec& spec, unsigned j_max,
                                        bool with_witnesses) {
    const std::string name =
        "arithmetic(a=" + std::to_string(spec.a) + ", b=" + std::to_string(spec.b) + ")";
    return check_up_to([&spec](unsigned j) { return arithmetic_prefix(spec, j); }, name, j_max,
                       with_witnesses);
}

SemicompletenessReport check_cut(unsigned M, unsigned j_max, bool with_witnesses) {
    const std::string name = "cut(M=" + std::to_string(M) + ")";
    return check_up_to([M](unsigned j) { return cut_prefix(M, j); }, name, j_max, with_witnesses);
}

std::map<std::pair<std::uint64_t, std::uint64_t>, ClassifyCell> classify_arithmetic(
    std::uint64_t a_max, std::uint64_t b_max, unsigned j_max) {
    if (a_max < 1 || b_max < 1) throw std::domain_error("classify_arithmetic: need a_max, b_max >= 1");
    if (j_max < 4) throw std::domain_error("classify_arithmetic: horizon must be at least 4");

    std::map<std::pair<std::uint64_t, std::uint64_t>, ClassifyCell> cells;
    for (std::uint64_t a = 1; a <= a_max; ++a) {
        for (std::uint64_t b = 0; b <= b_max; ++b) {
            SemicompletenessReport r = check_arithmetic(ArithmeticSpec{a, b}, j_max);
            cells.emplace(std::make_pair(a, b), ClassifyCell{r.status, r.counterexample});
        }
    }
    return cells;
}

bool brown_complete(const std::vector<BigInt>& sorted_values) {
    if (sorted_values.empty())
        throw std::invalid_argument("brown_complete: need a non-empty prefix");
    if (sorted_values.front() != 1) return false;
    BigInt sum = 0;
    for (const BigInt& v : sorted_values) {
        if (v > sum + 1) return false;
        sum += v;
    }
    return true;
}

unsigned certificate_threshold(unsigned M) {
    switch (M) {
        case 1: return 3;
        case 2: return 3;
        case 3: return 4;
        case 4: return 5;
        default: throw std::domain_error("certificate_threshold: requires 1 <= M <= 4");
    }
}

InductionCertificate induction_certificate(unsigned M, unsigned t_base, unsigned tail_horizon) {
    const unsigned threshold = certificate_threshold(M);
    if (t_base <= threshold)
        throw std::domain_error("induction_certificate: t_base must exceed " +
                                std::to_string(threshold) + " for M=" + std::to_string(M));
    if (tail_horizon < t_base)
        throw std::domain_error("induction_certificate: tail horizon must be >= t_base");

    InductionCertificate cert;
    cert.M = M;
    cert.t_base = t_base;
    cert.base_covers_up_to = prefix_sum(M, t_base);

    // Base enumeration: every integer 1..prefix_sum must be a subset sum of
    // the first t_base terms.
    NumeratorSet base = cut_prefix(M, t_base);
    SubsetSumTable table(base);
    cert.base_enumeration_ok = true;
    const std::uint64_t top = base.sum();
    for (std::uint64_t s = 1; s <= top; ++s) {
        if (!table.reachable(s)) {
            cert.base_enumeration_ok = false;
            break;
        }
    }

    cert.tail_ok = true;
    cert.tail_checked_to = tail_horizon;
    for (unsigned t = t_base; t <= tail_horizon; ++t) {
        if (!tail_dominates(M, t)) {
            cert.tail_ok = false;
            cert.tail_checked_to = t;  // first t where the inequality fails
            break;
        }
    }
    return cert;
}

}  // namespace semicomplete
