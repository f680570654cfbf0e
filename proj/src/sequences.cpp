#include "semicomplete/sequences.hpp"

#include <limits>
#include <stdexcept>
#include <vector>

namespace semicomplete {

namespace {

void require_dimension(unsigned M) {
    if (M < 1) throw std::domain_error("cut sequence: dimension must be >= 1");
}

void require_index(unsigned N) {
    if (N < 1) throw std::domain_error("cut sequence: term index must be >= 1");
}

std::uint64_t to_u64(const BigInt& v, const char* what) {
    if (v < 0 || v > std::numeric_limits<std::uint64_t>::max())
        throw std::overflow_error(std::string(what) + ": value does not fit in 64 bits");
    return v.convert_to<std::uint64_t>();
}

}  // namespace

BigInt cut_number(unsigned M, unsigned N) {
    require_dimension(M);
    require_index(N);

    // rows[m][n-1] = C(m+1, n); grown on demand, confined per thread.
    thread_local std::vector<std::vector<BigInt>> rows;
    if (rows.size() < M) rows.resize(M);

    // Base row: cutting a line with points gives consecutive integers.
    auto& first = rows[0];
    while (first.size() < N) first.emplace_back(first.size() + 1);

    // Each pass extends row m to length N using row m-1, which the previous
    // pass extended to at least N.
    for (unsigned m = 2; m <= M; ++m) {
        auto& row = rows[m - 1];
        const auto& prev = rows[m - 2];
        if (row.empty()) row.emplace_back(1);
        while (row.size() < N) {
            const std::size_t n = row.size();
            row.push_back(row[n - 1] + prev[n - 1]);
        }
    }
    return rows[M - 1][N - 1];
}

BigInt cut_closed_form(unsigned M, unsigned N) {
    require_dimension(M);
    require_index(N);
    const BigInt n(N);
    switch (M) {
        case 1: return n;
        case 2: return (n * n - n + 2) / 2;
        case 3: return (n * n * n - 3 * n * n + 8 * n) / 6;
        case 4: return (((n * n - 6 * n + 23) * n - 18) * n + 24) / 24;
        default:
            throw std::domain_error("cut_closed_form: closed form only available for M <= 4");
    }
}

BigInt prefix_sum(unsigned M, unsigned t) {
    require_dimension(M);
    require_index(t);
    const BigInt x(t);
    switch (M) {
        case 1: return x * (x + 1) / 2;
        case 2: return x * (x * x + 5) / 6;
        case 3: return x * (x + 1) * (x * x - 3 * x + 14) / 24;
        case 4: return x * ((((x - 5) * x + 25) * x + 5) * x + 94) / 120;
        default:
            throw std::domain_error("prefix_sum: closed form only available for M <= 4");
    }
}

BigInt prefix_sum_direct(unsigned M, unsigned t) {
    require_dimension(M);
    require_index(t);
    BigInt sum = 0;
    for (unsigned n = 1; n <= t; ++n) sum += cut_number(M, n);
    return sum;
}

bool tail_dominates(unsigned M, unsigned t) {
    if (M < 1 || M > 4) throw std::domain_error("tail_dominates: requires 1 <= M <= 4");
    require_index(t);
    return cut_number(M, t + 1) < prefix_sum(M, t);
}

NumeratorSet arithmetic_prefix(const ArithmeticSpec& spec, unsigned j) {
    if (spec.a < 1) throw std::domain_error("arithmetic_prefix: first term must be >= 1");
    if (j < 1) throw std::domain_error("arithmetic_prefix: need at least one term");
    std::vector<std::uint64_t> values;
    values.reserve(j);
    for (unsigned i = 0; i < j; ++i) values.push_back(spec.a + std::uint64_t(i) * spec.b);
    return NumeratorSet(std::move(values));
}

NumeratorSet cut_prefix(unsigned M, unsigned j) {
    require_dimension(M);
    if (j < 1) throw std::domain_error("cut_prefix: need at least one term");
    std::vector<std::uint64_t> values;
    values.reserve(j);
    for (unsigned n = 1; n <= j; ++n) values.push_back(to_u64(cut_number(M, n), "cut_prefix"));
    return NumeratorSet(std::move(values));
}

}  // namespace semicomplete
