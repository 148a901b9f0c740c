#include "dpp/bijection.hpp"

#include <algorithm>
#include <string>

namespace dpp {

namespace {

using Kind = BijectionError::Kind;

[[noreturn]] void fail(Kind kind, const std::string& what) {
    throw BijectionError(kind, what);
}

bool strictly_decreasing(const std::vector<int>& values) {
    for (size_t i = 1; i < values.size(); ++i)
        if (values[i - 1] <= values[i]) return false;
    return true;
}

// Shared entry checks for the one-row operations.
const std::vector<int>& one_row_entries(const Dpp& row) {
    if (row.row_count() != 1)
        fail(Kind::not_one_row,
             "expected a one-row array, got " + std::to_string(row.row_count()) +
                 " rows");
    if (row.has_special_part())
        fail(Kind::has_special_part,
             "array has a special part; the correspondence is defined only"
             " without them");
    return row.rows()[0];
}

}  // namespace

Relabeling Relabeling::from_values(std::vector<int> values) {
    if (values.empty())
        throw std::invalid_argument("relabeling needs a nonempty set");
    std::sort(values.begin(), values.end());
    if (values.front() < 1)
        throw std::invalid_argument("relabeling is defined on positive integers");
    if (std::adjacent_find(values.begin(), values.end()) != values.end())
        throw std::invalid_argument("relabeling needs distinct values");
    return Relabeling(std::move(values));
}

int Relabeling::rank_of(int element) const {
    auto it = std::lower_bound(sorted_.begin(), sorted_.end(), element);
    if (it == sorted_.end() || *it != element)
        throw std::invalid_argument("value " + std::to_string(element) +
                                    " is not in the relabeled set");
    return static_cast<int>(it - sorted_.begin()) + 1;
}

int Relabeling::element_at(int rank) const {
    if (rank < 1 || rank > size())
        throw std::invalid_argument("rank " + std::to_string(rank) +
                                    " outside 1.." + std::to_string(size()));
    return sorted_[rank - 1];
}

Permutation one_row_to_permutation(const Dpp& row, int order) {
    const auto& entries = one_row_entries(row);
    const int m = static_cast<int>(entries.size());
    if (row.max_entry() > order || m >= order)
        fail(Kind::order_too_small,
             "order " + std::to_string(order) + " cannot hold a row of length " +
                 std::to_string(m) + " with largest entry " +
                 std::to_string(row.max_entry()));

    // gamma_k = a_k - (k-1) is strictly decreasing and stays in 1..order
    // because the row weakly decreases and has no special part.
    std::vector<int> values;
    values.reserve(order);
    std::vector<bool> in_gamma(static_cast<size_t>(order) + 1, false);
    for (int k = 0; k < m; ++k) in_gamma[entries[k] - k] = true;
    for (int v = order; v >= 1; --v)
        if (!in_gamma[v]) values.push_back(v);
    for (int k = 0; k < m; ++k) values.push_back(entries[k] - k);
    return Permutation(std::move(values));
}

Dpp one_row_from_permutation(const Permutation& p) {
    auto runs = p.descending_runs();
    if (runs.size() != 2)
        fail(Kind::wrong_ascent_count,
             "expected exactly one ascent, got " +
                 std::to_string(runs.size() - 1));
    const auto& gamma = runs[1];
    std::vector<int> entries(gamma.size());
    for (size_t k = 0; k < gamma.size(); ++k)
        entries[k] = gamma[k] + static_cast<int>(k);
    return Dpp::from_rows({std::move(entries)});
}

OneRowSplit split_run(const std::vector<int>& run_desc, const Dpp& row) {
    if (!strictly_decreasing(run_desc))
        fail(Kind::block_not_decreasing, "ground set run must strictly decrease");
    if (run_desc.size() < 2)
        fail(Kind::ground_set_too_small,
             "ground set of size " + std::to_string(run_desc.size()) +
                 " cannot be split into two nonempty blocks");

    const int n = static_cast<int>(run_desc.size());
    std::vector<int> ascending(run_desc.rbegin(), run_desc.rend());
    auto relabeling = Relabeling::from_values(std::move(ascending));

    Permutation ranks = one_row_to_permutation(row, n);
    const int m = static_cast<int>(row.rows()[0].size());

    OneRowSplit split;
    split.beta.reserve(n - m);
    split.gamma.reserve(m);
    for (int i = 0; i < n - m; ++i)
        split.beta.push_back(relabeling.element_at(ranks.values()[i]));
    for (int i = n - m; i < n; ++i)
        split.gamma.push_back(relabeling.element_at(ranks.values()[i]));
    return split;
}

std::pair<std::vector<int>, Dpp> merge_split(const OneRowSplit& split) {
    if (split.beta.empty() || !strictly_decreasing(split.beta))
        fail(Kind::block_not_decreasing,
             "beta block must be nonempty and strictly decreasing");
    if (split.gamma.empty() || !strictly_decreasing(split.gamma))
        fail(Kind::block_not_decreasing,
             "gamma block must be nonempty and strictly decreasing");
    if (split.beta.back() >= split.gamma.front())
        fail(Kind::no_junction_ascent,
             "blocks must meet in an ascent: " + std::to_string(split.beta.back()) +
                 " is not below " + std::to_string(split.gamma.front()));

    // Merge the two decreasing blocks; a tie means a shared value.
    std::vector<int> merged;
    merged.reserve(split.beta.size() + split.gamma.size());
    size_t b = 0, g = 0;
    while (b < split.beta.size() || g < split.gamma.size()) {
        if (b < split.beta.size() &&
            (g == split.gamma.size() || split.beta[b] > split.gamma[g])) {
            merged.push_back(split.beta[b++]);
        } else if (g < split.gamma.size() &&
                   (b == split.beta.size() || split.gamma[g] > split.beta[b])) {
            merged.push_back(split.gamma[g++]);
        } else {
            fail(Kind::blocks_not_disjoint,
                 "blocks share the value " + std::to_string(split.beta[b]));
        }
    }

    auto relabeling = Relabeling::from_values(merged);
    std::vector<int> ranks;
    ranks.reserve(merged.size());
    for (int v : split.beta) ranks.push_back(relabeling.rank_of(v));
    for (int v : split.gamma) ranks.push_back(relabeling.rank_of(v));

    Dpp row = one_row_from_permutation(Permutation(std::move(ranks)));
    return {std::move(merged), std::move(row)};
}

Permutation dpp_to_permutation(const Dpp& d, int order,
                               std::vector<BijectionStep>* steps) {
    if (d.has_special_part())
        fail(Kind::has_special_part,
             "array has a special part; the correspondence is defined only"
             " without them");
    const int m1 = d.empty() ? 0 : static_cast<int>(d.rows()[0].size());
    if (order < 1 || d.max_entry() > order || (!d.empty() && m1 >= order))
        fail(Kind::order_too_small,
             "order " + std::to_string(order) + " cannot hold this array"
             " (largest entry " + std::to_string(d.max_entry()) +
                 ", first row length " + std::to_string(m1) + ")");

    std::vector<int> prefix;
    prefix.reserve(order);
    std::vector<int> tail;
    tail.reserve(order);
    for (int v = order; v >= 1; --v) tail.push_back(v);

    for (int k = 1; k <= d.row_count(); ++k) {
        Dpp row = Dpp::from_rows({d.rows()[k - 1]});
        OneRowSplit split = split_run(tail, row);

        // Creating the new ascent must not destroy the previous one.
        if (!prefix.empty() && split.beta.front() <= prefix.back())
            throw std::logic_error(
                "bijection construction broke the preceding ascent at row " +
                std::to_string(k));

        if (steps) steps->push_back({k, prefix, split.beta, split.gamma});
        prefix.insert(prefix.end(), split.beta.begin(), split.beta.end());
        tail = std::move(split.gamma);
        if (tail.size() != d.rows()[k - 1].size())
            throw std::logic_error("bijection construction produced a tail of"
                                   " unexpected length at row " +
                                   std::to_string(k));
    }

    prefix.insert(prefix.end(), tail.begin(), tail.end());
    Permutation result{std::move(prefix)};
    if (result.ascent_count() != d.row_count())
        throw std::logic_error("bijection construction produced " +
                               std::to_string(result.ascent_count()) +
                               " ascents from " + std::to_string(d.row_count()) +
                               " rows");
    return result;
}

Dpp permutation_to_dpp(const Permutation& p) {
    auto runs = p.descending_runs();
    std::vector<std::vector<int>> rows_bottom_up;
    rows_bottom_up.reserve(runs.size() - 1);

    while (runs.size() > 1) {
        OneRowSplit split{std::move(runs[runs.size() - 2]),
                          std::move(runs[runs.size() - 1])};
        auto [merged, row] = merge_split(split);
        rows_bottom_up.push_back(row.rows()[0]);
        runs.pop_back();
        runs.back() = std::move(merged);
    }

    std::vector<std::vector<int>> rows(rows_bottom_up.rbegin(),
                                       rows_bottom_up.rend());
    try {
        return Dpp::from_rows(std::move(rows));
    } catch (const DppError& e) {
        // The construction always yields a valid array, so this is a
        // self-diagnostic, not an input error.
        throw std::logic_error(
            std::string("recovered array is not a valid descending plane"
                        " partition: ") +
            e.what());
    }
}

long long non_inversions_one_row(const Dpp& row) {
    const auto& entries = one_row_entries(row);
    const long long m = static_cast<long long>(entries.size());
    long long sum = 0;
    for (int v : entries) sum += v;
    return sum - m * m;
}

long long non_inversions_via_dpp(const Dpp& d) {
    if (d.has_special_part())
        fail(Kind::has_special_part,
             "array has a special part; the correspondence is defined only"
             " without them");
    long long total = 0;
    for (const auto& row : d.rows()) {
        const long long m = static_cast<long long>(row.size());
        for (int v : row) total += v;
        total -= m * m;
    }
    return total;
}

}  // namespace dpp
