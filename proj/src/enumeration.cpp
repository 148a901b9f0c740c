#include "dpp/enumeration.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <string>

namespace dpp {

namespace {

std::vector<int> flatten(const Dpp& d) {
    std::vector<int> entries;
    entries.reserve(d.part_count());
    for (const auto& row : d.rows())
        entries.insert(entries.end(), row.begin(), row.end());
    return entries;
}

// Backtracking generator. Shapes are chosen longest-first so the stream
// comes out in canonical order, then each shape is filled cell by cell,
// row-major, trying larger values first. Per-cell bounds:
//
//   upper: the order n (first cell), the cell to the left (weak row
//          decrease), one less than the cell above (strict column
//          decrease), and for a diagonal cell the length of the row
//          above (condition 4);
//   lower: 1, row length + 1 on the diagonal (condition 3), and what the
//          next row's cells will force from below: its diagonal needs at
//          least m' + 1, so the cell over it needs at least m' + 2, and
//          every other covered cell at least 2. With the no-special-part
//          filter, cell t of a row additionally needs at least t.
//
// The lower bounds depend only on the shape, so each row's bounds are
// precomputed as suffix maxima (a cell must also stay above every bound
// to its right, since entries weakly decrease).
class Generator {
public:
    Generator(const DppFilter& filter, const std::function<bool(const Dpp&)>& visit)
        : filter_(filter), visit_(visit) {}

    // Returns true iff the stream was exhausted (never stopped early).
    bool run() {
        if (matches_row_count(0)) {
            if (!visit_(Dpp())) return false;
        }
        // Row lengths strictly decrease and m_1 <= order - 1, so no DPP
        // of order n has more than n - 1 rows.
        for (int r = 1; r <= filter_.order - 1 && !stopped_; ++r) {
            if (!matches_row_count(r)) continue;
            shape_.clear();
            choose_length(r, filter_.order - 1);
        }
        return !stopped_;
    }

private:
    bool matches_row_count(int r) const {
        return !filter_.row_count || *filter_.row_count == r;
    }

    void choose_length(int rows_left, int longest) {
        if (rows_left == 0) {
            fill_shape();
            return;
        }
        // Need rows_left strictly decreasing lengths >= 1 below this one.
        for (int len = longest; len >= rows_left && !stopped_; --len) {
            shape_.push_back(len);
            choose_length(rows_left - 1, len - 1);
            shape_.pop_back();
        }
    }

    void fill_shape() {
        const int r = static_cast<int>(shape_.size());
        lower_.assign(r, {});
        for (int i = 0; i < r; ++i) {
            const int m = shape_[i];
            lower_[i].assign(m, 1);
            for (int t = 1; t <= m; ++t) {
                int lb = 1;
                if (t == 1) lb = m + 1;
                if (i + 1 < r) {
                    const int below = shape_[i + 1];
                    if (t == 2)
                        lb = std::max(lb, below + 2);
                    else if (t >= 3 && t <= below + 1)
                        lb = std::max(lb, 2);
                }
                if (filter_.no_special_parts) lb = std::max(lb, t);
                lower_[i][t - 1] = lb;
            }
            for (int t = m - 1; t >= 1; --t)
                lower_[i][t - 1] = std::max(lower_[i][t - 1], lower_[i][t]);
        }
        rows_.assign(r, {});
        for (int i = 0; i < r; ++i) rows_[i].assign(shape_[i], 0);
        fill_cell(0, 0);
    }

    void fill_cell(int i, int t) {
        if (stopped_) return;
        if (t == shape_[i]) {
            if (i + 1 == static_cast<int>(shape_.size())) {
                if (!visit_(Dpp::from_rows(rows_))) stopped_ = true;
            } else {
                fill_cell(i + 1, 0);
            }
            return;
        }
        int ub;
        if (i == 0)
            ub = t == 0 ? filter_.order : rows_[0][t - 1];
        else if (t == 0)
            ub = std::min(shape_[i - 1], rows_[i - 1][1] - 1);
        else
            ub = std::min(rows_[i][t - 1], rows_[i - 1][t + 1] - 1);

        for (int v = ub; v >= lower_[i][t] && !stopped_; --v) {
            rows_[i][t] = v;
            fill_cell(i, t + 1);
        }
    }

    const DppFilter& filter_;
    const std::function<bool(const Dpp&)>& visit_;
    bool stopped_ = false;
    std::vector<int> shape_;
    std::vector<std::vector<int>> rows_;
    std::vector<std::vector<int>> lower_;
};

}  // namespace

bool canonical_before(const Dpp& a, const Dpp& b) {
    if (a.row_count() != b.row_count()) return a.row_count() < b.row_count();
    const auto la = a.row_lengths();
    const auto lb = b.row_lengths();
    if (la != lb) return la > lb;
    return flatten(a) > flatten(b);
}

bool enumerate_dpps(const DppFilter& filter,
                    const std::function<bool(const Dpp&)>& visit) {
    if (filter.order < 1)
        throw std::invalid_argument("enumeration order must be at least 1");
    if (filter.row_count && *filter.row_count < 0)
        throw std::invalid_argument("row count filter must be nonnegative");
    return Generator(filter, visit).run();
}

std::vector<Dpp> collect_dpps(const DppFilter& filter) {
    std::vector<Dpp> all;
    enumerate_dpps(filter, [&](const Dpp& d) {
        all.push_back(d);
        return true;
    });
    return all;
}

BigCount count_dpps(const DppFilter& filter) {
    BigCount count = 0;
    enumerate_dpps(filter, [&](const Dpp&) {
        ++count;
        return true;
    });
    return count;
}

BigCount dpp_count_formula(int order) {
    if (order < 1) throw std::invalid_argument("order must be at least 1");
    const int max_argument = 3 * order - 2;
    std::vector<BigCount> factorial(max_argument + 1);
    factorial[0] = 1;
    for (int i = 1; i <= max_argument; ++i) factorial[i] = factorial[i - 1] * i;

    BigCount numerator = 1, denominator = 1;
    for (int k = 0; k < order; ++k) {
        numerator *= factorial[3 * k + 1];
        denominator *= factorial[order + k];
    }
    BigCount quotient, remainder;
    boost::multiprecision::divide_qr(numerator, denominator, quotient, remainder);
    if (remainder != 0)
        throw std::logic_error("count formula did not divide exactly at order " +
                               std::to_string(order));
    return quotient;
}

namespace {

std::mutex& eulerian_mutex() {
    static std::mutex m;
    return m;
}

// Row n holds E(n,0..n-1); row 0 is {1}.
std::vector<std::vector<BigCount>>& eulerian_table() {
    static std::vector<std::vector<BigCount>> table{{BigCount(1)}};
    return table;
}

}  // namespace

std::vector<BigCount> eulerian_row(int n) {
    if (n < 0) throw std::invalid_argument("Eulerian row index must be nonnegative");
    std::lock_guard<std::mutex> lock(eulerian_mutex());
    auto& table = eulerian_table();
    while (static_cast<int>(table.size()) <= n) {
        const int m = static_cast<int>(table.size());
        const auto& prev = table[m - 1];
        std::vector<BigCount> row(m);
        for (int k = 0; k < m; ++k) {
            BigCount value = 0;
            if (k < static_cast<int>(prev.size()))
                value += BigCount(k + 1) * prev[k];
            if (k >= 1 && k - 1 < static_cast<int>(prev.size()))
                value += BigCount(m - k) * prev[k - 1];
            row[k] = std::move(value);
        }
        table.push_back(std::move(row));
    }
    return table[n];
}

BigCount eulerian_number(int n, int k) {
    if (n < 0) throw std::invalid_argument("Eulerian index must be nonnegative");
    if (k < 0) return 0;
    auto row = eulerian_row(n);
    if (k >= static_cast<int>(row.size())) return 0;
    return row[k];
}

bool enumerate_permutations(int n,
                            const std::function<bool(const Permutation&)>& visit) {
    if (n < 1) throw std::invalid_argument("permutation size must be at least 1");
    std::vector<int> values(n);
    std::iota(values.begin(), values.end(), 1);
    do {
        if (!visit(Permutation(values))) return false;
    } while (std::next_permutation(values.begin(), values.end()));
    return true;
}

std::vector<Permutation> collect_permutations(int n) {
    std::vector<Permutation> all;
    enumerate_permutations(n, [&](const Permutation& p) {
        all.push_back(p);
        return true;
    });
    return all;
}

}  // namespace dpp
