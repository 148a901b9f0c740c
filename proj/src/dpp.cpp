#include "dpp/dpp.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dpp {

std::string DppViolation::message() const {
    std::ostringstream os;
    os << "(" << cell.row << "," << cell.col << "): ";
    switch (kind) {
        case Kind::non_positive_entry:
            os << "entry is not a positive integer";
            break;
        case Kind::row_length_not_strictly_decreasing:
            os << "row is not strictly shorter than the row above"
                  " (condition 1)";
            break;
        case Kind::row_not_weakly_decreasing:
            os << "entry exceeds the entry to its left; rows must weakly"
                  " decrease (condition 2)";
            break;
        case Kind::column_not_strictly_decreasing:
            os << "entry is not smaller than the entry above it; columns"
                  " must strictly decrease (condition 2)";
            break;
        case Kind::diagonal_too_small:
            os << "diagonal entry must exceed its row length (condition 3)";
            break;
        case Kind::diagonal_too_large:
            os << "diagonal entry exceeds the length of the row above"
                  " (condition 4)";
            break;
    }
    return os.str();
}

std::optional<DppViolation> Dpp::check(
    const std::vector<std::vector<int>>& rows) {
    using Kind = DppViolation::Kind;
    const int r = static_cast<int>(rows.size());

    // Global column of row i (1-based), local offset t (1-based) is
    // j = i + t - 1 throughout.
    auto cell = [](int i, int t) { return CellPosition{i, i + t - 1}; };

    // Positivity. A row of length zero has no cells to blame, so the
    // shape stage reports it below; treat it as no positivity issue.
    for (int i = 1; i <= r; ++i) {
        const auto& row = rows[i - 1];
        for (int t = 1; t <= static_cast<int>(row.size()); ++t) {
            if (row[t - 1] < 1)
                return DppViolation{Kind::non_positive_entry, cell(i, t)};
        }
    }

    // Shape: every row nonempty, lengths strictly decreasing.
    for (int i = 1; i <= r; ++i) {
        if (rows[i - 1].empty())
            return DppViolation{Kind::row_length_not_strictly_decreasing,
                                cell(i, 1)};
        if (i > 1 && rows[i - 1].size() + 1 > rows[i - 2].size())
            return DppViolation{Kind::row_length_not_strictly_decreasing,
                                cell(i, 1)};
    }

    // Rows weakly decreasing. Blame the right-hand cell of the first
    // offending adjacent pair.
    for (int i = 1; i <= r; ++i) {
        const auto& row = rows[i - 1];
        for (int t = 1; t + 1 <= static_cast<int>(row.size()); ++t) {
            if (row[t - 1] < row[t])
                return DppViolation{Kind::row_not_weakly_decreasing,
                                    cell(i, t + 1)};
        }
    }

    // Columns strictly decreasing. Row i+1 local t sits under row i
    // local t+1; the shape stage already guarantees the upper cell
    // exists. Blame the lower cell.
    for (int i = 1; i + 1 <= r; ++i) {
        const auto& upper = rows[i - 1];
        const auto& lower = rows[i];
        for (int t = 1; t <= static_cast<int>(lower.size()); ++t) {
            if (lower[t - 1] >= upper[t])
                return DppViolation{Kind::column_not_strictly_decreasing,
                                    cell(i + 1, t)};
        }
    }

    // Condition 3: diagonal entry exceeds the row length.
    for (int i = 1; i <= r; ++i) {
        if (rows[i - 1][0] <= static_cast<int>(rows[i - 1].size()))
            return DppViolation{Kind::diagonal_too_small, cell(i, 1)};
    }

    // Condition 4: diagonal entry at most the length of the row above.
    for (int i = 2; i <= r; ++i) {
        if (rows[i - 1][0] > static_cast<int>(rows[i - 2].size()))
            return DppViolation{Kind::diagonal_too_large, cell(i, 1)};
    }

    return std::nullopt;
}

Dpp Dpp::from_rows(std::vector<std::vector<int>> rows) {
    if (auto violation = check(rows)) throw DppError(*violation);
    return Dpp(std::move(rows));
}

std::vector<int> Dpp::row_lengths() const {
    std::vector<int> lengths;
    lengths.reserve(rows_.size());
    for (const auto& row : rows_) lengths.push_back(static_cast<int>(row.size()));
    return lengths;
}

int Dpp::max_entry() const {
    int best = 0;
    for (const auto& row : rows_)
        for (int v : row) best = std::max(best, v);
    return best;
}

std::vector<CellPosition> Dpp::special_parts() const {
    std::vector<CellPosition> cells;
    for (int i = 1; i <= row_count(); ++i) {
        const auto& row = rows_[i - 1];
        for (int t = 1; t <= static_cast<int>(row.size()); ++t) {
            // a_{ij} <= j - i with j = i + t - 1, i.e. entry <= t - 1.
            if (row[t - 1] <= t - 1)
                cells.push_back(CellPosition{i, i + t - 1});
        }
    }
    return cells;
}

int Dpp::part_count() const {
    int count = 0;
    for (const auto& row : rows_) count += static_cast<int>(row.size());
    return count;
}

long long Dpp::entry_sum() const {
    long long sum = 0;
    for (const auto& row : rows_)
        sum = std::accumulate(row.begin(), row.end(), sum);
    return sum;
}

}  // namespace dpp
