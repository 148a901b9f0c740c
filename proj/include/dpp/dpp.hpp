#ifndef DPP_DPP_HPP
#define DPP_DPP_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dpp {

/// 1-based cell address. Row i occupies the global columns i..i+m_i-1,
/// so the entry stored at local offset t (1-based) of row i sits in
/// column j = i + t - 1.
struct CellPosition {
    int row = 0;
    int col = 0;

    friend bool operator==(const CellPosition&, const CellPosition&) = default;
};

/// First rule broken by a candidate array, together with the offending
/// cell. The rule numbering matches the standard definition of a
/// descending plane partition (see Dpp below): condition 1 is the shape
/// rule, condition 2 the row/column monotonicity, conditions 3 and 4 the
/// two diagonal bounds. Positivity is checked before everything else.
struct DppViolation {
    enum class Kind {
        non_positive_entry,
        row_length_not_strictly_decreasing,  // condition 1
        row_not_weakly_decreasing,           // condition 2, rows
        column_not_strictly_decreasing,      // condition 2, columns
        diagonal_too_small,                  // condition 3
        diagonal_too_large,                  // condition 4
    };

    Kind kind = Kind::non_positive_entry;
    CellPosition cell;

    std::string message() const;

    friend bool operator==(const DppViolation&, const DppViolation&) = default;
};

class DppError : public std::invalid_argument {
public:
    explicit DppError(const DppViolation& violation)
        : std::invalid_argument(violation.message()), violation_(violation) {}

    const DppViolation& violation() const { return violation_; }

private:
    DppViolation violation_;
};

/// A descending plane partition: a shifted array of positive integers,
/// stored as ragged rows in local coordinates (rows_[i][0] is the
/// diagonal entry a_{i+1,i+1}). Writing m_i for the length of row i, a
/// valid array satisfies
///
///   1. m_{i+1} <= m_i - 1 (equivalently mu_1 >= ... >= mu_r for the
///      shifted shape),
///   2. entries weakly decrease along rows and strictly decrease down
///      columns,
///   3. the diagonal entry of each row exceeds the row's length,
///   4. the diagonal entry of each row is at most the length of the row
///      above.
///
/// The empty array (zero rows) is a valid value. Instances are immutable
/// after construction, and every operation on them is a pure function,
/// so they can be shared freely across threads.
class Dpp {
public:
    /// Empty DPP.
    Dpp() = default;

    /// Validates and adopts the given rows; throws DppError naming the
    /// first violated rule otherwise. Violations are searched in a fixed
    /// order (positivity, shape, rows, columns, condition 3, condition 4)
    /// and row-major within each stage, so the reported cell is
    /// deterministic.
    static Dpp from_rows(std::vector<std::vector<int>> rows);

    /// The check behind from_rows: std::nullopt iff the rows form a
    /// valid DPP.
    static std::optional<DppViolation> check(
        const std::vector<std::vector<int>>& rows);

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int row_count() const { return static_cast<int>(rows_.size()); }
    bool empty() const { return rows_.empty(); }

    /// Lengths m_1 > m_2 > ... > m_r.
    std::vector<int> row_lengths() const;

    /// Largest entry, 0 for the empty DPP. The array has order n exactly
    /// when max_entry() <= n.
    int max_entry() const;

    /// Cells with a_{ij} <= j - i (the "special parts"), in row-major
    /// order. Diagonal cells never qualify.
    std::vector<CellPosition> special_parts() const;

    bool has_special_part() const { return !special_parts().empty(); }

    /// Number of entries.
    int part_count() const;

    /// Sum of all entries.
    long long entry_sum() const;

    friend bool operator==(const Dpp&, const Dpp&) = default;

private:
    explicit Dpp(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {}

    std::vector<std::vector<int>> rows_;
};

}  // namespace dpp

#endif
