#ifndef DPP_BIJECTION_HPP
#define DPP_BIJECTION_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "dpp/dpp.hpp"
#include "dpp/permutation.hpp"

namespace dpp {

class BijectionError : public std::invalid_argument {
public:
    enum class Kind {
        not_one_row,
        has_special_part,
        order_too_small,
        wrong_ascent_count,
        ground_set_too_small,
        blocks_not_disjoint,
        block_not_decreasing,
        no_junction_ascent,
    };

    BijectionError(Kind kind, const std::string& what)
        : std::invalid_argument(what), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// Order-preserving relabeling between an n-element set of positive
/// integers and the ranks 1..n (smallest element gets rank 1).
class Relabeling {
public:
    /// Sorts the values; throws std::invalid_argument on duplicates,
    /// non-positive entries, or an empty set.
    static Relabeling from_values(std::vector<int> values);

    int size() const { return static_cast<int>(sorted_.size()); }
    const std::vector<int>& sorted_elements() const { return sorted_; }

    /// Rank in 1..n of an element of the set.
    int rank_of(int element) const;

    /// Element holding the given rank.
    int element_at(int rank) const;

private:
    explicit Relabeling(std::vector<int> sorted) : sorted_(std::move(sorted)) {}

    std::vector<int> sorted_;
};

/// The two blocks of a single-ascent arrangement of some ground set:
/// both strictly decreasing, disjoint, with the one ascent at the
/// junction (beta's last element below gamma's first). merge_split
/// checks these invariants and rejects anything else.
struct OneRowSplit {
    std::vector<int> beta;
    std::vector<int> gamma;
};

/// One construction step of dpp_to_permutation. The row replaced the
/// current final descending run by beta_block followed by gamma_block;
/// prefix is the part of the permutation left untouched by this and all
/// later steps.
struct BijectionStep {
    int row_index = 0;  // 1-based row of the DPP
    std::vector<int> prefix;
    std::vector<int> beta_block;
    std::vector<int> gamma_block;
};

/// Single-row correspondence. A one-row array (a_1,...,a_m) with no
/// special part and order at most n maps to the unique permutation of
/// 1..n with exactly one ascent whose final run is
/// gamma = (a_1, a_2 - 1, ..., a_m - (m-1)); the leading run beta is the
/// complement of gamma in decreasing order. The ascent falls at
/// position n - m.
Permutation one_row_to_permutation(const Dpp& row, int order);

/// Inverse of one_row_to_permutation: reads gamma off the final
/// descending run and returns (gamma_1, gamma_2 + 1, ..., gamma_m + (m-1)).
/// The order n is recovered from the permutation length. Throws
/// wrong_ascent_count unless the permutation has exactly one ascent.
Dpp one_row_from_permutation(const Permutation& p);

/// one_row_to_permutation transported onto an arbitrary ground set:
/// run_desc is a strictly decreasing list of n' >= 2 positive integers,
/// and the result is the arrangement of those values with one ascent
/// obtained by relabeling the rank permutation. The gamma block has the
/// row's length.
OneRowSplit split_run(const std::vector<int>& run_desc, const Dpp& row);

/// Exact inverse of split_run: returns the merged ground set in
/// decreasing order and the one-row array recovered from the
/// relabeled arrangement.
std::pair<std::vector<int>, Dpp> merge_split(const OneRowSplit& split);

/// The full correspondence, built row by row. Starting from
/// n n-1 ... 1, row k replaces the current final descending run by its
/// split_run blocks, adding one ascent; a DPP with r rows and no special
/// part yields a permutation of 1..n with exactly r ascents. The order n
/// must be supplied because an array does not determine it. If steps is
/// non-null, one BijectionStep per row is appended.
Permutation dpp_to_permutation(const Dpp& d, int order,
                               std::vector<BijectionStep>* steps = nullptr);

/// Inverse of dpp_to_permutation at order p.size(): repeatedly merges
/// the last two descending runs, reading off rows bottom-up. Total on
/// valid permutations; the reassembled array is re-validated and any
/// defect raises std::logic_error since it would indicate a bug in the
/// construction, not bad input.
Dpp permutation_to_dpp(const Permutation& p);

/// Non-inversion count of the partner permutation of a one-row array,
/// computed as sum(a_i) - m^2 without building the permutation. The
/// value does not depend on which admissible order is chosen.
long long non_inversions_one_row(const Dpp& row);

/// Row-by-row extension of non_inversions_one_row: total entry sum
/// minus the sum of squared row lengths. Defined for any DPP with no
/// special part; 0 for the empty array.
long long non_inversions_via_dpp(const Dpp& d);

}  // namespace dpp

#endif
