#ifndef DPP_PERMUTATION_HPP
#define DPP_PERMUTATION_HPP

#include <vector>

namespace dpp {

/// A permutation of 1..n, n >= 1, kept as the sequence of its values.
/// Immutable after construction; all statistics are pure functions.
class Permutation {
public:
    /// Validates that the values are exactly 1..n in some order; throws
    /// std::invalid_argument otherwise (including for an empty sequence).
    explicit Permutation(std::vector<int> values);

    static Permutation identity(int n);

    /// n, n-1, ..., 1: the unique permutation with no ascent.
    static Permutation descending(int n);

    int size() const { return static_cast<int>(values_.size()); }
    const std::vector<int>& values() const { return values_; }
    int at(int position) const { return values_[position - 1]; }  // 1-based

    /// Positions k in 1..n-1 with value(k) < value(k+1), ascending.
    std::vector<int> ascent_positions() const;

    int ascent_count() const { return static_cast<int>(ascent_positions().size()); }

    /// The maximal strictly decreasing contiguous blocks, in order.
    /// Their concatenation is the permutation, consecutive blocks meet
    /// at an ascent, and there are ascent_count() + 1 of them.
    std::vector<std::vector<int>> descending_runs() const;

    /// Number of pairs i < j with value(i) < value(j), counted directly
    /// over all pairs. This is the reference statistic the closed-form
    /// expressions elsewhere in the library are tested against.
    long long non_inversion_count() const;

    /// n(n-1)/2 minus the non-inversion count.
    long long inversion_count() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> values_;
};

}  // namespace dpp

#endif
