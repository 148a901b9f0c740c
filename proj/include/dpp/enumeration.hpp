#ifndef DPP_ENUMERATION_HPP
#define DPP_ENUMERATION_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dpp/dpp.hpp"
#include "dpp/permutation.hpp"

namespace dpp {

/// Exact nonnegative counter. All counting paths stay in integer
/// arithmetic; nothing in this module touches floating point except the
/// elapsed-time field of VerifyReport.
using BigCount = boost::multiprecision::cpp_int;

/// Selects which DPPs of order <= order an enumeration yields.
struct DppFilter {
    int order = 1;
    bool no_special_parts = false;
    std::optional<int> row_count;
};

class InfeasibleOrderError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// True when a precedes b in the canonical enumeration order: fewer rows
/// first, then shape lexicographically descending, then entries (read
/// row-major) lexicographically descending.
bool canonical_before(const Dpp& a, const Dpp& b);

/// Yields every DPP matching the filter exactly once, in canonical
/// order. The visitor returns false to stop early; the function returns
/// true iff the stream was exhausted. Generation backtracks cell by
/// cell, so early stops cost only the work already done.
bool enumerate_dpps(const DppFilter& filter,
                    const std::function<bool(const Dpp&)>& visit);

std::vector<Dpp> collect_dpps(const DppFilter& filter);

/// Exact cardinality of enumerate_dpps(filter). Full unfiltered
/// enumeration is desk-scale up to about order 7 (218,348 arrays);
/// the no-special-part stream up to order 8 (8! = 40,320).
BigCount count_dpps(const DppFilter& filter);

/// Product formula for the number of DPPs of order n, evaluated
/// exactly: prod_{k=0}^{n-1} (3k+1)! divided by prod_{k=0}^{n-1} (n+k)!.
/// The quotient is an integer; a nonzero remainder would be an internal
/// error and raises std::logic_error.
BigCount dpp_count_formula(int order);

/// Number of permutations of n letters with k ascents, from the
/// recurrence E(n,k) = (k+1) E(n-1,k) + (n-k) E(n-1,k-1) with
/// E(0,k) = delta_{k,0}. Out-of-range k gives 0. Backed by a memoized
/// table that grows on demand; safe to call from multiple threads.
BigCount eulerian_number(int n, int k);

/// Row E(n,0..n-1) of the table ({1} for n = 0).
std::vector<BigCount> eulerian_row(int n);

/// Yields all n! permutations of 1..n in lexicographic order. Same
/// visitor protocol as enumerate_dpps.
bool enumerate_permutations(int n,
                            const std::function<bool(const Permutation&)>& visit);

std::vector<Permutation> collect_permutations(int n);

/// Outcome of the exhaustive cross-checks at one order: both round
/// trips over every permutation and every no-special-part DPP, the
/// ascent/row-count refinement against the Eulerian numbers, and the
/// closed-form non-inversion statistic against direct pair counting.
struct VerifyReport {
    struct KRow {
        int k = 0;
        BigCount eulerian;
        BigCount dpps_with_k_rows;
        BigCount perms_with_k_ascents;
    };

    int order = 0;
    BigCount permutation_count;
    BigCount dpp_no_special_count;
    std::vector<KRow> table;  // k ascending, 0..order-1

    // Informational aggregates over the no-special-part DPPs.
    BigCount dpp_total_parts;
    BigCount dpp_total_entry_sum;

    std::vector<std::string> round_trip_failures;   // empty on success
    std::vector<std::string> formula_mismatches;    // empty on success
    double elapsed_seconds = 0.0;

    bool passed() const;
};

/// Runs the full battery at order n (1 <= n <= 8; larger orders raise
/// InfeasibleOrderError). The report is deterministic apart from the
/// elapsed time.
VerifyReport verify_order(int n);

/// Fixed-field-order JSON rendering; counts appear as decimal strings.
std::string to_json(const VerifyReport& report);

/// Human-readable table.
std::string render_report(const VerifyReport& report);

}  // namespace dpp

#endif
